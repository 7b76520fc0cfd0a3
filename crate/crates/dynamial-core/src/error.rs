//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("d = {0} is not squarefree")]
    NotSquarefree(i64),
    #[error("d = {0} does not define a quadratic field")]
    DegenerateRadicand(i64),
    #[error("invalid cyclic presentation: {0}")]
    BadPresentation(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operation requires a quadratic field")]
    NotQuadratic,
    #[error("operation requires a real quadratic field")]
    NotRealQuadratic,
    #[error("fundamental unit not found for d = {d} within coordinate bound {bound}")]
    PellBoundExceeded { d: i64, bound: u64 },
    #[error("algebra parameter must be nonzero")]
    ZeroParameter,
    #[error("undefined for a zero argument")]
    ZeroArgument,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("dynamial index must be positive")]
    ZeroIndex,
    #[error("dynamials over different rings cannot be multiplied")]
    RingMismatch,
    #[error("not an ideal: {0}")]
    InvalidIdeal(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("out of supported range: {0}")]
    Unsupported(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
