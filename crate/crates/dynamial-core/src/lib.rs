//! Exact-arithmetic toolkit for cyclic algebras over number fields and the
//! dynamial index semigroup of their crossed products.
//!
//! Everything here is computed over arbitrary-precision rationals; there is
//! no floating point anywhere in the crate.
//!
//! The main pieces:
//!
//! - [`numfield`] — quadratic fields (and presented cyclic extensions of `Q`)
//!   with exact Galois action, norms, traces and fundamental units;
//! - [`ideal_lattice`] — integral ideals of quadratic orders in Hermite
//!   normal form: prime splitting, enumeration by norm, products and unique
//!   factorization into prime ideals;
//! - [`cyclic_algebra`] — presented cyclic algebras `C(a)` with a faithful
//!   matrix representation, the norm-criterion division test, Hilbert
//!   symbols and quaternion Hasse profiles;
//! - [`dynamial`] — the semigroup `D_m = R ⋊ mZ` keyed by its index, with
//!   unique prime factorization, minimality, the syndetic criterion and
//!   crossed-product rewriting to ideal normal forms;
//! - [`rm_torus`] — symbolic Weyl monomials with exact phase bookkeeping and
//!   the real-multiplication endomorphism matrix;
//! - [`surface_link`] — the combinatorial surface knot/link codebook
//!   attached to dynamial localizations.
//!
//! String formats for fields, algebras, rings and crossed-product
//! expressions live in [`parse`]; the matching `Display` impls sit next to
//! their types.

pub mod arith;
pub mod cyclic_algebra;
pub mod dynamial;
pub mod error;
pub mod ideal_lattice;
pub mod numfield;
pub mod parse;
pub mod poly;
pub mod rm_torus;
pub mod surface_link;

pub use arith::Rational;
pub use cyclic_algebra::{
    AlgebraElement, CyclicAlgebra, DivisionStatus, DivisionVerdict, HasseProfile, MatrixE,
    NormWitness, Place,
};
pub use dynamial::{
    is_syndetic, normalize_crossed_product, CrossedProductExpr, Dynamial, DynamialFactorization,
    GroupFactor, Localization, NormalForms, RingDescriptor, Signature, SubgroupIndex,
};
pub use error::{Error, Result};
pub use ideal_lattice::{
    factor_ideal, ideals_of_norm, split_prime, IdealFactorization, IdealPower, PrimeIdeal,
    QuadIdeal, SplitType, Splitting,
};
pub use numfield::{fundamental_unit, CyclicExtension, FieldElement, QuadOrderBasis};
pub use rm_torus::{rm_cayley_hamilton, rm_matrix, weyl_substitute, IntMatrix2, RMData, WeylMonomial};
pub use surface_link::{
    classify, sphere_knot_label, spin, LinkComponent, LinkKind, SphereKnotLabel,
    SurfaceLinkDescriptor,
};
