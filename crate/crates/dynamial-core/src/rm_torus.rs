//! Symbolic noncommutative-torus calculus. A Weyl monomial is
//! `e^{iπ·s}·e^{2πiθ·q}·U^a·V^b` in normal order (`U` before `V`) with the
//! commutation rule `VU = e^{2πiθ}UV`; `θ` stays a formal symbol and both
//! phases are tracked exactly. Matrix substitutions transform the relation
//! by their determinant, and the real-multiplication endomorphism matrix is
//! built from traces of fundamental-unit powers.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{big, is_prime, rat_int, Rational};
use crate::error::{Error, Result};
use crate::numfield::{fundamental_unit, CyclicExtension, FieldElement};

/// A normal-ordered Weyl monomial. `phase_pi` is the coefficient of `π` in
/// the exponent, tracked mod 2; `phase_theta` counts `2πθ` units.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylMonomial {
    phase_pi: Rational,
    phase_theta: i128,
    exp_u: i64,
    exp_v: i64,
}

fn mod2(x: Rational) -> Rational {
    let two = rat_int(2);
    let r = &x - &((x.clone() / two.clone()).floor() * &two);
    r
}

impl WeylMonomial {
    pub fn new(phase_pi: Rational, phase_theta: i128, exp_u: i64, exp_v: i64) -> Self {
        WeylMonomial { phase_pi: mod2(phase_pi), phase_theta, exp_u, exp_v }
    }

    pub fn one() -> Self {
        Self::new(Rational::zero(), 0, 0, 0)
    }

    pub fn u_pow(k: i64) -> Self {
        Self::new(Rational::zero(), 0, k, 0)
    }

    pub fn v_pow(k: i64) -> Self {
        Self::new(Rational::zero(), 0, 0, k)
    }

    pub fn phase_pi(&self) -> &Rational {
        &self.phase_pi
    }

    pub fn phase_theta(&self) -> i128 {
        self.phase_theta
    }

    pub fn exp_u(&self) -> i64 {
        self.exp_u
    }

    pub fn exp_v(&self) -> i64 {
        self.exp_v
    }

    /// Normal-ordered product: commuting `V^{b₁}` past `U^{a₂}` contributes
    /// `b₁·a₂` units of `2πθ`.
    pub fn mul(&self, other: &Self) -> Self {
        let swap = self.exp_v as i128 * other.exp_u as i128;
        WeylMonomial {
            phase_pi: mod2(&self.phase_pi + &other.phase_pi),
            phase_theta: self.phase_theta + other.phase_theta + swap,
            exp_u: self.exp_u + other.exp_u,
            exp_v: self.exp_v + other.exp_v,
        }
    }
}

impl fmt::Display for WeylMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "e^(i*pi*{})*e^(2*pi*i*theta*{})*U^{}*V^{}",
            self.phase_pi, self.phase_theta, self.exp_u, self.exp_v
        )
    }
}

/// An integer 2×2 matrix `(a b; c d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntMatrix2 {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl IntMatrix2 {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        IntMatrix2 { a, b, c, d }
    }

    pub fn identity() -> Self {
        IntMatrix2::new(1, 0, 0, 1)
    }

    pub fn det(&self) -> i128 {
        self.a as i128 * self.d as i128 - self.b as i128 * self.c as i128
    }

    pub fn rows(&self) -> [[i64; 2]; 2] {
        [[self.a, self.b], [self.c, self.d]]
    }
}

impl fmt::Display for IntMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

/// Substitutes `U' = e^{πiac}U^aV^c`, `V' = e^{πibd}U^bV^d` and returns the
/// integer `q` with `V'U' = e^{2πiθ·q}·U'V'`. The result always equals
/// `det(M)`; any other discrepancy between the two orderings is an internal
/// error.
pub fn weyl_substitute(m: &IntMatrix2) -> Result<i128> {
    let u_new = WeylMonomial::new(
        Rational::from_integer(BigInt::from(m.a as i128 * m.c as i128)),
        0,
        m.a,
        m.c,
    );
    let v_new = WeylMonomial::new(
        Rational::from_integer(BigInt::from(m.b as i128 * m.d as i128)),
        0,
        m.b,
        m.d,
    );
    let vu = v_new.mul(&u_new);
    let uv = u_new.mul(&v_new);
    if vu.phase_pi != uv.phase_pi || vu.exp_u != uv.exp_u || vu.exp_v != uv.exp_v {
        return Err(Error::Internal(format!(
            "transformed relation is not a pure theta phase: {vu} vs {uv}"
        )));
    }
    Ok(vu.phase_theta - uv.phase_theta)
}

/// The real-multiplication endomorphism data: the matrix
/// `[[tr(ε^k), p], [−1, 0]]` over a real quadratic field, of determinant `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RMData {
    field: Arc<CyclicExtension>,
    p: u64,
    exponent: u32,
    matrix: IntMatrix2,
}

impl RMData {
    /// Validates the matrix shape against the recomputed trace.
    pub fn new(
        field: &Arc<CyclicExtension>,
        p: u64,
        exponent: u32,
        matrix: IntMatrix2,
        pell_bound: u64,
    ) -> Result<Self> {
        let expected = rm_matrix_with_bound(field, p, exponent, pell_bound)?;
        if expected.matrix != matrix {
            return Err(Error::Unsupported(format!(
                "matrix {matrix} does not match the endomorphism form {}",
                expected.matrix
            )));
        }
        Ok(expected)
    }

    pub fn field(&self) -> &Arc<CyclicExtension> {
        &self.field
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn matrix(&self) -> &IntMatrix2 {
        &self.matrix
    }

    pub fn trace(&self) -> i64 {
        self.matrix.a
    }
}

/// `tr(ε^k)` by the integer recurrence `t_{j+1} = tr(ε)·t_j − N(ε)·t_{j−1}`
/// with `t_0 = 2`.
pub fn trace_power(unit: &FieldElement, k: u32) -> BigInt {
    let s = unit.trace();
    let n = unit.norm();
    assert!(s.is_integer() && n.is_integer(), "unit must be integral");
    let (s, n) = (s.to_integer(), n.to_integer());
    let mut prev = big(2);
    let mut cur = s.clone();
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        let next = &s * &cur - &n * &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Assembles `[[tr(ε^k), p], [−1, 0]]` for a real quadratic field; the
/// determinant is `p` by construction and is asserted.
pub fn rm_matrix(field: &Arc<CyclicExtension>, p: u64, exponent: u32) -> Result<RMData> {
    rm_matrix_with_bound(field, p, exponent, crate::numfield::DEFAULT_PELL_BOUND)
}

pub fn rm_matrix_with_bound(
    field: &Arc<CyclicExtension>,
    p: u64,
    exponent: u32,
    pell_bound: u64,
) -> Result<RMData> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if exponent == 0 {
        return Err(Error::Unsupported("exponent must be positive".into()));
    }
    let eps = fundamental_unit(field, pell_bound)?;
    let t = trace_power(&eps, exponent);
    let t64 = t
        .to_i64()
        .ok_or_else(|| Error::Unsupported(format!("tr(eps^{exponent}) = {t} exceeds 64 bits")))?;
    let p64 = i64::try_from(p).map_err(|_| Error::Unsupported(format!("p = {p} exceeds 63 bits")))?;
    let matrix = IntMatrix2::new(t64, p64, -1, 0);
    assert_eq!(matrix.det(), p as i128);
    Ok(RMData { field: Arc::clone(field), p, exponent, matrix })
}

/// Outcome of the Cayley–Hamilton check `L² − t·L + p·I = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyHamiltonCheck {
    pub holds: bool,
    pub residual: [[i128; 2]; 2],
}

/// Verifies `L² − tr(L)·L + det(L)·I = 0` exactly for the RM matrix; a
/// nonzero residual signals an arithmetic bug.
pub fn rm_cayley_hamilton(r: &RMData) -> CayleyHamiltonCheck {
    let m = r.matrix;
    let (a, b, c, d) = (m.a as i128, m.b as i128, m.c as i128, m.d as i128);
    let t = a + d;
    let p = m.det();
    let sq = [[a * a + b * c, a * b + b * d], [c * a + d * c, c * b + d * d]];
    let lin = [[t * a, t * b], [t * c, t * d]];
    let residual = [
        [sq[0][0] - lin[0][0] + p, sq[0][1] - lin[0][1]],
        [sq[1][0] - lin[1][0], sq[1][1] - lin[1][1] + p],
    ];
    let holds = residual.iter().flatten().all(|&x| x == 0);
    CayleyHamiltonCheck { holds, residual }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn weyl_products() {
        let v = WeylMonomial::v_pow(1);
        let u = WeylMonomial::u_pow(1);
        let vu = v.mul(&u);
        assert_eq!((vu.phase_theta(), vu.exp_u(), vu.exp_v()), (1, 1, 1));
        let uv = u.mul(&v);
        assert_eq!((uv.phase_theta(), uv.exp_u(), uv.exp_v()), (0, 1, 1));
        let v2u = WeylMonomial::v_pow(2).mul(&u);
        assert_eq!((v2u.phase_theta(), v2u.exp_u(), v2u.exp_v()), (2, 1, 2));
        // unit element is neutral
        assert_eq!(WeylMonomial::one().mul(&vu), vu);
    }

    #[test]
    fn pi_phase_is_mod_two() {
        let x = WeylMonomial::new(rat(3, 2), 0, 0, 0);
        assert_eq!(*x.phase_pi(), rat(3, 2));
        let sq = x.mul(&x);
        assert_eq!(*sq.phase_pi(), rat_int(1));
        let neg = WeylMonomial::new(rat(-1, 2), 0, 0, 0);
        assert_eq!(*neg.phase_pi(), rat(3, 2));
    }

    #[test]
    fn substitution_equals_determinant() {
        assert_eq!(weyl_substitute(&IntMatrix2::identity()).unwrap(), 1);
        assert_eq!(weyl_substitute(&IntMatrix2::new(1, 1, 0, 1)).unwrap(), 1);
        assert_eq!(weyl_substitute(&IntMatrix2::new(6, 7, -1, 0)).unwrap(), 7);
        for m in [
            IntMatrix2::new(2, 3, 1, 2),
            IntMatrix2::new(0, -1, 1, 0),
            IntMatrix2::new(5, -3, 7, 2),
        ] {
            assert_eq!(weyl_substitute(&m).unwrap(), m.det());
        }
    }

    #[test]
    fn rm_matrix_examples() {
        let f = CyclicExtension::quadratic(2).unwrap();
        let r = rm_matrix(&f, 7, 2).unwrap();
        assert_eq!(*r.matrix(), IntMatrix2::new(6, 7, -1, 0));
        assert_eq!(r.matrix().det(), 7);

        let r1 = rm_matrix(&f, 2, 1).unwrap();
        assert_eq!(r1.trace(), 2); // tr(1+√2) = 2

        assert_eq!(rm_matrix(&f, 6, 1), Err(Error::NotPrime(6)));
        assert!(rm_matrix(&CyclicExtension::quadratic(-1).unwrap(), 7, 1).is_err());
    }

    #[test]
    fn trace_recurrence_matches_direct_powers() {
        for d in [2i64, 5, 3, 13] {
            let f = CyclicExtension::quadratic(d).unwrap();
            let eps = fundamental_unit(&f, crate::numfield::DEFAULT_PELL_BOUND).unwrap();
            for k in 0..=12u32 {
                let direct = eps.pow(k).trace();
                assert!(direct.is_integer());
                assert_eq!(trace_power(&eps, k), direct.to_integer(), "d={d} k={k}");
            }
        }
    }

    #[test]
    fn cayley_hamilton_holds() {
        let f = CyclicExtension::quadratic(2).unwrap();
        for (p, k) in [(7u64, 2u32), (2, 1), (13, 3)] {
            let r = rm_matrix(&f, p, k).unwrap();
            let check = rm_cayley_hamilton(&r);
            assert!(check.holds, "residual {:?}", check.residual);
        }
    }

    #[test]
    fn rmdata_validates_matrix_shape() {
        let f = CyclicExtension::quadratic(2).unwrap();
        let good = RMData::new(&f, 7, 2, IntMatrix2::new(6, 7, -1, 0), 1_000_000);
        assert!(good.is_ok());
        let bad = RMData::new(&f, 7, 2, IntMatrix2::new(1, 0, 0, 1), 1_000_000);
        assert!(bad.is_err());
    }
}
