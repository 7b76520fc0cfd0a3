//! Cyclic extensions of `Q` with exact arithmetic.
//!
//! Quadratic fields are fully supported and carry an integral basis
//! `{1, ω}`; higher-degree cyclic extensions are accepted through an
//! explicit `(minimal polynomial, Galois generator)` presentation that is
//! validated at construction: the generator must map the primitive element
//! to another root and have exact order `n`.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{big, is_squarefree, perfect_sqrt, rat_int, squarefree_part, Rational};
use crate::error::{Error, Result};
use crate::poly;

/// Default coordinate bound for the fundamental-unit scan.
pub const DEFAULT_PELL_BOUND: u64 = 1_000_000;

/// Integral basis data of a quadratic field: `ω = (1+√d)/2` when
/// `d ≡ 1 (mod 4)`, else `ω = √d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadOrderBasis {
    pub d: i64,
    pub omega_shift: bool,
}

impl QuadOrderBasis {
    fn new(d: i64) -> Self {
        QuadOrderBasis { d, omega_shift: d.rem_euclid(4) == 1 }
    }

    /// `tr(ω)`.
    pub fn omega_trace(&self) -> i64 {
        if self.omega_shift {
            1
        } else {
            0
        }
    }

    /// `N(ω)`, so that `ω² = tr(ω)·ω − N(ω)`.
    pub fn omega_norm(&self) -> i64 {
        if self.omega_shift {
            (1 - self.d) / 4
        } else {
            -self.d
        }
    }

    /// Field discriminant: `d` when `d ≡ 1 (mod 4)`, else `4d`.
    pub fn field_discriminant(&self) -> i64 {
        if self.omega_shift {
            self.d
        } else {
            4 * self.d
        }
    }
}

/// A cyclic Galois extension `E/Q` of degree `n` with a distinguished
/// generator `θ` of the Galois group, presented by a monic integer minimal
/// polynomial and the image of the primitive element under `θ`.
#[derive(Debug, Clone)]
pub struct CyclicExtension {
    degree: usize,
    min_poly: Vec<BigInt>,
    min_poly_rat: Vec<Rational>,
    theta: Vec<Rational>,
    discriminant: BigInt,
    quad: Option<QuadOrderBasis>,
    // s with disc(min_poly) = s² · d, used for √d-coordinate conversions.
    quad_scale: Option<BigInt>,
    // subst[k][j] = coordinates of θ^k(α)^j; θ^k acts by linear combination.
    subst: Vec<Vec<Vec<Rational>>>,
}

impl PartialEq for CyclicExtension {
    fn eq(&self, other: &Self) -> bool {
        self.min_poly == other.min_poly && self.theta == other.theta
    }
}
impl Eq for CyclicExtension {}

impl Hash for CyclicExtension {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.min_poly.hash(state);
        self.theta.hash(state);
    }
}

fn reduce_mod(v: &[Rational], m: &[Rational]) -> Vec<Rational> {
    poly::divmod(v, m).1
}

// f(g(x)) mod m, by Horner.
fn compose_mod(f: &[Rational], g: &[Rational], m: &[Rational]) -> Vec<Rational> {
    let mut acc: Vec<Rational> = Vec::new();
    for c in f.iter().rev() {
        acc = reduce_mod(&poly::add(&poly::mul(&acc, g), &[c.clone()]), m);
    }
    acc
}

fn pad(mut v: Vec<Rational>, n: usize) -> Vec<Rational> {
    v.resize(n, Rational::zero());
    v
}

impl CyclicExtension {
    /// The quadratic field `Q(√d)`; `θ` is `√d ↦ −√d`.
    pub fn quadratic(d: i64) -> Result<Arc<Self>> {
        if d == 0 || d == 1 {
            return Err(Error::DegenerateRadicand(d));
        }
        if !is_squarefree(d) {
            return Err(Error::NotSquarefree(d));
        }
        Self::presented(vec![big(-d), big(0), big(1)], vec![Rational::zero(), -Rational::one()])
    }

    /// A user-presented cyclic extension: monic integer `min_poly` of degree
    /// `n ≥ 2` and the image `theta` of the primitive element, as
    /// coordinate vectors in ascending powers.
    pub fn presented(min_poly: Vec<BigInt>, theta: Vec<Rational>) -> Result<Arc<Self>> {
        let n = min_poly.len().saturating_sub(1);
        if n < 2 {
            return Err(Error::BadPresentation("degree must be at least 2".into()));
        }
        if !min_poly[n].is_one() {
            return Err(Error::BadPresentation("minimal polynomial must be monic".into()));
        }
        let min_poly_rat: Vec<Rational> =
            min_poly.iter().map(|c| Rational::from_integer(c.clone())).collect();
        let theta = pad(reduce_mod(&theta, &min_poly_rat), n);

        let (quad, quad_scale, discriminant) = if n == 2 {
            // x² + bx + c is irreducible over Q iff b² − 4c is not a square.
            let delta = &min_poly[1] * &min_poly[1] - big(4) * &min_poly[0];
            if delta.is_zero() || perfect_sqrt(&delta).is_some() {
                return Err(Error::BadPresentation(
                    "quadratic polynomial is reducible over Q".into(),
                ));
            }
            let delta_i64 = delta.to_i64().ok_or_else(|| {
                Error::Unsupported("quadratic discriminant exceeds 64 bits".into())
            })?;
            let d = squarefree_part(delta_i64);
            let s = perfect_sqrt(&(&delta / big(d)))
                .expect("delta / squarefree part is a perfect square");
            let qb = QuadOrderBasis::new(d);
            (Some(qb), Some(s), big(qb.field_discriminant()))
        } else {
            // Cheap irreducibility screens: no rational roots, separable.
            let c0 = &min_poly[0];
            if c0.is_zero() {
                return Err(Error::BadPresentation("polynomial has root 0".into()));
            }
            for (p, _) in crate::arith::factorize(c0.magnitude().to_u64().ok_or_else(|| {
                Error::Unsupported("constant term too large for root screening".into())
            })?) {
                for r in [big(p as i64), big(-(p as i64))] {
                    let mut acc = BigInt::zero();
                    for c in min_poly.iter().rev() {
                        acc = acc * &r + c;
                    }
                    if acc.is_zero() {
                        return Err(Error::BadPresentation(format!(
                            "polynomial has rational root {r}"
                        )));
                    }
                }
            }
            let disc = poly::discriminant(&min_poly);
            if disc.is_zero() {
                return Err(Error::BadPresentation("polynomial has repeated roots".into()));
            }
            (None, None, disc)
        };

        // θ must send the primitive element to another root ...
        let at_theta = compose_mod(&min_poly_rat, &theta, &min_poly_rat);
        if !poly::is_zero(&at_theta) {
            return Err(Error::BadPresentation(
                "generator image is not a root of the minimal polynomial".into(),
            ));
        }
        // ... and generate a cyclic group of order exactly n.
        let identity = pad(vec![Rational::zero(), Rational::one()], n);
        let mut orbit = vec![identity.clone()];
        let mut cur = theta.clone();
        for k in 1..=n {
            if k < n {
                if cur == identity {
                    return Err(Error::BadPresentation(format!(
                        "generator has order {k} < {n}"
                    )));
                }
                orbit.push(cur.clone());
            } else if cur != identity {
                return Err(Error::BadPresentation(format!(
                    "generator does not have order {n}"
                )));
            }
            cur = pad(compose_mod(&cur, &theta, &min_poly_rat), n);
        }

        // Precompute θ^k(α)^j so the Galois action is a linear substitution.
        let mut subst = Vec::with_capacity(n);
        for image in &orbit {
            let mut powers = Vec::with_capacity(n);
            let mut pw: Vec<Rational> = vec![Rational::one()];
            for _ in 0..n {
                powers.push(pad(pw.clone(), n));
                pw = reduce_mod(&poly::mul(&pw, image), &min_poly_rat);
            }
            subst.push(powers);
        }

        Ok(Arc::new(CyclicExtension {
            degree: n,
            min_poly,
            min_poly_rat,
            theta,
            discriminant,
            quad,
            quad_scale,
            subst,
        }))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn min_poly(&self) -> &[BigInt] {
        &self.min_poly
    }

    /// Coordinates of `θ(α)` in the power basis.
    pub fn theta_coords(&self) -> &[Rational] {
        &self.theta
    }

    /// Field discriminant in the quadratic case, polynomial discriminant of
    /// the presentation otherwise.
    pub fn discriminant(&self) -> &BigInt {
        &self.discriminant
    }

    pub fn quad_basis(&self) -> Option<&QuadOrderBasis> {
        self.quad.as_ref()
    }

    pub fn is_quadratic(&self) -> bool {
        self.quad.is_some()
    }

    fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        pad(reduce_mod(v, &self.min_poly_rat), self.degree)
    }

    /// Builds an element from power-basis coordinates; longer vectors are
    /// reduced modulo the minimal polynomial.
    pub fn element(self: &Arc<Self>, coords: Vec<Rational>) -> FieldElement {
        FieldElement { coords: self.reduce(&coords), parent: Arc::clone(self) }
    }

    pub fn zero(self: &Arc<Self>) -> FieldElement {
        self.element(Vec::new())
    }

    pub fn one(self: &Arc<Self>) -> FieldElement {
        self.from_rational(Rational::one())
    }

    /// The primitive element `α`.
    pub fn primitive(self: &Arc<Self>) -> FieldElement {
        self.element(vec![Rational::zero(), Rational::one()])
    }

    pub fn from_rational(self: &Arc<Self>, r: Rational) -> FieldElement {
        self.element(vec![r])
    }

    pub fn from_int(self: &Arc<Self>, n: i64) -> FieldElement {
        self.from_rational(rat_int(n))
    }
}

impl fmt::Display for CyclicExtension {
    /// Canonical presentation string: `Q(sqrt,d)` for `x² − d` with `d`
    /// squarefree, otherwise `Q[x]/(poly;theta)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree == 2 && self.min_poly[1].is_zero() {
            if let Some(d) = (-&self.min_poly[0]).to_i64() {
                if d != 0 && d != 1 && is_squarefree(d) {
                    return write!(f, "Q(sqrt,{d})");
                }
            }
        }
        write!(
            f,
            "Q[x]/({};{})",
            poly::format_poly(&self.min_poly_rat, 'x'),
            poly::format_poly(&self.theta, 'x')
        )
    }
}

/// An element of a [`CyclicExtension`], as exact coordinates in the power
/// basis of the primitive element.
#[derive(Debug, Clone)]
pub struct FieldElement {
    parent: Arc<CyclicExtension>,
    coords: Vec<Rational>,
}

fn same_field(a: &FieldElement, b: &FieldElement) -> bool {
    Arc::ptr_eq(&a.parent, &b.parent) || *a.parent == *b.parent
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        same_field(self, other) && self.coords == other.coords
    }
}
impl Eq for FieldElement {}

impl FieldElement {
    pub fn parent(&self) -> &Arc<CyclicExtension> {
        &self.parent
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(|c| c.is_zero())
    }

    /// `Some(r)` when the element lies in the base field.
    pub fn rational_part(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coords[0].clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert!(same_field(self, other), "elements of different fields");
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        FieldElement { parent: Arc::clone(&self.parent), coords }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        FieldElement {
            parent: Arc::clone(&self.parent),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert!(same_field(self, other), "elements of different fields");
        let prod = poly::mul(&self.coords, &other.coords);
        self.parent.element(prod)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        FieldElement {
            parent: Arc::clone(&self.parent),
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let (g, s, _) = poly::ext_gcd(&self.coords, &self.parent.min_poly_rat);
        if poly::degree(&g) != Some(0) {
            // Non-trivial gcd with the minimal polynomial: reducible presentation.
            return None;
        }
        Some(self.parent.element(s))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.parent.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Applies `θ^k`; `k` may be negative, `θ^n` is the identity.
    pub fn galois(&self, k: i64) -> Self {
        let n = self.parent.degree;
        let kk = k.rem_euclid(n as i64) as usize;
        if kk == 0 {
            return self.clone();
        }
        let table = &self.parent.subst[kk];
        let mut coords = vec![Rational::zero(); n];
        for (j, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, t) in table[j].iter().enumerate() {
                coords[i] += c * t;
            }
        }
        FieldElement { parent: Arc::clone(&self.parent), coords }
    }

    /// `N(x) = ∏_k θ^k(x)`, guaranteed to lie in `Q`.
    pub fn norm(&self) -> Rational {
        let n = self.parent.degree;
        let mut acc = self.clone();
        for k in 1..n {
            acc = acc.mul(&self.galois(k as i64));
        }
        acc.rational_part()
            .expect("norm left the base field: broken Galois presentation")
    }

    /// `tr(x) = Σ_k θ^k(x)`, guaranteed to lie in `Q`.
    pub fn trace(&self) -> Rational {
        let n = self.parent.degree;
        let mut acc = self.clone();
        for k in 1..n {
            acc = acc.add(&self.galois(k as i64));
        }
        acc.rational_part()
            .expect("trace left the base field: broken Galois presentation")
    }

    /// Whether the element is an algebraic integer: the characteristic
    /// polynomial `∏_k (T − θ^k(x))` must have integer coefficients.
    pub fn is_integral(&self) -> bool {
        let n = self.parent.degree;
        let mut coeffs: Vec<FieldElement> = vec![self.parent.one()];
        for k in 0..n {
            let root = self.galois(k as i64);
            let mut next = vec![self.parent.zero(); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i + 1] = next[i + 1].add(c);
                next[i] = next[i].sub(&c.mul(&root));
            }
            coeffs = next;
        }
        coeffs
            .iter()
            .all(|c| c.rational_part().is_some_and(|r| r.is_integer()))
    }

    /// Quadratic fields only: `(A, B)` with `x = A + B√d`.
    pub fn sqrt_coords(&self) -> Option<(Rational, Rational)> {
        let qb = self.parent.quad?;
        let _ = qb;
        let s = Rational::from_integer(self.parent.quad_scale.clone()?);
        let b = Rational::from_integer(self.parent.min_poly[1].clone());
        let half = crate::arith::rat(1, 2);
        // α = (−b + s√d)/2
        let a_part = &self.coords[0] - &(&self.coords[1] * &b) * &half;
        let b_part = &(&self.coords[1] * &s) * &half;
        Some((a_part, b_part))
    }

    /// Quadratic fields only: builds `A + B√d` in this field's power basis.
    pub fn from_sqrt_coords(
        field: &Arc<CyclicExtension>,
        a: Rational,
        b: Rational,
    ) -> Result<Self> {
        let s = Rational::from_integer(
            field.quad_scale.clone().ok_or(Error::NotQuadratic)?,
        );
        let bcoef = Rational::from_integer(field.min_poly[1].clone());
        let x1 = crate::arith::rat_int(2) * b / s;
        let x0 = a + &x1 * bcoef * crate::arith::rat(1, 2);
        Ok(field.element(vec![x0, x1]))
    }

    /// Quadratic fields only: `(x, y)` with the element equal to `x + yω`.
    pub fn omega_coords(&self) -> Option<(Rational, Rational)> {
        let qb = self.parent.quad?;
        let (a, b) = self.sqrt_coords()?;
        Some(if qb.omega_shift {
            let y = &b * rat_int(2);
            (a - b, y)
        } else {
            (a, b)
        })
    }

    /// Quadratic fields only: the integral element `x + yω`.
    pub fn from_omega_coords(
        field: &Arc<CyclicExtension>,
        x: &BigInt,
        y: &BigInt,
    ) -> Result<Self> {
        let qb = field.quad_basis().ok_or(Error::NotQuadratic)?;
        let (xr, yr) = (Rational::from_integer(x.clone()), Rational::from_integer(y.clone()));
        let (a, b) = if qb.omega_shift {
            let half = crate::arith::rat(1, 2);
            (&xr + &(&yr * &half), &yr * &half)
        } else {
            (xr, yr)
        };
        Self::from_sqrt_coords(field, a, b)
    }

    /// ω-basis integrality test; agrees with [`Self::is_integral`] on
    /// quadratic fields.
    pub fn is_integral_omega(&self) -> Option<bool> {
        let (x, y) = self.omega_coords()?;
        Some(x.is_integer() && y.is_integer())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", poly::format_poly(&self.coords, 'a'))
    }
}

impl std::ops::Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: Self) -> FieldElement {
        FieldElement::add(self, rhs)
    }
}
impl std::ops::Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: Self) -> FieldElement {
        FieldElement::sub(self, rhs)
    }
}
impl std::ops::Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: Self) -> FieldElement {
        FieldElement::mul(self, rhs)
    }
}
impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::neg(self)
    }
}

/// Smallest unit `ε > 1` of the ring of integers of a real quadratic field,
/// found by a bounded scan over ω-basis coordinates. Exceeding `bound` is a
/// reported failure, never an approximation.
pub fn fundamental_unit(field: &Arc<CyclicExtension>, bound: u64) -> Result<FieldElement> {
    let qb = *field.quad_basis().ok_or(Error::NotQuadratic)?;
    if qb.d <= 0 {
        return Err(Error::NotRealQuadratic);
    }
    let d = big(qb.d);
    let half = crate::arith::rat(1, 2);
    for y in 1..=bound {
        let dy2 = &d * big(y as i64) * big(y as i64);
        if qb.omega_shift {
            // ε = (a + y√d)/2 with a² − d·y² = ∓4; smaller a first.
            for delta in [-4i64, 4] {
                let target = &dy2 + big(delta);
                if let Some(a) = perfect_sqrt(&target) {
                    let ar = Rational::from_integer(a) * &half;
                    let br = rat_int(y as i64) * &half;
                    return FieldElement::from_sqrt_coords(field, ar, br);
                }
            }
        } else {
            // ε = x + y√d with x² − d·y² = ∓1.
            for delta in [-1i64, 1] {
                let target = &dy2 + big(delta);
                if let Some(x) = perfect_sqrt(&target) {
                    return FieldElement::from_sqrt_coords(
                        field,
                        Rational::from_integer(x),
                        rat_int(y as i64),
                    );
                }
            }
        }
    }
    Err(Error::PellBoundExceeded { d: qb.d, bound })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn gaussian() -> Arc<CyclicExtension> {
        CyclicExtension::quadratic(-1).unwrap()
    }

    #[test]
    fn quadratic_construction() {
        let e = gaussian();
        assert_eq!(e.degree(), 2);
        assert_eq!(*e.discriminant(), big(-4));
        assert_eq!(*CyclicExtension::quadratic(2).unwrap().discriminant(), big(8));
        assert_eq!(*CyclicExtension::quadratic(5).unwrap().discriminant(), big(5));
        assert_eq!(CyclicExtension::quadratic(4), Err(Error::NotSquarefree(4)));
        assert_eq!(CyclicExtension::quadratic(0), Err(Error::DegenerateRadicand(0)));
        assert_eq!(CyclicExtension::quadratic(1), Err(Error::DegenerateRadicand(1)));
    }

    #[test]
    fn conjugation_in_gaussian_field() {
        let e = gaussian();
        let i = e.primitive();
        assert_eq!(i.galois(1), i.neg());
        assert_eq!(i.galois(0), i);
        assert_eq!(i.galois(2), i);
        assert_eq!(i.galois(-1), i.neg());
    }

    #[test]
    fn norm_and_trace_examples() {
        let e = gaussian();
        let x = e.element(vec![rat_int(2), rat_int(1)]); // 2 + i
        assert_eq!(x.norm(), rat_int(5));
        assert_eq!(e.one().norm(), rat_int(1));
        assert_eq!(e.primitive().trace(), rat_int(0));

        let f = CyclicExtension::quadratic(2).unwrap();
        let y = f.element(vec![rat_int(1), rat_int(1)]); // 1 + √2
        assert_eq!(y.norm(), rat_int(-1));
        assert_eq!(y.trace(), rat_int(2));
        assert_eq!(f.one().trace(), rat_int(2));
    }

    #[test]
    fn field_arithmetic() {
        let e = gaussian();
        let one_plus_i = e.element(vec![rat_int(1), rat_int(1)]);
        let one_minus_i = e.element(vec![rat_int(1), rat_int(-1)]);
        assert_eq!(&one_plus_i * &one_minus_i, e.from_int(2));

        let x = e.element(vec![rat_int(2), rat_int(1)]);
        let inv = x.inv().unwrap();
        assert_eq!(inv, e.element(vec![rat(2, 5), rat(-1, 5)]));
        assert_eq!(&x * &inv, e.one());
        assert!(e.zero().inv().is_none());
        assert_eq!(&x + &e.zero(), x);
    }

    #[test]
    fn fundamental_units() {
        let sqrt2 = CyclicExtension::quadratic(2).unwrap();
        let eps = fundamental_unit(&sqrt2, DEFAULT_PELL_BOUND).unwrap();
        assert_eq!(eps, sqrt2.element(vec![rat_int(1), rat_int(1)])); // 1 + √2
        assert_eq!(eps.norm(), rat_int(-1));

        let sqrt5 = CyclicExtension::quadratic(5).unwrap();
        let eps5 = fundamental_unit(&sqrt5, DEFAULT_PELL_BOUND).unwrap();
        assert_eq!(eps5, sqrt5.element(vec![rat(1, 2), rat(1, 2)])); // (1 + √5)/2
        assert!(eps5.is_integral());

        let sqrt3 = CyclicExtension::quadratic(3).unwrap();
        let eps3 = fundamental_unit(&sqrt3, DEFAULT_PELL_BOUND).unwrap();
        assert_eq!(eps3, sqrt3.element(vec![rat_int(2), rat_int(1)])); // 2 + √3
        assert_eq!(eps3.norm(), rat_int(1));

        assert_eq!(
            fundamental_unit(&gaussian(), DEFAULT_PELL_BOUND),
            Err(Error::NotRealQuadratic)
        );
    }

    #[test]
    fn pell_bound_is_reported() {
        let f = CyclicExtension::quadratic(151).unwrap();
        // ε for d = 151 needs y ≈ 1.4·10⁸, far beyond this bound.
        assert_eq!(
            fundamental_unit(&f, 100),
            Err(Error::PellBoundExceeded { d: 151, bound: 100 })
        );
    }

    #[test]
    fn presented_quartic_cyclotomic() {
        // Q(ζ₅) with θ(ζ) = ζ²: cyclic of order 4.
        let mp: Vec<BigInt> = vec![1, 1, 1, 1, 1].into_iter().map(BigInt::from).collect();
        let theta = vec![Rational::zero(), Rational::zero(), Rational::one()];
        let e = CyclicExtension::presented(mp.clone(), theta).unwrap();
        assert_eq!(e.degree(), 4);
        assert_eq!(*e.discriminant(), big(125));
        let z = e.primitive();
        assert_eq!(z.norm(), rat_int(1));
        assert_eq!(z.trace(), rat_int(-1));

        // θ(ζ) = ζ^4 is the inverse, still order 4; θ(ζ) = ζ would be order 1.
        let bad = CyclicExtension::presented(mp, vec![Rational::zero(), Rational::one()]);
        assert!(matches!(bad, Err(Error::BadPresentation(_))));
    }

    #[test]
    fn presented_rejects_wrong_generator() {
        // θ(√2) = √2 has order 1, not 2.
        let bad = CyclicExtension::presented(
            vec![big(-2), big(0), big(1)],
            vec![Rational::zero(), Rational::one()],
        );
        assert!(matches!(bad, Err(Error::BadPresentation(_))));
        // θ(√2) = 1 + √2 is not a root at all.
        let bad2 = CyclicExtension::presented(
            vec![big(-2), big(0), big(1)],
            vec![Rational::one(), Rational::one()],
        );
        assert!(matches!(bad2, Err(Error::BadPresentation(_))));
        // x² − 4 is reducible.
        let bad3 = CyclicExtension::presented(
            vec![big(-4), big(0), big(1)],
            vec![Rational::zero(), -Rational::one()],
        );
        assert!(matches!(bad3, Err(Error::BadPresentation(_))));
    }

    #[test]
    fn golden_ratio_presentation_matches_sqrt5() {
        // x² − x − 1 presents Q(√5) with α = (1+√5)/2.
        let e = CyclicExtension::presented(
            vec![big(-1), big(-1), big(1)],
            vec![Rational::one(), -Rational::one()],
        )
        .unwrap();
        let qb = e.quad_basis().unwrap();
        assert_eq!((qb.d, qb.omega_shift), (5, true));
        assert_eq!(*e.discriminant(), big(5));
        let phi = e.primitive();
        assert_eq!(phi.norm(), rat_int(-1));
        assert_eq!(phi.trace(), rat_int(1));
        let (a, b) = phi.sqrt_coords().unwrap();
        assert_eq!((a, b), (rat(1, 2), rat(1, 2)));
        assert!(phi.is_integral());
    }

    #[test]
    fn integrality_tests_agree() {
        let e = CyclicExtension::quadratic(5).unwrap();
        let omega = e.element(vec![rat(1, 2), rat(1, 2)]);
        assert!(omega.is_integral());
        assert_eq!(omega.is_integral_omega(), Some(true));
        let half = e.element(vec![rat(1, 2), Rational::zero()]);
        assert!(!half.is_integral());
        assert_eq!(half.is_integral_omega(), Some(false));

        // d = 2: no half-integers are integral, so disc = 8.
        let f = CyclicExtension::quadratic(2).unwrap();
        for num in [1i64, 3] {
            let x = f.element(vec![rat(num, 2), rat(1, 2)]);
            assert!(!x.is_integral());
            assert_eq!(x.is_integral_omega(), Some(false));
        }
    }

    #[test]
    fn omega_coordinate_roundtrip() {
        for d in [-1i64, 2, 5, -5, -3, 13] {
            let e = CyclicExtension::quadratic(d).unwrap();
            let x = FieldElement::from_omega_coords(&e, &big(3), &big(-2)).unwrap();
            let (u, v) = x.omega_coords().unwrap();
            assert_eq!((u, v), (rat_int(3), rat_int(-2)));
            assert!(x.is_integral());
        }
    }
}
