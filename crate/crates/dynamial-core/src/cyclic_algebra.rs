//! Presented cyclic algebras `C(a)` over a cyclic extension `E/Q`: elements
//! are `Σ c_i u^i` with `u·α = θ(α)·u` and `u^n = a`. Includes the faithful
//! matrix representation over `E`, the norm-criterion division test (exact
//! for quaternion algebras via Hilbert symbols, budget-bounded otherwise),
//! and Hasse ramification profiles for the quaternion case.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{big, is_prime, legendre, mod_u64, rat_int, Rational};
use crate::error::{Error, Result};
use crate::numfield::{CyclicExtension, FieldElement};

/// The cyclic algebra `C(a)`: the degree-`n²` algebra over `Q` generated by
/// `E` and a symbol `u` with `u·α = θ(α)·u`, `u^n = a`.
#[derive(Debug, Clone)]
pub struct CyclicAlgebra {
    extension: Arc<CyclicExtension>,
    a: Rational,
}

impl PartialEq for CyclicAlgebra {
    fn eq(&self, other: &Self) -> bool {
        *self.extension == *other.extension && self.a == other.a
    }
}
impl Eq for CyclicAlgebra {}

impl CyclicAlgebra {
    pub fn new(extension: &Arc<CyclicExtension>, a: Rational) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::ZeroParameter);
        }
        Ok(CyclicAlgebra { extension: Arc::clone(extension), a })
    }

    pub fn extension(&self) -> &Arc<CyclicExtension> {
        &self.extension
    }

    pub fn parameter(&self) -> &Rational {
        &self.a
    }

    pub fn degree(&self) -> usize {
        self.extension.degree()
    }

    /// Dimension over the base field: `n²`.
    pub fn dimension(&self) -> usize {
        self.degree() * self.degree()
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement {
            coeffs: vec![self.extension.zero(); self.degree()],
            parent: self.clone(),
        }
    }

    pub fn one(&self) -> AlgebraElement {
        self.from_field(&self.extension.one())
    }

    /// The symbol `u`.
    pub fn u(&self) -> AlgebraElement {
        let mut x = self.zero();
        x.coeffs[1] = self.extension.one();
        x
    }

    pub fn from_field(&self, c: &FieldElement) -> AlgebraElement {
        let mut x = self.zero();
        x.coeffs[0] = c.clone();
        x
    }

    pub fn from_rational(&self, r: Rational) -> AlgebraElement {
        self.from_field(&self.extension.from_rational(r))
    }

    /// Builds `Σ coeffs[i]·u^i`, padding with zeros.
    pub fn element(&self, mut coeffs: Vec<FieldElement>) -> AlgebraElement {
        assert!(coeffs.len() <= self.degree(), "too many u-coefficients");
        while coeffs.len() < self.degree() {
            coeffs.push(self.extension.zero());
        }
        AlgebraElement { coeffs, parent: self.clone() }
    }
}

impl fmt::Display for CyclicAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C({};{})", self.a, self.extension)
    }
}

/// An element `Σ c_i u^i` of a [`CyclicAlgebra`], coefficients in `E`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    parent: CyclicAlgebra,
    coeffs: Vec<FieldElement>,
}

impl AlgebraElement {
    pub fn parent(&self) -> &CyclicAlgebra {
        &self.parent
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.parent, other.parent, "elements of different algebras");
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(x, y)| x.add(y)).collect();
        AlgebraElement { parent: self.parent.clone(), coeffs }
    }

    pub fn neg(&self) -> Self {
        AlgebraElement {
            parent: self.parent.clone(),
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Twisted product: `u^i·c = θ^i(c)·u^i` and `u^i u^j = a^⌊(i+j)/n⌋ u^(i+j mod n)`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.parent, other.parent, "elements of different algebras");
        let n = self.parent.degree();
        let ext = self.parent.extension();
        let a_field = ext.from_rational(self.parent.a.clone());
        let mut coeffs = vec![ext.zero(); n];
        for (i, ci) in self.coeffs.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (j, cj) in other.coeffs.iter().enumerate() {
                if cj.is_zero() {
                    continue;
                }
                let term = ci.mul(&cj.galois(i as i64));
                let k = i + j;
                if k < n {
                    coeffs[k] = coeffs[k].add(&term);
                } else {
                    coeffs[k - n] = coeffs[k - n].add(&term.mul(&a_field));
                }
            }
        }
        AlgebraElement { parent: self.parent.clone(), coeffs }
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

    /// Quaternion conjugate `θ(c₀) − c₁u`; degree 2 only.
    pub fn conjugate(&self) -> Self {
        assert_eq!(self.parent.degree(), 2, "conjugate requires a quaternion algebra");
        AlgebraElement {
            parent: self.parent.clone(),
            coeffs: vec![self.coeffs[0].galois(1), self.coeffs[1].neg()],
        }
    }

    /// Reduced norm `c₀θ(c₀) − a·c₁θ(c₁)`; degree 2 only.
    pub fn reduced_norm(&self) -> Rational {
        let conj = self.conjugate();
        self.mul(&conj).coeffs[0]
            .rational_part()
            .expect("x·x̄ lies in the base field")
    }

    /// Inverse in a quaternion algebra, `None` when the reduced norm
    /// vanishes (a zero divisor in the split case).
    pub fn inv(&self) -> Option<Self> {
        assert_eq!(self.parent.degree(), 2, "inv requires a quaternion algebra");
        let nrd = self.reduced_norm();
        if nrd.is_zero() {
            return None;
        }
        let conj = self.conjugate();
        let scale = nrd.recip();
        Some(AlgebraElement {
            parent: self.parent.clone(),
            coeffs: conj.coeffs.iter().map(|c| c.scale(&scale)).collect(),
        })
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})u")?,
                _ => write!(f, "({c})u^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A square matrix with entries in `E`; the target of [`matrix_rep`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixE {
    n: usize,
    entries: Vec<FieldElement>,
}

impl MatrixE {
    pub fn new(n: usize, entries: Vec<FieldElement>) -> Self {
        assert_eq!(entries.len(), n * n);
        MatrixE { n, entries }
    }

    pub fn zero(field: &Arc<CyclicExtension>, n: usize) -> Self {
        MatrixE { n, entries: vec![field.zero(); n * n] }
    }

    pub fn identity(field: &Arc<CyclicExtension>, n: usize) -> Self {
        let mut m = Self::zero(field, n);
        for i in 0..n {
            *m.at_mut(i, i) = field.one();
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn at(&self, row: usize, col: usize) -> &FieldElement {
        &self.entries[row * self.n + col]
    }

    pub fn at_mut(&mut self, row: usize, col: usize) -> &mut FieldElement {
        &mut self.entries[row * self.n + col]
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        MatrixE {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(x, y)| x.add(y))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let field = self.entries[0].parent().clone();
        let mut out = Self::zero(&field, self.n);
        for i in 0..self.n {
            for k in 0..self.n {
                if self.at(i, k).is_zero() {
                    continue;
                }
                for j in 0..self.n {
                    let t = self.at(i, k).mul(other.at(k, j));
                    *out.at_mut(i, j) = out.at(i, j).add(&t);
                }
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        MatrixE { n: self.n, entries: self.entries.iter().map(|x| x.neg()).collect() }
    }
}

/// The faithful representation of `C(a)` on `E^n`: a field coefficient in
/// row `i` acts through `θ^{-i}`, and `u` is the weighted shift with `1` on
/// the subdiagonal and `a` in the corner; a ring homomorphism.
pub fn matrix_rep(x: &AlgebraElement) -> MatrixE {
    let alg = x.parent();
    let n = alg.degree();
    let ext = alg.extension();
    let mut rep_u = MatrixE::zero(ext, n);
    for i in 1..n {
        *rep_u.at_mut(i, i - 1) = ext.one();
    }
    *rep_u.at_mut(0, n - 1) = ext.from_rational(alg.parameter().clone());

    let mut acc = MatrixE::zero(ext, n);
    let mut u_pow = MatrixE::identity(ext, n);
    for c in x.coeffs() {
        if !c.is_zero() {
            let mut diag = MatrixE::zero(ext, n);
            for row in 0..n {
                *diag.at_mut(row, row) = c.galois(-(row as i64));
            }
            acc = acc.add(&diag.mul(&u_pow));
        }
        u_pow = rep_u.mul(&u_pow);
    }
    acc
}

/// A place of `Q`: a finite prime or the archimedean place.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Place {
    Finite(u64),
    Infinity,
}

impl PartialOrd for Place {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Place {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Place::Finite(p), Place::Finite(q)) => p.cmp(q),
            (Place::Finite(_), Place::Infinity) => Ordering::Less,
            (Place::Infinity, Place::Finite(_)) => Ordering::Greater,
            (Place::Infinity, Place::Infinity) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Finite(p) => write!(f, "{p}"),
            Place::Infinity => write!(f, "inf"),
        }
    }
}

impl FromStr for Place {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "oo" => Ok(Place::Infinity),
            other => other
                .parse::<u64>()
                .map(Place::Finite)
                .map_err(|_| Error::Parse(format!("bad place `{s}`"))),
        }
    }
}

impl Serialize for Place {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Place {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

// (v_p(r) mod 2, unit part of r modulo m) for m = p or 8.
fn val_and_unit(r: &Rational, p: u64, modulus: u64) -> (bool, u64) {
    let strip = |mut x: BigInt| -> (i64, BigInt) {
        let pb = big(p as i64);
        let mut v = 0i64;
        while (&x % &pb).is_zero() {
            x /= &pb;
            v += 1;
        }
        (v, x)
    };
    let (vn, un) = strip(r.numer().clone());
    let (vd, ud) = strip(r.denom().clone());
    let v = vn - vd;
    // unit = un/ud mod modulus; the inverse exists because ud is coprime to p.
    let unum = mod_u64(&un, modulus);
    let uden = mod_u64(&ud, modulus);
    let inv = (1..modulus).find(|&k| k * uden % modulus == 1).expect("unit is invertible");
    (v.rem_euclid(2) == 1, unum * inv % modulus)
}

/// Hilbert symbol `(a,b)_v ∈ {±1}`: whether `z² = a·x² + b·y²` has a
/// nontrivial solution over the completion at `v`, by the classical
/// valuation/residue formulas.
pub fn hilbert_symbol(a: &Rational, b: &Rational, place: Place) -> Result<i32> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroArgument);
    }
    match place {
        Place::Infinity => {
            Ok(if a.is_negative() && b.is_negative() { -1 } else { 1 })
        }
        Place::Finite(2) => {
            let (alpha, u) = val_and_unit(a, 2, 8);
            let (beta, v) = val_and_unit(b, 2, 8);
            let eps = |x: u64| ((x - 1) / 2) % 2; // 0 for x ≡ 1 (4), 1 for x ≡ 3 (4)
            let omega = |x: u64| ((x * x - 1) / 8) % 2; // 0 for x ≡ ±1 (8)
            let mut exp = eps(u) * eps(v);
            if alpha {
                exp += omega(v);
            }
            if beta {
                exp += omega(u);
            }
            Ok(if exp % 2 == 0 { 1 } else { -1 })
        }
        Place::Finite(p) => {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            let (alpha, u) = val_and_unit(a, p, p);
            let (beta, v) = val_and_unit(b, p, p);
            let mut sym = 1i32;
            if alpha && beta && (p - 1) / 2 % 2 == 1 {
                sym = -sym;
            }
            if beta {
                sym *= legendre(u as i64, p);
            }
            if alpha {
                sym *= legendre(v as i64, p);
            }
            Ok(sym)
        }
    }
}

/// Ramification profile of a quaternion algebra over `Q`: the set of places
/// carrying Brauer invariant `1/2`. The set always has even cardinality, so
/// the invariants sum to `0` mod `1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseProfile {
    ramified_places: BTreeSet<Place>,
}

impl HasseProfile {
    pub fn ramified_places(&self) -> &BTreeSet<Place> {
        &self.ramified_places
    }

    pub fn is_split_everywhere(&self) -> bool {
        self.ramified_places.is_empty()
    }

    /// The local invariant at a place: `1/2` where ramified, `0` elsewhere.
    pub fn invariant(&self, place: Place) -> Rational {
        if self.ramified_places.contains(&place) {
            crate::arith::rat(1, 2)
        } else {
            Rational::zero()
        }
    }
}

/// Local invariants of a quaternion-type cyclic algebra `C(a)` over
/// `E = Q(√d)`, i.e. of the symbol algebra `(d, a)`: invariant `1/2`
/// exactly where `hilbert_symbol(d, a, ·) = −1`.
pub fn hasse_profile(alg: &CyclicAlgebra) -> Result<HasseProfile> {
    if alg.degree() != 2 {
        return Err(Error::Unsupported(
            "Hasse profiles are implemented for quaternion algebras only".into(),
        ));
    }
    let qb = alg.extension().quad_basis().ok_or(Error::NotQuadratic)?;
    let d = rat_int(qb.d);
    let a = alg.parameter();

    let mut candidates: BTreeSet<Place> = BTreeSet::new();
    candidates.insert(Place::Infinity);
    candidates.insert(Place::Finite(2));
    for (p, _) in crate::arith::factorize(qb.d.unsigned_abs()) {
        candidates.insert(Place::Finite(p));
    }
    for part in [a.numer(), a.denom()] {
        if let Some(n) = part.magnitude().to_u64() {
            for (p, _) in crate::arith::factorize(n) {
                candidates.insert(Place::Finite(p));
            }
        } else {
            return Err(Error::Unsupported("algebra parameter exceeds 64 bits".into()));
        }
    }

    let mut ramified = BTreeSet::new();
    for place in candidates {
        if hilbert_symbol(&d, a, place)? == -1 {
            ramified.insert(place);
        }
    }
    if ramified.len() % 2 != 0 {
        return Err(Error::Internal(
            "ramified set has odd cardinality, violating reciprocity".into(),
        ));
    }
    Ok(HasseProfile { ramified_places: ramified })
}

/// Outcome of the division test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DivisionStatus {
    Division,
    NotDivision,
    Unknown,
}

/// A witness against division: `γ ∈ E` with `N(γ) = a^k`, `1 ≤ k < n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormWitness {
    pub k: u32,
    pub gamma: FieldElement,
}

/// Result of [`is_division`]; `witness` is populated for `not_division`
/// when the bounded search finds one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionVerdict {
    pub status: DivisionStatus,
    pub witness: Option<NormWitness>,
    pub search_bound: u64,
}

// Deterministic enumeration of candidate γ: radius shells, leading
// coordinate descending, later coordinates fanning out from zero, integer
// denominators last. Returns the first witness with N(γ) = a^k.
fn search_norm_witness(alg: &CyclicAlgebra, budget: u64) -> Option<NormWitness> {
    let ext = alg.extension();
    let n = ext.degree();
    let powers: Vec<Rational> = (1..n as u32).map(|k| alg.parameter().pow(k as i32)).collect();
    let mut tested = 0u64;
    let mut radius = 1i64;
    while tested < budget {
        for z in 1..=radius {
            let mut coords = vec![0i64; n];
            if shell_scan(&mut coords, 0, radius, z, ext, &powers, &mut tested, budget) {
                let gamma =
                    ext.element(coords.iter().map(|&c| crate::arith::rat(c, z)).collect());
                let norm = gamma.norm();
                let k = powers.iter().position(|p| *p == norm).unwrap() as u32 + 1;
                return Some(NormWitness { k, gamma });
            }
        }
        radius += 1;
    }
    None
}

// Fans coordinate `idx` over the shell; returns true when `coords` holds a
// witness on exit.
#[allow(clippy::too_many_arguments)]
fn shell_scan(
    coords: &mut Vec<i64>,
    idx: usize,
    radius: i64,
    denom: i64,
    ext: &Arc<CyclicExtension>,
    powers: &[Rational],
    tested: &mut u64,
    budget: u64,
) -> bool {
    if idx == coords.len() {
        // Only the outer shell (with this denominator: gcd-primitive tuples).
        if coords.iter().all(|c| c.abs() < radius) {
            return false;
        }
        let mut g = denom.unsigned_abs();
        for &c in coords.iter() {
            g = num_integer::gcd(g, c.unsigned_abs());
        }
        if g > 1 {
            return false;
        }
        if *tested >= budget {
            return false;
        }
        *tested += 1;
        let gamma = ext.element(coords.iter().map(|&c| crate::arith::rat(c, denom)).collect());
        if gamma.is_zero() {
            return false;
        }
        let norm = gamma.norm();
        return powers.iter().any(|p| *p == norm);
    }
    if idx == 0 {
        // Leading coordinate runs from +radius down so positive witnesses
        // are found first.
        let mut v = radius;
        loop {
            coords[0] = v;
            if shell_scan(coords, 1, radius, denom, ext, powers, tested, budget) {
                return true;
            }
            if v == -radius || *tested >= budget {
                return false;
            }
            v -= 1;
        }
    }
    // Later coordinates fan out 0, 1, −1, 2, −2, ...
    for step in 0..=radius {
        for sign in [1i64, -1] {
            if step == 0 && sign == -1 {
                continue;
            }
            coords[idx] = sign * step;
            if shell_scan(coords, idx + 1, radius, denom, ext, powers, tested, budget) {
                return true;
            }
            if *tested >= budget {
                return false;
            }
        }
    }
    false
}

/// Decides whether `C(a)` is a division algebra.
///
/// For quaternion algebras (`n = 2` over a quadratic field) the test is
/// exact: `a` is a norm from `E` iff the symbol algebra `(d, a)` splits at
/// every place. For presented higher-degree extensions the test is a
/// bounded witness search and honestly reports `unknown` when the budget is
/// exhausted.
pub fn is_division(alg: &CyclicAlgebra, budget: u64) -> Result<DivisionVerdict> {
    if alg.degree() == 2 && alg.extension().is_quadratic() {
        let profile = hasse_profile(alg)?;
        if !profile.is_split_everywhere() {
            return Ok(DivisionVerdict {
                status: DivisionStatus::Division,
                witness: None,
                search_bound: budget,
            });
        }
        let witness = search_norm_witness(alg, budget);
        return Ok(DivisionVerdict {
            status: DivisionStatus::NotDivision,
            witness,
            search_bound: budget,
        });
    }
    match search_norm_witness(alg, budget) {
        Some(w) => Ok(DivisionVerdict {
            status: DivisionStatus::NotDivision,
            witness: Some(w),
            search_bound: budget,
        }),
        None => Ok(DivisionVerdict {
            status: DivisionStatus::Unknown,
            witness: None,
            search_bound: budget,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use num_traits::One;

    fn gaussian() -> Arc<CyclicExtension> {
        CyclicExtension::quadratic(-1).unwrap()
    }

    fn quaternions() -> CyclicAlgebra {
        CyclicAlgebra::new(&gaussian(), rat_int(-1)).unwrap()
    }

    #[test]
    fn construction() {
        assert!(CyclicAlgebra::new(&gaussian(), Rational::zero()).is_err());
        let h = quaternions();
        assert_eq!(h.dimension(), 4);
        let split = CyclicAlgebra::new(&gaussian(), rat_int(1)).unwrap();
        assert_eq!(split.dimension(), 4);
        let other = CyclicAlgebra::new(&CyclicExtension::quadratic(2).unwrap(), rat_int(3));
        assert!(other.is_ok());
    }

    #[test]
    fn twisted_multiplication() {
        let h = quaternions();
        let e = h.extension().clone();
        let u = h.u();
        let i = h.from_field(&e.primitive());

        // u·i = θ(i)·u = −i·u
        assert_eq!(u.mul(&i), i.neg().mul(&u));
        // u² = −1
        assert_eq!(u.mul(&u), h.from_rational(rat_int(-1)));
        // x·1 = x
        let x = h.element(vec![e.element(vec![rat_int(1), rat_int(2)]), e.primitive()]);
        assert_eq!(x.mul(&h.one()), x);
        // u·α·u⁻¹ = θ(α); u⁻¹ = −u here
        let alpha = e.element(vec![rat(1, 2), rat_int(3)]);
        let u_inv = u.inv().unwrap();
        assert_eq!(
            u.mul(&h.from_field(&alpha)).mul(&u_inv),
            h.from_field(&alpha.galois(1))
        );
    }

    #[test]
    fn matrix_rep_of_u_and_i() {
        let h = quaternions();
        let e = h.extension().clone();
        let m_u = matrix_rep(&h.u());
        // [[0, −1], [1, 0]]
        assert_eq!(*m_u.at(0, 0), e.zero());
        assert_eq!(*m_u.at(0, 1), e.from_int(-1));
        assert_eq!(*m_u.at(1, 0), e.one());
        assert_eq!(*m_u.at(1, 1), e.zero());
        // square is −identity
        assert_eq!(m_u.mul(&m_u), MatrixE::identity(&e, 2).neg());
        // identity element ↦ identity matrix
        assert_eq!(matrix_rep(&h.one()), MatrixE::identity(&e, 2));
        // i ↦ diag(i, −i) and u·diag(i,−i)·u⁻¹ = diag(−i, i)
        let m_i = matrix_rep(&h.from_field(&e.primitive()));
        assert_eq!(*m_i.at(0, 0), e.primitive());
        assert_eq!(*m_i.at(1, 1), e.primitive().neg());
        let m_u_inv = matrix_rep(&h.u().inv().unwrap());
        let conj = m_u.mul(&m_i).mul(&m_u_inv);
        assert_eq!(conj, matrix_rep(&h.from_field(&e.primitive().galois(1))));
    }

    #[test]
    fn zero_divisors_in_split_algebra() {
        let split = CyclicAlgebra::new(&gaussian(), rat_int(1)).unwrap();
        let one_plus_u = split.one().add(&split.u());
        let one_minus_u = split.one().sub(&split.u());
        assert!(one_plus_u.mul(&one_minus_u).is_zero());
        assert!(one_plus_u.inv().is_none());
    }

    #[test]
    fn division_verdicts() {
        let h = quaternions();
        let v = is_division(&h, 10_000).unwrap();
        assert_eq!(v.status, DivisionStatus::Division);

        let split = CyclicAlgebra::new(&gaussian(), rat_int(1)).unwrap();
        let v1 = is_division(&split, 10_000).unwrap();
        assert_eq!(v1.status, DivisionStatus::NotDivision);
        let w1 = v1.witness.unwrap();
        assert_eq!((w1.k, w1.gamma.clone()), (1, gaussian().one()));

        let five = CyclicAlgebra::new(&gaussian(), rat_int(5)).unwrap();
        let v5 = is_division(&five, 10_000).unwrap();
        assert_eq!(v5.status, DivisionStatus::NotDivision);
        let w5 = v5.witness.unwrap();
        assert_eq!(w5.k, 1);
        assert_eq!(w5.gamma, gaussian().element(vec![rat_int(2), rat_int(1)])); // 2 + i
        assert_eq!(w5.gamma.norm(), rat_int(5));
    }

    #[test]
    fn hilbert_symbol_examples() {
        let m1 = rat_int(-1);
        assert_eq!(hilbert_symbol(&m1, &m1, Place::Finite(2)).unwrap(), -1);
        assert_eq!(hilbert_symbol(&m1, &m1, Place::Infinity).unwrap(), -1);
        assert_eq!(hilbert_symbol(&m1, &m1, Place::Finite(5)).unwrap(), 1);
        assert_eq!(hilbert_symbol(&rat_int(2), &rat_int(3), Place::Finite(2)).unwrap(), -1);
        assert_eq!(
            hilbert_symbol(&rat(1, 2), &rat_int(3), Place::Finite(2)).unwrap(),
            hilbert_symbol(&rat_int(2), &rat_int(3), Place::Finite(2)).unwrap(),
        );
        assert!(hilbert_symbol(&Rational::zero(), &m1, Place::Infinity).is_err());
        assert!(hilbert_symbol(&m1, &m1, Place::Finite(6)).is_err());
    }

    #[test]
    fn hasse_profiles() {
        let h = quaternions();
        let prof = hasse_profile(&h).unwrap();
        let places: Vec<Place> = prof.ramified_places().iter().copied().collect();
        assert_eq!(places, vec![Place::Finite(2), Place::Infinity]);
        assert_eq!(prof.invariant(Place::Finite(2)), rat(1, 2));
        assert_eq!(prof.invariant(Place::Finite(3)), Rational::zero());

        let split = CyclicAlgebra::new(&gaussian(), rat_int(1)).unwrap();
        assert!(hasse_profile(&split).unwrap().is_split_everywhere());

        let five = CyclicAlgebra::new(&gaussian(), rat_int(5)).unwrap();
        assert!(hasse_profile(&five).unwrap().is_split_everywhere());
    }

    #[test]
    fn higher_degree_search_is_honest() {
        // Q(ζ₅), a = 1: N(1) = 1 = a¹ is found immediately.
        let mp: Vec<BigInt> = vec![1, 1, 1, 1, 1].into_iter().map(BigInt::from).collect();
        let theta = vec![Rational::zero(), Rational::zero(), Rational::one()];
        let e = CyclicExtension::presented(mp, theta).unwrap();
        let alg = CyclicAlgebra::new(&e, rat_int(1)).unwrap();
        let v = is_division(&alg, 10_000).unwrap();
        assert_eq!(v.status, DivisionStatus::NotDivision);
        assert_eq!(v.witness.unwrap().k, 1);

        // a = 7 over Q(ζ₅): a tiny budget cannot find a witness.
        let alg7 = CyclicAlgebra::new(&e, rat_int(7)).unwrap();
        let v7 = is_division(&alg7, 50).unwrap();
        assert_eq!(v7.status, DivisionStatus::Unknown);
        assert_eq!(v7.search_bound, 50);
    }
}
