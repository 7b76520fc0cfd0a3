//! Integral ideals of quadratic rings of integers in Hermite normal form.
//!
//! An ideal is stored as the module `aZ + (b + cω)Z` with `c ≥ 1`, `c | a`,
//! `c | b`, `a ≥ 1` and `0 ≤ b < a`; closure under multiplication by `ω` is
//! verified at construction and the norm is `a·c`. Non-principal ideals are
//! first-class: nothing here assumes class number one.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use serde::{Deserialize, Serialize};

use crate::arith::{big, factorize, is_prime, legendre, mod_u64, sqrt_mod};
use crate::error::{Error, Result};
use crate::numfield::{CyclicExtension, FieldElement};

/// An integral ideal of the ring of integers of a quadratic field, in
/// Hermite normal form.
#[derive(Debug, Clone)]
pub struct QuadIdeal {
    field: Arc<CyclicExtension>,
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl PartialEq for QuadIdeal {
    fn eq(&self, other: &Self) -> bool {
        *self.field == *other.field && self.a == other.a && self.b == other.b && self.c == other.c
    }
}
impl Eq for QuadIdeal {}

impl PartialOrd for QuadIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadIdeal {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.a, &self.b, &self.c, self.field.to_string()).cmp(&(
            &other.a,
            &other.b,
            &other.c,
            other.field.to_string(),
        ))
    }
}

// (tr ω, N ω) as BigInt.
fn omega_data(field: &CyclicExtension) -> Result<(BigInt, BigInt)> {
    let qb = field.quad_basis().ok_or(Error::NotQuadratic)?;
    Ok((big(qb.omega_trace()), big(qb.omega_norm())))
}

impl QuadIdeal {
    /// Validates the HNF triple and ω-closure.
    pub fn new(field: &Arc<CyclicExtension>, a: BigInt, b: BigInt, c: BigInt) -> Result<Self> {
        let (t, n) = omega_data(field)?;
        if a < BigInt::one() || c < BigInt::one() {
            return Err(Error::InvalidIdeal(format!("need a ≥ 1 and c ≥ 1, got a={a}, c={c}")));
        }
        if b.is_negative() || b >= a {
            return Err(Error::InvalidIdeal(format!("need 0 ≤ b < a, got a={a}, b={b}")));
        }
        if !(&a % &c).is_zero() || !(&b % &c).is_zero() {
            return Err(Error::InvalidIdeal(format!("c = {c} must divide a = {a} and b = {b}")));
        }
        let (a1, b1) = (&a / &c, &b / &c);
        // Closure under ω: a/c must divide N(b/c + ω).
        let val = &b1 * &b1 + &t * &b1 + &n;
        if !(&val % &a1).is_zero() {
            return Err(Error::InvalidIdeal(format!(
                "module ({a}, {b}+{c}w) is not closed under multiplication by w"
            )));
        }
        Ok(QuadIdeal { field: Arc::clone(field), a, b, c })
    }

    /// The unit ideal, i.e. the whole ring of integers.
    pub fn unit(field: &Arc<CyclicExtension>) -> Result<Self> {
        Self::new(field, BigInt::one(), BigInt::zero(), BigInt::one())
    }

    /// HNF of the module generated by `x + yω` rows; fails when the module
    /// has rank < 2 or is not ω-stable.
    pub fn from_generators(field: &Arc<CyclicExtension>, rows: &[(BigInt, BigInt)]) -> Result<Self> {
        // Combine rows into one generator (bx, g) with g = gcd of all ω
        // coefficients, then reduce the rest to rational integers.
        let mut bx = BigInt::zero();
        let mut g = BigInt::zero();
        for (x, y) in rows {
            if y.is_zero() {
                continue;
            }
            if g.is_zero() {
                bx = x.clone();
                g = y.clone();
                continue;
            }
            let eg = g.extended_gcd(y);
            bx = &eg.x * &bx + &eg.y * x;
            g = eg.gcd;
        }
        if g.is_zero() {
            return Err(Error::InvalidIdeal("module has rank < 2".into()));
        }
        if g.is_negative() {
            g = -g;
            bx = -bx;
        }
        let mut a = BigInt::zero();
        for (x, y) in rows {
            let reduced = x - (y / &g) * &bx;
            a = a.gcd(&reduced);
        }
        if a.is_zero() {
            return Err(Error::InvalidIdeal("module has rank < 2".into()));
        }
        let b = bx.mod_floor(&a);
        Self::new(field, a, b, g)
    }

    /// The principal ideal generated by an integral element.
    pub fn principal(x: &FieldElement) -> Result<Self> {
        if x.is_zero() {
            return Err(Error::InvalidIdeal("zero generator".into()));
        }
        let (u, v) = x.omega_coords().ok_or(Error::NotQuadratic)?;
        if !u.is_integer() || !v.is_integer() {
            return Err(Error::InvalidIdeal(format!("{x} is not an algebraic integer")));
        }
        let (u, v) = (u.to_integer(), v.to_integer());
        let (t, n) = omega_data(x.parent())?;
        // Generators x·1 and x·ω.
        let rows = [(u.clone(), v.clone()), (-(&v * &n), &u + &v * &t)];
        Self::from_generators(x.parent(), &rows)
    }

    pub fn field(&self) -> &Arc<CyclicExtension> {
        &self.field
    }

    /// The HNF triple `(a, b, c)`.
    pub fn hnf(&self) -> (&BigInt, &BigInt, &BigInt) {
        (&self.a, &self.b, &self.c)
    }

    /// `|O_E / I| = a·c`.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.c
    }

    pub fn is_unit(&self) -> bool {
        self.a.is_one() && self.c.is_one()
    }

    /// Membership of `x + yω`.
    pub fn contains(&self, x: &BigInt, y: &BigInt) -> bool {
        if !(y % &self.c).is_zero() {
            return false;
        }
        let rem = x - (y / &self.c) * &self.b;
        (rem % &self.a).is_zero()
    }

    pub fn contains_element(&self, x: &FieldElement) -> bool {
        match x.omega_coords() {
            Some((u, v)) if u.is_integer() && v.is_integer() => {
                self.contains(&u.to_integer(), &v.to_integer())
            }
            _ => false,
        }
    }

    pub fn contains_ideal(&self, other: &Self) -> bool {
        self.contains(&other.a, &BigInt::zero()) && self.contains(&other.b, &other.c)
    }

    /// Ideal product: HNF of the module generated by pairwise generator
    /// products. Norms multiply.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if *self.field != *other.field {
            return Err(Error::InvalidIdeal("ideals of different fields".into()));
        }
        let (t, n) = omega_data(&self.field)?;
        let (a1, b1, c1) = (&self.a, &self.b, &self.c);
        let (a2, b2, c2) = (&other.a, &other.b, &other.c);
        // (b1 + c1ω)(b2 + c2ω) = b1b2 − n·c1c2 + (b1c2 + b2c1 + t·c1c2)ω
        let cross_x = b1 * b2 - &n * &(c1 * c2);
        let cross_y = b1 * c2 + b2 * c1 + &t * &(c1 * c2);
        let rows = [
            (a1 * a2, BigInt::zero()),
            (a1 * b2, a1 * c2),
            (a2 * b1, a2 * c1),
            (cross_x, cross_y),
        ];
        Self::from_generators(&self.field, &rows)
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut acc = Self::unit(&self.field)?;
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    // `b + cω` rendered with ω written as `w`.
    pub(crate) fn generator_string(&self) -> String {
        let c_part = if self.c.is_one() { "w".to_string() } else { format!("{}w", self.c) };
        if self.b.is_zero() {
            c_part
        } else {
            format!("{}+{}", self.b, c_part)
        }
    }
}

impl fmt::Display for QuadIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.a, self.generator_string())
    }
}

#[derive(Serialize, Deserialize, Clone)]
struct QuadIdealJson {
    #[serde(with = "crate::arith::bigint_serde")]
    a: BigInt,
    #[serde(with = "crate::arith::bigint_serde")]
    b: BigInt,
    #[serde(with = "crate::arith::bigint_serde")]
    c: BigInt,
    field: String,
}

impl From<QuadIdeal> for QuadIdealJson {
    fn from(i: QuadIdeal) -> Self {
        QuadIdealJson { a: i.a.clone(), b: i.b.clone(), c: i.c.clone(), field: i.field.to_string() }
    }
}

impl TryFrom<QuadIdealJson> for QuadIdeal {
    type Error = Error;
    fn try_from(j: QuadIdealJson) -> Result<Self> {
        let field = crate::parse::parse_field(&j.field)?;
        QuadIdeal::new(&field, j.a, j.b, j.c)
    }
}

impl Serialize for QuadIdeal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QuadIdealJson::from(self.clone()).serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuadIdeal {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        QuadIdeal::try_from(QuadIdealJson::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// How a rational prime decomposes in a quadratic field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SplitType {
    Split,
    Inert,
    Ramified,
}

/// A prime ideal over a rational prime `p`, with its residue degree `f` and
/// ramification index `e`; the norm is `p^f` and `e·f·g = 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeIdeal {
    ideal: QuadIdeal,
    p: u64,
    residue_degree: u8,
    ramification: u8,
}

impl PrimeIdeal {
    pub fn ideal(&self) -> &QuadIdeal {
        &self.ideal
    }

    pub fn residue_char(&self) -> u64 {
        self.p
    }

    pub fn residue_degree(&self) -> u8 {
        self.residue_degree
    }

    pub fn ramification(&self) -> u8 {
        self.ramification
    }

    /// Recognizes a prime ideal from its HNF, recovering `(p, f, e)`.
    pub fn try_from_ideal(ideal: QuadIdeal) -> Result<Self> {
        let norm = ideal
            .norm()
            .to_u64()
            .ok_or_else(|| Error::Unsupported("ideal norm exceeds 64 bits".into()))?;
        let factors = factorize(norm);
        if factors.len() != 1 || factors[0].1 > 2 {
            return Err(Error::InvalidIdeal(format!("norm {norm} is not p or p²")));
        }
        let (p, e) = factors[0];
        let splitting = split_prime(ideal.field(), p)?;
        match splitting.kind {
            SplitType::Inert if e == 2 => Ok(splitting.primes.into_iter().next().unwrap()),
            SplitType::Split | SplitType::Ramified if e == 1 => splitting
                .primes
                .into_iter()
                .find(|pr| pr.ideal == ideal)
                .ok_or_else(|| Error::InvalidIdeal(format!("{ideal} is not prime"))),
            _ => Err(Error::InvalidIdeal(format!("{ideal} is not prime"))),
        }
    }
}

impl fmt::Display for PrimeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ideal)
    }
}

/// The decomposition of a rational prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Splitting {
    pub p: u64,
    pub kind: SplitType,
    pub primes: Vec<PrimeIdeal>,
}

/// Decomposes the rational prime `p` in a quadratic field. The type is
/// decided by the field discriminant: split when it is a nonzero square
/// mod `p`, ramified when `p` divides it, inert otherwise.
pub fn split_prime(field: &Arc<CyclicExtension>, p: u64) -> Result<Splitting> {
    let qb = *field.quad_basis().ok_or(Error::NotQuadratic)?;
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let disc = qb.field_discriminant();
    let kind = if p == 2 {
        if disc % 2 == 0 {
            SplitType::Ramified
        } else if disc.rem_euclid(8) == 1 {
            SplitType::Split
        } else {
            SplitType::Inert
        }
    } else if disc.rem_euclid(p as i64) == 0 {
        SplitType::Ramified
    } else if legendre(disc, p) == 1 {
        SplitType::Split
    } else {
        SplitType::Inert
    };

    let t = qb.omega_trace();
    let n = qb.omega_norm();
    // Roots of x² + t·x + n (mod p) give the generators (p, r + ω).
    let roots: Vec<u64> = if p == 2 {
        (0u64..2)
            .filter(|&r| (r as i64 * r as i64 + t * r as i64 + n).rem_euclid(2) == 0)
            .collect()
    } else {
        let dm = mod_u64(&big(disc), p);
        match sqrt_mod(dm, p) {
            None => Vec::new(),
            Some(s) => {
                let inv2 = ((p + 1) / 2) as u128; // 2⁻¹ mod p
                let tm = (-t).rem_euclid(p as i64) as u128;
                let mut rs: Vec<u64> = [s, (p - s) % p]
                    .iter()
                    .map(|&sq| (((tm + sq as u128) % p as u128) * inv2 % p as u128) as u64)
                    .collect();
                rs.sort_unstable();
                rs.dedup();
                rs
            }
        }
    };

    let prime_at = |r: u64, e: u8| -> Result<PrimeIdeal> {
        Ok(PrimeIdeal {
            ideal: QuadIdeal::new(field, big(p as i64), big(r as i64), BigInt::one())?,
            p,
            residue_degree: 1,
            ramification: e,
        })
    };

    let primes = match kind {
        SplitType::Split => {
            debug_assert_eq!(roots.len(), 2);
            let mut v = vec![prime_at(roots[0], 1)?, prime_at(roots[1], 1)?];
            v.sort_by(|x, y| x.ideal.cmp(&y.ideal));
            v
        }
        SplitType::Ramified => {
            debug_assert_eq!(roots.len(), 1);
            vec![prime_at(roots[0], 2)?]
        }
        SplitType::Inert => vec![PrimeIdeal {
            ideal: QuadIdeal::new(field, big(p as i64), BigInt::zero(), big(p as i64))?,
            p,
            residue_degree: 2,
            ramification: 1,
        }],
    };
    Ok(Splitting { p, kind, primes })
}

/// All integral ideals of norm exactly `m`, sorted by HNF. The list is
/// empty iff some inert prime divides `m` to an odd power.
pub fn ideals_of_norm(field: &Arc<CyclicExtension>, m: u64) -> Result<Vec<QuadIdeal>> {
    let qb = *field.quad_basis().ok_or(Error::NotQuadratic)?;
    if m == 0 {
        return Err(Error::Unsupported("ideal norm must be positive".into()));
    }
    let (t, n) = (qb.omega_trace() as i128, qb.omega_norm() as i128);
    let mut out = Vec::new();
    let mut c = 1u64;
    while c.saturating_mul(c) <= m {
        if m % (c * c) == 0 {
            let a1 = (m / (c * c)) as i128;
            for b1 in 0..a1 {
                if (b1 * b1 + t * b1 + n).rem_euclid(a1) == 0 {
                    out.push(QuadIdeal::new(
                        field,
                        big(c as i64) * big(a1 as i64),
                        big(c as i64) * big(b1 as i64),
                        big(c as i64),
                    )?);
                }
            }
        }
        c += 1;
    }
    out.sort();
    Ok(out)
}

/// One prime-power factor of an ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealPower {
    pub prime: PrimeIdeal,
    pub exponent: u32,
}

#[derive(Serialize, Deserialize)]
struct IdealPowerJson {
    ideal: QuadIdeal,
    exponent: u32,
}

impl Serialize for IdealPower {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        IdealPowerJson { ideal: self.prime.ideal.clone(), exponent: self.exponent }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IdealPower {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = IdealPowerJson::deserialize(d)?;
        let prime = PrimeIdeal::try_from_ideal(j.ideal).map_err(serde::de::Error::custom)?;
        Ok(IdealPower { prime, exponent: j.exponent })
    }
}

/// Factorization of an integral ideal into prime ideals, sorted by
/// `(p, HNF)`; the factorization of the unit ideal is empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct IdealFactorization {
    factors: Vec<IdealPower>,
}

impl IdealFactorization {
    pub fn factors(&self) -> &[IdealPower] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Re-multiplies the factors.
    pub fn product(&self, field: &Arc<CyclicExtension>) -> Result<QuadIdeal> {
        let mut acc = QuadIdeal::unit(field)?;
        for f in &self.factors {
            acc = acc.mul(&f.prime.ideal.pow(f.exponent)?)?;
        }
        Ok(acc)
    }
}

/// Unique factorization into prime ideals. The result is verified by
/// re-multiplication before it is returned.
pub fn factor_ideal(ideal: &QuadIdeal) -> Result<IdealFactorization> {
    let field = ideal.field();
    let norm = ideal
        .norm()
        .to_u64()
        .ok_or_else(|| Error::Unsupported("ideal norm exceeds 64 bits".into()))?;
    let mut factors: Vec<IdealPower> = Vec::new();
    for (p, e) in factorize(norm) {
        let splitting = split_prime(field, p)?;
        match splitting.kind {
            SplitType::Inert => {
                if e % 2 != 0 {
                    return Err(Error::Internal(format!(
                        "inert prime {p} divides the norm of {ideal} to an odd power"
                    )));
                }
                factors.push(IdealPower { prime: splitting.primes[0].clone(), exponent: e / 2 });
            }
            SplitType::Ramified => {
                factors.push(IdealPower { prime: splitting.primes[0].clone(), exponent: e });
            }
            SplitType::Split => {
                let p1 = &splitting.primes[0];
                let p2 = &splitting.primes[1];
                // Valuation at p1 by containment in increasing powers.
                let mut k1 = 0u32;
                let mut pw = QuadIdeal::unit(field)?;
                while k1 < e {
                    pw = pw.mul(&p1.ideal)?;
                    if !pw.contains_ideal(ideal) {
                        break;
                    }
                    k1 += 1;
                }
                let k2 = e - k1;
                if k2 > 0 && !p2.ideal.pow(k2)?.contains_ideal(ideal) {
                    return Err(Error::Internal(format!(
                        "split valuations at {p} do not add up for {ideal}"
                    )));
                }
                if k1 > 0 {
                    factors.push(IdealPower { prime: p1.clone(), exponent: k1 });
                }
                if k2 > 0 {
                    factors.push(IdealPower { prime: p2.clone(), exponent: k2 });
                }
            }
        }
    }
    factors.sort_by(|x, y| (x.prime.p, &x.prime.ideal).cmp(&(y.prime.p, &y.prime.ideal)));
    let result = IdealFactorization { factors };
    let back = result.product(field)?;
    if back != *ideal {
        return Err(Error::Internal(format!("factor product {back} does not reproduce {ideal}")));
    }
    Ok(result)
}
