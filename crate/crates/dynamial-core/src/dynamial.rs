//! The dynamial semigroup: `D_m = R ⋊ mZ` for a ring `R` with a
//! distinguished outer `Z`-action. Products multiply indices, the index map
//! is a semigroup isomorphism onto the positive integers, and unique prime
//! factorization follows. Crossed-product expressions are represented
//! syntactically and rewritten to the normal form
//! `Cross(Cross(Ideal, Gal), Z)`, one normal form per ideal of the right
//! norm.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::arith::{factorize, is_prime};
use crate::cyclic_algebra::CyclicAlgebra;
use crate::error::{Error, Result};
use crate::ideal_lattice::{factor_ideal, ideals_of_norm, IdealFactorization, QuadIdeal};
use crate::numfield::CyclicExtension;

/// The ring a dynamial lives over. Abstract descriptors compare by label,
/// concrete ones structurally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingDescriptor {
    CyclicAlgebra(CyclicAlgebra),
    RmTorus(Arc<CyclicExtension>),
    Abstract(String),
}

impl RingDescriptor {
    pub fn as_cyclic_algebra(&self) -> Option<&CyclicAlgebra> {
        match self {
            RingDescriptor::CyclicAlgebra(a) => Some(a),
            _ => None,
        }
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::CyclicAlgebra(a) => write!(f, "{a}"),
            RingDescriptor::RmTorus(e) => write!(f, "RM({e})"),
            RingDescriptor::Abstract(label) => write!(f, "{label}"),
        }
    }
}

/// `D_m = R ⋊ mZ`, keyed by the ring descriptor and the index `m ≥ 1`.
/// `D_1` is the two-sided unit of the product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dynamial {
    ring: RingDescriptor,
    index: u64,
}

impl Dynamial {
    pub fn new(ring: RingDescriptor, index: u64) -> Result<Self> {
        if index == 0 {
            return Err(Error::ZeroIndex);
        }
        Ok(Dynamial { ring, index })
    }

    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    /// The index map `i(D_m) = m`; multiplicative over products.
    pub fn index(&self) -> u64 {
        self.index
    }

    /// `D_{m1} · D_{m2} = D_{m1·m2}`; commutative and associative with unit
    /// `D_1`. Rings must match.
    pub fn product(&self, other: &Self) -> Result<Self> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let index = self.index.checked_mul(other.index).ok_or_else(|| {
            Error::Unsupported(format!("index product {}·{} overflows", self.index, other.index))
        })?;
        Ok(Dynamial { ring: self.ring.clone(), index })
    }

    /// Prime-power factorization of the index; empty for `D_1`.
    pub fn factorize(&self) -> DynamialFactorization {
        DynamialFactorization {
            ring: self.ring.clone(),
            index: self.index,
            prime_powers: factorize(self.index),
        }
    }

    /// Minimal iff the index is prime. `D_1` is not minimal: 1 is not prime.
    pub fn is_minimal(&self) -> bool {
        is_prime(self.index)
    }

    /// Localizations at every ideal of norm `m` in the maximal subfield of
    /// the underlying cyclic algebra: the ideal, its prime factorization,
    /// and the rewritten crossed-product expression. Empty when no ideal of
    /// norm `m` exists.
    pub fn localize(&self) -> Result<Vec<Localization>> {
        let alg = self
            .ring
            .as_cyclic_algebra()
            .ok_or_else(|| Error::Unsupported("localize requires a cyclic-algebra ring".into()))?;
        let ext = alg.extension();
        let n = ext.degree() as u32;
        let mut out = Vec::new();
        for ideal in ideals_of_norm(ext, self.index)? {
            let factorization = factor_ideal(&ideal)?;
            let expr = CrossedProductExpr::Cross(
                Box::new(CrossedProductExpr::Cross(
                    Box::new(CrossedProductExpr::Ideal(ideal.clone())),
                    GroupFactor::Galois(n),
                )),
                GroupFactor::Z,
            );
            out.push(Localization { ideal, factorization, expr });
        }
        Ok(out)
    }
}

impl fmt::Display for Dynamial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D_{}({})", self.index, self.ring)
    }
}

/// One localization entry produced by [`Dynamial::localize`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Localization {
    pub ideal: QuadIdeal,
    pub factorization: IdealFactorization,
    pub expr: CrossedProductExpr,
}

/// Prime-power factorization of a dynamial: `D_m = Π D_{p_i^{k_i}}`,
/// sorted ascending in `p`, unique up to order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DynamialFactorization {
    #[serde(serialize_with = "serialize_ring")]
    ring: RingDescriptor,
    #[serde(rename = "m")]
    index: u64,
    prime_powers: Vec<(u64, u32)>,
}

fn serialize_ring<S: serde::Serializer>(
    r: &RingDescriptor,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(r)
}

impl DynamialFactorization {
    pub fn ring(&self) -> &RingDescriptor {
        &self.ring
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn prime_powers(&self) -> &[(u64, u32)] {
        &self.prime_powers
    }

    /// The minimal factors: primes repeated with multiplicity, ascending.
    pub fn minimal_factors(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for &(p, k) in &self.prime_powers {
            out.extend(std::iter::repeat(p).take(k as usize));
        }
        out
    }

    /// Re-multiplies the prime-power dynamials.
    pub fn product(&self) -> Result<Dynamial> {
        let mut acc = Dynamial::new(self.ring.clone(), 1)?;
        for &(p, k) in &self.prime_powers {
            let factor = Dynamial::new(self.ring.clone(), p.pow(k))?;
            acc = acc.product(&factor)?;
        }
        Ok(acc)
    }
}

/// Index of a subgroup `S` of a discrete group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubgroupIndex {
    Finite(u64),
    Infinite,
}

/// A subgroup of a discrete group is syndetic iff it has finite index.
pub fn is_syndetic(index: SubgroupIndex) -> Result<bool> {
    match index {
        SubgroupIndex::Finite(0) => Err(Error::ZeroIndex),
        SubgroupIndex::Finite(_) => Ok(true),
        SubgroupIndex::Infinite => Ok(false),
    }
}

/// The group part of one crossed-product layer: the full `Z`, a finite-index
/// subgroup `mZ` still pending ideal conversion, or a cyclic Galois group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupFactor {
    Z,
    MZ(u64),
    Galois(u32),
}

impl fmt::Display for GroupFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupFactor::Z => write!(f, "Z"),
            GroupFactor::MZ(m) => write!(f, "{m}Z"),
            GroupFactor::Galois(n) => write!(f, "Gal({n})"),
        }
    }
}

/// A syntactic crossed-product expression over ring-of-integers, ideal and
/// algebra atoms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrossedProductExpr {
    RingOfIntegers(Arc<CyclicExtension>),
    Ideal(QuadIdeal),
    Algebra(CyclicAlgebra),
    Cross(Box<CrossedProductExpr>, GroupFactor),
}

impl fmt::Display for CrossedProductExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CrossedProductExpr::RingOfIntegers(e) => write!(f, "OE({e})"),
            CrossedProductExpr::Ideal(i) => {
                write!(f, "Ideal({};{};{})", i.field(), i.hnf().0, i.generator_string())
            }
            CrossedProductExpr::Algebra(a) => write!(f, "Algebra({a})"),
            CrossedProductExpr::Cross(inner, g) => write!(f, "Cross({inner},{g})"),
        }
    }
}

/// The conserved content of an expression: base field, total index
/// (subgroup indices times ideal norms), number of `Z`-rank-one layers,
/// and the multiset of Galois orders. Rewriting preserves this signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    pub field: Option<String>,
    pub total_index: BigInt,
    pub z_rank: u32,
    pub galois_orders: Vec<u32>,
}

impl CrossedProductExpr {
    pub fn signature(&self) -> Signature {
        match self {
            CrossedProductExpr::RingOfIntegers(e) => Signature {
                field: Some(e.to_string()),
                total_index: BigInt::one(),
                z_rank: 0,
                galois_orders: Vec::new(),
            },
            CrossedProductExpr::Ideal(i) => Signature {
                field: Some(i.field().to_string()),
                total_index: i.norm(),
                z_rank: 0,
                galois_orders: Vec::new(),
            },
            CrossedProductExpr::Algebra(a) => Signature {
                field: Some(a.extension().to_string()),
                total_index: BigInt::one(),
                z_rank: 0,
                galois_orders: vec![a.degree() as u32],
            },
            CrossedProductExpr::Cross(inner, g) => {
                let mut sig = inner.signature();
                match g {
                    GroupFactor::Z => sig.z_rank += 1,
                    GroupFactor::MZ(m) => {
                        sig.z_rank += 1;
                        sig.total_index *= BigInt::from(*m);
                    }
                    GroupFactor::Galois(n) => {
                        sig.galois_orders.push(*n);
                        sig.galois_orders.sort_unstable();
                    }
                }
                sig
            }
        }
    }
}

/// Result of crossed-product normalization: either the set of normal forms
/// (one per admissible ideal) or the explicit marker that no ideal of the
/// required norm exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalForms {
    Forms(Vec<CrossedProductExpr>),
    NoClassicalCounterpart { field: String, index: u64 },
}

enum Step {
    Done,
    Branch(Vec<CrossedProductExpr>),
    NoClassical { field: String, index: u64 },
}

// One rewriting step at the outermost applicable position, rules tried in
// the fixed order R3, R2, R1:
//   R3: Algebra(C(a))            → Cross(OE(E), Gal(n))
//   R2a: Cross(Cross(x,Gal),mZ)  → Cross(Cross(x,mZ), Gal)
//   R2b: Cross(Cross(x,Z), Gal)  → Cross(Cross(x,Gal), Z)
//   R1: Cross(OE(E), mZ)         → Cross(Ideal(I), Z)  for each N(I) = m
fn try_rewrite(e: &CrossedProductExpr) -> Result<Step> {
    use CrossedProductExpr::*;
    use GroupFactor::*;

    // R3
    if let Algebra(a) = e {
        let expanded = Cross(
            Box::new(RingOfIntegers(Arc::clone(a.extension()))),
            Galois(a.degree() as u32),
        );
        return Ok(Step::Branch(vec![expanded]));
    }
    if let Cross(inner, g) = e {
        // R2a
        if let (Cross(x, Galois(n)), MZ(m)) = (inner.as_ref(), g) {
            return Ok(Step::Branch(vec![Cross(
                Box::new(Cross(x.clone(), MZ(*m))),
                Galois(*n),
            )]));
        }
        // R2b
        if let (Cross(x, Z), Galois(n)) = (inner.as_ref(), g) {
            return Ok(Step::Branch(vec![Cross(
                Box::new(Cross(x.clone(), Galois(*n))),
                Z,
            )]));
        }
        // R1
        if let (RingOfIntegers(field), MZ(m)) = (inner.as_ref(), g) {
            let ideals = ideals_of_norm(field, *m)?;
            if ideals.is_empty() {
                return Ok(Step::NoClassical { field: field.to_string(), index: *m });
            }
            return Ok(Step::Branch(
                ideals
                    .into_iter()
                    .map(|i| Cross(Box::new(Ideal(i)), Z))
                    .collect(),
            ));
        }
        // Recurse into the base.
        return Ok(match try_rewrite(inner)? {
            Step::Branch(inners) => Step::Branch(
                inners.into_iter().map(|x| Cross(Box::new(x), *g)).collect(),
            ),
            other => other,
        });
    }
    Ok(Step::Done)
}

/// Rewrites to the set of normal forms `Cross(Cross(Ideal, Gal), Z)`, one
/// per ideal choice; deterministic and signature-preserving. An expression
/// that demands an ideal of a norm that does not exist is reported as
/// [`NormalForms::NoClassicalCounterpart`], not an error.
pub fn normalize_crossed_product(e: &CrossedProductExpr) -> Result<NormalForms> {
    let mut work = vec![e.clone()];
    let mut done: Vec<CrossedProductExpr> = Vec::new();
    let mut steps = 0u32;
    while let Some(cur) = work.pop() {
        steps += 1;
        if steps > 100_000 {
            return Err(Error::Internal("crossed-product rewriting did not terminate".into()));
        }
        match try_rewrite(&cur)? {
            Step::Done => done.push(cur),
            Step::Branch(branches) => work.extend(branches),
            Step::NoClassical { field, index } => {
                return Ok(NormalForms::NoClassicalCounterpart { field, index })
            }
        }
    }
    done.sort_by_key(|x| x.to_string());
    done.dedup();
    Ok(NormalForms::Forms(done))
}
