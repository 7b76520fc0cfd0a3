//! The classification codebook: dynamials over a cyclic algebra map to
//! combinatorial surface knot/link descriptors, one per ideal of the
//! matching norm. Descriptors record component prime data only (component
//! count, residue degree, ramification, multiplicity); no geometry beyond
//! that is claimed.

use serde::{Deserialize, Serialize};

use crate::arith::is_prime;
use crate::dynamial::Dynamial;
use crate::error::{Error, Result};
use crate::ideal_lattice::{IdealFactorization, QuadIdeal};

/// Knot for one component, link for several, empty for the unit ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LinkKind {
    Knot,
    Link,
    Empty,
}

/// One component of a surface link: a prime ideal factor with its residue
/// data and multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkComponent {
    pub p: u64,
    #[serde(rename = "f")]
    pub residue_degree: u8,
    #[serde(rename = "e")]
    pub ramification: u8,
    #[serde(rename = "k")]
    pub multiplicity: u32,
}

/// Combinatorial label of the surface knot/link attached to one ideal
/// choice. Component norms multiply back to the ideal norm:
/// `Π p^{f·k} = N(ideal)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceLinkDescriptor {
    pub ambient: String,
    pub ideal: QuadIdeal,
    pub components: Vec<LinkComponent>,
    pub kind: LinkKind,
}

/// Label of a sphere knot: a prime together with its local quaternion tag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphereKnotLabel {
    pub p: u64,
    pub local_algebra: String,
}

/// Components of an ideal factorization, in factor order.
pub fn components_of(factorization: &IdealFactorization) -> Vec<LinkComponent> {
    factorization
        .factors()
        .iter()
        .map(|f| LinkComponent {
            p: f.prime.residue_char(),
            residue_degree: f.prime.residue_degree(),
            ramification: f.prime.ramification(),
            multiplicity: f.exponent,
        })
        .collect()
}

/// Wraps link component data from a 3-manifold-side ideal into a surface
/// descriptor; the spinning step preserves the component combinatorics
/// unchanged.
pub fn spin(
    ambient: impl Into<String>,
    ideal: QuadIdeal,
    components: Vec<LinkComponent>,
) -> SurfaceLinkDescriptor {
    let kind = match components.len() {
        0 => LinkKind::Empty,
        1 => LinkKind::Knot,
        _ => LinkKind::Link,
    };
    SurfaceLinkDescriptor { ambient: ambient.into(), ideal, components, kind }
}

/// Classifies a dynamial over a cyclic algebra: one descriptor per ideal of
/// norm `m`, components given by the prime-ideal factors with their
/// multiplicities. An empty result means no ideal of norm `m` exists — the
/// "no classical counterpart" case.
pub fn classify(x: &Dynamial) -> Result<Vec<SurfaceLinkDescriptor>> {
    let ambient = x
        .ring()
        .as_cyclic_algebra()
        .ok_or_else(|| Error::Unsupported("classification requires a cyclic-algebra ring".into()))?
        .to_string();
    let mut out = Vec::new();
    for loc in x.localize()? {
        let components = components_of(&loc.factorization);
        out.push(spin(ambient.clone(), loc.ideal, components));
    }
    Ok(out)
}

/// The sphere-knot label attached to a prime: `(p, "H(Q_p)")`.
pub fn sphere_knot_label(p: u64) -> Result<SphereKnotLabel> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(SphereKnotLabel { p, local_algebra: format!("H(Q_{p})") })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat_int;
    use crate::cyclic_algebra::CyclicAlgebra;
    use crate::dynamial::RingDescriptor;
    use crate::ideal_lattice::factor_ideal;
    use crate::numfield::CyclicExtension;

    fn rational_quaternion_dynamial(m: u64) -> Dynamial {
        let e = CyclicExtension::quadratic(-1).unwrap();
        let alg = CyclicAlgebra::new(&e, rat_int(-1)).unwrap();
        Dynamial::new(RingDescriptor::CyclicAlgebra(alg), m).unwrap()
    }

    #[test]
    fn split_prime_gives_two_knots() {
        let descriptors = classify(&rational_quaternion_dynamial(5)).unwrap();
        assert_eq!(descriptors.len(), 2);
        for d in &descriptors {
            assert_eq!(d.kind, LinkKind::Knot);
            assert_eq!(d.components.len(), 1);
            assert_eq!(d.components[0].p, 5);
            assert_eq!(d.components[0].multiplicity, 1);
            assert_eq!(d.ambient, "C(-1;Q(sqrt,-1))");
        }
    }

    #[test]
    fn unit_dynamial_is_empty_descriptor() {
        let descriptors = classify(&rational_quaternion_dynamial(1)).unwrap();
        assert_eq!(descriptors.len(), 1);
        assert_eq!(descriptors[0].kind, LinkKind::Empty);
        assert!(descriptors[0].components.is_empty());
    }

    #[test]
    fn composite_split_index_gives_links() {
        let descriptors = classify(&rational_quaternion_dynamial(10)).unwrap();
        assert_eq!(descriptors.len(), 2);
        for d in &descriptors {
            assert_eq!(d.kind, LinkKind::Link);
            assert_eq!(d.components.len(), 2);
            assert_eq!(d.components[0].p, 2);
            assert_eq!(d.components[1].p, 5);
        }
    }

    #[test]
    fn inert_index_has_no_counterpart() {
        assert!(classify(&rational_quaternion_dynamial(3)).unwrap().is_empty());
        assert!(!classify(&rational_quaternion_dynamial(9)).unwrap().is_empty());
    }

    #[test]
    fn sphere_knot_labels() {
        assert_eq!(
            sphere_knot_label(5).unwrap(),
            SphereKnotLabel { p: 5, local_algebra: "H(Q_5)".into() }
        );
        assert_eq!(sphere_knot_label(2).unwrap().local_algebra, "H(Q_2)");
        assert_eq!(sphere_knot_label(6), Err(Error::NotPrime(6)));
    }

    #[test]
    fn spin_matches_classify() {
        let d = rational_quaternion_dynamial(50);
        let descriptors = classify(&d).unwrap();
        for desc in &descriptors {
            let fact = factor_ideal(&desc.ideal).unwrap();
            let spun = spin(desc.ambient.clone(), desc.ideal.clone(), components_of(&fact));
            assert_eq!(&spun, desc);
        }
    }

    #[test]
    fn descriptor_json_shape() {
        let descriptors = classify(&rational_quaternion_dynamial(5)).unwrap();
        let json = serde_json::to_string(&descriptors[0]).unwrap();
        assert_eq!(
            json,
            r#"{"ambient":"C(-1;Q(sqrt,-1))","ideal":{"a":5,"b":2,"c":1,"field":"Q(sqrt,-1)"},"components":[{"p":5,"f":1,"e":1,"k":1}],"kind":"knot"}"#
        );
        let back: SurfaceLinkDescriptor = serde_json::from_str(&json).unwrap();
        assert_eq!(back, descriptors[0]);
    }
}
