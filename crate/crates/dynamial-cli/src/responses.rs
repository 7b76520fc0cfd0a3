//! JSON response documents, one struct per verb. Field order is the struct
//! declaration order, so serialized output is byte-deterministic; every
//! document carries the schema tag and re-parses into these types.

use serde::{Deserialize, Serialize};

use dynamial_core::cyclic_algebra::{DivisionStatus, NormWitness, Place};
use dynamial_core::ideal_lattice::{IdealPower, QuadIdeal};
use dynamial_core::surface_link::SurfaceLinkDescriptor;

pub const SCHEMA: &str = "dynamial/1";

pub fn schema() -> String {
    SCHEMA.into()
}

#[derive(Serialize, Deserialize)]
pub struct FactorDynamialResponse {
    pub schema: String,
    pub ring: String,
    pub m: u64,
    pub prime_powers: Vec<(u64, u32)>,
}

#[derive(Serialize, Deserialize)]
pub struct WitnessJson {
    pub k: u32,
    pub gamma: Vec<String>,
    pub field: String,
}

impl WitnessJson {
    pub fn from_witness(w: &NormWitness) -> Self {
        WitnessJson {
            k: w.k,
            gamma: w.gamma.coords().iter().map(|c| c.to_string()).collect(),
            field: w.gamma.parent().to_string(),
        }
    }
}

#[derive(Serialize, Deserialize)]
pub struct CheckDivisionResponse {
    pub schema: String,
    pub algebra: String,
    pub status: DivisionStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
    pub search_bound: u64,
}

#[derive(Serialize, Deserialize)]
pub struct IdealFactorResponse {
    pub schema: String,
    pub ideal: QuadIdeal,
    pub factors: Vec<IdealPower>,
}

#[derive(Serialize, Deserialize)]
pub struct IdealsOfNormResponse {
    pub schema: String,
    pub field: String,
    pub m: u64,
    pub ideals: Vec<QuadIdeal>,
}

#[derive(Serialize, Deserialize)]
pub struct ClassifyLinkResponse {
    pub schema: String,
    pub ring: String,
    pub m: u64,
    pub descriptors: Vec<SurfaceLinkDescriptor>,
}

#[derive(Serialize, Deserialize)]
pub struct WeylCheckResponse {
    pub schema: String,
    pub matrix: [[i64; 2]; 2],
    #[serde(with = "i128_as_number_or_string")]
    pub phase_multiplier: i128,
}

#[derive(Serialize, Deserialize)]
pub struct RmMatrixResponse {
    pub schema: String,
    pub field: String,
    pub p: u64,
    pub exponent: u32,
    pub trace: i64,
    pub matrix: [[i64; 2]; 2],
    pub det: u64,
}

#[derive(Serialize, Deserialize)]
pub struct HilbertResponse {
    pub schema: String,
    pub a: String,
    pub b: String,
    pub place: String,
    pub symbol: i32,
}

#[derive(Serialize, Deserialize)]
pub struct HasseResponse {
    pub schema: String,
    pub algebra: String,
    pub ramified_places: Vec<Place>,
}

#[derive(Serialize, Deserialize)]
pub struct NormalizeResponse {
    pub schema: String,
    pub input: String,
    pub normal_forms: Vec<String>,
}

/// Marker document for indices with no ideal of the required norm;
/// emitted on stdout with exit status 1.
#[derive(Serialize, Deserialize)]
pub struct NoClassicalCounterpartResponse {
    pub schema: String,
    pub status: String,
    pub field: String,
    pub m: u64,
}

impl NoClassicalCounterpartResponse {
    pub fn new(field: String, m: u64) -> Self {
        NoClassicalCounterpartResponse {
            schema: schema(),
            status: "no classical counterpart".into(),
            field,
            m,
        }
    }
}

mod i128_as_number_or_string {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Small(i64),
        Big(String),
    }

    pub fn serialize<S: Serializer>(x: &i128, s: S) -> Result<S::Ok, S::Error> {
        match i64::try_from(*x) {
            Ok(v) => Repr::Small(v).serialize(s),
            Err(_) => Repr::Big(x.to_string()).serialize(s),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<i128, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Small(v) => Ok(v as i128),
            Repr::Big(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}
