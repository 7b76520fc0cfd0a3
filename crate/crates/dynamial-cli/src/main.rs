//! Batch frontend: one process, one verb, deterministic output on stdout.
//! Exit status 0 on success, 1 on domain errors (including "no classical
//! counterpart"), 2 on usage or configuration errors.

mod config;
mod responses;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;

use config::{Config, OutputMode};
use dynamial_core::arith::parse_rational;
use dynamial_core::cyclic_algebra::{hasse_profile, is_division, DivisionStatus, Place};
use dynamial_core::dynamial::{normalize_crossed_product, Dynamial, NormalForms};
use dynamial_core::ideal_lattice::{factor_ideal, ideals_of_norm, QuadIdeal};
use dynamial_core::numfield::CyclicExtension;
use dynamial_core::parse::{parse_algebra, parse_expr, parse_field, parse_ring};
use dynamial_core::rm_torus::{rm_matrix_with_bound, weyl_substitute, IntMatrix2};
use dynamial_core::surface_link::classify;
use responses::*;

#[derive(Parser)]
#[command(
    name = "dynamial",
    version,
    about = "Exact calculators for cyclic algebras, quadratic ideals, and the dynamial index semigroup"
)]
struct Cli {
    /// Output mode; overrides the config file
    #[arg(long, global = true, value_enum)]
    output: Option<OutputMode>,
    /// Coordinate bound for the fundamental-unit scan
    #[arg(long, global = true)]
    pell_bound: Option<u64>,
    /// Candidate budget for norm-witness searches
    #[arg(long, global = true)]
    norm_budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Factor the index of a dynamial D_m into prime powers
    FactorDynamial {
        /// Ring descriptor, e.g. "C(-1;Q(sqrt,-1))" or "RM(Q(sqrt,2))"
        #[arg(long)]
        ring: String,
        /// Index m >= 1
        #[arg(long)]
        m: u64,
    },
    /// Decide whether a cyclic algebra is a division algebra
    CheckDivision {
        /// Algebra specification, e.g. "C(-1;Q(sqrt,-1))"
        #[arg(long)]
        algebra: String,
    },
    /// Factor an integral ideal, given by its HNF triple, into prime ideals
    IdealFactor {
        /// Field specification; defaults to the configured field
        #[arg(long)]
        field: Option<String>,
        /// HNF triple "a,b,c" for the module aZ + (b + cw)Z
        #[arg(long)]
        ideal: String,
    },
    /// List all integral ideals of a given norm
    IdealsOfNorm {
        /// Field specification; defaults to the configured field
        #[arg(long)]
        field: Option<String>,
        /// Target norm m >= 1
        #[arg(long)]
        m: u64,
    },
    /// Classify the surface knot/link descriptors of a dynamial
    ClassifyLink {
        /// Ring descriptor; must be a cyclic algebra
        #[arg(long)]
        ring: String,
        /// Index m >= 1
        #[arg(long)]
        m: u64,
    },
    /// Check the transformed Weyl commutation relation for an integer matrix
    WeylCheck {
        /// Matrix entries "a,b,c,d" for (a b; c d)
        #[arg(long)]
        matrix: String,
    },
    /// Build the real-multiplication endomorphism matrix [[tr(eps^k), p], [-1, 0]]
    RmMatrix {
        /// Squarefree d > 0 of the real quadratic field Q(sqrt,d)
        #[arg(long)]
        d: i64,
        /// Prime p
        #[arg(long)]
        p: u64,
        /// Exponent k >= 1 applied to the fundamental unit
        #[arg(long)]
        exponent: u32,
    },
    /// Hilbert symbol (a,b) at a place
    Hilbert {
        /// Nonzero rational a
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        /// Nonzero rational b
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// A prime, or "inf"
        #[arg(long)]
        place: String,
    },
    /// Ramified places of a quaternion-type cyclic algebra
    Hasse {
        /// Algebra specification, e.g. "C(-1;Q(sqrt,-1))"
        #[arg(long)]
        algebra: String,
    },
    /// Rewrite a crossed-product expression to its normal forms
    NormalizeCp {
        /// Expression, e.g. "Cross(Algebra(C(-1;Q(sqrt,-1))),5Z)"
        #[arg(long)]
        expr: String,
    },
}

enum Failure {
    NoClassicalCounterpart(NoClassicalCounterpartResponse, String),
    Domain(String),
}

impl From<dynamial_core::Error> for Failure {
    fn from(e: dynamial_core::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type VerbResult = Result<(String, String), Failure>;

fn json_of<T: serde::Serialize>(doc: &T) -> String {
    serde_json::to_string(doc).expect("response serialization cannot fail")
}

fn parse_int_list(s: &str, expected: usize, what: &str) -> Result<Vec<i64>, Failure> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != expected {
        return Err(Failure::Domain(format!("{what} needs {expected} comma-separated integers")));
    }
    parts
        .iter()
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| Failure::Domain(format!("bad integer `{p}` in {what}")))
        })
        .collect()
}

fn run(cmd: Command, cfg: &Config) -> VerbResult {
    match cmd {
        Command::FactorDynamial { ring, m } => {
            let ring = parse_ring(&ring)?;
            let d = Dynamial::new(ring, m)?;
            let f = d.factorize();
            let json = json_of(&FactorDynamialResponse {
                schema: schema(),
                ring: f.ring().to_string(),
                m,
                prime_powers: f.prime_powers().to_vec(),
            });
            let text = if f.prime_powers().is_empty() {
                format!("{d} is the unit dynamial")
            } else {
                let parts: Vec<String> = f
                    .prime_powers()
                    .iter()
                    .map(|&(p, k)| if k == 1 { format!("D_{p}") } else { format!("D_{p}^{k}") })
                    .collect();
                format!("{d} = {}", parts.join(" "))
            };
            Ok((json, text))
        }
        Command::CheckDivision { algebra } => {
            let alg = parse_algebra(&algebra)?;
            let verdict = is_division(&alg, cfg.norm_budget)?;
            let text = match verdict.status {
                DivisionStatus::Division => format!("{alg}: division algebra"),
                DivisionStatus::NotDivision => match &verdict.witness {
                    Some(w) => format!(
                        "{alg}: not a division algebra; N({}) = a^{}",
                        w.gamma, w.k
                    ),
                    None => format!("{alg}: not a division algebra"),
                },
                DivisionStatus::Unknown => {
                    format!("{alg}: unknown within budget {}", verdict.search_bound)
                }
            };
            let json = json_of(&CheckDivisionResponse {
                schema: schema(),
                algebra: alg.to_string(),
                status: verdict.status,
                witness: verdict.witness.as_ref().map(WitnessJson::from_witness),
                search_bound: verdict.search_bound,
            });
            Ok((json, text))
        }
        Command::IdealFactor { field, ideal } => {
            let spec = field.unwrap_or_else(|| cfg.default_field.clone());
            let f = parse_field(&spec)?;
            let hnf = parse_int_list(&ideal, 3, "--ideal")?;
            let ideal =
                QuadIdeal::new(&f, BigInt::from(hnf[0]), BigInt::from(hnf[1]), BigInt::from(hnf[2]))?;
            let factorization = factor_ideal(&ideal)?;
            let text = if factorization.is_empty() {
                format!("{ideal} is the unit ideal")
            } else {
                let parts: Vec<String> = factorization
                    .factors()
                    .iter()
                    .map(|ip| {
                        if ip.exponent == 1 {
                            format!("{}", ip.prime.ideal())
                        } else {
                            format!("{}^{}", ip.prime.ideal(), ip.exponent)
                        }
                    })
                    .collect();
                format!("{ideal} = {}", parts.join(" "))
            };
            let json = json_of(&IdealFactorResponse {
                schema: schema(),
                ideal,
                factors: factorization.factors().to_vec(),
            });
            Ok((json, text))
        }
        Command::IdealsOfNorm { field, m } => {
            let spec = field.unwrap_or_else(|| cfg.default_field.clone());
            let f = parse_field(&spec)?;
            let ideals = ideals_of_norm(&f, m)?;
            let text = if ideals.is_empty() {
                format!("no ideals of norm {m} in {f}")
            } else {
                let parts: Vec<String> = ideals.iter().map(|i| i.to_string()).collect();
                format!("norm {m} in {f}: {}", parts.join(", "))
            };
            let json = json_of(&IdealsOfNormResponse {
                schema: schema(),
                field: f.to_string(),
                m,
                ideals,
            });
            Ok((json, text))
        }
        Command::ClassifyLink { ring, m } => {
            let ring = parse_ring(&ring)?;
            let d = Dynamial::new(ring, m)?;
            let descriptors = classify(&d)?;
            if descriptors.is_empty() {
                let field = d
                    .ring()
                    .as_cyclic_algebra()
                    .map(|a| a.extension().to_string())
                    .unwrap_or_default();
                return Err(Failure::NoClassicalCounterpart(
                    NoClassicalCounterpartResponse::new(field, m),
                    format!("{d}: no classical counterpart"),
                ));
            }
            let text_parts: Vec<String> = descriptors
                .iter()
                .map(|desc| {
                    let comps: Vec<String> =
                        desc.components.iter().map(|c| format!("p={}", c.p)).collect();
                    format!("{:?}[{}]", desc.kind, comps.join(","))
                })
                .collect();
            let text = format!("{d}: {}", text_parts.join(" "));
            let json = json_of(&ClassifyLinkResponse {
                schema: schema(),
                ring: d.ring().to_string(),
                m,
                descriptors,
            });
            Ok((json, text))
        }
        Command::WeylCheck { matrix } => {
            let e = parse_int_list(&matrix, 4, "--matrix")?;
            let m = IntMatrix2::new(e[0], e[1], e[2], e[3]);
            let q = weyl_substitute(&m)?;
            let json = json_of(&WeylCheckResponse {
                schema: schema(),
                matrix: m.rows(),
                phase_multiplier: q,
            });
            let text = format!("{m}: phase multiplier {q} (= det)");
            Ok((json, text))
        }
        Command::RmMatrix { d, p, exponent } => {
            let field = CyclicExtension::quadratic(d)?;
            let r = rm_matrix_with_bound(&field, p, exponent, cfg.pell_bound)?;
            let json = json_of(&RmMatrixResponse {
                schema: schema(),
                field: field.to_string(),
                p,
                exponent,
                trace: r.trace(),
                matrix: r.matrix().rows(),
                det: p,
            });
            let text = format!("L = {} over {field}, det {p}", r.matrix());
            Ok((json, text))
        }
        Command::Hilbert { a, b, place } => {
            let ar = parse_rational(&a)?;
            let br = parse_rational(&b)?;
            let pl: Place = place.parse()?;
            let symbol = dynamial_core::cyclic_algebra::hilbert_symbol(&ar, &br, pl)?;
            let json = json_of(&HilbertResponse {
                schema: schema(),
                a: ar.to_string(),
                b: br.to_string(),
                place: pl.to_string(),
                symbol,
            });
            let text = format!("({ar},{br})_{pl} = {symbol}");
            Ok((json, text))
        }
        Command::Hasse { algebra } => {
            let alg = parse_algebra(&algebra)?;
            let profile = hasse_profile(&alg)?;
            let places: Vec<Place> = profile.ramified_places().iter().copied().collect();
            let text = if places.is_empty() {
                format!("{alg}: split everywhere")
            } else {
                let parts: Vec<String> = places.iter().map(|p| p.to_string()).collect();
                format!("{alg}: ramified at {}", parts.join(", "))
            };
            let json = json_of(&HasseResponse {
                schema: schema(),
                algebra: alg.to_string(),
                ramified_places: places,
            });
            Ok((json, text))
        }
        Command::NormalizeCp { expr } => {
            let parsed = parse_expr(&expr)?;
            match normalize_crossed_product(&parsed)? {
                NormalForms::Forms(forms) => {
                    let strings: Vec<String> = forms.iter().map(|f| f.to_string()).collect();
                    let text = strings.join(" | ");
                    let json = json_of(&NormalizeResponse {
                        schema: schema(),
                        input: parsed.to_string(),
                        normal_forms: strings,
                    });
                    Ok((json, text))
                }
                NormalForms::NoClassicalCounterpart { field, index } => {
                    Err(Failure::NoClassicalCounterpart(
                        NoClassicalCounterpartResponse::new(field.clone(), index),
                        format!("{parsed}: no classical counterpart (no ideal of norm {index} in {field})"),
                    ))
                }
            }
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let mut cfg = match config::load() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    };
    if let Some(o) = cli.output {
        cfg.output = o;
    }
    if let Some(b) = cli.pell_bound {
        cfg.pell_bound = b;
    }
    if let Some(b) = cli.norm_budget {
        cfg.norm_budget = b;
    }
    if cfg.pell_bound == 0 || cfg.norm_budget == 0 {
        eprintln!("error: search bounds must be positive");
        std::process::exit(2);
    }
    match run(cli.command, &cfg) {
        Ok((json, text)) => match cfg.output {
            OutputMode::Json => println!("{json}"),
            OutputMode::Text => println!("{text}"),
        },
        Err(Failure::NoClassicalCounterpart(doc, text)) => {
            match cfg.output {
                OutputMode::Json => println!("{}", json_of(&doc)),
                OutputMode::Text => println!("{text}"),
            }
            std::process::exit(1);
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(1);
        }
    }
}
