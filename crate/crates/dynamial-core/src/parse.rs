//! Parsers for the textual formats used by the CLI and config files:
//! fields `Q(sqrt,d)` / `Q[x]/(poly;theta)`, algebras `C(a;field)`, ring
//! descriptors, and crossed-product expressions
//! `Cross(Cross(Ideal(field;a;b+cw),Gal(n)),Z)`. Each parser inverts the
//! corresponding `Display` implementation.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::parse_rational;
use crate::cyclic_algebra::CyclicAlgebra;
use crate::dynamial::{CrossedProductExpr, GroupFactor, RingDescriptor};
use crate::error::{Error, Result};
use crate::ideal_lattice::QuadIdeal;
use crate::numfield::CyclicExtension;
use crate::poly;

fn compact(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

// Splits at top-level occurrences of `sep`, respecting () and [] nesting.
fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            c if c == sep && depth == 0 => {
                parts.push(&s[start..i]);
                start = i + ch.len_utf8();
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

fn inner_of<'a>(s: &'a str, prefix: &str) -> Option<&'a str> {
    s.strip_prefix(prefix)?.strip_suffix(')')
}

/// Parses `Q(sqrt,d)` or `Q[x]/(poly;theta)`.
pub fn parse_field(s: &str) -> Result<Arc<CyclicExtension>> {
    let s = compact(s);
    if let Some(inner) = inner_of(&s, "Q(sqrt,") {
        let d: i64 = inner
            .parse()
            .map_err(|_| Error::Parse(format!("bad radicand `{inner}`")))?;
        return CyclicExtension::quadratic(d);
    }
    if let Some(inner) = inner_of(&s, "Q[x]/(") {
        let parts = split_top(inner, ';');
        if parts.len() != 2 {
            return Err(Error::Parse(format!("expected `poly;theta` in `{s}`")));
        }
        let mp_rat = poly::parse_poly(parts[0], 'x')?;
        let mut mp = Vec::with_capacity(mp_rat.len());
        for c in &mp_rat {
            if !c.is_integer() {
                return Err(Error::Parse(format!(
                    "minimal polynomial must have integer coefficients: `{}`",
                    parts[0]
                )));
            }
            mp.push(c.to_integer());
        }
        let theta = poly::parse_poly(parts[1], 'x')?;
        return CyclicExtension::presented(mp, theta);
    }
    Err(Error::Parse(format!("unrecognized field `{s}`")))
}

/// Parses `C(a;field)`.
pub fn parse_algebra(s: &str) -> Result<CyclicAlgebra> {
    let s = compact(s);
    let inner = inner_of(&s, "C(")
        .ok_or_else(|| Error::Parse(format!("unrecognized algebra `{s}`")))?;
    let parts = split_top(inner, ';');
    if parts.len() != 2 {
        return Err(Error::Parse(format!("expected `a;field` in `{s}`")));
    }
    let a = parse_rational(parts[0])?;
    let field = parse_field(parts[1])?;
    CyclicAlgebra::new(&field, a)
}

/// Parses a ring descriptor: `C(a;field)`, `RM(field)`, or any other
/// nonempty string as an abstract label.
pub fn parse_ring(s: &str) -> Result<RingDescriptor> {
    let trimmed = s.trim();
    if trimmed.is_empty() {
        return Err(Error::Parse("empty ring descriptor".into()));
    }
    let c = compact(trimmed);
    if c.starts_with("C(") {
        return Ok(RingDescriptor::CyclicAlgebra(parse_algebra(&c)?));
    }
    if let Some(inner) = inner_of(&c, "RM(") {
        let field = parse_field(inner)?;
        if field.quad_basis().map(|qb| qb.d <= 0).unwrap_or(true) {
            return Err(Error::NotRealQuadratic);
        }
        return Ok(RingDescriptor::RmTorus(field));
    }
    Ok(RingDescriptor::Abstract(trimmed.to_string()))
}

fn parse_bigint(s: &str) -> Result<BigInt> {
    s.parse().map_err(|_| Error::Parse(format!("bad integer `{s}`")))
}

// `b+cw`, `cw` or `w` with ω written as `w`.
fn parse_omega_generator(s: &str) -> Result<(BigInt, BigInt)> {
    let (b, cw) = match s.split_once('+') {
        Some((b, cw)) => (parse_bigint(b)?, cw),
        None => (BigInt::zero(), s),
    };
    let c = match cw.strip_suffix('w') {
        Some("") => BigInt::from(1),
        Some(body) => parse_bigint(body)?,
        None => return Err(Error::Parse(format!("expected an ω-term in `{s}`"))),
    };
    Ok((b, c))
}

/// Parses `Z`, `mZ` or `Gal(n)`.
pub fn parse_group(s: &str) -> Result<GroupFactor> {
    let s = compact(s);
    if s == "Z" {
        return Ok(GroupFactor::Z);
    }
    if let Some(inner) = inner_of(&s, "Gal(") {
        let n: u32 = inner
            .parse()
            .map_err(|_| Error::Parse(format!("bad Galois order `{inner}`")))?;
        if n == 0 {
            return Err(Error::Parse("Galois order must be positive".into()));
        }
        return Ok(GroupFactor::Galois(n));
    }
    if let Some(body) = s.strip_suffix('Z') {
        let m: u64 = body
            .parse()
            .map_err(|_| Error::Parse(format!("bad subgroup index `{body}`")))?;
        if m == 0 {
            return Err(Error::Parse("subgroup index must be positive".into()));
        }
        return Ok(GroupFactor::MZ(m));
    }
    Err(Error::Parse(format!("unrecognized group factor `{s}`")))
}

/// Parses a crossed-product expression in the parenthesized text form,
/// e.g. `Cross(Algebra(C(-1;Q(sqrt,-1))),5Z)`.
pub fn parse_expr(s: &str) -> Result<CrossedProductExpr> {
    parse_expr_compact(&compact(s))
}

fn parse_expr_compact(s: &str) -> Result<CrossedProductExpr> {
    if let Some(inner) = inner_of(s, "Cross(") {
        let parts = split_top(inner, ',');
        if parts.len() != 2 {
            return Err(Error::Parse(format!("Cross takes two arguments in `{s}`")));
        }
        let base = parse_expr_compact(parts[0])?;
        let group = parse_group(parts[1])?;
        return Ok(CrossedProductExpr::Cross(Box::new(base), group));
    }
    if let Some(inner) = inner_of(s, "OE(") {
        return Ok(CrossedProductExpr::RingOfIntegers(parse_field(inner)?));
    }
    if let Some(inner) = inner_of(s, "Ideal(") {
        let parts = split_top(inner, ';');
        if parts.len() != 3 {
            return Err(Error::Parse(format!("expected `field;a;b+cw` in `{s}`")));
        }
        let field = parse_field(parts[0])?;
        let a = parse_bigint(parts[1])?;
        let (b, c) = parse_omega_generator(parts[2])?;
        return Ok(CrossedProductExpr::Ideal(QuadIdeal::new(&field, a, b, c)?));
    }
    if let Some(inner) = inner_of(s, "Algebra(") {
        return Ok(CrossedProductExpr::Algebra(parse_algebra(inner)?));
    }
    Err(Error::Parse(format!("unrecognized expression `{s}`")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};

    #[test]
    fn field_roundtrip() {
        for spec in ["Q(sqrt,-1)", "Q(sqrt,2)", "Q(sqrt,-5)", "Q[x]/(x^2-x-1;-x+1)"] {
            let field = parse_field(spec).unwrap();
            assert_eq!(field.to_string(), spec);
            assert_eq!(*parse_field(&field.to_string()).unwrap(), *field);
        }
        // Sugar and whitespace are accepted.
        assert_eq!(
            *parse_field("Q[x]/(x^2+1;-x)").unwrap(),
            *parse_field("Q(sqrt, -1)").unwrap()
        );
        assert!(parse_field("Q(sqrt,4)").is_err());
        assert!(parse_field("R").is_err());
        assert!(parse_field("Q[x]/(x^2-2)").is_err());
    }

    #[test]
    fn algebra_roundtrip() {
        let alg = parse_algebra("C(-1;Q(sqrt,-1))").unwrap();
        assert_eq!(alg.to_string(), "C(-1;Q(sqrt,-1))");
        assert_eq!(*alg.parameter(), rat_int(-1));
        let half = parse_algebra("C(1/2;Q(sqrt,2))").unwrap();
        assert_eq!(*half.parameter(), rat(1, 2));
        assert_eq!(half.to_string(), "C(1/2;Q(sqrt,2))");
        assert!(parse_algebra("C(0;Q(sqrt,2))").is_err());
        assert!(parse_algebra("M(2;Q)").is_err());
    }

    #[test]
    fn ring_descriptors() {
        let r = parse_ring("C(-1;Q(sqrt,-1))").unwrap();
        assert!(matches!(r, RingDescriptor::CyclicAlgebra(_)));
        assert_eq!(r.to_string(), "C(-1;Q(sqrt,-1))");
        let rm = parse_ring("RM(Q(sqrt,2))").unwrap();
        assert!(matches!(rm, RingDescriptor::RmTorus(_)));
        assert_eq!(rm.to_string(), "RM(Q(sqrt,2))");
        assert!(parse_ring("RM(Q(sqrt,-2))").is_err());
        let ab = parse_ring("some ring").unwrap();
        assert_eq!(ab, RingDescriptor::Abstract("some ring".into()));
    }

    #[test]
    fn expression_roundtrip() {
        for spec in [
            "Cross(Algebra(C(-1;Q(sqrt,-1))),5Z)",
            "Cross(Cross(Ideal(Q(sqrt,-1);5;2+w),Gal(2)),Z)",
            "Cross(OE(Q(sqrt,-1)),10Z)",
            "Ideal(Q(sqrt,-1);2;1+w)",
        ] {
            let expr = parse_expr(spec).unwrap();
            assert_eq!(expr.to_string(), compact(spec));
        }
        assert!(parse_expr("Cross(X,Z)").is_err());
        assert!(parse_expr("Cross(OE(Q(sqrt,-1)),0Z)").is_err());
        assert!(parse_expr("Ideal(Q(sqrt,-1);7;2+w)").is_err()); // not ω-stable
    }

    #[test]
    fn group_factors() {
        assert_eq!(parse_group("Z").unwrap(), GroupFactor::Z);
        assert_eq!(parse_group("12Z").unwrap(), GroupFactor::MZ(12));
        assert_eq!(parse_group("Gal(2)").unwrap(), GroupFactor::Galois(2));
        assert!(parse_group("0Z").is_err());
        assert!(parse_group("G").is_err());
    }
}
