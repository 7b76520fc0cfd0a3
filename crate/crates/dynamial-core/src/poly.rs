//! Dense univariate polynomials over the rationals, ascending coefficient
//! order. Just enough machinery for arithmetic modulo a minimal polynomial,
//! inverses via the extended Euclidean algorithm, discriminants, and the
//! textual presentation format.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::Rational;
use crate::error::{Error, Result};

pub fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Degree of a trimmed polynomial; `None` for the zero polynomial.
pub fn degree(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn is_zero(p: &[Rational]) -> bool {
    degree(p).is_none()
}

pub fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(&mut out);
    out
}

pub fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(&mut out);
    out
}

pub fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if is_zero(a) || is_zero(b) {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    trim(&mut out);
    out
}

pub fn scale(a: &[Rational], c: &Rational) -> Vec<Rational> {
    let mut out: Vec<Rational> = a.iter().map(|x| x * c).collect();
    trim(&mut out);
    out
}

/// Quotient and remainder with `deg r < deg b`; panics on a zero divisor.
pub fn divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = b[db].recip();
    let mut rem = a.to_vec();
    trim(&mut rem);
    let mut quot = vec![Rational::zero(); rem.len().saturating_sub(db)];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let q = &rem[dr] * &lead_inv;
        let shift = dr - db;
        for (i, c) in b.iter().enumerate().take(db + 1) {
            let t = &q * c;
            rem[shift + i] -= t;
        }
        quot[shift] = q;
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

/// Extended gcd `(g, s, t)` with `g = s*a + t*b` and `g` monic (or zero).
pub fn ext_gcd(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>, Vec<Rational>) {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    trim(&mut r0);
    trim(&mut r1);
    let mut s0 = vec![Rational::one()];
    let mut s1 = Vec::new();
    let mut t0 = Vec::new();
    let mut t1 = vec![Rational::one()];
    while !is_zero(&r1) {
        let (q, r) = divmod(&r0, &r1);
        let s = sub(&s0, &mul(&q, &s1));
        let t = sub(&t0, &mul(&q, &t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    if let Some(d) = degree(&r0) {
        let inv = r0[d].recip();
        r0 = scale(&r0, &inv);
        s0 = scale(&s0, &inv);
        t0 = scale(&t0, &inv);
    }
    (r0, s0, t0)
}

pub fn derivative(p: &[Rational]) -> Vec<Rational> {
    let mut out: Vec<Rational> = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
        .collect();
    trim(&mut out);
    out
}

// Sylvester resultant by exact Gaussian elimination.
fn resultant(f: &[Rational], g: &[Rational]) -> Rational {
    let df = degree(f).expect("nonzero");
    let dg = degree(g).expect("nonzero");
    let size = df + dg;
    let mut m = vec![vec![Rational::zero(); size]; size];
    for row in 0..dg {
        for (k, c) in f.iter().enumerate() {
            m[row][row + df - k] = c.clone();
        }
    }
    for row in 0..df {
        for (k, c) in g.iter().enumerate() {
            m[dg + row][row + dg - k] = c.clone();
        }
    }
    let mut det = Rational::one();
    for col in 0..size {
        let pivot = match (col..size).find(|&r| !m[r][col].is_zero()) {
            Some(p) => p,
            None => return Rational::zero(),
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= &m[col][col];
        let inv = m[col][col].recip();
        for r in col + 1..size {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] * &inv;
            for c in col..size {
                let t = &factor * &m[col][c];
                m[r][c] -= t;
            }
        }
    }
    det
}

/// Discriminant of a monic integer polynomial of degree `n >= 2`.
pub fn discriminant(min_poly: &[BigInt]) -> BigInt {
    let n = min_poly.len() - 1;
    assert!(n >= 2 && min_poly[n].is_one(), "monic, degree >= 2");
    let f: Vec<Rational> = min_poly.iter().map(|c| Rational::from_integer(c.clone())).collect();
    let fp = derivative(&f);
    let res = resultant(&f, &fp);
    let sign = if (n * (n - 1) / 2) % 2 == 0 { 1 } else { -1 };
    let disc = res * crate::arith::rat_int(sign);
    assert!(disc.is_integer(), "discriminant of an integer polynomial is an integer");
    disc.to_integer()
}

/// Renders in descending powers, e.g. `x^2-2`, `-x`, `1/2x^3+x-1`.
pub fn format_poly(p: &[Rational], var: char) -> String {
    let Some(deg) = degree(p) else {
        return "0".into();
    };
    let mut out = String::new();
    for k in (0..=deg).rev() {
        let c = &p[k];
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        let a = c.abs();
        if k == 0 {
            out.push_str(&a.to_string());
        } else {
            if !a.is_one() {
                out.push_str(&a.to_string());
            }
            out.push(var);
            if k > 1 {
                out.push_str(&format!("^{k}"));
            }
        }
    }
    out
}

/// Parses the format produced by [`format_poly`]; accepts terms in any
/// order and an optional `*` between coefficient and variable.
pub fn parse_poly(s: &str, var: char) -> Result<Vec<Rational>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() || !compact.is_ascii() {
        return Err(Error::Parse(format!("malformed polynomial `{s}`")));
    }
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut sign = false;
    for (i, &b) in compact.as_bytes().iter().enumerate() {
        match b {
            b'+' | b'-' if i > 0 => {
                terms.push((sign, std::mem::take(&mut cur)));
                sign = b == b'-';
            }
            b'-' => sign = true,
            b'+' => {}
            _ => cur.push(b as char),
        }
    }
    terms.push((sign, cur));

    let mut coeffs: Vec<Rational> = Vec::new();
    for (neg, term) in terms {
        if term.is_empty() {
            return Err(Error::Parse(format!("malformed polynomial `{s}`")));
        }
        let (coef_str, exp) = match term.find(var) {
            None => (term.as_str(), 0usize),
            Some(pos) => {
                let head = term[..pos].trim_end_matches('*');
                let tail = &term[pos + var.len_utf8()..];
                let exp = if tail.is_empty() {
                    1
                } else if let Some(e) = tail.strip_prefix('^') {
                    e.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{term}`")))?
                } else {
                    return Err(Error::Parse(format!("malformed term `{term}`")));
                };
                (head, exp)
            }
        };
        let mut coef = if coef_str.is_empty() {
            Rational::one()
        } else {
            crate::arith::parse_rational(coef_str)?
        };
        if neg {
            coef = -coef;
        }
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, Rational::zero());
        }
        coeffs[exp] += coef;
    }
    trim(&mut coeffs);
    Ok(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};

    fn p(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&c| rat_int(c)).collect()
    }

    #[test]
    fn divmod_basic() {
        // (x^2 - 1) / (x - 1) = x + 1 rem 0
        let (q, r) = divmod(&p(&[-1, 0, 1]), &p(&[-1, 1]));
        assert_eq!(q, p(&[1, 1]));
        assert!(is_zero(&r));
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = p(&[1, 0, 1]); // x^2 + 1
        let b = p(&[-1, 1]); // x - 1
        let (g, s, t) = ext_gcd(&a, &b);
        assert_eq!(g, p(&[1]));
        assert_eq!(add(&mul(&s, &a), &mul(&t, &b)), g);
    }

    #[test]
    fn quadratic_discriminants() {
        assert_eq!(discriminant(&[(-2).into(), 0.into(), 1.into()]), 8.into()); // x^2 - 2
        assert_eq!(discriminant(&[1.into(), 0.into(), 1.into()]), (-4).into()); // x^2 + 1
        assert_eq!(discriminant(&[(-1).into(), (-1).into(), 1.into()]), 5.into()); // x^2 - x - 1
        // x^4 + x^3 + x^2 + x + 1 (cyclotomic, conductor 5) has discriminant 125.
        assert_eq!(
            discriminant(&[1.into(), 1.into(), 1.into(), 1.into(), 1.into()]),
            125.into()
        );
    }

    #[test]
    fn parse_format_roundtrip() {
        for s in ["x^2-2", "-x", "x^2+x+1", "1/2x^3+x-1", "x^4+1", "-3", "2x"] {
            let poly = parse_poly(s, 'x').unwrap();
            assert_eq!(format_poly(&poly, 'x'), s);
        }
        assert_eq!(parse_poly("x + x", 'x').unwrap(), p(&[0, 2]));
        assert_eq!(parse_poly("-1/2", 'x').unwrap(), vec![rat(-1, 2)]);
        assert!(parse_poly("x^", 'x').is_err());
        assert!(parse_poly("", 'x').is_err());
    }
}
