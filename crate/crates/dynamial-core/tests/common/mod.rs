//! Independent oracles shared by the property and acceptance suites. These
//! deliberately avoid the library's own code paths: multiplication is
//! hand-expanded, enumeration is exhaustive, and local solvability is a
//! residue scan.
#![allow(dead_code)]

/// Hand-expanded product in `Q(√d)`: `(a1 + b1√d)(a2 + b2√d)`.
pub fn mul_sqrt(d: i64, x: (i64, i64), y: (i64, i64)) -> (i64, i64) {
    (x.0 * y.0 + d * x.1 * y.1, x.0 * y.1 + x.1 * y.0)
}

/// Hand-expanded norm in `Q(√d)`: `(a + b√d)(a − b√d)`.
pub fn norm_sqrt(d: i64, x: (i64, i64)) -> i64 {
    mul_sqrt(d, x, (x.0, -x.1)).0
}

/// Eratosthenes sieve; `sieve(n)[m]` is true iff `m` is prime.
pub fn sieve(n: usize) -> Vec<bool> {
    let mut is_p = vec![true; n + 1];
    is_p[0] = false;
    if n >= 1 {
        is_p[1] = false;
    }
    let mut i = 2;
    while i * i <= n {
        if is_p[i] {
            let mut j = i * i;
            while j <= n {
                is_p[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    is_p
}

/// Kronecker symbol `(disc/p)` by residue scan for odd `p` and the mod-8
/// rule at 2; the splitting-type oracle.
pub fn kronecker_oracle(disc: i64, p: u64) -> i32 {
    if p == 2 {
        return match disc.rem_euclid(8) {
            0 | 2 | 4 | 6 => 0,
            1 | 7 => 1,
            _ => -1,
        };
    }
    let r = disc.rem_euclid(p as i64) as u64;
    if r == 0 {
        return 0;
    }
    if (0..p).any(|x| x * x % p == r) {
        1
    } else {
        -1
    }
}

/// Exhaustive enumeration of the `(a, b, c)` submodules `aZ + (b + cω)Z`
/// of norm `a·c = m` that are stable under multiplication by `ω`, testing
/// stability by direct membership of `ω·a` and `ω·(b + cω)`. No Hermite
/// divisibility shortcuts are used.
pub fn omega_stable_modules(t: i64, n: i64, m: u64) -> Vec<(i64, i64, i64)> {
    let member = |a: i64, b: i64, c: i64, x: i64, y: i64| -> bool {
        // (x, y) = s(a, 0) + t'(b, c)
        if y % c != 0 {
            return false;
        }
        let tt = y / c;
        (x - tt * b) % a == 0
    };
    let mut out = Vec::new();
    for a in 1..=(m as i64) {
        if m as i64 % a != 0 {
            continue;
        }
        let c = m as i64 / a;
        for b in 0..a {
            // ω·a = (0, a);  ω·(b + cω) = (−cn, b + ct)
            if member(a, b, c, 0, a) && member(a, b, c, -c * n, b + c * t) {
                out.push((a, b, c));
            }
        }
    }
    out.sort_unstable();
    out
}

/// The smallest real-quadratic unit coordinates by direct scan: returns
/// `(x, y)` with `ε = x + y√d` (or `(a, b)` with `ε = (a + b√d)/2` when
/// `d ≡ 1 mod 4`), minimal `y ≥ 1`.
pub fn pell_scan_oracle(d: i64, half_coords: bool) -> Option<(i64, i64)> {
    for y in 1..=1_000_000i64 {
        let dy2 = d.checked_mul(y * y)?;
        let (lo, hi) = if half_coords { (-4, 4) } else { (-1, 1) };
        for delta in [lo, hi] {
            let target = dy2 + delta;
            if target < 0 {
                continue;
            }
            let x = (target as f64).sqrt().round() as i64;
            for cand in [x - 1, x, x + 1] {
                if cand >= 0 && cand * cand == target {
                    return Some((cand, y));
                }
            }
        }
    }
    None
}

/// Exhaustive primitive-solution scan for `z² = a·x² + b·y²` over `Z/p³`
/// (odd `p`) or `Z/2⁶`: the Hilbert-symbol oracle. Square factors of `p`
/// are stripped from `a` and `b` first (substituting `x ↦ p·x` shows the
/// solvability is unchanged).
pub fn hilbert_solvable_oracle(mut a: i64, mut b: i64, p: u64) -> bool {
    assert!(a != 0 && b != 0);
    let p = p as i64;
    let p2 = p * p;
    while a % p2 == 0 {
        a /= p2;
    }
    while b % p2 == 0 {
        b /= p2;
    }
    let m: i64 = if p == 2 { 64 } else { p * p * p };
    // Square tables: squares of anything, and squares of units.
    let mut sq_any = vec![false; m as usize];
    let mut sq_unit = vec![false; m as usize];
    for z in 0..m {
        let r = (z * z).rem_euclid(m) as usize;
        sq_any[r] = true;
        if z % p != 0 {
            sq_unit[r] = true;
        }
    }
    // Signs of x and y do not matter, so half ranges suffice.
    for x in 0..=m / 2 {
        let ax2 = (a as i128) * (x as i128) * (x as i128);
        for y in 0..=m / 2 {
            let r = (ax2 + (b as i128) * (y as i128) * (y as i128)).rem_euclid(m as i128) as usize;
            if x % p != 0 || y % p != 0 {
                if sq_any[r] {
                    return true;
                }
            } else if sq_unit[r] {
                return true;
            }
        }
    }
    false
}

#[test]
fn oracle_self_checks() {
    assert_eq!(mul_sqrt(-1, (2, 1), (2, -1)), (5, 0));
    assert_eq!(norm_sqrt(2, (1, 1)), -1);
    let s = sieve(30);
    assert!(s[29] && !s[27]);
    // Gaussian integers: ω = i, t = 0, n = 1.
    assert_eq!(omega_stable_modules(0, 1, 9), vec![(3, 0, 3)]);
    assert_eq!(omega_stable_modules(0, 1, 5), vec![(5, 2, 1), (5, 3, 1)]);
    assert!(omega_stable_modules(0, 1, 3).is_empty());
    assert_eq!(pell_scan_oracle(2, false), Some((1, 1)));
    assert_eq!(pell_scan_oracle(5, true), Some((1, 1)));
    assert_eq!(pell_scan_oracle(3, false), Some((2, 1)));
    // (−1,−1) is unsolvable at 2, solvable at 5.
    assert!(!hilbert_solvable_oracle(-1, -1, 2));
    assert!(hilbert_solvable_oracle(-1, -1, 5));
}
