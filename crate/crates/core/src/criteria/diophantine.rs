use std::collections::{BTreeSet, HashMap};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Pow, ToPrimitive, Zero};
use serde::Serialize;

use super::CriteriaError;
use crate::exact::{is_perfect_pth_power, radical, ExactRational, RadicalConfig};

/// All `(x, y, m, n)` with `1 <= x, y <= base_bound`, `2 <= m, n <= exp_bound`
/// and `x^m - y^n = 1`.
pub fn catalan_scan(base_bound: u64, exp_bound: u32) -> Vec<(u64, u64, u32, u32)> {
    let mut powers: HashMap<BigUint, Vec<(u64, u32)>> = HashMap::new();
    for y in 1..=base_bound {
        for n in 2..=exp_bound {
            powers.entry(Pow::pow(BigUint::from(y), n)).or_default().push((y, n));
        }
    }
    let mut out = Vec::new();
    for x in 2..=base_bound {
        for m in 2..=exp_bound {
            let target = Pow::pow(BigUint::from(x), m) - 1u32;
            if let Some(hits) = powers.get(&target) {
                out.extend(hits.iter().map(|&(y, n)| (x, y, m, n)));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Values a variable with exponent `e` ranges over: signs only matter when
/// `e` is odd.
fn signed_range(e: u32, bound: i64) -> Vec<i64> {
    if e.is_multiple_of(2) {
        (1..=bound).collect()
    } else {
        (-bound..=bound).filter(|&v| v != 0).collect()
    }
}

/// Primitive solutions of `a^p + b^q = c^r` in the box `|a|, |b|, |c| <= bound`:
/// `abc ≠ 0` and pairwise coprime. Variables with even exponents are taken
/// positive.
///
/// For each `(c, a)` the remaining term `c^r - a^p` is tested for being a
/// `q`-th power, so the work is quadratic in the bound.
pub fn fermat_brute_search(p: u32, q: u32, r: u32, bound: i64) -> Vec<(i64, i64, i64)> {
    assert!(p >= 2 && q >= 2 && r >= 2);
    let a_vals: Vec<(i64, BigInt)> = signed_range(p, bound).into_iter().map(|a| (a, Pow::pow(BigInt::from(a), p))).collect();
    let b_positive_only = q.is_multiple_of(2);
    let mut out = Vec::new();
    for c in signed_range(r, bound) {
        let cr: BigInt = Pow::pow(BigInt::from(c), r);
        for (a, ap) in &a_vals {
            if a.gcd(&c) != 1 {
                continue;
            }
            let rest = &cr - ap;
            if rest.is_zero() {
                continue;
            }
            let Some(root) = is_perfect_pth_power(&rest, q) else { continue };
            let Some(b) = root.to_i64() else { continue };
            if b.abs() > bound || (b_positive_only && b < 0) {
                continue;
            }
            if b.gcd(a) == 1 && b.gcd(&c) == 1 {
                out.push((*a, b, c));
            }
        }
    }
    out.sort_unstable();
    out
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AbcRecord {
    /// Radical of `abc`.
    #[serde(with = "crate::decimal")]
    pub radical: BigInt,
    /// `c < N^(7/4)`, decided as `c^4 < N^7`.
    pub holds_74: bool,
    /// `log c / log N`, for display only.
    pub quality: f64,
}

/// Evaluates the explicit abc bound `c < N^(7/4)` for a coprime triple
/// `a + b = c`.
pub fn abc_inequality_check(a: &BigInt, b: &BigInt, c: &BigInt) -> Result<AbcRecord, CriteriaError> {
    let positive = |x: &BigInt| x > &BigInt::zero();
    if !(positive(a) && positive(b) && positive(c)) {
        return Err(CriteriaError::BadInput("a, b, c must be positive".into()));
    }
    if &(a + b) != c {
        return Err(CriteriaError::BadInput(format!("{a} + {b} != {c}")));
    }
    if !a.gcd(b).is_one() {
        return Err(CriteriaError::BadInput("a and b must be coprime".into()));
    }
    let n = radical(&(a * b * c), &RadicalConfig::default())?;
    let holds_74 = Pow::pow(c, 4u32) < Pow::pow(&n, 7u32);
    let ln = |x: &BigInt| {
        let bits = x.bits();
        let shift = bits.saturating_sub(64);
        (x >> shift).to_f64().unwrap_or(f64::NAN).ln() + shift as f64 * std::f64::consts::LN_2
    };
    let quality = if n.is_one() { f64::INFINITY } else { ln(c) / ln(&n) };
    Ok(AbcRecord { radical: n, holds_74, quality })
}

/// Degrees `d` in `[d_min, d_max]` with `1/14 < 1/d + 1/(d^2 - 1)`, the
/// condition under which the abc argument fails to exclude squares at `n = 3`.
pub fn d14_inequality_scan(d_min: u32, d_max: u32) -> BTreeSet<u32> {
    assert!(d_min >= 2, "d^2 - 1 must be nonzero");
    let r = |n: u64, d: u64| ExactRational::new(BigInt::from(n), BigInt::from(d));
    let lhs = r(1, 14);
    (d_min..=d_max)
        .filter(|&d| {
            let d = u64::from(d);
            lhs < r(1, d) + r(1, d * d - 1)
        })
        .collect()
}

/// `(d, c, p)` with `a_2 = 1 + c^(d-1)` a perfect `p`-th power, `p | d` prime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct A2Hit {
    pub d: u32,
    pub c: i64,
    pub p: u32,
    #[serde(with = "crate::decimal")]
    pub a2: BigInt,
    #[serde(with = "crate::decimal")]
    pub root: BigInt,
}

/// Scans `d_min <= d <= d_max`, `2 <= |c| <= c_max` for perfect-power `a_2`.
pub fn a2_power_scan(d_min: u32, d_max: u32, c_max: i64) -> Vec<A2Hit> {
    let mut out = Vec::new();
    for d in d_min.max(2)..=d_max {
        let primes: Vec<u32> = (2..=d).filter(|&p| d % p == 0 && (2..p).all(|q| p % q != 0)).collect();
        for c in (-c_max..=c_max).filter(|c| c.abs() >= 2) {
            let a2: BigInt = Pow::pow(BigInt::from(c), d - 1) + 1;
            for &p in &primes {
                if let Some(root) = is_perfect_pth_power(&a2, p) {
                    out.push(A2Hit { d, c, p, a2: a2.clone(), root });
                }
            }
        }
    }
    out
}

/// Integer polynomial `c^d f^2(z) = (c z^d + 1)^d + c^(d-1)` (ascending
/// coefficients), whose rational irreducibility is that of `f^2`.
pub fn second_iterate_poly(d: u32, c: i64) -> Vec<i64> {
    let d = d as usize;
    // (c z^d + 1)^d by the binomial theorem: coefficient of z^(d i) is C(d, i) c^i.
    let mut coeffs = vec![0i64; d * d + 1];
    let mut binom: i64 = 1;
    for i in 0..=d {
        coeffs[d * i] = binom * c.pow(i as u32);
        binom = binom * (d - i) as i64 / (i + 1) as i64;
    }
    coeffs[0] += c.pow(d as u32 - 1);
    coeffs
}
