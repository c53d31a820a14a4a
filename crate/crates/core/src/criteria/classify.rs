use num_bigint::BigInt;
use serde::Serialize;

use crate::exact::is_perfect_pth_power;

fn prime_factors(mut n: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Whether `z^d + 1/c` is irreducible over Q.
///
/// `z^d - a` is irreducible iff `a` is not a `p`-th power for any prime
/// `p | d`, and `a ∉ -4Q^4` when `4 | d`. With `a = -1/c` this reads:
/// `-c` is no `p`-th power, and `c ≠ 4w^4`.
pub fn base_irreducible(d: u32, c: i64) -> bool {
    assert!(d >= 2 && c != 0);
    let neg_c = -BigInt::from(c);
    for (p, _) in prime_factors(d) {
        if is_perfect_pth_power(&neg_c, p).is_some() {
            return false;
        }
    }
    if d.is_multiple_of(4) && c > 0 && c % 4 == 0 && is_perfect_pth_power(&BigInt::from(c / 4), 4).is_some() {
        return false;
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "case")]
pub enum StabilityCase {
    /// `d = 2`: stable when `c ≡ 1 (mod 4)`.
    QuadraticCase,
    OddD,
    PowerOfTwo { r: u32 },
    TwoThree { r: u32, s: u32 },
    TwoFiveSeven { r: u32, s: u32, t: u32 },
    FourMod12,
    /// Odd `d > 3` prime to 3: no newly reducible iterates exist.
    CoveredByDanielsonFein,
    NotCoveredUnconditional,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub d: u32,
    #[serde(flatten)]
    pub case: StabilityCase,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub abc_note: Option<String>,
}

/// Which argument settles stability for degree `d`, checked in order:
/// quadratic, odd (prime to 3 first), then the even shapes.
pub fn classify_stability(d: u32) -> Classification {
    assert!(d >= 2);
    let f = prime_factors(d);
    let exp = |p: u32| f.iter().find(|&&(q, _)| q == p).map_or(0, |&(_, e)| e);
    let only = |allowed: &[u32]| f.iter().all(|(p, _)| allowed.contains(p));
    let case = if d == 2 {
        StabilityCase::QuadraticCase
    } else if d % 2 == 1 {
        if !d.is_multiple_of(3) && d > 3 {
            StabilityCase::CoveredByDanielsonFein
        } else {
            StabilityCase::OddD
        }
    } else if only(&[2]) {
        StabilityCase::PowerOfTwo { r: exp(2) }
    } else if only(&[2, 3]) {
        StabilityCase::TwoThree { r: exp(2), s: exp(3) }
    } else if only(&[2, 5, 7]) && d % 3 == 1 {
        StabilityCase::TwoFiveSeven { r: exp(2), s: exp(5), t: exp(7) }
    } else if d % 12 == 4 {
        StabilityCase::FourMod12
    } else {
        StabilityCase::NotCoveredUnconditional
    };
    let abc_note = (case == StabilityCase::NotCoveredUnconditional).then(|| abc_note(d));
    Classification { d, case, abc_note }
}

fn abc_note(d: u32) -> String {
    let survives = super::d14_inequality_scan(d, d).contains(&d);
    if survives {
        format!(
            "explicit abc: odd p-th powers excluded; 1/14 < 1/{d} + 1/({d}^2 - 1) holds, so squares \
             need the parity split and the second abc bound"
        )
    } else {
        format!(
            "explicit abc: odd p-th powers excluded; 1/14 >= 1/{d} + 1/({d}^2 - 1), so a_n is never a square for n >= 3"
        )
    }
}
