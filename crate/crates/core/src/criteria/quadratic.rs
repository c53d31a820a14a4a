use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::{base_irreducible, CriteriaError};
use crate::exact::{is_perfect_pth_power, numerators, valuation, ExactRational, GrowthGuard, Valuation};
use crate::modular::pth_power_obstruction;

/// `ν_2(1 + c)` for odd `c`: the number of irreducible factors of every
/// iterate of `z^2 + 1/c` is at most this, so 1 (i.e. `c ≡ 1 mod 4`) means
/// stable.
pub fn quadratic_factor_bound(c: i64) -> Result<u32, CriteriaError> {
    if c % 2 == 0 {
        return Err(CriteriaError::NoGoodReduction { c });
    }
    match valuation(&ExactRational::from_integer(BigInt::from(c) + 1), 2) {
        Valuation::Finite(v) => Ok(v as u32),
        Valuation::Infinite => Err(CriteriaError::PeriodicOrbit { c }),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SquareEvidence {
    /// `a_n` is a non-square residue modulo `q`.
    Modular { q: u64 },
    /// Exact check: `a_n` is not a square.
    Exact,
    /// `a_n` is a square (or no evidence was found within the limits).
    Uncertified { is_square: Option<bool> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquareScanEntry {
    /// Iterate index `n`; the value examined is `a_{n+1}`.
    pub n: usize,
    pub evidence: SquareEvidence,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadraticScan {
    pub c: i64,
    pub base_irreducible: bool,
    /// Set when the critical orbit hits 0 again (it is then periodic).
    pub degenerate: Option<String>,
    pub entries: Vec<SquareScanEntry>,
}

impl QuadraticScan {
    pub fn uncertified(&self) -> Vec<usize> {
        self.entries
            .iter()
            .filter(|e| matches!(e.evidence, SquareEvidence::Uncertified { .. }))
            .map(|e| e.n)
            .collect()
    }
}

/// For `z^2 + 1/c` the critical point is 0, and `g(f^n(0))` has numerator
/// `a_{n+1}`; if none of these is a square, every iterate is irreducible.
/// For `n = 1..=count` this looks for a non-square residue modulo a prime
/// `q <= q_bound` and falls back to an exact check on small indices.
pub fn quadratic_square_scan(c: i64, count: usize, q_bound: u64) -> Result<QuadraticScan, CriteriaError> {
    if c == 0 {
        return Err(CriteriaError::BadInput("c must be nonzero".into()));
    }
    let guard = GrowthGuard::Default;
    let exact_limit = guard.limit_for(2).unwrap_or(usize::MAX).min(count + 1);
    let exact = numerators(2, c, exact_limit, guard)?;
    let degenerate = exact
        .values()
        .iter()
        .position(Zero::is_zero)
        .map(|i| format!("a_{} = 0: f^{}(0) = 0, the critical orbit is periodic", i + 1, i + 1));
    let entries = (1..=count)
        .map(|n| {
            let idx = n + 1;
            let evidence = match pth_power_obstruction(2, c, idx, 2, q_bound) {
                Some(q) => SquareEvidence::Modular { q },
                None => match exact.get(idx) {
                    Some(a) => {
                        let square = is_square(a);
                        if square {
                            SquareEvidence::Uncertified { is_square: Some(true) }
                        } else {
                            SquareEvidence::Exact
                        }
                    }
                    None => SquareEvidence::Uncertified { is_square: None },
                },
            };
            SquareScanEntry { n, evidence }
        })
        .collect();
    Ok(QuadraticScan { c, base_irreducible: base_irreducible(2, c), degenerate, entries })
}

fn is_square(a: &BigInt) -> bool {
    is_perfect_pth_power(a, 2).is_some()
}
