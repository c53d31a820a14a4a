use num_integer::Integer;
use serde::Serialize;

use super::rational::int_valuation;
use super::FactorNumeratorSeq;

/// A failure of rigid divisibility found by [`rigid_divisibility_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum RigidViolation {
    /// `ν_p(s_n) > 0` but `ν_p(s_{kn}) != ν_p(s_n)`.
    Propagation { p: u64, n: usize, k: usize, v_n: i64, v_kn: Option<i64> },
    /// `ν_p(s_n) > 0` and `ν_p(s_j) > 0` but `p ∤ s_gcd(n, j)`.
    GcdDescent { p: u64, n: usize, j: usize },
}

fn small_primes(bound: u64) -> Vec<u64> {
    (2..=bound).filter(|&n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)).collect()
}

/// Empirical check that the numerator sequence is a rigid divisibility
/// sequence at every prime `p <= prime_bound` over indices `1..=index_bound`.
pub fn rigid_divisibility_check(
    seq: &FactorNumeratorSeq,
    prime_bound: u64,
    index_bound: usize,
) -> Vec<RigidViolation> {
    let top = index_bound.min(seq.max_index());
    let mut out = Vec::new();
    for p in small_primes(prime_bound) {
        let vals: Vec<Option<i64>> = (1..=top)
            .map(|n| int_valuation(seq.get(n).expect("index in range"), p).finite())
            .collect();
        let v = |n: usize| vals[n - 1];
        let divides = |n: usize| v(n).is_none_or(|t| t > 0);
        for n in 1..=top {
            let Some(v_n) = v(n).filter(|&t| t > 0) else { continue };
            for k in 2..=top / n {
                if v(k * n) != Some(v_n) {
                    out.push(RigidViolation::Propagation { p, n, k, v_n, v_kn: v(k * n) });
                }
            }
            for j in 1..=top {
                if divides(j) && !divides(n.gcd(&j)) {
                    out.push(RigidViolation::GcdDescent { p, n, j });
                }
            }
        }
    }
    out
}
