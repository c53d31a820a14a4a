use std::collections::HashMap;

use serde::Serialize;

use super::arith::{add_mod, gcd, pow_mod, reduce_i64};
use super::{mod_inverse, ModularError};

/// Rho shape of the orbit of 0 under `x -> x^d + c^{-1}` modulo `k`.
///
/// The orbit is `tail ++ cycle ++ cycle ++ ...`. The first element of the
/// orbit is 0; when 0 is itself periodic the tail is empty and the cycle
/// starts at 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitModK {
    pub k: u64,
    pub d: u32,
    pub c_inv: u64,
    pub tail: Vec<u64>,
    pub cycle: Vec<u64>,
}

impl OrbitModK {
    /// Iterates from 0 and closes the cycle at the first repeated residue.
    pub fn from_shift(d: u32, shift: u64, k: u64) -> Self {
        let shift = shift % k;
        let mut seq = Vec::new();
        let mut x = 0 % k;
        let repeat_at = if k <= 1 << 22 {
            let mut seen = vec![u32::MAX; k as usize];
            loop {
                if seen[x as usize] != u32::MAX {
                    break seen[x as usize] as usize;
                }
                seen[x as usize] = seq.len() as u32;
                seq.push(x);
                x = add_mod(pow_mod(x, u64::from(d), k), shift, k);
            }
        } else {
            let mut seen = HashMap::new();
            loop {
                if let Some(&i) = seen.get(&x) {
                    break i;
                }
                seen.insert(x, seq.len());
                seq.push(x);
                x = add_mod(pow_mod(x, u64::from(d), k), shift, k);
            }
        };
        let cycle = seq.split_off(repeat_at);
        OrbitModK { k, d, c_inv: shift, tail: seq, cycle }
    }

    /// `s_n`, the residue of `f^n(0)`.
    pub fn value_at(&self, n: u64) -> u64 {
        let t = self.tail.len() as u64;
        if n < t {
            self.tail[n as usize]
        } else {
            self.cycle[((n - t) % self.cycle.len() as u64) as usize]
        }
    }

    pub fn tail_len(&self) -> usize {
        self.tail.len()
    }

    pub fn cycle_len(&self) -> usize {
        self.cycle.len()
    }
}

/// Orbit of 0 under `z^d + 1/c` modulo `k`; requires `gcd(c, k) = 1`.
pub fn orbit_mod_k(d: u32, c: i64, k: u64) -> Result<OrbitModK, ModularError> {
    let c_red = reduce_i64(c, k);
    if k < 2 || gcd(c_red, k) != 1 {
        return Err(ModularError::ModulusUnusable { k });
    }
    let c_inv = mod_inverse(c_red, k)?;
    Ok(OrbitModK::from_shift(d, c_inv, k))
}
