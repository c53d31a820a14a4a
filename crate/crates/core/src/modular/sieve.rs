use serde::{Deserialize, Serialize};

use super::arith::{add_mod, is_prime_u64, lcm, mul_mod, reduce_i64, sub_mod};
use super::{mod_inverse, pth_power_residues, ModularError, OrbitModK, ResidueSet};
use crate::Factor;

/// `g1(x) = x + m^{-1}` or `g2(x) = x^2 - x m^{-1} + m^{-2}` modulo `k`.
pub fn eval_g_mod_k(factor: Factor, m: i64, x: u64, k: u64) -> Result<u64, ModularError> {
    let m_red = reduce_i64(m, k);
    if m_red == 0 {
        return Err(ModularError::ModulusUnusable { k });
    }
    let m_inv = mod_inverse(m_red, k)?;
    Ok(eval_with_inverse(factor, m_inv, x, k))
}

fn eval_with_inverse(factor: Factor, m_inv: u64, x: u64, k: u64) -> u64 {
    match factor {
        Factor::G1 => add_mod(x, m_inv, k),
        Factor::G2 => {
            let x2 = mul_mod(x, x, k);
            add_mod(sub_mod(x2, mul_mod(x, m_inv, k), k), mul_mod(m_inv, m_inv, k), k)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SieveWitness {
    /// Orbit index `n` of the offending value `g(f^n(0))`.
    pub index: u64,
    pub residue: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SieveOutcome {
    pub factor: Factor,
    pub m: i64,
    pub modulus: u64,
    pub start: u64,
    pub step: u64,
    pub pass: bool,
    pub witness: Option<SieveWitness>,
    pub tail_len: usize,
    pub cycle_len: usize,
    pub indices_checked: u64,
}

/// Per-modulus state shared by the single and combined sieves.
struct Lane {
    k: u64,
    m_inv: u64,
    orbit: OrbitModK,
    cubes: ResidueSet,
}

impl Lane {
    fn new(m: i64, k: u64) -> Result<Self, ModularError> {
        if !is_prime_u64(k) {
            return Err(ModularError::NotPrime(k));
        }
        let m_red = reduce_i64(m, k);
        if m_red == 0 {
            return Err(ModularError::ModulusUnusable { k });
        }
        if k % 3 != 1 {
            return Err(ModularError::UselessModulus { k, p: 3 });
        }
        let m_inv = mod_inverse(m_red, k)?;
        // c = m^3, so c^{-1} = (m^{-1})^3.
        let c_inv = mul_mod(mul_mod(m_inv, m_inv, k), m_inv, k);
        let orbit = OrbitModK::from_shift(3, c_inv, k);
        Ok(Lane { k, m_inv, orbit, cubes: pth_power_residues(k, 3) })
    }

    /// `g(f^n(0)) mod k`; residue 0 counts as a cube.
    fn value(&self, factor: Factor, n: u64) -> u64 {
        eval_with_inverse(factor, self.m_inv, self.orbit.value_at(n), self.k)
    }

    fn is_cube_at(&self, factor: Factor, n: u64) -> bool {
        self.cubes.contains(self.value(factor, n))
    }
}

/// Checks that `g(f^n(0)) mod k` is a non-cube for every `n ≡ start (mod step)`,
/// `n >= start`, with `c = m^3`.
///
/// The orbit is eventually periodic, so the window
/// `[start, max(start, |tail|) + lcm(step, |cycle|) + |cycle|]` decides every
/// index in the class.
pub fn sieve_indices(
    factor: Factor,
    m: i64,
    k: u64,
    start: u64,
    step: u64,
) -> Result<SieveOutcome, ModularError> {
    assert!(step >= 1, "step must be positive");
    let lane = Lane::new(m, k)?;
    let tail = lane.orbit.tail_len() as u64;
    let cycle = lane.orbit.cycle_len() as u64;
    let end = start.max(tail) + lcm(step, cycle) + cycle;
    let mut checked = 0;
    let mut witness = None;
    let mut n = start;
    while n <= end {
        checked += 1;
        if lane.is_cube_at(factor, n) {
            witness = Some(SieveWitness { index: n, residue: lane.value(factor, n) });
            break;
        }
        n += step;
    }
    Ok(SieveOutcome {
        factor,
        m,
        modulus: k,
        start,
        step,
        pass: witness.is_none(),
        witness,
        tail_len: tail as usize,
        cycle_len: cycle as usize,
        indices_checked: checked,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CombinedSieveOutcome {
    pub factor: Factor,
    pub m: i64,
    pub moduli: Vec<u64>,
    pub pass: bool,
    /// First index at which every modulus sees a cube.
    pub witness_index: Option<u64>,
    /// Longest tail over the moduli.
    pub tail_len: usize,
    /// Joint period: lcm of the cycle lengths.
    pub cycle_len: u64,
    pub indices_checked: u64,
}

/// Like [`sieve_indices`], but an index passes when at least one of the
/// moduli sees a non-cube there.
///
/// The joint orbit is periodic with period `L = lcm(cycles)` after the
/// longest tail `T`, so `[start, max(start, T) + lcm(step, L) + max cycle]`
/// decides every index in the class.
pub fn sieve_indices_combined(
    factor: Factor,
    m: i64,
    moduli: &[u64],
    start: u64,
    step: u64,
) -> Result<CombinedSieveOutcome, ModularError> {
    assert!(step >= 1, "step must be positive");
    let lanes = moduli.iter().map(|&k| Lane::new(m, k)).collect::<Result<Vec<_>, _>>()?;
    let tail = lanes.iter().map(|l| l.orbit.tail_len()).max().unwrap_or(0) as u64;
    let period = lanes.iter().fold(1, |acc, l| lcm(acc, l.orbit.cycle_len() as u64));
    let max_cycle = lanes.iter().map(|l| l.orbit.cycle_len()).max().unwrap_or(0) as u64;
    let end = start.max(tail) + lcm(step, period) + max_cycle;
    let mut checked = 0;
    let mut witness_index = None;
    let mut n = start;
    while n <= end {
        checked += 1;
        if lanes.iter().all(|l| l.is_cube_at(factor, n)) {
            witness_index = Some(n);
            break;
        }
        n += step;
    }
    Ok(CombinedSieveOutcome {
        factor,
        m,
        moduli: moduli.to_vec(),
        pass: witness_index.is_none(),
        witness_index,
        tail_len: tail as usize,
        cycle_len: period,
        indices_checked: checked,
    })
}
