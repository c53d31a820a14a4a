use serde::Serialize;

use super::arith::pow_mod;

/// The `p`-th powers modulo `k`, found by enumerating `x -> x^p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidueSet {
    pub k: u64,
    pub p: u64,
    members: Vec<bool>,
}

impl ResidueSet {
    pub fn contains(&self, r: u64) -> bool {
        self.members[(r % self.k) as usize]
    }

    pub fn members(&self) -> Vec<u64> {
        (0..self.k).filter(|&r| self.members[r as usize]).collect()
    }

    /// Number of nonzero `p`-th powers.
    pub fn nonzero_count(&self) -> usize {
        self.members.iter().skip(1).filter(|&&b| b).count()
    }
}

/// Intended for small moduli: the table has `k` entries.
pub fn pth_power_residues(k: u64, p: u64) -> ResidueSet {
    let mut members = vec![false; k as usize];
    for x in 0..k {
        members[pow_mod(x, p, k) as usize] = true;
    }
    ResidueSet { k, p, members }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modular::primes_up_to;

    #[test]
    fn cube_examples() {
        assert_eq!(pth_power_residues(7, 3).members(), vec![0, 1, 6]);
        assert_eq!(pth_power_residues(13, 3).members(), vec![0, 1, 5, 8, 12]);
        assert_eq!(pth_power_residues(5, 3).members(), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn subgroup_index() {
        for k in primes_up_to(200) {
            for p in [2u64, 3, 5, 7] {
                let s = pth_power_residues(k, p);
                assert!(s.contains(0));
                if k % p == 1 {
                    assert_eq!(s.nonzero_count() as u64, (k - 1) / p, "k={k} p={p}");
                }
            }
        }
    }
}
