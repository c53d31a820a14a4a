use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::Factor;

/// Residue classes as printed, before closing under negation.
const G1_LISTED: &[(u64, &[u64])] = &[
    (7, &[1, 3]),
    (13, &[1, 2, 3, 6]),
    (19, &[2, 4]),
    (31, &[1, 3, 4, 6, 8, 9, 10, 11, 12]),
    (37, &[3, 9, 17]),
    (43, &[2, 5, 8, 10, 12, 13, 14, 15, 20]),
];

const G2_LISTED: &[(u64, &[u64])] = &[
    (7, &[1, 2, 3]),
    (13, &[1, 2, 3, 4, 6]),
    (19, &[3, 5]),
    (31, &[1, 4, 7, 8, 9, 11, 14]),
    (37, &[4, 7, 9, 12, 16, 17, 18]),
];

/// Classes of `m` modulo small primes `k` for which the even-index sieve
/// modulo `k` passes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SieveTable {
    pub factor: Factor,
    /// Modulus to the listed representatives `r` (the class is `±r mod k`).
    listed: BTreeMap<u64, Vec<u64>>,
    /// Modulus to the full class set, closed under negation.
    entries: BTreeMap<u64, BTreeSet<u64>>,
}

impl SieveTable {
    fn from_listed(factor: Factor, data: &[(u64, &[u64])]) -> Self {
        let mut listed = BTreeMap::new();
        let mut entries = BTreeMap::new();
        for &(k, reps) in data {
            listed.insert(k, reps.to_vec());
            let closed: BTreeSet<u64> = reps.iter().flat_map(|&r| [r, k - r]).collect();
            entries.insert(k, closed);
        }
        SieveTable { factor, listed, entries }
    }

    pub fn moduli(&self) -> impl Iterator<Item = u64> + '_ {
        self.entries.keys().copied()
    }

    /// Listed representatives at `k`, as printed.
    pub fn listed(&self, k: u64) -> Option<&[u64]> {
        self.listed.get(&k).map(Vec::as_slice)
    }

    /// Every class at `k`, closed under negation.
    pub fn classes(&self, k: u64) -> Option<&BTreeSet<u64>> {
        self.entries.get(&k)
    }

    pub fn entries(&self) -> &BTreeMap<u64, BTreeSet<u64>> {
        &self.entries
    }
}

/// The two compiled-in tables, for g1 and g2.
pub fn builtin_tables() -> (SieveTable, SieveTable) {
    (SieveTable::from_listed(Factor::G1, G1_LISTED), SieveTable::from_listed(Factor::G2, G2_LISTED))
}

/// Smallest table modulus whose classes contain `m`.
pub fn table_covers(m: u64, table: &SieveTable) -> Option<u64> {
    table.entries.iter().find(|(k, set)| set.contains(&(m % **k))).map(|(k, _)| *k)
}

/// Every `m` in `[1, max_m]` with no covering table modulus, ascending.
pub fn residuals(max_m: u64, table: &SieveTable) -> Vec<u64> {
    (1..=max_m).filter(|&m| table_covers(m, table).is_none()).collect()
}
