use std::fmt::Write as _;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::campaign::{certify_m, Certificate, CertifyOptions, MethodKind, Status};
use super::tables::builtin_tables;
use super::CertifyError;
use crate::Factor;

pub const SCHEMA_VERSION: &str = "1";

/// Settings of a batch run. The worker count is not part of the report.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatchConfig {
    pub max_m: u64,
    pub prime_bound: u64,
    pub exemplar_check: bool,
    pub combined: bool,
    #[serde(skip)]
    pub jobs: usize,
}

impl BatchConfig {
    pub fn new(max_m: u64, prime_bound: u64) -> Self {
        BatchConfig { max_m, prime_bound, exemplar_check: false, combined: true, jobs: 1 }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub covered_by_table: u64,
    /// Certified by a searched prime or a searched pair of primes.
    pub searched: u64,
    /// The pairs among `searched`.
    pub combined: u64,
    pub special: u64,
    pub unresolved: u64,
    pub theorem3_verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatchReport {
    pub schema_version: String,
    pub config: BatchConfig,
    pub summary: Summary,
    pub certificates: Vec<Certificate>,
}

impl BatchReport {
    fn assemble(config: BatchConfig, certificates: Vec<Certificate>) -> Self {
        let mut s = Summary::default();
        for c in &certificates {
            if c.status == Status::Unresolved {
                s.unresolved += 1;
                continue;
            }
            match c.method.kind {
                MethodKind::TableModulus => s.covered_by_table += 1,
                MethodKind::SearchedPrime => s.searched += 1,
                MethodKind::CombinedPrimes => {
                    s.searched += 1;
                    s.combined += 1;
                }
                MethodKind::SpecialCase => s.special += 1,
                MethodKind::None => {}
            }
        }
        s.theorem3_verified = s.unresolved == 0;
        BatchReport { schema_version: SCHEMA_VERSION.into(), config, summary: s, certificates }
    }

    pub fn unresolved(&self) -> impl Iterator<Item = &Certificate> {
        self.certificates.iter().filter(|c| c.status == Status::Unresolved)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn to_csv(&self) -> String {
        #[derive(Serialize)]
        struct Row<'a> {
            m: i64,
            factor: Factor,
            base_case: &'a str,
            base_is_cube: bool,
            method: MethodKind,
            modulus_or_prime: Option<u64>,
            primes: String,
            tail: Option<u64>,
            cycle: Option<u64>,
            indices_checked: Option<u64>,
            status: Status,
        }
        let mut w = csv::Writer::from_writer(Vec::new());
        for c in &self.certificates {
            let primes = c.method.primes.as_ref().map(|p| {
                p.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
            });
            w.serialize(Row {
                m: c.m,
                factor: c.factor,
                base_case: &c.base_case.expression,
                base_is_cube: c.base_case.is_cube,
                method: c.method.kind,
                modulus_or_prime: c.method.modulus_or_prime,
                primes: primes.unwrap_or_default(),
                tail: c.window.map(|w| w.tail),
                cycle: c.window.map(|w| w.cycle),
                indices_checked: c.window.map(|w| w.indices_checked),
                status: c.status,
            })
            .expect("in-memory csv write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    pub fn to_text(&self) -> String {
        let s = &self.summary;
        let mut out = String::new();
        let _ = writeln!(out, "m in [1, {}], prime bound {}", self.config.max_m, self.config.prime_bound);
        let _ = writeln!(
            out,
            "table {}  searched {} (pairs {})  special {}  unresolved {}",
            s.covered_by_table, s.searched, s.combined, s.special, s.unresolved
        );
        let _ = writeln!(out, "verified: {}", s.theorem3_verified);
        for c in self.certificates.iter().filter(|c| c.method.kind != MethodKind::TableModulus) {
            let how = match c.method.kind {
                MethodKind::CombinedPrimes => format!("primes {:?}", c.method.primes.as_deref().unwrap_or(&[])),
                MethodKind::None => "-".into(),
                _ => format!("{}", c.method.modulus_or_prime.unwrap_or(0)),
            };
            let kind = serde_json::to_value(c.method.kind).expect("serializes");
            let _ = writeln!(
                out,
                "{:>6} {} {:<16} {:<12} {:?}",
                c.m,
                c.factor,
                kind.as_str().unwrap_or(""),
                how,
                c.status
            );
        }
        out
    }
}

/// Certifies both factors for every `m` in `[1, max_m]`.
pub fn certify_range(config: &BatchConfig) -> Result<BatchReport, CertifyError> {
    certify_range_with_progress(config, |_| {})
}

/// As [`certify_range`], calling `progress` with the number of finished `m`.
/// The report does not depend on `config.jobs`.
pub fn certify_range_with_progress(
    config: &BatchConfig,
    progress: impl Fn(u64) + Sync,
) -> Result<BatchReport, CertifyError> {
    let tables = builtin_tables();
    let opts = CertifyOptions {
        prime_bound: config.prime_bound,
        combined: config.combined,
        exemplar_check: config.exemplar_check,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs.max(1))
        .build()
        .map_err(|e| CertifyError::Pool(e.to_string()))?;
    let done = AtomicU64::new(0);
    let per_m: Vec<[Certificate; 2]> = pool.install(|| {
        (1..=config.max_m as i64)
            .into_par_iter()
            .map(|m| {
                let pair = [
                    certify_m(m, Factor::G1, &tables, &opts)?,
                    certify_m(m, Factor::G2, &tables, &opts)?,
                ];
                progress(done.fetch_add(1, Ordering::Relaxed) + 1);
                Ok(pair)
            })
            .collect::<Result<_, CertifyError>>()
    })?;
    Ok(BatchReport::assemble(*config, per_m.into_iter().flatten().collect()))
}
