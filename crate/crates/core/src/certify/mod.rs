//! Cube-residue certification for the reducible cubic `z^3 + 1/m^3`.
//!
//! For `c = m^3`, `f(z) = z^3 + 1/c` splits as `g1(z) g2(z)`. Every iterate
//! of `f` has exactly two irreducible factors as long as no value
//! `g(f^n(0))`, `n >= 1`, is a cube. Each `(m, factor)` pair gets a
//! [`Certificate`] recording the modulus (or moduli) whose cube-residue
//! sieve rules out cubes at all even indices.

mod campaign;
mod report;
mod tables;

pub use campaign::{
    certify_m, reduce_negative, search_prime, search_prime_pair, BaseCase, Certificate, CertifyOptions,
    ExemplarCheck, Method, MethodKind, NegativeReduction, Status, Window, EXEMPLARS,
};
pub use report::{certify_range, certify_range_with_progress, BatchConfig, BatchReport, Summary, SCHEMA_VERSION};
pub use tables::{builtin_tables, residuals, table_covers, SieveTable};

use crate::Factor;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CertifyError {
    #[error("m must be at least 1, got {0}")]
    BadParameter(i64),
    /// A step that must succeed did not; the input data or the code is wrong.
    #[error("contradiction for m = {m}, {factor}: {detail}")]
    Contradiction { m: i64, factor: Factor, detail: String },
    #[error("could not build worker pool: {0}")]
    Pool(String),
}
