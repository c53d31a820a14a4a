//! Exact arithmetic on the critical orbit of `z^d + 1/c`.

mod factor;
mod rational;
mod rigid;
mod roots;
mod sequences;

pub use factor::{is_prime_certified, radical, RadicalConfig};
pub use rational::{valuation, ExactRational, Valuation};
pub use rigid::{rigid_divisibility_check, RigidViolation};
pub use roots::{integer_pth_root_floor, is_perfect_pth_power};
pub use sequences::{
    eval_factor_exact, factor_numerators, iterate_orbit_exact, numerators, FactorNumeratorSeq, GrowthGuard,
    NumeratorSeq,
};

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("degree must be at least 2, got {0}")]
    BadDegree(u32),
    #[error("parameter must be nonzero")]
    ZeroParameter,
    #[error("iterate index {requested} exceeds growth guard {limit} (values have Θ(d^n) digits)")]
    GrowthGuard { requested: usize, limit: usize },
    #[error("factorization effort exceeded; unfactored cofactor {cofactor}")]
    FactorizationEffort { cofactor: BigInt },
}
