//! Stability criteria for `f(z) = z^d + 1/c` with irreducible `f`.
//!
//! Irreducibility of every iterate reduces to showing that no critical
//! orbit numerator `a_n`, `n >= 3`, is a `p`-th power for a prime `p | d`.
//! Which degrees `d` are handled unconditionally depends on the shape of
//! `d`; the remaining even degrees rely on an explicit abc inequality.

mod classify;
mod diophantine;
mod quadratic;

pub use classify::{base_irreducible, classify_stability, Classification, StabilityCase};
pub use diophantine::{
    a2_power_scan, abc_inequality_check, catalan_scan, d14_inequality_scan, fermat_brute_search,
    second_iterate_poly, A2Hit, AbcRecord,
};
pub use quadratic::{quadratic_factor_bound, quadratic_square_scan, QuadraticScan, SquareEvidence, SquareScanEntry};

use crate::exact::ExactError;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CriteriaError {
    #[error("c = {c} is even: z^2 + 1/c has bad reduction at 2")]
    NoGoodReduction { c: i64 },
    #[error("c = {c}: the critical orbit is periodic and 1 + c = 0 has infinite 2-adic valuation")]
    PeriodicOrbit { c: i64 },
    #[error("invalid input: {0}")]
    BadInput(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
