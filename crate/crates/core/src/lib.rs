//! Certification engine for the stability of iterates of `f(z) = z^d + 1/c`
//! over the rationals.
//!
//! The crate is organised bottom-up:
//!
//! - [`exact`]: big-integer and rational arithmetic on the critical orbit
//!   `f^n(0)`, numerator recurrences, integer roots, valuations, radicals.
//! - [`modular`]: word-sized modular arithmetic, orbit rho shapes modulo a
//!   prime, cube-residue sieves and finite-field polynomial tools.
//! - [`certify`]: the cube-residue campaign for the reducible cubic
//!   `z^3 + 1/m^3 = g1(z) g2(z)`, with per-`m` certificates and batch reports.
//! - [`criteria`]: degree classification, base irreducibility, the quadratic
//!   2-adic bound and small Diophantine oracles.

pub mod certify;
pub mod criteria;
pub mod exact;
pub mod modular;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// One of the two irreducible factors of `z^3 + 1/m^3`:
/// `g1(z) = z + 1/m` and `g2(z) = z^2 - z/m + 1/m^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Factor {
    G1,
    G2,
}

impl Factor {
    pub const BOTH: [Factor; 2] = [Factor::G1, Factor::G2];

    pub fn as_str(self) -> &'static str {
        match self {
            Factor::G1 => "g1",
            Factor::G2 => "g2",
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Factor {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "g1" => Ok(Factor::G1),
            "g2" => Ok(Factor::G2),
            other => Err(format!("unknown factor `{other}` (expected g1 or g2)")),
        }
    }
}

/// Serializes big integers as decimal strings.
pub(crate) mod decimal {
    use num_bigint::BigInt;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(x)
    }
}
