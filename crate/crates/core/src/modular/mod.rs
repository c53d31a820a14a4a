//! Arithmetic modulo word-sized integers: critical orbits modulo a prime,
//! power-residue tests, the cube-residue sieve and finite-field polynomials.

mod arith;
mod obstruction;
mod orbit;
mod poly;
mod qcert;
mod residues;
mod sieve;

pub use arith::{is_prime_u64, lcm, mod_inverse, mul_mod, pow_mod, primes_up_to};
pub use obstruction::pth_power_obstruction;
pub use orbit::{orbit_mod_k, OrbitModK};
pub use poly::{degree_pattern_mod_p, poly_irreducible_mod_p, FpPoly};
pub use qcert::{q_irreducibility_certificate, ConclusiveEvidence, IrreducibilityCertificate, PrimePattern, QCertConfig};
pub use residues::{pth_power_residues, ResidueSet};
pub use sieve::{
    eval_g_mod_k, sieve_indices, sieve_indices_combined, CombinedSieveOutcome, SieveOutcome,
    SieveWitness,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModularError {
    #[error("{a} is not invertible modulo {k}")]
    NotInvertible { a: u64, k: u64 },
    #[error("modulus {k} divides the parameter; modulus unusable")]
    ModulusUnusable { k: u64 },
    #[error("modulus {k} is not 1 mod {p}: every residue is a {p}-th power")]
    UselessModulus { k: u64, p: u64 },
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("leading coefficient vanishes modulo {p}")]
    DegreeDrop { p: u64 },
    #[error("reduction modulo {p} is not squarefree")]
    NotSquarefree { p: u64 },
    #[error("zero polynomial")]
    ZeroPolynomial,
}
