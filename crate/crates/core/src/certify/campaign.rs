use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::tables::{table_covers, SieveTable};
use super::CertifyError;
use crate::exact::is_perfect_pth_power;
use crate::modular::{is_prime_u64, poly_irreducible_mod_p, sieve_indices, sieve_indices_combined};
use crate::Factor;

/// Primes searched for residual `m`: the usable ones are `≡ 1 (mod 3)`.
fn usable_primes(m: u64, prime_bound: u64) -> impl Iterator<Item = u64> {
    (7..=prime_bound).filter(move |&p| p % 3 == 1 && !m.is_multiple_of(p) && is_prime_u64(p))
}

/// Smallest usable prime `p <= prime_bound` whose sieve passes on the
/// indices `start, start + step, ...`.
pub fn search_prime(m: u64, factor: Factor, prime_bound: u64, start: u64, step: u64) -> Option<u64> {
    usable_primes(m, prime_bound).find(|&p| {
        sieve_indices(factor, m as i64, p, start, step).is_ok_and(|s| s.pass)
    })
}

/// Lexicographically smallest pair of usable primes that jointly pass:
/// every index in the class is a non-cube modulo at least one of them.
pub fn search_prime_pair(
    m: u64,
    factor: Factor,
    prime_bound: u64,
    start: u64,
    step: u64,
) -> Option<(u64, u64)> {
    let primes: Vec<u64> = usable_primes(m, prime_bound).collect();
    for (i, &p) in primes.iter().enumerate() {
        for &q in &primes[i + 1..] {
            if sieve_indices_combined(factor, m as i64, &[p, q], start, step).is_ok_and(|s| s.pass) {
                return Some((p, q));
            }
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MethodKind {
    TableModulus,
    SearchedPrime,
    CombinedPrimes,
    SpecialCase,
    None,
}

/// How the even iterate indices were certified.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Method {
    #[serde(rename = "type")]
    pub kind: MethodKind,
    pub modulus_or_prime: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub primes: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tag: Option<String>,
}

impl Method {
    fn single(kind: MethodKind, k: u64) -> Self {
        Method { kind, modulus_or_prime: Some(k), primes: None, tag: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseCase {
    pub expression: String,
    pub is_cube: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    pub tail: u64,
    pub cycle: u64,
    pub indices_checked: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Certified,
    Unresolved,
}

/// Outcome of testing a known published prime for this `(m, factor)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExemplarCheck {
    pub prime: u64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub m: i64,
    pub factor: Factor,
    pub base_case: BaseCase,
    pub method: Method,
    pub window: Option<Window>,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exemplar: Option<ExemplarCheck>,
}

/// Published primes for two residual values of `m`.
pub const EXEMPLARS: [(u64, Factor, u64); 2] = [(4342, Factor::G1, 73), (2730, Factor::G2, 67)];

/// Sign reduction: `f_{-c}^n(0) = -f_c^n(0)` and each factor value changes at
/// most by sign, so cube-freeness for `m` and `-m` coincide.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NegativeReduction {
    pub m: u64,
    pub justification: &'static str,
}

pub fn reduce_negative(m: i64) -> NegativeReduction {
    assert!(m < 0, "reduce_negative expects m < 0");
    NegativeReduction {
        m: m.unsigned_abs(),
        justification: "sign symmetry: g(f^n(0)) for -m equals ±g(f^n(0)) for m",
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CertifyOptions {
    pub prime_bound: u64,
    /// Allow pairs of primes when no single prime passes.
    pub combined: bool,
    /// Also test the published exemplar prime where one exists.
    pub exemplar_check: bool,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions { prime_bound: 150, combined: true, exemplar_check: false }
    }
}

fn base_case(m: u64, factor: Factor) -> BaseCase {
    let mb = BigInt::from(m);
    let (expression, value) = match factor {
        Factor::G1 => ("w_2 = m^2 + 1", &mb * &mb + 1),
        Factor::G2 => {
            let m2 = &mb * &mb;
            ("x_2 = m^4 - m^2 + 1", &m2 * &m2 - &m2 + 1)
        }
    };
    BaseCase {
        expression: format!("{expression} = {value}"),
        is_cube: is_perfect_pth_power(&value, 3).is_some(),
    }
}

/// Certifies that no `g(f^n(0))` is a cube for `c = m^3`.
///
/// The base value at index 2 is checked exactly; the rigid divisibility of
/// the numerator sequence carries it to the indices it divides. The even
/// indices are then sieved: by the table modulus if one covers `m`,
/// otherwise by the smallest passing prime, otherwise by a pair of primes.
/// `m = 1` for g2 has the cube base value 1 and is handled separately.
pub fn certify_m(m: i64, factor: Factor, tables: &(SieveTable, SieveTable), opts: &CertifyOptions) -> Result<Certificate, CertifyError> {
    if m < 1 {
        return Err(CertifyError::BadParameter(m));
    }
    let mu = m as u64;
    let base = base_case(mu, factor);
    let exemplar = opts
        .exemplar_check
        .then(|| EXEMPLARS.iter().find(|&&(em, ef, _)| em == mu && ef == factor))
        .flatten()
        .map(|&(_, _, p)| ExemplarCheck {
            prime: p,
            pass: sieve_indices(factor, m, p, 2, 2).is_ok_and(|s| s.pass),
        });
    let cert = |method, window: Option<Window>, status| Certificate {
        m,
        factor,
        base_case: base.clone(),
        method,
        window,
        status,
        exemplar,
    };
    if m == 1 && factor == Factor::G2 {
        return special_case_one(base.clone(), exemplar);
    }
    if base.is_cube {
        return Err(CertifyError::Contradiction {
            m,
            factor,
            detail: format!("base value is a cube: {}", base.expression),
        });
    }
    let table = match factor {
        Factor::G1 => &tables.0,
        Factor::G2 => &tables.1,
    };
    if let Some(k) = table_covers(mu, table) {
        let s = sieve_indices(factor, m, k, 2, 2).map_err(|e| CertifyError::Contradiction {
            m,
            factor,
            detail: format!("table modulus {k} unusable: {e}"),
        })?;
        if !s.pass {
            return Err(CertifyError::Contradiction {
                m,
                factor,
                detail: format!("table modulus {k} listed but the sieve fails at {:?}", s.witness),
            });
        }
        let window = Window { tail: s.tail_len as u64, cycle: s.cycle_len as u64, indices_checked: s.indices_checked };
        return Ok(cert(Method::single(MethodKind::TableModulus, k), Some(window), Status::Certified));
    }
    if let Some(p) = search_prime(mu, factor, opts.prime_bound, 2, 2) {
        let s = sieve_indices(factor, m, p, 2, 2).expect("searched prime is usable");
        let window = Window { tail: s.tail_len as u64, cycle: s.cycle_len as u64, indices_checked: s.indices_checked };
        return Ok(cert(Method::single(MethodKind::SearchedPrime, p), Some(window), Status::Certified));
    }
    if opts.combined {
        if let Some((p, q)) = search_prime_pair(mu, factor, opts.prime_bound, 2, 2) {
            let s = sieve_indices_combined(factor, m, &[p, q], 2, 2).expect("searched primes are usable");
            let window = Window { tail: s.tail_len as u64, cycle: s.cycle_len, indices_checked: s.indices_checked };
            let method = Method {
                kind: MethodKind::CombinedPrimes,
                modulus_or_prime: None,
                primes: Some(vec![p, q]),
                tag: None,
            };
            return Ok(cert(method, Some(window), Status::Certified));
        }
    }
    let none = Method { kind: MethodKind::None, modulus_or_prime: None, primes: None, tag: None };
    Ok(cert(none, None, Status::Unresolved))
}

/// `m = 1`, g2: `x_2 = 1` is a cube, so rigid divisibility gives nothing.
/// Instead `g2(f(z)) = z^6 + z^3 + 1` is shown irreducible modulo 2 and every
/// index `n >= 2` is sieved modulo 7.
fn special_case_one(base: BaseCase, exemplar: Option<ExemplarCheck>) -> Result<Certificate, CertifyError> {
    let irreducible = poly_irreducible_mod_p(&[1, 0, 0, 1, 0, 0, 1], 2).unwrap_or(false);
    let s = sieve_indices(Factor::G2, 1, 7, 2, 1).expect("7 is usable for m = 1");
    let (status, window) = if irreducible && s.pass {
        let w = Window { tail: s.tail_len as u64, cycle: s.cycle_len as u64, indices_checked: s.indices_checked };
        (Status::Certified, Some(w))
    } else {
        (Status::Unresolved, None)
    };
    Ok(Certificate {
        m: 1,
        factor: Factor::G2,
        base_case: base,
        method: Method {
            kind: MethodKind::SpecialCase,
            modulus_or_prime: Some(7),
            primes: None,
            tag: Some("m=1: z^6+z^3+1 irreducible mod 2; all n >= 2 sieved mod 7".into()),
        },
        window,
        status,
        exemplar,
    })
}
