//! Irreducibility over the rationals from reductions modulo small primes.
//!
//! Degree patterns of the factorizations modulo several primes constrain
//! the degrees of any rational factor: a factor of degree `e` forces `e` to
//! be a sub-multiset sum of every pattern. When the patterns leave some
//! degree open, the factorization at one prime is Hensel-lifted and every
//! remaining candidate is trial-divided (Zassenhaus), which settles the
//! question exactly.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::arith::primes_up_to;
use super::{degree_pattern_mod_p, FpPoly};

#[derive(Clone, Copy, Debug)]
pub struct QCertConfig {
    /// Primes up to this bound are tried.
    pub prime_bound: u64,
    /// Upper limit on candidate subsets in the Zassenhaus step; zero disables it.
    pub max_subsets: usize,
}

impl Default for QCertConfig {
    fn default() -> Self {
        QCertConfig { prime_bound: 50, max_subsets: 1 << 12 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimePattern {
    pub p: u64,
    pub degrees: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum ConclusiveEvidence {
    /// The patterns admit no common proper sub-multiset sum.
    DegreePatterns { patterns: Vec<PrimePattern> },
    /// Every candidate from the lifted factorization failed to divide.
    Zassenhaus {
        patterns: Vec<PrimePattern>,
        prime: u64,
        lift_exponent: u32,
        candidates_tested: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum IrreducibilityCertificate {
    Conclusive(ConclusiveEvidence),
    Inconclusive {
        patterns: Vec<PrimePattern>,
        /// Proper degrees still allowed by every pattern.
        open_degrees: Vec<usize>,
        /// A rational factor, when the Zassenhaus step found one
        /// (coefficients in ascending order).
        factor: Option<Vec<String>>,
    },
}

impl IrreducibilityCertificate {
    pub fn is_conclusive(&self) -> bool {
        matches!(self, IrreducibilityCertificate::Conclusive(_))
    }
}

fn subset_sums(degrees: &[usize], top: usize) -> BTreeSet<usize> {
    let mut reach = vec![false; top + 1];
    reach[0] = true;
    for &d in degrees {
        for s in (d..=top).rev() {
            if reach[s - d] {
                reach[s] = true;
            }
        }
    }
    (1..top).filter(|&s| reach[s]).collect()
}

/// Certifies irreducibility over Q of a primitive integer polynomial
/// (coefficients in ascending order).
pub fn q_irreducibility_certificate(coeffs: &[i64], cfg: &QCertConfig) -> IrreducibilityCertificate {
    let top = coeffs.iter().rposition(|&c| c != 0);
    let Some(n) = top.filter(|&n| n >= 1) else {
        return IrreducibilityCertificate::Inconclusive { patterns: vec![], open_degrees: vec![], factor: None };
    };
    let coeffs = &coeffs[..=n];
    let mut patterns = Vec::new();
    let mut open: BTreeSet<usize> = (1..n).collect();
    for p in primes_up_to(cfg.prime_bound) {
        let Ok(degrees) = degree_pattern_mod_p(coeffs, p) else { continue };
        open = open.intersection(&subset_sums(&degrees, n)).copied().collect();
        patterns.push(PrimePattern { p, degrees });
    }
    if open.is_empty() && !patterns.is_empty() {
        return IrreducibilityCertificate::Conclusive(ConclusiveEvidence::DegreePatterns { patterns });
    }
    let open_degrees: Vec<usize> = open.iter().copied().collect();
    let inconclusive = |factor| IrreducibilityCertificate::Inconclusive {
        patterns: patterns.clone(),
        open_degrees: open_degrees.clone(),
        factor,
    };
    // Odd prime with the fewest modular factors.
    let Some(best) = patterns
        .iter()
        .filter(|pp| pp.p != 2)
        .min_by_key(|pp| (pp.degrees.len(), pp.p))
    else {
        return inconclusive(None);
    };
    let r = best.degrees.len();
    if cfg.max_subsets == 0 || r >= usize::BITS as usize - 1 || (1usize << r) > cfg.max_subsets {
        return inconclusive(None);
    }
    let f: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
    match zassenhaus(&f, best.p, &open) {
        ZassenhausOutcome::Irreducible { lift_exponent, candidates_tested } => {
            IrreducibilityCertificate::Conclusive(ConclusiveEvidence::Zassenhaus {
                patterns: patterns.clone(),
                prime: best.p,
                lift_exponent,
                candidates_tested,
            })
        }
        ZassenhausOutcome::Factor(g) => inconclusive(Some(g.iter().map(|c| c.to_string()).collect())),
        ZassenhausOutcome::Unavailable => inconclusive(None),
    }
}

enum ZassenhausOutcome {
    Irreducible { lift_exponent: u32, candidates_tested: usize },
    Factor(Vec<BigInt>),
    Unavailable,
}

type ZPoly = Vec<BigInt>;

fn trim(mut v: ZPoly) -> ZPoly {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn to_fp(a: &[BigInt], p: u64) -> FpPoly {
    let pb = BigInt::from(p);
    FpPoly::new(p, a.iter().map(|c| c.mod_floor(&pb).to_u64().expect("reduced")).collect())
}

fn from_fp(a: &FpPoly) -> ZPoly {
    a.coeffs().iter().map(|&c| BigInt::from(c)).collect()
}

fn reduce(a: &[BigInt], modulus: &BigInt) -> ZPoly {
    trim(a.iter().map(|c| c.mod_floor(modulus)).collect())
}

/// Extended Euclid over F_p: `(s, t)` with `s a + t b = 1`.
fn bezout(a: &FpPoly, b: &FpPoly) -> Option<(FpPoly, FpPoly)> {
    let p = a.modulus();
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (FpPoly::constant(p, 1), FpPoly::zero(p));
    let (mut t0, mut t1) = (FpPoly::zero(p), FpPoly::constant(p, 1));
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        (r0, r1) = (r1, r);
        let s2 = s0.sub(&q.mul(&s1));
        let t2 = t0.sub(&q.mul(&t1));
        (s0, s1) = (s1, s2);
        (t0, t1) = (t1, t2);
    }
    if r0.degree() != Some(0) {
        return None;
    }
    let inv = super::mod_inverse(r0.leading(), p).ok()?;
    Some((s0.scale(inv), t0.scale(inv)))
}

/// Lifts `f ≡ g h (mod p)`, `g` monic, to a monic `G ≡ g` with
/// `f ≡ G H (mod p^k)`.
fn hensel_lift(f: &[BigInt], g: &FpPoly, h: &FpPoly, p: u64, k: u32) -> Option<ZPoly> {
    let (s, t) = bezout(g, h)?;
    let pb = BigInt::from(p);
    let mut big_g = from_fp(g);
    let mut big_h = from_fp(h);
    let mut modulus = pb.clone();
    for _ in 1..k {
        let gh = zmul(&big_g, &big_h);
        let len = f.len().max(gh.len());
        let diff: ZPoly = (0..len)
            .map(|i| {
                let a = f.get(i).cloned().unwrap_or_default();
                let b = gh.get(i).cloned().unwrap_or_default();
                let d = a - b;
                debug_assert!((&d % &modulus).is_zero());
                d / &modulus
            })
            .collect();
        let e = to_fp(&diff, p);
        let g_p = to_fp(&big_g, p);
        let h_p = to_fp(&big_h, p);
        let (_, sigma) = t.mul(&e).div_rem(&g_p);
        let (tau, rem) = e.sub(&sigma.mul(&h_p)).div_rem(&g_p);
        debug_assert!(rem.is_zero());
        let _ = &s;
        let next = &modulus * &pb;
        let add = |base: &ZPoly, delta: &FpPoly| -> ZPoly {
            let d = from_fp(delta);
            let len = base.len().max(d.len());
            let v: ZPoly = (0..len)
                .map(|i| {
                    base.get(i).cloned().unwrap_or_default()
                        + &modulus * d.get(i).cloned().unwrap_or_default()
                })
                .collect();
            reduce(&v, &next)
        };
        big_g = add(&big_g, &sigma);
        big_h = add(&big_h, &tau);
        modulus = next;
    }
    Some(big_g)
}

fn symmetric(a: &[BigInt], modulus: &BigInt) -> ZPoly {
    let half = modulus >> 1;
    trim(
        a.iter()
            .map(|c| {
                let r = c.mod_floor(modulus);
                if r > half {
                    r - modulus
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn primitive_part(a: &[BigInt]) -> ZPoly {
    let content = a.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    let sign = if a.last().is_some_and(Signed::is_negative) { -BigInt::one() } else { BigInt::one() };
    a.iter().map(|c| c / &content * &sign).collect()
}

/// Exact division test over Z.
fn divides(divisor: &[BigInt], f: &[BigInt]) -> bool {
    let dd = divisor.len() - 1;
    let lead = &divisor[dd];
    let mut rem = f.to_vec();
    while rem.len() > dd && !rem.is_empty() {
        let top = rem.len() - 1;
        let (q, r) = rem[top].div_rem(lead);
        if !r.is_zero() {
            return false;
        }
        let shift = top - dd;
        for (i, c) in divisor.iter().enumerate() {
            rem[shift + i] -= &q * c;
        }
        rem = trim(rem);
    }
    rem.is_empty()
}

fn zassenhaus(f: &[BigInt], p: u64, open: &BTreeSet<usize>) -> ZassenhausOutcome {
    let n = f.len() - 1;
    let lc = f[n].clone();
    let content = f.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if !content.is_one() {
        return ZassenhausOutcome::Unavailable;
    }
    let f_p = to_fp(f, p);
    let Some(factors) = f_p.factor_squarefree() else {
        return ZassenhausOutcome::Unavailable;
    };
    // Coefficients of any factor (scaled by lc) are below |lc| 2^n ||f||_1.
    let norm: BigInt = f.iter().map(|c| c.abs()).sum();
    let bound = lc.abs() * (BigInt::one() << n) * norm * 2;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut modulus = pb.clone();
    while modulus <= bound {
        modulus *= &pb;
        k += 1;
    }
    let lc_p = to_fp(std::slice::from_ref(&lc), p);
    let mut lifted = Vec::with_capacity(factors.len());
    for (i, g) in factors.iter().enumerate() {
        let h = factors
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(lc_p.clone(), |acc, (_, q)| acc.mul(q));
        let Some(big_g) = hensel_lift(f, g, &h, p, k) else {
            return ZassenhausOutcome::Unavailable;
        };
        lifted.push(big_g);
    }
    let degs: Vec<usize> = factors.iter().map(|g| g.degree().unwrap_or(0)).collect();
    let r = factors.len();
    let mut tested = 0;
    for mask in 1u64..(1u64 << r) - 1 {
        let d: usize = (0..r).filter(|&i| mask >> i & 1 == 1).map(|i| degs[i]).sum();
        if 2 * d > n || !open.contains(&d) {
            continue;
        }
        tested += 1;
        let product = (0..r)
            .filter(|&i| mask >> i & 1 == 1)
            .fold(vec![lc.clone()], |acc, i| reduce(&zmul(&acc, &lifted[i]), &modulus));
        let candidate = primitive_part(&symmetric(&product, &modulus));
        if candidate.len() >= 2 && divides(&candidate, f) {
            return ZassenhausOutcome::Factor(candidate);
        }
    }
    ZassenhausOutcome::Irreducible { lift_exponent: k, candidates_tested: tested }
}
