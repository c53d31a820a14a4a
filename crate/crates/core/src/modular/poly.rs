use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::arith::{add_mod, mod_inverse, mul_mod, reduce_i64, sub_mod};
use super::ModularError;

/// Dense polynomial over `F_p`, coefficients in ascending degree order,
/// without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl fmt::Debug for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpPoly(p={}, {:?})", self.p, self.coeffs)
    }
}

impl FpPoly {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut out = FpPoly { p, coeffs: coeffs.into_iter().map(|c| c % p).collect() };
        out.trim();
        out
    }

    pub fn from_integers(coeffs: &[i64], p: u64) -> Self {
        Self::new(p, coeffs.iter().map(|&c| reduce_i64(c, p)).collect())
    }

    pub fn zero(p: u64) -> Self {
        FpPoly { p, coeffs: Vec::new() }
    }

    pub fn constant(p: u64, c: u64) -> Self {
        Self::new(p, vec![c])
    }

    /// The polynomial `x`.
    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn deg_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = mod_inverse(self.leading(), self.p).expect("prime field");
        self.scale(inv)
    }

    pub fn scale(&self, s: u64) -> Self {
        Self::new(self.p, self.coeffs.iter().map(|&c| mul_mod(c, s, self.p)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &[u64], i: usize| v.get(i).copied().unwrap_or(0);
        Self::new(
            self.p,
            (0..n).map(|i| add_mod(get(&self.coeffs, i), get(&other.coeffs, i), self.p)).collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &[u64], i: usize| v.get(i).copied().unwrap_or(0);
        Self::new(
            self.p,
            (0..n).map(|i| sub_mod(get(&self.coeffs, i), get(&other.coeffs, i), self.p)).collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = add_mod(out[i + j], mul_mod(a, b, self.p), self.p);
            }
        }
        Self::new(self.p, out)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let p = self.p;
        let dd = divisor.deg_or_zero();
        if self.coeffs.len() < divisor.coeffs.len() {
            return (Self::zero(p), self.clone());
        }
        let inv = mod_inverse(divisor.leading(), p).expect("prime field");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let coef = mul_mod(rem[i + dd], inv, p);
            quot[i] = coef;
            if coef == 0 {
                continue;
            }
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = sub_mod(rem[i + j], mul_mod(coef, b, p), p);
            }
        }
        rem.truncate(dd);
        (Self::new(p, quot), Self::new(p, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul_mod(c, i as u64 % self.p, self.p))
                .collect(),
        )
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, e: &BigUint, modulus: &Self) -> Self {
        let mut acc = Self::constant(self.p, 1).rem(modulus);
        let base = self.rem(modulus);
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(modulus);
            if e.bit(i) {
                acc = acc.mul(&base).rem(modulus);
            }
        }
        acc
    }

    /// `self^(p^times) mod modulus` by repeated Frobenius.
    fn frobenius(&self, times: usize, modulus: &Self) -> Self {
        let p = BigUint::from(self.p);
        (0..times).fold(self.rem(modulus), |acc, _| acc.pow_mod(&p, modulus))
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Distinct-degree factorization of a monic squarefree polynomial:
    /// pairs `(i, product of all irreducible factors of degree i)`.
    pub fn distinct_degree(&self) -> Vec<(usize, FpPoly)> {
        let p = self.p;
        let x = Self::x(p);
        let mut rest = self.monic();
        let mut h = x.clone();
        let mut out = Vec::new();
        let mut i = 0;
        while rest.deg_or_zero() >= 2 * (i + 1) {
            i += 1;
            h = h.pow_mod(&BigUint::from(p), &rest);
            let g = rest.gcd(&h.sub(&x));
            if g.deg_or_zero() > 0 {
                rest = rest.div_rem(&g).0;
                h = h.rem(&rest);
                out.push((i, g));
            }
        }
        if rest.deg_or_zero() > 0 {
            out.push((rest.deg_or_zero(), rest));
        }
        out
    }

    /// Splits a product of distinct monic irreducibles of degree `i`
    /// (Cantor-Zassenhaus; odd `p` only).
    fn equal_degree(&self, i: usize, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
        let n = self.deg_or_zero();
        if n == i {
            return vec![self.monic()];
        }
        let p = self.p;
        let e = (BigUint::from(p).pow(i as u32) - BigUint::one()) >> 1;
        loop {
            let a = Self::new(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
            if a.deg_or_zero() == 0 {
                continue;
            }
            let g = self.gcd(&a);
            let split = if g.deg_or_zero() > 0 && g.deg_or_zero() < n {
                g
            } else {
                let b = a.pow_mod(&e, self).sub(&Self::constant(p, 1));
                self.gcd(&b)
            };
            let d = split.deg_or_zero();
            if d > 0 && d < n {
                let other = self.div_rem(&split).0;
                let mut out = split.equal_degree(i, rng);
                out.extend(other.equal_degree(i, rng));
                return out;
            }
        }
    }

    /// Monic irreducible factors of a squarefree polynomial, for odd `p`.
    pub fn factor_squarefree(&self) -> Option<Vec<FpPoly>> {
        if self.p == 2 || !self.is_squarefree() {
            return None;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let mut out = Vec::new();
        for (i, g) in self.distinct_degree() {
            out.extend(g.equal_degree(i, &mut rng));
        }
        out.sort_by(|a, b| (a.degree(), &a.coeffs).cmp(&(b.degree(), &b.coeffs)));
        Some(out)
    }
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n.is_multiple_of(q) {
            out.push(q);
            while n.is_multiple_of(q) {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn reduce_checked(coeffs: &[i64], p: u64) -> Result<FpPoly, ModularError> {
    if coeffs.iter().all(|&c| c == 0) {
        return Err(ModularError::ZeroPolynomial);
    }
    let f = FpPoly::from_integers(coeffs, p);
    let top = coeffs.iter().rposition(|&c| c != 0).expect("nonzero");
    if f.degree() != Some(top) {
        return Err(ModularError::DegreeDrop { p });
    }
    Ok(f)
}

/// Rabin's test: the reduction of `coeffs` (ascending) modulo `p` is
/// irreducible over `F_p`.
pub fn poly_irreducible_mod_p(coeffs: &[i64], p: u64) -> Result<bool, ModularError> {
    let f = reduce_checked(coeffs, p)?.monic();
    let n = f.deg_or_zero();
    if n == 0 {
        return Ok(false);
    }
    let x = FpPoly::x(p);
    if x.frobenius(n, &f) != x.rem(&f) {
        return Ok(false);
    }
    for q in prime_divisors(n) {
        let h = x.frobenius(n / q, &f).sub(&x);
        if f.gcd(&h).deg_or_zero() > 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Sorted degrees of the irreducible factors of a squarefree reduction.
pub fn degree_pattern_mod_p(coeffs: &[i64], p: u64) -> Result<Vec<usize>, ModularError> {
    let f = reduce_checked(coeffs, p)?;
    if !f.is_squarefree() {
        return Err(ModularError::NotSquarefree { p });
    }
    let mut degrees: Vec<usize> = f
        .distinct_degree()
        .into_iter()
        .flat_map(|(i, g)| std::iter::repeat_n(i, g.deg_or_zero() / i))
        .collect();
    degrees.sort_unstable();
    Ok(degrees)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Every monic polynomial of the given degree over F_p.
    fn monics(p: u64, deg: usize) -> impl Iterator<Item = FpPoly> {
        let count = p.pow(deg as u32);
        (0..count).map(move |mut idx| {
            let mut c = Vec::with_capacity(deg + 1);
            for _ in 0..deg {
                c.push(idx % p);
                idx /= p;
            }
            c.push(1);
            FpPoly::new(p, c)
        })
    }

    fn brute_irreducible(f: &FpPoly) -> bool {
        let n = f.degree().unwrap();
        n >= 1 && (1..=n / 2).all(|d| monics(f.modulus(), d).all(|g| !f.rem(&g).is_zero()))
    }

    #[test]
    fn irreducibility_examples() {
        assert_eq!(poly_irreducible_mod_p(&[1, 0, 0, 1, 0, 0, 1], 2), Ok(true));
        assert_eq!(poly_irreducible_mod_p(&[1, 0, 1], 2), Ok(false));
        assert_eq!(poly_irreducible_mod_p(&[1, 0, 1], 3), Ok(true));
        assert_eq!(poly_irreducible_mod_p(&[1, 0, 3], 3), Err(ModularError::DegreeDrop { p: 3 }));
        assert!(brute_irreducible(&FpPoly::from_integers(&[1, 0, 0, 1, 0, 0, 1], 2)));
    }

    #[test]
    fn rabin_matches_brute_force() {
        for p in [2u64, 3, 5] {
            for deg in 1..=4 {
                for f in monics(p, deg) {
                    let coeffs: Vec<i64> = f.coeffs().iter().map(|&c| c as i64).collect();
                    assert_eq!(poly_irreducible_mod_p(&coeffs, p).unwrap(), brute_irreducible(&f), "{f:?}");
                }
            }
        }
    }

    #[test]
    fn pattern_examples() {
        assert_eq!(degree_pattern_mod_p(&[1, 0, 1], 2), Err(ModularError::NotSquarefree { p: 2 }));
        assert_eq!(degree_pattern_mod_p(&[1, 0, 1], 5), Ok(vec![1, 1]));
        assert_eq!(degree_pattern_mod_p(&[1, 0, 1], 3), Ok(vec![2]));
    }

    #[test]
    fn patterns_sum_to_degree_and_match_factorization() {
        for p in [3u64, 5, 7] {
            for deg in 1..=5 {
                for f in monics(p, deg).step_by(7) {
                    if !f.is_squarefree() {
                        continue;
                    }
                    let coeffs: Vec<i64> = f.coeffs().iter().map(|&c| c as i64).collect();
                    let pattern = degree_pattern_mod_p(&coeffs, p).unwrap();
                    assert_eq!(pattern.iter().sum::<usize>(), deg);
                    let factors = f.factor_squarefree().unwrap();
                    let mut degs: Vec<usize> = factors.iter().map(|g| g.degree().unwrap()).collect();
                    degs.sort_unstable();
                    assert_eq!(degs, pattern);
                    let product = factors.iter().fold(FpPoly::constant(p, 1), |acc, g| acc.mul(g));
                    assert_eq!(product, f.monic());
                    for g in &factors {
                        assert!(brute_irreducible(g));
                    }
                }
            }
        }
    }

    #[test]
    fn splits_large_equal_degree_product() {
        // (4,2) second iterate mod 5 splits as two octics.
        let f = FpPoly::from_integers(&[9, 0, 0, 0, 8, 0, 0, 0, 24, 0, 0, 0, 32, 0, 0, 0, 16], 5);
        let factors = f.factor_squarefree().unwrap();
        assert_eq!(factors.iter().map(|g| g.degree().unwrap()).collect::<Vec<_>>(), vec![8, 8]);
    }
}
