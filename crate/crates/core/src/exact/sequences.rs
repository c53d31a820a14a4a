use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use super::{ExactError, ExactRational};
use crate::Factor;

/// Upper limit on exact iterate indices.
///
/// `a_n` has Θ(d^n) digits, so exact work is refused past a small index
/// unless the caller raises the limit explicitly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrowthGuard {
    /// 10 for `d = 2`, 6 for `d >= 3`.
    Default,
    UpTo(usize),
    Unlimited,
}

impl GrowthGuard {
    pub fn limit_for(self, d: u32) -> Option<usize> {
        match self {
            GrowthGuard::Default => Some(if d == 2 { 10 } else { 6 }),
            GrowthGuard::UpTo(n) => Some(n),
            GrowthGuard::Unlimited => None,
        }
    }

    fn check(self, d: u32, requested: usize) -> Result<(), ExactError> {
        match self.limit_for(d) {
            Some(limit) if requested > limit => Err(ExactError::GrowthGuard { requested, limit }),
            _ => Ok(()),
        }
    }
}

fn check_params(d: u32, c: i64) -> Result<(), ExactError> {
    if d < 2 {
        return Err(ExactError::BadDegree(d));
    }
    if c == 0 {
        return Err(ExactError::ZeroParameter);
    }
    Ok(())
}

/// `[f(0), f^2(0), ..., f^count(0)]` for `f(z) = z^d + 1/c`, in lowest terms.
pub fn iterate_orbit_exact(
    d: u32,
    c: i64,
    count: usize,
    guard: GrowthGuard,
) -> Result<Vec<ExactRational>, ExactError> {
    check_params(d, c)?;
    guard.check(d, count)?;
    let shift = ExactRational::new(BigInt::one(), BigInt::from(c));
    let mut x = ExactRational::zero();
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        x = &x.pow(d) + &shift;
        out.push(x.clone());
    }
    Ok(out)
}

/// Numerators `a_n` of `f^n(0)`, satisfying `a_1 = 1` and
/// `a_n = a_{n-1}^d + c^(d^(n-1) - 1)`, so that `f^n(0) = a_n / c^(d^(n-1))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumeratorSeq {
    pub d: u32,
    pub c: i64,
    values: Vec<BigInt>,
}

impl NumeratorSeq {
    /// `a_n` for `1 <= n <= len`.
    pub fn get(&self, n: usize) -> Option<&BigInt> {
        n.checked_sub(1).and_then(|i| self.values.get(i))
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Checks `a_n ≡ 1 (mod c)` and `gcd(a_n, a_{n+1}) = 1` for every stored term.
    pub fn check_invariants(&self) -> Result<(), String> {
        let c = BigInt::from(self.c);
        for (i, a) in self.values.iter().enumerate() {
            if !(a - 1u32).mod_floor(&c).is_zero() {
                return Err(format!("a_{} = {a} is not 1 mod {}", i + 1, self.c));
            }
        }
        for (i, w) in self.values.windows(2).enumerate() {
            if !w[0].gcd(&w[1]).is_one() {
                return Err(format!("gcd(a_{}, a_{}) != 1", i + 1, i + 2));
            }
        }
        Ok(())
    }
}

pub fn numerators(
    d: u32,
    c: i64,
    count: usize,
    guard: GrowthGuard,
) -> Result<NumeratorSeq, ExactError> {
    check_params(d, c)?;
    guard.check(d, count)?;
    let cb = BigInt::from(c);
    let c_dm1: BigInt = Pow::pow(&cb, d - 1);
    let mut values = Vec::with_capacity(count);
    // c^(d^(n-1) - 1) = (c^(d^(n-2) - 1))^d * c^(d-1)
    let mut c_term = BigInt::one();
    let mut a = BigInt::one();
    for n in 1..=count {
        if n >= 2 {
            c_term = Pow::pow(&c_term, d) * &c_dm1;
            a = Pow::pow(&a, d) + &c_term;
        }
        values.push(a.clone());
    }
    Ok(NumeratorSeq { d, c, values })
}

/// Exact value of `g(x)` for the factor `g` of `z^3 + 1/m^3`.
pub fn eval_factor_exact(factor: Factor, m: i64, x: &ExactRational) -> ExactRational {
    let inv_m = ExactRational::new(BigInt::one(), BigInt::from(m));
    match factor {
        Factor::G1 => x + &inv_m,
        Factor::G2 => &(&x.pow(2) - &(x * &inv_m)) + &inv_m.pow(2),
    }
}

/// Numerators of `g(f^(n-1)(0))` with `c = m^3`: `w_n` for g1, `x_n` for g2.
///
/// Stored from index 1 (`g(0)` has numerator 1), so `get(2)` is
/// `m^2 + 1` for g1 and `m^4 - m^2 + 1` for g2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorNumeratorSeq {
    pub m: i64,
    pub factor: Factor,
    values: Vec<BigInt>,
}

impl FactorNumeratorSeq {
    /// The numerator with index `n >= 1`.
    pub fn get(&self, n: usize) -> Option<&BigInt> {
        n.checked_sub(1).and_then(|i| self.values.get(i))
    }

    /// Largest stored index.
    pub fn max_index(&self) -> usize {
        self.values.len()
    }
}

pub fn factor_numerators(
    m: i64,
    factor: Factor,
    max_index: usize,
    guard: GrowthGuard,
) -> Result<FactorNumeratorSeq, ExactError> {
    if m == 0 {
        return Err(ExactError::ZeroParameter);
    }
    let c = m.checked_pow(3).ok_or(ExactError::GrowthGuard { requested: max_index, limit: 0 })?;
    let orbit = iterate_orbit_exact(3, c, max_index.saturating_sub(1), guard)?;
    // Numerators are taken over the signed power of m, so for g1 with m < 0
    // the normalized numerator changes sign.
    let flip = factor == Factor::G1 && m < 0;
    let numer = |x: &ExactRational| {
        let n = eval_factor_exact(factor, m, x).numer().clone();
        if flip { -n } else { n }
    };
    let mut values = Vec::with_capacity(max_index);
    if max_index >= 1 {
        values.push(numer(&ExactRational::zero()));
    }
    values.extend(orbit.iter().map(numer));
    Ok(FactorNumeratorSeq { m, factor, values })
}

#[cfg(test)]
impl FactorNumeratorSeq {
    pub(crate) fn from_values_for_test(m: i64, factor: Factor, values: Vec<BigInt>) -> Self {
        FactorNumeratorSeq { m, factor, values }
    }
}
