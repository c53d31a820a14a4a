use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::roots::is_perfect_pth_power;
use super::ExactError;

/// Below this bound Miller-Rabin with the prime bases 2..=41 is a proof.
const MR_DETERMINISTIC_LIMIT: &str = "3317044064679887385961981";
const MR_BASES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Effort limits for [`radical`].
#[derive(Clone, Copy, Debug)]
pub struct RadicalConfig {
    pub trial_bound: u64,
    /// Iterations per Pollard-Brent attempt.
    pub rho_iterations: u64,
    pub rho_attempts: u32,
}

impl Default for RadicalConfig {
    fn default() -> Self {
        RadicalConfig { trial_bound: 100_000, rho_iterations: 2_000_000, rho_attempts: 8 }
    }
}

/// `Some(true)` / `Some(false)` when primality is decided deterministically,
/// `None` for probable primes above the deterministic Miller-Rabin range.
pub fn is_prime_certified(n: &BigUint) -> Option<bool> {
    if n < &BigUint::from(2u32) {
        return Some(false);
    }
    for &p in &MR_BASES {
        let p = BigUint::from(p);
        if n == &p {
            return Some(true);
        }
        if (n % &p).is_zero() {
            return Some(false);
        }
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'bases: for &a in &MR_BASES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return Some(false);
    }
    let limit: BigUint = MR_DETERMINISTIC_LIMIT.parse().expect("constant");
    if n < &limit {
        Some(true)
    } else {
        None
    }
}

fn brent_rho(n: &BigUint, seed: u64, iterations: u64) -> Option<BigUint> {
    let one = BigUint::one();
    let c = BigUint::from(seed);
    let f = |x: &BigUint| (x * x + &c) % n;
    let mut y = BigUint::from(2u32 + seed as u32 % 7);
    let mut r: u64 = 1;
    let mut q = one.clone();
    let mut g = one.clone();
    let mut x = y.clone();
    let mut ys = y.clone();
    let batch = 64u64;
    let mut spent = 0u64;
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            for _ in 0..batch.min(r - k) {
                y = f(&y);
                let diff = if x > y { &x - &y } else { &y - &x };
                q = (q * diff) % n;
            }
            g = q.gcd(n);
            k += batch;
            spent += batch;
        }
        r *= 2;
        if spent > iterations {
            return None;
        }
    }
    if &g == n {
        // Batched product overshot; back off one step at a time.
        loop {
            ys = f(&ys);
            let diff = if x > ys { &x - &ys } else { &ys - &x };
            g = diff.gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    if &g == n {
        None
    } else {
        Some(g)
    }
}

/// Strips perfect powers: the radical ignores multiplicities.
fn reduce_power(mut x: BigUint) -> BigUint {
    loop {
        let bits = x.bits();
        let mut changed = false;
        for k in 2..=bits.max(2) as u32 {
            if let Some(r) = is_perfect_pth_power(&BigInt::from(x.clone()), k) {
                if r.magnitude() < &x {
                    x = r.magnitude().clone();
                    changed = true;
                    break;
                }
            }
        }
        if !changed {
            return x;
        }
    }
}

/// Product of the distinct primes dividing `n`.
///
/// Uses trial division up to `cfg.trial_bound`, then Pollard-Brent rho.
/// Fails with the unfactored cofactor rather than guessing.
pub fn radical(n: &BigInt, cfg: &RadicalConfig) -> Result<BigInt, ExactError> {
    if n.is_zero() {
        return Err(ExactError::ZeroParameter);
    }
    let mut rest = n.magnitude().clone();
    let mut primes: BTreeSet<BigUint> = BTreeSet::new();
    let mut p = 2u64;
    while p <= cfg.trial_bound {
        let pb = BigUint::from(p);
        if &pb * &pb > rest {
            break;
        }
        if (&rest % &pb).is_zero() {
            primes.insert(pb.clone());
            while (&rest % &pb).is_zero() {
                rest /= &pb;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let mut stack = vec![rest];
    while let Some(x) = stack.pop() {
        if x.is_one() {
            continue;
        }
        let x = reduce_power(x);
        if let Some(true) = is_prime_certified(&x) {
            primes.insert(x);
            continue;
        }
        let split = (1..=u64::from(cfg.rho_attempts)).find_map(|seed| brent_rho(&x, seed, cfg.rho_iterations));
        match split {
            Some(d) => {
                let other = &x / &d;
                stack.push(d);
                stack.push(other);
            }
            None => return Err(ExactError::FactorizationEffort { cofactor: BigInt::from(x) }),
        }
    }
    Ok(BigInt::from(primes.into_iter().product::<BigUint>()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rad(n: i64) -> BigInt {
        radical(&BigInt::from(n), &RadicalConfig::default()).unwrap()
    }

    #[test]
    fn radical_examples() {
        assert_eq!(rad(12), BigInt::from(6));
        assert_eq!(rad(9), BigInt::from(3));
        assert_eq!(rad(-50), BigInt::from(10));
        assert_eq!(rad(1), BigInt::from(1));
        assert_eq!(rad(72), BigInt::from(6));
        assert!(radical(&BigInt::zero(), &RadicalConfig::default()).is_err());
    }

    #[test]
    fn radical_beyond_trial_division() {
        let cfg = RadicalConfig { trial_bound: 100, ..Default::default() };
        // 1000003 * 1000033^2 * 999983
        let p = BigInt::from(1_000_003u64);
        let q = BigInt::from(1_000_033u64);
        let r = BigInt::from(999_983u64);
        let n = &p * &q * &q * &r * 8;
        assert_eq!(radical(&n, &cfg).unwrap(), &p * &q * &r * 2);
        // (2^61 - 1)^2 has a prime square root.
        let m61 = (BigInt::one() << 61) - 1;
        assert_eq!(radical(&(&m61 * &m61), &cfg).unwrap(), m61);
    }

    #[test]
    fn effort_exceeded_reports_cofactor() {
        let cfg = RadicalConfig { trial_bound: 10, rho_iterations: 10, rho_attempts: 1 };
        // Two ~2^89 primes: rho cannot split this in 10 steps.
        let p: BigInt = "618970019642690137449562111".parse().unwrap();
        let q: BigInt = "162259276829213363391578010288127".parse().unwrap();
        let n = &p * &q;
        match radical(&n, &cfg) {
            Err(ExactError::FactorizationEffort { cofactor }) => assert_eq!(cofactor, n),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn primality() {
        let primes = [2u64, 3, 97, 1_000_003, (1 << 61) - 1];
        for p in primes {
            assert_eq!(is_prime_certified(&BigUint::from(p)), Some(true), "{p}");
        }
        for c in [1u64, 4, 561, 1_000_001, 3_215_031_751] {
            assert_eq!(is_prime_certified(&BigUint::from(c)), Some(false), "{c}");
        }
        // 2^89 - 1 is prime but beyond the deterministic range.
        let m89: BigUint = (BigUint::one() << 89) - BigUint::one();
        assert_eq!(is_prime_certified(&m89), None);
    }
}
