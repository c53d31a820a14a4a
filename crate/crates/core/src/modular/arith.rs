use super::ModularError;

#[inline]
pub fn mul_mod(a: u64, b: u64, k: u64) -> u64 {
    ((a as u128 * b as u128) % k as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, k: u64) -> u64 {
    ((a as u128 + b as u128) % k as u128) as u64
}

#[inline]
pub fn sub_mod(a: u64, b: u64, k: u64) -> u64 {
    add_mod(a % k, k - b % k, k)
}

pub fn pow_mod(mut base: u64, mut e: u64, k: u64) -> u64 {
    if k == 1 {
        return 0;
    }
    let mut acc = 1;
    base %= k;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, k);
        }
        base = mul_mod(base, base, k);
        e >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `k` by the extended Euclidean algorithm.
pub fn mod_inverse(a: u64, k: u64) -> Result<u64, ModularError> {
    let (mut r0, mut r1) = (k as i128, (a % k) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return Err(ModularError::NotInvertible { a, k });
    }
    Ok(t0.rem_euclid(k as i128) as u64)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'outer: for a in BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

pub fn primes_up_to(bound: u64) -> Vec<u64> {
    (2..=bound).filter(|&n| is_prime_u64(n)).collect()
}

/// Reduces a signed integer into `[0, k)`.
#[inline]
pub fn reduce_i64(x: i64, k: u64) -> u64 {
    (x as i128).rem_euclid(k as i128) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn inverse_examples() {
        assert_eq!(mod_inverse(3, 7), Ok(5));
        assert_eq!(mod_inverse(27 % 7, 7), Ok(6));
        assert_eq!(mod_inverse(2, 4), Err(ModularError::NotInvertible { a: 2, k: 4 }));
    }

    #[test]
    fn primes() {
        assert_eq!(primes_up_to(30), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(is_prime_u64(18_446_744_073_709_551_557));
        assert!(!is_prime_u64(3_215_031_751));
    }

    proptest! {
        #[test]
        fn inverse_is_inverse(a in 1u64..u64::MAX, k in 2u64..u64::MAX) {
            match mod_inverse(a, k) {
                Ok(inv) => prop_assert_eq!(mul_mod(a, inv, k), 1 % k),
                Err(_) => prop_assert!(gcd(a, k) != 1),
            }
        }
    }
}
