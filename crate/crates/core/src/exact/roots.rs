use num_bigint::{BigInt, BigUint};
use num_traits::{One, Pow, Signed, Zero};

/// `floor(n^(1/p))` by Newton iteration on big integers.
///
/// Panics when `n` is negative or `p == 0`.
pub fn integer_pth_root_floor(n: &BigInt, p: u32) -> BigInt {
    assert!(!n.is_negative(), "root of a negative integer");
    assert!(p >= 1, "zeroth root");
    let n = n.magnitude();
    BigInt::from(root_floor(n, p))
}

fn root_floor(n: &BigUint, p: u32) -> BigUint {
    if p == 1 || n.is_zero() || n.is_one() {
        return n.clone();
    }
    let bits = n.bits();
    if bits <= u64::from(p) {
        // 1 <= n < 2^p, so the root is 1.
        return BigUint::one();
    }
    // 2^ceil(bits/p) is at least the root; Newton from above decreases
    // monotonically until it reaches the floor.
    let mut x = BigUint::one() << bits.div_ceil(u64::from(p));
    let pm1 = BigUint::from(p - 1);
    let pb = BigUint::from(p);
    loop {
        let y = (&pm1 * &x + n / Pow::pow(&x, p - 1)) / &pb;
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// Returns `r` with `r^p == n` when it exists.
///
/// Negative `n` only has roots for odd `p`.
pub fn is_perfect_pth_power(n: &BigInt, p: u32) -> Option<BigInt> {
    assert!(p >= 1);
    if n.is_negative() && p.is_multiple_of(2) {
        return None;
    }
    let r = BigInt::from(root_floor(n.magnitude(), p));
    if Pow::pow(&r, p) == n.abs() {
        Some(if n.is_negative() { -r } else { r })
    } else {
        None
    }
}
