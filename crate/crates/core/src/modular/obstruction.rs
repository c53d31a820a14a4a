use super::arith::{add_mod, is_prime_u64, pow_mod, reduce_i64};
use super::pth_power_residues;

/// Residue of `a_n` modulo `q` for `f(z) = z^d + 1/c`, run entirely mod `q`.
///
/// Exponents of `c` are reduced modulo `q - 1`, so `gcd(c, q) = 1` is required.
pub(crate) fn numerator_mod_q(d: u32, c: i64, n: usize, q: u64) -> u64 {
    let c = reduce_i64(c, q);
    let order = q - 1;
    let mut a = 1 % q;
    for j in 2..=n {
        // d^(j-1) - 1 reduced mod q - 1
        let e = (pow_mod(u64::from(d), (j - 1) as u64, order) + order - 1) % order;
        a = add_mod(pow_mod(a, u64::from(d), q), pow_mod(c, e, q), q);
    }
    a
}

/// Smallest prime `q <= q_bound`, `q ≡ 1 (mod p)`, `q ∤ c`, at which `a_n`
/// is a nonzero non-`p`-th-power residue. `None` is inconclusive.
///
/// Panics unless `p` divides `d`.
pub fn pth_power_obstruction(d: u32, c: i64, n: usize, p: u64, q_bound: u64) -> Option<u64> {
    assert!(p >= 2 && u64::from(d) % p == 0, "p must divide d");
    (p + 1..=q_bound)
        .filter(|&q| q % p == 1 && is_prime_u64(q) && reduce_i64(c, q) != 0)
        .find(|&q| {
            let a = numerator_mod_q(d, c, n, q);
            a != 0 && !pth_power_residues(q, p).contains(a)
        })
}
