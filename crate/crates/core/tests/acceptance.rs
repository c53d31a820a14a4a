//! Acceptance run: one PASS/FAIL line per criterion. Exits non-zero if any
//! criterion fails. Every limit below is exact except the pinned runtimes.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use stabcert::certify::{builtin_tables, certify_range, residuals, BatchConfig, Status};
use stabcert::criteria::{
    a2_power_scan, catalan_scan, d14_inequality_scan, fermat_brute_search, quadratic_factor_bound, CriteriaError,
};
use stabcert::exact::{
    eval_factor_exact, factor_numerators, is_perfect_pth_power, iterate_orbit_exact, rigid_divisibility_check,
    GrowthGuard,
};
use stabcert::modular::{
    is_prime_u64, orbit_mod_k, poly_irreducible_mod_p, pth_power_residues, sieve_indices,
};
use stabcert::Factor;

const CAMPAIGN_MAX_M: u64 = 10_000;
const CAMPAIGN_PRIME_BOUND: u64 = 150;
const CAMPAIGN_LIMIT_ONE_WORKER: Duration = Duration::from_secs(300);
const CAMPAIGN_LIMIT_EIGHT_WORKERS: Duration = Duration::from_secs(60);
const PROPERTY_SUITE_LIMIT: Duration = Duration::from_secs(30);
const QUICK_LIMIT: Duration = Duration::from_secs(1);
const A2_SCAN_LIMIT: Duration = Duration::from_secs(10);

struct Outcome {
    id: &'static str,
    name: &'static str,
    pass: bool,
    detail: String,
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let v = f();
    (v, t.elapsed())
}

fn c1_tables() -> (bool, String) {
    let g1_golden: [(u64, &[u64]); 6] = [
        (7, &[1, 3]),
        (13, &[1, 2, 3, 6]),
        (19, &[2, 4]),
        (31, &[1, 3, 4, 6, 8, 9, 10, 11, 12]),
        (37, &[3, 9, 17]),
        (43, &[2, 5, 8, 10, 12, 13, 14, 15, 20]),
    ];
    let g2_golden: [(u64, &[u64]); 5] = [
        (7, &[1, 2, 3]),
        (13, &[1, 2, 3, 4, 6]),
        (19, &[3, 5]),
        (31, &[1, 4, 7, 8, 9, 11, 14]),
        (37, &[4, 7, 9, 12, 16, 17, 18]),
    ];
    let (g1, g2) = builtin_tables();
    let mut bad = Vec::new();
    for (name, table, golden) in [("g1", &g1, &g1_golden[..]), ("g2", &g2, &g2_golden[..])] {
        if table.moduli().collect::<Vec<_>>() != golden.iter().map(|g| g.0).collect::<Vec<_>>() {
            bad.push(format!("{name}: moduli differ"));
        }
        for &(k, reps) in golden {
            if table.listed(k) != Some(reps) {
                bad.push(format!("{name}@{k}: listed {:?}", table.listed(k)));
            }
            let closed: BTreeSet<u64> = reps.iter().flat_map(|&r| [r, k - r]).collect();
            if table.classes(k) != Some(&closed) {
                bad.push(format!("{name}@{k}: closure {:?}", table.classes(k)));
            }
        }
    }
    (bad.is_empty(), if bad.is_empty() { "both tables verbatim, closed under ±".into() } else { bad.join("; ") })
}

fn c2_residuals() -> (bool, String) {
    let (g1, g2) = builtin_tables();
    let ((r1, r2), t) = timed(|| (residuals(10_000, &g1), residuals(10_000, &g2)));
    let pass = r1.len() == 267 && r2.len() == 88 && t < QUICK_LIMIT;
    let mut detail = format!("g1 {} (want 267), g2 {} (want 88), {:.3}s", r1.len(), r2.len(), t.as_secs_f64());
    if !pass {
        detail.push_str(&format!("\n      g1 residuals: {r1:?}\n      g2 residuals: {r2:?}"));
    }
    (pass, detail)
}

fn c3_exemplars() -> (bool, String) {
    let mut parts = Vec::new();
    let mut pass = true;
    for (factor, m, p) in [(Factor::G1, 4342, 73), (Factor::G2, 2730, 67)] {
        match sieve_indices(factor, m, p, 2, 2) {
            Ok(s) => {
                pass &= s.pass;
                match s.witness {
                    None => parts.push(format!("{factor} m={m} p={p}: PASS")),
                    Some(w) => parts.push(format!(
                        "{factor} m={m} p={p}: FAIL (n={} gives cube residue {})",
                        w.index, w.residue
                    )),
                }
            }
            Err(e) => {
                pass = false;
                parts.push(format!("{factor} m={m} p={p}: {e}"));
            }
        }
    }
    (pass, parts.join("; "))
}

fn c4_and_c11_campaign() -> ((bool, String), (bool, String)) {
    let mut cfg = BatchConfig::new(CAMPAIGN_MAX_M, CAMPAIGN_PRIME_BOUND);
    cfg.jobs = 1;
    let (one, t1) = timed(|| certify_range(&cfg));
    cfg.jobs = 8;
    let (eight, t8) = timed(|| certify_range(&cfg));
    let (one, eight) = match (one, eight) {
        (Ok(a), Ok(b)) => (a, b),
        (a, b) => {
            let msg = format!("campaign error: {:?} / {:?}", a.err(), b.err());
            return ((false, msg.clone()), (false, msg));
        }
    };
    let s = &one.summary;
    let all_certified = one.certificates.len() == 2 * CAMPAIGN_MAX_M as usize
        && one.certificates.iter().all(|c| c.status == Status::Certified);
    let pass4 = s.theorem3_verified
        && all_certified
        && t1 < CAMPAIGN_LIMIT_ONE_WORKER
        && t8 < CAMPAIGN_LIMIT_EIGHT_WORKERS;
    let detail4 = format!(
        "verified={} table={} searched={} (pairs {}) special={} unresolved={}; 1 worker {:.2}s, 8 workers {:.2}s",
        s.theorem3_verified,
        s.covered_by_table,
        s.searched,
        s.combined,
        s.special,
        s.unresolved,
        t1.as_secs_f64(),
        t8.as_secs_f64()
    );
    let (j1, j8) = (one.to_json(), eight.to_json());
    let pass11 = j1 == j8;
    let detail11 = format!("{} bytes, identical={pass11}", j1.len());
    ((pass4, detail4), (pass11, detail11))
}

fn c5_special_case() -> (bool, String) {
    let irreducible = poly_irreducible_mod_p(&[1, 0, 0, 1, 0, 0, 1], 2);
    let sieve = sieve_indices(Factor::G2, 1, 7, 2, 1);
    let pass = irreducible == Ok(true) && sieve.as_ref().is_ok_and(|s| s.pass);
    (pass, format!("z^6+z^3+1 irreducible mod 2: {irreducible:?}; all-index sieve mod 7: {:?}", sieve.map(|s| s.pass)))
}

fn c6_a2_scan(d_min: u32) -> (bool, String) {
    let (hits, t) = timed(|| a2_power_scan(d_min, 10, 1000));
    let only = hits.len() == 1 && (hits[0].d, hits[0].c, hits[0].p) == (4, 2, 2) && hits[0].a2 == BigInt::from(9);
    let listed: Vec<String> = hits.iter().take(8).map(|h| format!("({}, {}, {})", h.d, h.c, h.p)).collect();
    let more = if hits.len() > 8 { ", ..." } else { "" };
    (
        only && t < A2_SCAN_LIMIT,
        format!("d in [{d_min}, 10], 2 <= |c| <= 1000: {} hits [{}{more}], {:.3}s", hits.len(), listed.join(", "), t.as_secs_f64()),
    )
}

fn c7_g2_base_values() -> (bool, String) {
    let (cubes, t) = timed(|| {
        (-10_000i64..=10_000)
            .filter(|&m| {
                let m = BigInt::from(m);
                let m2 = &m * &m;
                is_perfect_pth_power(&(&m2 * &m2 - &m2 + 1), 3).is_some()
            })
            .collect::<Vec<_>>()
    });
    (cubes == [-1, 0, 1] && t < QUICK_LIMIT, format!("cubes at m = {cubes:?}, {:.3}s", t.as_secs_f64()))
}

fn c8_quadratic_bound() -> (bool, String) {
    let (bad, t) = timed(|| {
        let mut bad = Vec::new();
        for c in (-10_001i64..=10_001).filter(|c| c % 2 != 0) {
            let got = quadratic_factor_bound(c);
            let ok = if c == -1 {
                got == Err(CriteriaError::PeriodicOrbit { c })
            } else if c.rem_euclid(4) == 1 {
                got == Ok(1)
            } else {
                got == Ok((c + 1).trailing_zeros()) && got.as_ref().is_ok_and(|&v| v >= 2)
            };
            if !ok {
                bad.push(c);
            }
        }
        bad
    });
    (
        bad.is_empty() && t < QUICK_LIMIT,
        format!("odd |c| <= 10^4, mismatches {bad:?} (c = -1: periodic orbit error), {:.3}s", t.as_secs_f64()),
    )
}

fn c9_d14() -> (bool, String) {
    let got = d14_inequality_scan(3, 30);
    let want: BTreeSet<u32> = (3..=14).collect();
    (got == want, format!("{got:?}"))
}

fn c10_properties() -> (bool, String) {
    let (results, t) = timed(|| {
        let mut r: Vec<(&str, bool)> = Vec::new();
        // Exact orbit reduced mod k equals the modular orbit.
        let mut ok = true;
        for d in 2..=5u32 {
            for c in [-7i64, -2, -1, 1, 2, 3, 5, 8, 27] {
                for k in [7u64, 11, 13, 31, 97, 101] {
                    let Ok(o) = orbit_mod_k(d, c, k) else { continue };
                    let exact = iterate_orbit_exact(d, c, 6, GrowthGuard::Unlimited).unwrap();
                    for (i, x) in exact.iter().enumerate() {
                        ok &= x.residue_mod(k) == Some(o.value_at(i as u64 + 1));
                    }
                }
            }
        }
        r.push(("exact-vs-modular orbits", ok));
        // Rigid divisibility holds for the factor numerators.
        let mut ok = true;
        for m in (-50i64..=50).filter(|&m| m != 0) {
            for f in Factor::BOTH {
                let seq = factor_numerators(m, f, 6, GrowthGuard::Default).unwrap();
                ok &= rigid_divisibility_check(&seq, 100, 6).is_empty();
            }
        }
        r.push(("rigid divisibility", ok));
        // A passing sieve implies exact non-cubes at the sieved indices.
        let mut ok = true;
        for m in 1..=30i64 {
            for f in Factor::BOTH {
                let c = m.pow(3);
                let orbit = iterate_orbit_exact(3, c, 5, GrowthGuard::Default).unwrap();
                for k in (7..150u64).filter(|&k| k % 3 == 1 && is_prime_u64(k)) {
                    let Ok(s) = sieve_indices(f, m, k, 2, 2) else { continue };
                    if !s.pass {
                        continue;
                    }
                    for n in [2usize, 4] {
                        let v = eval_factor_exact(f, m, &orbit[n - 1]);
                        let cube = is_perfect_pth_power(v.numer(), 3).is_some()
                            && is_perfect_pth_power(v.denom(), 3).is_some();
                        ok &= !cube;
                    }
                }
            }
        }
        r.push(("sieve soundness", ok));
        let ok = (7..=200u64)
            .filter(|&k| k % 3 == 1 && is_prime_u64(k))
            .all(|k| pth_power_residues(k, 3).nonzero_count() as u64 == (k - 1) / 3);
        r.push(("cube residue subgroups", ok));
        let ok = [(4, 4, 2), (3, 3, 3), (3, 3, 4)].iter().all(|&(p, q, s)| fermat_brute_search(p, q, s, 100).is_empty());
        r.push(("fermat empty signatures", ok));
        r.push(("catalan", catalan_scan(100, 10) == [(3, 2, 2, 3)]));
        r
    });
    let pass = results.iter().all(|r| r.1) && t < PROPERTY_SUITE_LIMIT;
    let parts: Vec<String> = results.iter().map(|(n, ok)| format!("{n}={}", if *ok { "ok" } else { "FAIL" })).collect();
    (pass, format!("{}, {:.2}s", parts.join(", "), t.as_secs_f64()))
}

fn main() -> ExitCode {
    let mut outcomes = Vec::new();
    let mut push = |id, name, (pass, detail): (bool, String)| outcomes.push(Outcome { id, name, pass, detail });
    push("1", "table reproduction", c1_tables());
    push("2", "residual counts", c2_residuals());
    push("3", "exemplar primes", c3_exemplars());
    let (c4, c11) = c4_and_c11_campaign();
    push("4", "full campaign", c4);
    push("5", "special case m = 1", c5_special_case());
    push("6", "a_2 perfect-power scan", c6_a2_scan(2));
    push("6b", "a_2 perfect-power scan, d >= 3", c6_a2_scan(3));
    push("7", "g2 base values", c7_g2_base_values());
    push("8", "quadratic bound", c8_quadratic_bound());
    push("9", "d = 14 inequality", c9_d14());
    push("10", "property suites", c10_properties());
    push("11", "determinism", c11);

    for o in &outcomes {
        println!("{} [{}] {}: {}", if o.pass { "PASS" } else { "FAIL" }, o.id, o.name, o.detail);
    }
    let failed = outcomes.iter().filter(|o| !o.pass).count();
    println!("acceptance: {} passed, {} failed", outcomes.len() - failed, failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
