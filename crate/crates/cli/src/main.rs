use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use stabcert::certify::{builtin_tables, certify_range_with_progress, residuals, BatchConfig};
use stabcert::criteria::{
    a2_power_scan, abc_inequality_check, classify_stability, fermat_brute_search, quadratic_factor_bound,
};
use stabcert::exact::{iterate_orbit_exact, numerators, GrowthGuard};
use stabcert::modular::{orbit_mod_k, sieve_indices};
use stabcert::Factor;

/// Environment variable overriding the default worker count.
const JOBS_ENV: &str = "STABCERT_JOBS";

#[derive(Parser)]
#[command(name = "stabcert", version, about = "Stability certificates for iterates of z^d + 1/c")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Certify both factors of z^3 + 1/m^3 for every m in [1, max-m].
    Certify {
        #[arg(long)]
        max_m: u64,
        #[arg(long, default_value_t = 150)]
        prime_bound: u64,
        /// Worker threads (default: available parallelism).
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Also test the published primes for m = 4342 (g1) and m = 2730 (g2).
        #[arg(long)]
        exemplar_check: bool,
        /// Use single primes only, never pairs.
        #[arg(long)]
        single_prime: bool,
        /// No progress on stderr.
        #[arg(long)]
        quiet: bool,
    },
    /// Cube-residue sieve of g(f^n(0)) modulo k over even n >= 2.
    Sieve {
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        factor: Factor,
        /// Check every n >= 2 instead of even n only.
        #[arg(long)]
        all_indices: bool,
    },
    /// Tail and cycle of the orbit of 0 under z^d + 1/c modulo k.
    Orbit {
        #[arg(long)]
        d: u32,
        #[arg(long, allow_hyphen_values = true)]
        c: i64,
        #[arg(long = "mod")]
        modulus: u64,
    },
    /// Which argument covers degree d.
    Classify {
        #[arg(long)]
        d: u32,
    },
    /// Exact critical orbit f^1(0), ..., f^n(0) and numerators a_n.
    Iterate {
        #[arg(long)]
        d: u32,
        #[arg(long, allow_hyphen_values = true)]
        c: i64,
        #[arg(long)]
        n: usize,
        /// Lift the size guard on the index.
        #[arg(long)]
        unlimited: bool,
    },
    /// 2-adic bound on the number of factors of iterates of z^2 + 1/c.
    QuadBound {
        #[arg(long, allow_hyphen_values = true)]
        c: i64,
    },
    /// Perfect-power scan of a_2 = 1 + c^(d-1); only (4, 2) is expected.
    ScanA2 {
        #[arg(long, default_value_t = 3)]
        d_min: u32,
        #[arg(long, default_value_t = 10)]
        d_max: u32,
        #[arg(long, default_value_t = 1000)]
        c_max: i64,
    },
    /// Print the built-in residue tables and, optionally, residual m.
    Tables {
        #[arg(long)]
        residuals: Option<u64>,
    },
    /// Brute-force primitive solutions of a^p + b^q = c^r.
    Fermat {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        bound: i64,
    },
    /// Evaluate c < rad(abc)^(7/4) for a + b = c.
    Abc {
        #[arg(long)]
        a: BigInt,
        #[arg(long)]
        b: BigInt,
        #[arg(long)]
        c: BigInt,
    },
}

enum Outcome {
    Ok,
    Flagged,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Flagged) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn default_jobs() -> Result<usize, String> {
    match std::env::var(JOBS_ENV) {
        Ok(v) => v.parse().ok().filter(|&j| j >= 1).ok_or(format!("{JOBS_ENV}={v} is not a positive integer")),
        Err(_) => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string()),
    }
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json"));
}

fn flagged(bad: bool) -> Outcome {
    if bad {
        Outcome::Flagged
    } else {
        Outcome::Ok
    }
}

fn run(cmd: Command) -> Result<Outcome, String> {
    match cmd {
        Command::Certify { max_m, prime_bound, jobs, out, format, exemplar_check, single_prime, quiet } => {
            if max_m < 1 {
                return Err("--max-m must be at least 1".into());
            }
            if prime_bound < 7 {
                return Err("--prime-bound must be at least 7".into());
            }
            let jobs = match jobs {
                Some(0) => return Err("--jobs must be at least 1".into()),
                Some(j) => j,
                None => default_jobs()?,
            };
            let config = BatchConfig { max_m, prime_bound, exemplar_check, combined: !single_prime, jobs };
            let step = (max_m / 20).max(1);
            let report = certify_range_with_progress(&config, |done| {
                if !quiet && (done % step == 0 || done == max_m) {
                    eprintln!("certified {done}/{max_m}");
                }
            })
            .map_err(|e| e.to_string())?;
            let text = match format {
                Format::Json => report.to_json(),
                Format::Csv => report.to_csv(),
                Format::Text => report.to_text(),
            };
            emit(&text, out.as_ref())?;
            let s = &report.summary;
            if !quiet {
                eprintln!(
                    "table {} searched {} (pairs {}) special {} unresolved {}",
                    s.covered_by_table, s.searched, s.combined, s.special, s.unresolved
                );
            }
            Ok(flagged(!s.theorem3_verified))
        }
        Command::Sieve { m, k, factor, all_indices } => {
            let step = if all_indices { 1 } else { 2 };
            let s = sieve_indices(factor, m, k, 2, step).map_err(|e| e.to_string())?;
            print_json(&serde_json::to_value(&s).expect("json"));
            Ok(flagged(!s.pass))
        }
        Command::Orbit { d, c, modulus } => {
            let o = orbit_mod_k(d, c, modulus).map_err(|e| e.to_string())?;
            print_json(&serde_json::to_value(&o).expect("json"));
            Ok(Outcome::Ok)
        }
        Command::Classify { d } => {
            if d < 2 {
                return Err("--d must be at least 2".into());
            }
            print_json(&serde_json::to_value(classify_stability(d)).expect("json"));
            Ok(Outcome::Ok)
        }
        Command::Iterate { d, c, n, unlimited } => {
            let guard = if unlimited { GrowthGuard::Unlimited } else { GrowthGuard::Default };
            let orbit = iterate_orbit_exact(d, c, n, guard).map_err(|e| e.to_string())?;
            let a = numerators(d, c, n, guard).map_err(|e| e.to_string())?;
            for (i, (x, an)) in orbit.iter().zip(a.values()).enumerate() {
                println!("{}\t{}\t{}", i + 1, x, an);
            }
            Ok(Outcome::Ok)
        }
        Command::QuadBound { c } => {
            let b = quadratic_factor_bound(c).map_err(|e| e.to_string())?;
            print_json(&json!({ "c": c, "bound": b, "stable": b == 1 }));
            Ok(Outcome::Ok)
        }
        Command::ScanA2 { d_min, d_max, c_max } => {
            if d_min < 2 || d_min > d_max {
                return Err("need 2 <= --d-min <= --d-max".into());
            }
            let hits = a2_power_scan(d_min, d_max, c_max);
            let expected = hits.len() == 1 && (hits[0].d, hits[0].c, hits[0].p) == (4, 2, 2);
            print_json(&json!({ "d_min": d_min, "d_max": d_max, "c_max": c_max, "hits": hits }));
            Ok(flagged(!expected))
        }
        Command::Tables { residuals: max_m } => {
            let (g1, g2) = builtin_tables();
            let table = |t: &stabcert::certify::SieveTable| {
                let entries: serde_json::Map<String, serde_json::Value> =
                    t.entries().iter().map(|(k, set)| (k.to_string(), json!(set))).collect();
                serde_json::Value::Object(entries)
            };
            let mut v = json!({ "g1": table(&g1), "g2": table(&g2) });
            if let Some(max_m) = max_m {
                let r1 = residuals(max_m, &g1);
                let r2 = residuals(max_m, &g2);
                v["residuals"] = json!({
                    "max_m": max_m,
                    "g1": { "count": r1.len(), "values": r1 },
                    "g2": { "count": r2.len(), "values": r2 },
                });
            }
            print_json(&v);
            Ok(Outcome::Ok)
        }
        Command::Fermat { p, q, r, bound } => {
            if p < 2 || q < 2 || r < 2 || bound < 1 {
                return Err("exponents must be at least 2 and the bound positive".into());
            }
            let sols = fermat_brute_search(p, q, r, bound);
            print_json(&json!({ "signature": [p, q, r], "bound": bound, "solutions": sols }));
            Ok(flagged(!sols.is_empty()))
        }
        Command::Abc { a, b, c } => {
            let rec = abc_inequality_check(&a, &b, &c).map_err(|e| e.to_string())?;
            print_json(&serde_json::to_value(&rec).expect("json"));
            Ok(Outcome::Ok)
        }
    }
}
