use std::process::{Command, Output};

fn stabcert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stabcert"))
        .args(args)
        .env_remove("STABCERT_JOBS")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

#[test]
fn certify_small_range_succeeds() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = stabcert(&["certify", "--max-m", "200", "--prime-bound", "150", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(out.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["schema_version"], "1");
    assert_eq!(v["summary"]["theorem3_verified"], true);
    assert_eq!(v["certificates"].as_array().unwrap().len(), 400);
    // Progress goes to stderr only.
    assert!(String::from_utf8_lossy(&out.stderr).contains("certified 200/200"));
}

#[test]
fn small_prime_bound_exits_one() {
    let out = stabcert(&["certify", "--max-m", "1000", "--prime-bound", "7", "--quiet"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["summary"]["theorem3_verified"], false);
}

#[test]
fn config_errors_exit_two() {
    assert_eq!(stabcert(&["certify", "--max-m", "10", "--prime-bound", "5"]).status.code(), Some(2));
    assert_eq!(stabcert(&["certify", "--max-m", "10", "--jobs", "0"]).status.code(), Some(2));
    let out = stabcert(&["certify", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));
    assert_eq!(stabcert(&["sieve", "--m", "14", "--k", "7", "--factor", "g1"]).status.code(), Some(2));
    assert_eq!(stabcert(&["quad-bound", "--c", "4"]).status.code(), Some(2));
}

#[test]
fn jobs_do_not_change_output() {
    let a = stabcert(&["certify", "--max-m", "500", "--jobs", "1", "--quiet", "--format", "csv"]);
    let b = stabcert(&["certify", "--max-m", "500", "--jobs", "8", "--quiet", "--format", "csv"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let env = Command::new(env!("CARGO_BIN_EXE_stabcert"))
        .args(["certify", "--max-m", "500", "--quiet", "--format", "csv"])
        .env("STABCERT_JOBS", "3")
        .output()
        .unwrap();
    assert_eq!(env.stdout, a.stdout);
    let bad = Command::new(env!("CARGO_BIN_EXE_stabcert"))
        .args(["certify", "--max-m", "5"])
        .env("STABCERT_JOBS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn sieve_and_orbit() {
    let out = stabcert(&["sieve", "--m", "4342", "--k", "73", "--factor", "g1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["pass"], true);
    let out = stabcert(&["sieve", "--m", "2730", "--k", "67", "--factor", "g2"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["witness"]["index"], 6);
    let out = stabcert(&["sieve", "--m", "1", "--k", "7", "--factor", "g2", "--all-indices"]);
    assert_eq!(out.status.code(), Some(0));
    let out = stabcert(&["orbit", "--d", "2", "--c", "1", "--mod", "2"]);
    let v = json(&out);
    assert_eq!(v["tail"], serde_json::json!([]));
    assert_eq!(v["cycle"], serde_json::json!([0, 1]));
}

#[test]
fn classify_iterate_and_bounds() {
    let v = json(&stabcert(&["classify", "--d", "14"]));
    assert_eq!(v["case"], "NotCoveredUnconditional");
    assert!(v["abc_note"].is_string());
    let out = stabcert(&["iterate", "--d", "3", "--c", "8", "--n", "2"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "1\t1/8\t1\n2\t65/512\t65\n");
    assert_eq!(stabcert(&["iterate", "--d", "3", "--c", "2", "--n", "7"]).status.code(), Some(2));
    let v = json(&stabcert(&["quad-bound", "--c", "7"]));
    assert_eq!(v["bound"], 3);
    let v = json(&stabcert(&["abc", "--a", "1", "--b", "80", "--c", "81"]));
    assert_eq!(v["radical"], "30");
    assert_eq!(v["holds_74"], true);
}

#[test]
fn scans_and_tables() {
    let out = stabcert(&["scan-a2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["hits"].as_array().unwrap().len(), 1);
    assert_eq!(stabcert(&["scan-a2", "--d-min", "2"]).status.code(), Some(1));
    let out = stabcert(&["fermat", "--p", "4", "--q", "4", "--r", "2", "--bound", "50"]);
    assert_eq!(out.status.code(), Some(0));
    let out = stabcert(&["fermat", "--p", "2", "--q", "3", "--r", "7", "--bound", "20"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&stabcert(&["tables", "--residuals", "100"]));
    assert_eq!(v["g1"]["19"], serde_json::json!([2, 4, 15, 17]));
    assert!(v["g2"].get("43").is_none());
    assert_eq!(v["residuals"]["g1"]["values"], serde_json::json!([26, 44, 47, 86]));
}
