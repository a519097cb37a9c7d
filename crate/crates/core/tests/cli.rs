//! The `at-lab` binary end to end: output shapes and exit codes.

use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_at-lab"))
        .args(args)
        .env("AT_LAB_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn json_out(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

#[test]
fn invariant_chi_and_at_of_c5() {
    assert_eq!(json_out(&["invariant", "C(5)", "--which", "chi,at"]), json!({"chi": 3, "at": 3}));
}

#[test]
fn census_of_smallest_thm21_orientation() {
    let v = json_out(&["census", "C(3) x P(2)", "--orient", "thm21:1,2"]);
    assert_eq!(v, json!({"even": 5, "odd": 4}));
    let dp = json_out(&["census", "C(3) x P(2)", "--orient", "thm21:1,2", "--engine", "dp"]);
    assert_eq!(dp, json!({"diff_magnitude": "1"}));
}

#[test]
fn verify_thm21_small_grid() {
    let out = run(&["verify", "thm21", "--k-max", "2", "--n-max", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let cases = v["cases"].as_array().unwrap();
    assert_eq!(cases.len(), 6);
    assert!(cases.iter().all(|c| c["status"] == "pass" && c["values"]["at"] == 3));
}

#[test]
fn verify_csv_report() {
    let out = run(&["verify", "thm21", "--k-max", "1", "--n-max", "2", "--report", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    let header = lines.next().unwrap();
    assert!(header.starts_with("suite,status,param.k,param.n"));
    assert!(lines.next().unwrap().starts_with("thm21,pass,1,1"));
}

#[test]
fn augmented_orientation_roundtrips_through_file() {
    let dir = std::env::temp_dir().join(format!("at-lab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("d.json");
    let p = path.to_str().unwrap();
    let out = run(&["census", "C(5) x P(2)", "--orient", "thm21:2,2", "--orientation-out", p]);
    assert_eq!(out.status.code(), Some(0));
    let direct: Value = serde_json::from_slice(&out.stdout).unwrap();
    let again = json_out(&["census", "C(5) x P(2)", "--orient", &format!("file:{p}")]);
    assert_eq!(direct, again);
    // a file that is not an orientation of the expression is rejected
    assert_eq!(run(&["census", "C(7) x P(2)", "--orient", &format!("file:{p}")]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn exit_codes() {
    // failing suite case
    assert_eq!(run(&["verify", "remark", "--params", "palette=2,trials=3"]).status.code(), Some(1));
    // usage, parse and precondition errors
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["graph", "C(5"]).status.code(), Some(2));
    assert_eq!(run(&["graph", "C(2)"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "no_such_suite"]).status.code(), Some(2));
    // resource limit
    let out = run(&["--enum-arcs", "3", "census", "C(3) x P(2)", "--orient", "thm21:1,2", "--engine", "enumerate"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("resource"));
}
