use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aqc-codes"))
        .args(args)
        .env_remove("AQC_ENUM_BUDGET")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn path(dir: &Path, name: &str) -> PathBuf {
    dir.join(name)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn built_code(dir: &Path, k: &str) -> PathBuf {
    let p = path(dir, "code.json");
    let out = run(&["build", "6k2k2", "--k", k, "--out", s(&p)]);
    assert_eq!(out.status.code(), Some(0));
    p
}

#[test]
fn build_writes_generators() {
    let v = json(&run(&["build", "6k2k2", "--k", "1"]));
    assert_eq!(v["n"], 6);
    assert_eq!(v["generators"].as_array().unwrap().len(), 4);
    let g = json(&run(&["build", "gottesman", "--k", "1"]));
    assert_eq!(g["generators"], serde_json::json!(["XXXX", "ZZZZ"]));
}

#[test]
fn bad_parameter_exits_two() {
    assert_eq!(run(&["build", "6k2k2", "--k", "0"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--code", "/nonexistent/code.json"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_reports_distance_two() {
    let dir = tempfile::tempdir().unwrap();
    let code = built_code(dir.path(), "2");
    let out = run(&["verify", "--code", s(&code)]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(v["distance"]["distance"]["exact"], 2);
}

#[test]
fn anticommuting_generator_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let code = built_code(dir.path(), "1");
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&code).unwrap()).unwrap();
    v["generators"][0] = "ZIIXII".into();
    std::fs::write(&code, v.to_string()).unwrap();
    assert_eq!(run(&["verify", "--code", s(&code)]).status.code(), Some(1));
}

#[test]
fn budget_exhaustion_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let code = built_code(dir.path(), "1");
    assert_eq!(run(&["verify", "--code", s(&code), "--budget", "5"]).status.code(), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_aqc-codes"))
        .args(["verify", "--code", s(&code)])
        .env("AQC_ENUM_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn transformed_code_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let code = built_code(dir.path(), "1");
    let t = path(dir.path(), "t.json");
    assert_eq!(run(&["transform", "--code", s(&code), "--out", s(&t)]).status.code(), Some(0));
    let tv: Value = serde_json::from_str(&std::fs::read_to_string(&t).unwrap()).unwrap();
    assert_eq!(tv["css"], false);
    let out = run(&["verify", "--code", s(&t)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["distance"]["distance"]["exact"], 2);
}

#[test]
fn encoded_grid_graph() {
    let dir = tempfile::tempdir().unwrap();
    let (h, c) = (path(dir.path(), "h.json"), path(dir.path(), "c.json"));
    let out = run(&["encode", "--grid", "2x2", "--out", s(&h), "--code-out", s(&c)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["audit"]["passed"], true);
    let g = json(&run(&["graph", "--input", s(&h), "--code", s(&c)]));
    assert_eq!(g["planar"], true);
    assert_eq!(g["max_degree"], 4);
    let dot = run(&["graph", "--input", s(&h), "--format", "dot"]);
    let text = String::from_utf8(dot.stdout).unwrap();
    assert!(text.starts_with("graph") && text.contains(" -- "));
}

#[test]
fn dd_sweep_fits_quadratic_slope() {
    let out = run(&["simulate", "dd", "--taus", "0.02,0.04,0.08,0.16", "--nd", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let last: Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
    let slope = last["summary"]["tau_fits"][0]["slope"].as_f64().unwrap();
    assert!((slope - 2.0).abs() <= 0.3, "slope {slope}");
    assert_eq!(text.lines().count(), 5);
    let csv = run(&["simulate", "dd", "--taus", "0.02,0.04", "--nd", "8", "--format", "csv"]);
    assert!(String::from_utf8(csv.stdout).unwrap().starts_with("tau,n_d,infidelity,bound"));
}

#[test]
fn initial_state_check_passes() {
    let out = run(&["simulate", "init"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["passed"], true);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["encode", "--grid", "2x3", "--seed", "5"][..],
        &["simulate", "dd", "--taus", "0.02,0.04", "--nd", "4,8"][..],
        &["build", "gottesman", "--k", "3"][..],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}
