use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

const T_PLUS_T2: &str = r#"{"kind":"diffeo","truncation":4,"coeffs":{"2":"1"}}"#;
// Output always lists every free coefficient, zeros included.
const T_PLUS_T2_DENSE: &str = r#"{"kind":"diffeo","truncation":4,"coeffs":{"2":"1","3":"0","4":"0"}}"#;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fdb")).args(args).output().expect("fdb runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_fdb"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("fdb runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn ok_json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn lambert_coefficients() {
    assert_eq!(ok_json(&["lambert", "4"]), json!(["1", "-1", "3/2", "-8/3"]));
}

#[test]
fn compose_squares_t_plus_t2() {
    let payload = format!(r#"{{"f":{T_PLUS_T2},"g":{T_PLUS_T2}}}"#);
    let v = ok_json(&["compose", &payload]);
    assert_eq!(v["coeffs"], json!({"2": "2", "3": "2", "4": "1"}));
}

#[test]
fn payload_from_stdin_and_file() {
    let out = run_stdin(&["invert"], T_PLUS_T2);
    assert!(out.status.success());
    let from_stdin: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(from_stdin["coeffs"], json!({"2": "-1", "3": "2", "4": "-5"}));

    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("f.json");
    let output = dir.path().join("g.json");
    std::fs::write(&input, T_PLUS_T2).unwrap();
    let out = run(&["invert", "--input", input.to_str().unwrap(), "--output", output.to_str().unwrap()]);
    assert!(out.status.success());
    let from_file: Value = serde_json::from_str(&std::fs::read_to_string(&output).unwrap()).unwrap();
    assert_eq!(from_file, from_stdin);
}

#[test]
fn invert_and_lagrange_agree_and_round_trip() {
    let inv = ok_json(&["invert", T_PLUS_T2]);
    assert_eq!(ok_json(&["lagrange", T_PLUS_T2]), inv);
    let id =
        ok_json(&["compose", &json!({"f": serde_json::from_str::<Value>(T_PLUS_T2).unwrap(), "g": inv}).to_string()]);
    assert!(id["coeffs"].as_object().unwrap().values().all(|c| c == "0"));
    assert_eq!(ok_json(&["invert", &inv.to_string()]), serde_json::from_str::<Value>(T_PLUS_T2_DENSE).unwrap());
}

#[test]
fn exp_then_log_round_trips() {
    let e = ok_json(&["exp", "--algebra", "fdb", "--degree", "4", r#"{"1":"1"}"#]);
    assert_eq!(e["values"], json!({"1": "1", "2": "1", "3": "1", "4": "1"}));
    let l = ok_json(&["log", "--algebra", "fdb", "--degree", "4", &e.to_string()]);
    assert_eq!(l["values"], json!({"1": "1", "2": "0", "3": "0", "4": "0"}));
}

#[test]
fn section_then_project_round_trips() {
    let s = ok_json(&["operad", "--operad", "dup", "section", T_PLUS_T2]);
    let p = ok_json(&["operad", "--operad", "dup", "project", &s.to_string()]);
    assert_eq!(p, serde_json::from_str::<Value>(T_PLUS_T2_DENSE).unwrap());
}

#[test]
fn rooted_tree_coproduct_of_ladder() {
    let v = ok_json(&["coproduct", "--algebra", "rt", "[[]]"]);
    assert_eq!(v.as_array().unwrap().len(), 3);
}

#[test]
fn output_is_deterministic() {
    let args = ["incidence", "--family", "partitions", "--n", "3"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn malformed_input_is_a_json_error() {
    let out = run(&["compose", "nope"]);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert!(err["error"].is_string());
    assert!(out.stdout.is_empty());
}

#[test]
fn unknown_flag_exits_one() {
    assert_eq!(run(&["compose", "--bogus"]).status.code(), Some(1));
}

#[test]
fn check_suite_passes() {
    let v = ok_json(&["check", "series", "--max-degree", "3"]);
    assert_eq!(v["passed"], json!(true));
}

#[test]
fn pretty_prints_text() {
    let out = run(&["--pretty", "lambert", "3"]);
    assert!(out.status.success());
    assert!(serde_json::from_slice::<Value>(&out.stdout).is_err());
}
