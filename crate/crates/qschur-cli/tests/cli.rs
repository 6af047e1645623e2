//! End-to-end tests of the `qschur` binary: the documented invocations,
//! exit codes, and byte-determinism of the output.

use std::process::{Command, Output};

fn qschur(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qschur"))
        .args(args)
        .env_remove("QSCHUR_BOUND")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

#[test]
fn decompose_json_contract() {
    let output = qschur(&["decompose", "--m", "1", "--n", "1", "--k", "3", "--format", "json"]);
    assert_eq!(output.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(value["schema"], 1);
    assert_eq!(value["m"], 1);
    assert_eq!(value["n"], 1);
    assert_eq!(value["k"], 3);
    assert_eq!(value["total"], 8);
    let entries = value["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 3);
    assert_eq!(entries[0], serde_json::json!({"lambda": [3], "mult": 1, "dim": 2}));
    assert_eq!(entries[1], serde_json::json!({"lambda": [2, 1], "mult": 2, "dim": 2}));
    assert_eq!(entries[2], serde_json::json!({"lambda": [1, 1, 1], "mult": 1, "dim": 2}));
}

#[test]
fn decompose_text_is_byte_deterministic() {
    let first = qschur(&["decompose", "--m", "2", "--n", "1", "--k", "3"]);
    let second = qschur(&["decompose", "--m", "2", "--n", "1", "--k", "3"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let text = stdout(&first);
    assert!(text.starts_with("decompose m=2 n=1 k=3\n"));
    assert!(text.ends_with("total 27\n"));
}

#[test]
fn hwv_worked_example() {
    let output = qschur(&["hwv", "--m", "1", "--n", "1", "--k", "2", "--tableau", "1/2"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.contains("vector (1)/(q^2 + 1)*1*1~ - (q)/(q^2 + 1)*1~*1"));
    assert!(text.contains("weight (1,1)"));
    assert!(text.contains("checks: nonzero=true annihilated=true weight-match=true"));

    let json = qschur(&[
        "hwv", "--m", "1", "--n", "1", "--k", "2", "--tableau", "1/2", "--format", "json",
    ]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(value["schema"], 1);
    assert_eq!(value["lambda"], serde_json::json!([1, 1]));
    assert_eq!(value["weight"], serde_json::json!([1, 1]));
    assert_eq!(value["checks"]["annihilated"], true);
    assert_eq!(value["vector"][0]["tuple"], serde_json::json!([1, 2]));
}

#[test]
fn verify_all_suites_pass() {
    let output = qschur(&["verify", "--m", "2", "--n", "2", "--k", "3"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    for suite in ["centralizer", "braid", "serre", "gyoja", "branching", "annihilation", "q1"] {
        assert!(text.contains(&format!("suite {suite}: PASS")), "missing {suite}");
    }
    assert!(text.ends_with("overall: PASS\n"));
}

#[test]
fn hecke_eval_quadratic_relation() {
    let output = qschur(&["hecke-eval", "--k", "2", "T[2,1]", "T[2,1]"]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout(&output), "(q^2)*T[1,2] + (q^2 - 1)*T[2,1]\n");

    let json = qschur(&["hecke-eval", "--k", "2", "(q)*T[2,1]", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(value["schema"], 1);
    assert_eq!(value["k"], 2);
    assert_eq!(value["terms"][0]["perm"], serde_json::json!([2, 1]));
}

#[test]
fn malformed_literals_exit_two_with_position() {
    let output = qschur(&["hwv", "--m", "1", "--n", "1", "--k", "2", "--tableau", "1,x/2"]);
    assert_eq!(output.status.code(), Some(2));
    let message = stderr(&output);
    assert!(message.contains("byte 2"), "message: {message}");

    let output = qschur(&["hecke-eval", "--k", "2", "T[3,1]"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn non_hook_tableau_exits_two() {
    let output = qschur(&["hwv", "--m", "1", "--n", "1", "--k", "4", "--tableau", "1,2/3,4"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr(&output).contains("hook"));
}

#[test]
fn tableau_size_must_match_k() {
    let output = qschur(&["hwv", "--m", "1", "--n", "1", "--k", "3", "--tableau", "1/2"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr(&output).contains("2 boxes but k = 3"));
}

#[test]
fn bound_env_and_flag_guard_the_dimension() {
    let output = Command::new(env!("CARGO_BIN_EXE_qschur"))
        .args(["decompose", "--m", "1", "--n", "1", "--k", "2"])
        .env("QSCHUR_BOUND", "2")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr(&output).contains("exceeds the bound 2"));

    let output = qschur(&["decompose", "--m", "1", "--n", "1", "--k", "2", "--bound", "3"]);
    assert_eq!(output.status.code(), Some(2));

    let output = qschur(&["decompose", "--m", "1", "--n", "1", "--k", "2", "--bound", "4"]);
    assert_eq!(output.status.code(), Some(0));
}

#[test]
fn missing_and_invalid_flags_exit_two() {
    // hwv without a tableau is a usage error (clap exits 2).
    let output = qschur(&["hwv", "--m", "1", "--n", "1", "--k", "2"]);
    assert_eq!(output.status.code(), Some(2));

    // Zero is outside every numeric flag's range.
    let output = qschur(&["decompose", "--m", "0", "--n", "1", "--k", "2"]);
    assert_eq!(output.status.code(), Some(2));
}
