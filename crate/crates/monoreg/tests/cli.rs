//! End-to-end tests of the command-line binary: output formats, exit codes,
//! and the JSON report file.

use std::process::Command;

fn monoreg(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_monoreg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = monoreg(args);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).expect("utf-8 output")
}

#[test]
fn reg_and_closure_match_known_values() {
    assert_eq!(stdout(&["reg", "x1^2, x2^2", "--n", "2"]).trim(), "3");
    assert_eq!(stdout(&["closure", "x1^2, x2^2", "--n", "2"]).trim(), "x1^2, x1*x2, x2^2");
    assert_eq!(stdout(&["delta", "x1^2, x2^2", "--n", "2"]).trim(), "2");
    assert_eq!(stdout(&["reg", "x1, x2", "--n", "3", "--char", "0"]).trim(), "1");
}

#[test]
fn lq_prints_certificate_or_none() {
    let cert = stdout(&["lq", "x1^2, x1*x2, x2^2", "--n", "2"]);
    let lines: Vec<&str> = cert.lines().collect();
    assert_eq!(lines, vec!["x1^2", "x1*x2 : (x1)", "x2^2 : (x1)"]);
    assert_eq!(stdout(&["lq", "x1^2, x2^2", "--n", "2"]).trim(), "none");
}

#[test]
fn betti_table_lists_multigraded_entries() {
    let out = stdout(&["betti", "x1^2, x1*x2, x2^2", "--n", "2", "--multigraded"]);
    assert!(out.contains("2:       3       2"), "table:\n{out}");
    assert!(out.contains("b_1(x1^2*x2) = 1"));
    assert!(out.contains("b_1(x1*x2^2) = 1"));
}

#[test]
fn polarize_and_split_report_structures() {
    assert_eq!(
        stdout(&["polarize", "x1^2, x1*x2, x2^2", "--n", "2"]).trim(),
        "x1*x2, x1*x3, x3*x4"
    );
    let split = stdout(&["split", "x1^2, x1*x2, x2^2", "--n", "2", "--var", "1"]);
    assert!(split.contains("left: x1^2, x1*x2"));
    assert!(split.contains("splitting: true"));
}

#[test]
fn condition_checks_print_verdicts() {
    let yes = stdout(&["check-star", "x1^2, x1*x2, x2^2, x1*x3", "--n", "3"]);
    assert!(yes.trim_end().ends_with("satisfied: true"));
    let no = stdout(&["check-dstar", "x1^3, x2^2*x3", "--n", "3"]);
    assert!(no.contains("adjacent shared degree: false"));
    assert!(no.trim_end().ends_with("satisfied: false"));
}

#[test]
fn bad_input_exits_with_usage_code() {
    let out = monoreg(&["reg", "x4", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("out of range"));
    let parse = monoreg(&["reg", "x1^^2", "--n", "2"]);
    assert_eq!(parse.status.code(), Some(2));
    let usage = monoreg(&["reg"]);
    assert_eq!(usage.status.code(), Some(2));
}

#[test]
fn verify_writes_json_reports() {
    let dir = tempfile::tempdir().expect("temp dir");
    let json = dir.path().join("reports.json");
    let out = monoreg(&[
        "verify",
        "--n",
        "2",
        "--dmax",
        "2",
        "--seed",
        "7",
        "--closure-samples",
        "25",
        "--betti-samples",
        "10",
        "--pair-samples",
        "10",
        "--aux-samples",
        "10",
        "--json",
        json.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let body = std::fs::read_to_string(&json).expect("report file");
    let reports: serde_json::Value = serde_json::from_str(&body).expect("valid json");
    let names: Vec<&str> = reports
        .as_array()
        .expect("array of reports")
        .iter()
        .map(|r| r["check_name"].as_str().expect("name"))
        .collect();
    assert!(names.contains(&"lq_equivalence_n2"));
    assert!(names.contains(&"closure_oracle_agreement_n2"));
    assert!(names.contains(&"exact_sequence_bounds"));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("lq_equivalence_n2: pass"));
}
