//! End-to-end tests against the built binary.

use std::process::{Command, Output};

fn bellperm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bellperm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = bellperm(args);
    assert!(
        out.status.success(),
        "expected success for {args:?}, stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn lines_of(args: &[&str]) -> Vec<String> {
    stdout_of(args).lines().map(|s| s.to_string()).collect()
}

fn exit_code(args: &[&str]) -> i32 {
    bellperm(args).status.code().unwrap()
}

#[test]
fn encode_decode_golden() {
    assert_eq!(
        stdout_of(&["encode", "phi", "1 2 1 1 3 2 3 4 2"]).trim(),
        "5 6 8 1 7 9 3 4 2"
    );
    assert_eq!(
        stdout_of(&["encode", "inom", "121132342"]).trim(),
        "4 9 7 8 1 2 5 3 6"
    );
    assert_eq!(stdout_of(&["encode", "inom", "1 2 3"]).trim(), "1 2 3");
    assert_eq!(
        stdout_of(&["decode", "inom", "4 9 7 8 1 2 5 3 6"]).trim(),
        "1 2 1 1 3 2 3 4 2"
    );
    assert_eq!(
        stdout_of(&["decode", "phi", "5 6 8 1 7 9 3 4 2"]).trim(),
        "1 2 1 1 3 2 3 4 2"
    );
}

#[test]
fn convert_golden() {
    assert_eq!(
        stdout_of(&["convert", "lambda", "4 5 2 1 3"]).trim(),
        "1 4/2 3 5"
    );
    assert_eq!(
        stdout_of(&["convert", "chi", "1 4 7/2 9/3 5 10/6 8"]).trim(),
        "7 9 10 8 3 1 4 6 2 5"
    );
    assert_eq!(
        stdout_of(&["convert", "mu", "1 2 7 9/3 5 6/4 8"]).trim(),
        "(9 7 2 1)(6 5 3)(8 4)"
    );
    assert_eq!(
        stdout_of(&["convert", "beta", "(9 7 2 1)(6 5 3)(8 4)"]).trim(),
        "(9 7 2 6 5 3 8 4 1)"
    );
    assert_eq!(
        stdout_of(&["convert", "theta", "(1 4 9 7 3 5 8)(2 6)"]).trim(),
        "(4 3 1)(6 2)(5)(9 7)(8)"
    );
    assert_eq!(
        stdout_of(&["convert", "nu", "1 1 3 1 3 3 4 4 7 1"]).trim(),
        "1 1 2 1 2 2 3 3 4 1"
    );
    assert_eq!(
        stdout_of(&["convert", "zeta", "1 1 2 1 2 2 3 3 4 1"]).trim(),
        "1 1 3 1 3 3 7 7 9 1"
    );
    assert_eq!(
        stdout_of(&["convert", "canon", "1 3/2 4 6/5 7 8"]).trim(),
        "1 2 1 2 3 2 3 3"
    );
    assert_eq!(
        stdout_of(&["convert", "from-canon", "1 2 1 2 3 2 3 3"]).trim(),
        "1 3/2 4 6/5 7 8"
    );
}

#[test]
fn domain_failures_exit_one_with_witness() {
    let out = bellperm(&["convert", "from-canon", "1 1 3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("restricted growth"));

    let out = bellperm(&["convert", "lambda", "2 1 3"]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr).to_string();
    assert!(stderr.contains("prefix of length 3"), "stderr: {stderr}");

    let out = bellperm(&["convert", "beta", "2 3 1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn parse_failures_exit_two() {
    assert_eq!(exit_code(&["encode", "phi", "1 3 1"]), 2);
    assert_eq!(exit_code(&["decode", "inom", "4,5"]), 2);
    assert_eq!(exit_code(&["classify", "1 1 2"]), 2);
    assert_eq!(exit_code(&["convert", "chi", "1 3/3 2"]), 2);
    assert_eq!(exit_code(&["enumerate", "rgf", "--n", "0"]), 2);
    assert_eq!(exit_code(&["enumerate", "bp2", "--n", "3", "--k", "9"]), 2);
    assert_eq!(exit_code(&["count", "stirling", "--n", "4"]), 2);
    assert_eq!(exit_code(&["count", "stirling", "--n", "3", "--k", "7"]), 2);
    assert_eq!(exit_code(&["count", "singleton-class", "--n", "4", "--k", "1"]), 2);
    assert_eq!(exit_code(&["enumerate", "rgf", "--n", "3", "--order", "colex"]), 2);
    assert_eq!(exit_code(&["verify", "--n", "3", "--checks", "nope"]), 2);
    // clap usage errors share the same code
    assert_eq!(exit_code(&["enumerate", "rgf"]), 2);
}

#[test]
fn classify_reports_all_verdicts() {
    let text = stdout_of(&["classify", "2 4 5 9 8 7 3 1 6"]);
    assert!(text.contains("bp2 code: false"));
    assert!(text.contains("bp2 characterization: false"));
    assert!(text.contains("bp2 reduction: false"));
    assert!(text.contains("bp1: false"));
    assert!(text.contains("k: 6"));
    assert!(text.contains("witness: seq[6]=8 > letter[6]=7"));

    let text = stdout_of(&["classify", "1 2 3"]);
    assert!(text.contains("bp2 code: true"));
    assert!(text.contains("bp1: true"));
    assert!(text.contains("k: 3"));
    assert!(!text.contains("witness"));

    let text = stdout_of(&["classify", "2 1 3"]);
    assert!(text.contains("bp2 code: false"));
    assert!(text.contains("witness: code prefix of length 3"));
}

#[test]
fn enumerate_golden() {
    assert_eq!(
        lines_of(&["enumerate", "rgf", "--n", "3"]),
        ["1 1 1", "1 1 2", "1 2 1", "1 2 2", "1 2 3"]
    );
    let bp2 = lines_of(&["enumerate", "bp2", "--n", "3"]);
    assert_eq!(bp2.len(), 5);
    assert!(!bp2.contains(&"2 1 3".to_string()));
    assert_eq!(lines_of(&["enumerate", "partitions", "--n", "1"]), ["1"]);
    let four_two = lines_of(&["enumerate", "bp2", "--n", "4", "--k", "2"]);
    assert_eq!(four_two.len(), 7);
    assert!(four_two.contains(&"3 4 2 1".to_string()));
    assert_eq!(lines_of(&["enumerate", "rgf", "--n", "4", "--limit", "2"]).len(), 2);
    assert_eq!(lines_of(&["enumerate", "bp1", "--n", "3"]).len(), 5);
}

#[test]
fn count_golden() {
    assert_eq!(stdout_of(&["count", "bell", "--n", "0"]).trim(), "1");
    assert_eq!(stdout_of(&["count", "bell", "--n", "3"]).trim(), "5");
    assert_eq!(
        stdout_of(&["count", "bell", "--n", "25"]).trim(),
        "4638590332229999353"
    );
    assert_eq!(
        stdout_of(&["count", "stirling", "--n", "4", "--k", "2"]).trim(),
        "7"
    );
    assert_eq!(
        stdout_of(&["count", "bp2-table", "--n", "4"]).trim(),
        "1 7 6 1, sum 15"
    );
    assert_eq!(
        stdout_of(&["count", "singleton-class", "--n", "4", "--k", "3"]).trim(),
        "3"
    );
}

#[test]
fn json_lines_records() {
    let line = stdout_of(&["--format", "json-lines", "count", "stirling", "--n", "4", "--k", "2"]);
    let record: serde_json::Value = serde_json::from_str(line.trim()).unwrap();
    assert_eq!(record["kind"], "count");
    assert_eq!(record["n"], 4);
    assert_eq!(record["payload"], "7");

    let text_items = lines_of(&["enumerate", "partitions", "--n", "4", "--k", "2"]);
    let json_items = lines_of(&[
        "--format",
        "json-lines",
        "enumerate",
        "partitions",
        "--n",
        "4",
        "--k",
        "2",
    ]);
    assert_eq!(text_items.len(), json_items.len());
    for (text, json) in text_items.iter().zip(&json_items) {
        let record: serde_json::Value = serde_json::from_str(json).unwrap();
        assert_eq!(record["kind"], "partition");
        assert_eq!(record["payload"], text.as_str());
    }

    let line = stdout_of(&["--format", "json-lines", "classify", "2 1 3"]);
    let record: serde_json::Value = serde_json::from_str(line.trim()).unwrap();
    assert_eq!(record["kind"], "report");
    assert!(record["payload"].as_str().unwrap().contains("bp2 code: false"));
}

#[test]
fn verify_small_passes() {
    let out = bellperm(&["verify", "--n", "4"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().count() >= 14 * 4);
    assert!(text.lines().all(|l| l.contains("pass")));

    let lines = lines_of(&["verify", "--n", "5", "--checks", "bell-count,inom-theorem"]);
    assert_eq!(lines.len(), 10);
}

#[test]
fn verify_json_records_parse() {
    let lines = lines_of(&[
        "--format",
        "json-lines",
        "verify",
        "--n",
        "3",
        "--checks",
        "diagram,rgf-count",
    ]);
    assert_eq!(lines.len(), 6);
    for line in lines {
        let record: serde_json::Value = serde_json::from_str(&line).unwrap();
        assert_eq!(record["discrepancies"], 0);
    }
}

#[test]
fn verify_guard_requires_override() {
    let out = bellperm(&["verify", "--n", "9", "--checks", "bell-count"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("soft limit"));

    let out = bellperm(&[
        "verify",
        "--n",
        "9",
        "--checks",
        "inom-theorem",
        "--unsafe-large",
    ]);
    assert!(out.status.success(), "unsafe-large run failed");
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("inom-theorem n=9: pass (362880 tested)"));
}

#[test]
fn injected_fault_is_detected() {
    let out = bellperm(&[
        "verify",
        "--n",
        "3",
        "--checks",
        "recognizer-agreement,bell-count",
        "--inject-fault",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("FAIL"));
    assert!(text.contains("2 1 3"), "counterexample printed:\n{text}");
    assert!(
        String::from_utf8_lossy(&out.stderr).contains("discrepancies")
    );
}

#[test]
fn checks_listed() {
    let lines = lines_of(&["checks"]);
    assert!(lines.contains(&"bell-count".to_string()));
    assert!(lines.contains(&"beta-theta-roundtrip".to_string()));
    assert_eq!(lines.len(), 14);
}

#[test]
fn cycle_and_compact_inputs_accepted() {
    assert_eq!(
        stdout_of(&["classify", "(14)(253)"])
            .lines()
            .next()
            .unwrap(),
        "permutation: 4 5 2 1 3"
    );
    assert_eq!(stdout_of(&["convert", "lambda", "45213"]).trim(), "1 4/2 3 5");
    assert_eq!(
        stdout_of(&["convert", "canon", "13/246/578"]).trim(),
        "1 2 1 2 3 2 3 3"
    );
}
