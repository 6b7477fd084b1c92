//! End-to-end tests of the qpark binary: output formats, exit codes, and
//! determinism across thread counts.

use std::process::{Command, Output};

fn qpark(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qpark"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

#[test]
fn stats_worked_example() {
    let out = qpark(&["stats", "0,1,2,2,3,0,1,1;4,6,8,1,3,2,7,5"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("n: 8"), "{text}");
    assert!(text.contains("area: 10"), "{text}");
    assert!(text.contains("coarea: 18"), "{text}");
    assert!(text.contains("dinv: 4 (primary 1, secondary 3)"), "{text}");
    assert!(text.contains("diagonal word: 3 1 8 5 7 6 2 4"), "{text}");
}

#[test]
fn stats_single_car() {
    let out = qpark(&["stats", "0;1"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("area: 0"), "{text}");
    assert!(text.contains("dinv: 0 (primary 0, secondary 0)"), "{text}");
    assert!(text.contains("diagonal word: 1"), "{text}");
}

#[test]
fn stats_shuffle_verdict() {
    // Diagonal word of 0,0,0;3,1,2 is 2 1 3: a shuffle of (1) and (2,3).
    let out = qpark(&["stats", "0,0,0;3,1,2", "--mu", "1,2"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("diagonal word: 2 1 3"), "{text}");
    assert!(text.contains("shuffle (1,2): yes"), "{text}");

    // Word 3 2 1 reads 3 before 2.
    let out = qpark(&["stats", "0,0,0;1,2,3", "--mu", "1,2"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("diagonal word: 3 2 1"), "{text}");
    assert!(text.contains("shuffle (1,2): no"), "{text}");
}

#[test]
fn stats_invalid_input_exits_2() {
    let out = qpark(&["stats", "0,2;1,2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("BadSupport"), "{}", stderr_of(&out));

    let out = qpark(&["stats", "0,1;2,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("BadColumn"), "{}", stderr_of(&out));

    let out = qpark(&["stats", "0,0;1,3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("BadLabels"), "{}", stderr_of(&out));
}

#[test]
fn poly_formula_json() {
    let out = qpark(&["poly", "--a", "1", "--b", "2", "--r", "1", "--s", "1", "--method", "formula"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), r#"{"coeffs":["0","0","1","1"],"var":"q"}"#);
}

#[test]
fn poly_all_methods_agree_on_base_case() {
    for method in ["enumerate", "formula", "recursion", "qt-bridge"] {
        let out = qpark(&["poly", "--a", "0", "--b", "3", "--r", "0", "--s", "3", "--method", method]);
        assert!(out.status.success(), "method {method}");
        assert_eq!(
            stdout_of(&out).trim(),
            r#"{"coeffs":["0","0","0","1"],"var":"q"}"#,
            "method {method}"
        );
    }
}

#[test]
fn poly_whole_family() {
    let out = qpark(&["poly", "--a", "1", "--b", "1", "--method", "enumerate"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), r#"{"coeffs":["1","1","1"],"var":"q"}"#);
}

#[test]
fn poly_check_all() {
    let out = qpark(&["poly", "--a", "2", "--b", "2", "--check-all"]);
    assert!(out.status.success());
    // The r-only shape skips the formula route but still cross-checks.
    let out = qpark(&["poly", "--a", "2", "--b", "2", "--r", "1", "--check-all"]);
    assert!(out.status.success());
}

#[test]
fn poly_bad_parameters_exit_2() {
    let out = qpark(&["poly", "--a", "1", "--b", "1", "--r", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = qpark(&["poly", "--a", "1", "--b", "1", "--s", "2"]);
    assert_eq!(out.status.code(), Some(2));
    // No closed form for the r-only families.
    let out = qpark(&["poly", "--a", "2", "--b", "1", "--r", "1", "--method", "formula"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("no closed form"), "{}", stderr_of(&out));
}

#[test]
fn verify_suites_pass_and_report() {
    let out = qpark(&["verify", "--suite", "qara", "--max-n", "4"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("suite qara:"), "{text}");
    assert!(text.contains("checks passed (max-n 4)"), "{text}");

    let out = qpark(&["verify", "--suite", "conj2", "--max-n", "2"]);
    assert!(out.status.success());
}

#[test]
fn verify_unknown_suite_exits_2() {
    let out = qpark(&["verify", "--suite", "nope", "--max-n", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("unknown suite"), "{}", stderr_of(&out));
}

#[test]
fn table_wolf_csv_ordering() {
    let out = qpark(&["table", "--target", "wolf", "--max-n", "2", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "a,b,coeffs");
    let params: Vec<&str> = lines[1..]
        .iter()
        .map(|l| l.rsplit_once(',').expect("coeffs column").0)
        .collect();
    assert_eq!(params, vec!["0,0", "0,1", "1,0", "0,2", "1,1", "2,0", "1,2", "2,1", "2,2"]);
    assert_eq!(lines[1], "0,0,1");
    assert_eq!(lines[4], "0,2,0 1"); // q^(binom(2,2)) = q
}

#[test]
fn table_qara_includes_vanishing_rows() {
    let out = qpark(&["table", "--target", "qara", "--max-n", "1", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    // Parkq for a=1, b=1, r=0, s=0 vanishes: empty coefficient field.
    assert!(text.lines().any(|l| l == "1,1,0,0,"), "{text}");
    assert!(text.lines().any(|l| l == "1,1,1,1,0 1 1"), "{text}");
}

#[test]
fn table_wolf_json_rows() {
    let out = qpark(&["table", "--target", "wolf", "--max-n", "1", "--format", "json"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let rows: Vec<serde_json::Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).expect("valid JSON row"))
        .collect();
    let wanted = rows
        .iter()
        .find(|row| row["a"] == 1 && row["b"] == 1)
        .expect("row (1,1) present");
    assert_eq!(wanted["poly"]["coeffs"], serde_json::json!(["1", "1", "1"]));
}

#[test]
fn thread_count_does_not_change_results() {
    let mut outputs = Vec::new();
    for threads in ["1", "2", "4"] {
        let out = qpark(&["poly", "--a", "3", "--b", "2", "--method", "enumerate", "--threads", threads]);
        assert!(out.status.success());
        outputs.push(stdout_of(&out));
    }
    assert!(outputs.windows(2).all(|w| w[0] == w[1]), "{outputs:?}");
}
