//! End-to-end tests of the `infl` binary, covering every exit code.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn infl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_infl"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn infl_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_infl"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary runs")
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn prove_identity_prints_a_derivation() {
    let out = infl(&["prove", "p => p"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("[id]"));
    // a larger symbol bound changes nothing: no rule grows upward
    let bounded = infl(&["prove", "p => p", "--max-symbol-size", "50"]);
    assert_eq!(code(&bounded), 0);
}

#[test]
fn prove_refuted_exits_one() {
    let out = infl(&["prove", "~~p => p"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn prove_reports_resource_exhaustion() {
    let out = infl(&[
        "prove",
        "~~(~~(p . q) \\ ~~(q \\/ p)) => ~~(p . q) \\ ~~(q \\/ p)",
        "--time-budget",
        "0.000001",
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn prove_rejects_bad_syntax() {
    assert_eq!(code(&infl(&["prove", "p , => q"])), 3);
    assert_eq!(code(&infl(&["prove", "p => p", "--system", "g"])), 3);
    assert_eq!(code(&infl(&["prove", "p => p", "--bogus-flag"])), 3);
}

#[test]
fn prove_json_is_deterministic() {
    let first = infl(&["prove", "p , q => p . q", "--json"]);
    let second = infl(&["prove", "p , q => p . q", "--json"]);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
    assert!(stdout(&first).contains("\"outcome\": \"proved\""));
}

#[test]
fn decide_separates_the_simple_systems() {
    assert_eq!(code(&infl(&["decide", "~~p => p", "--system", "g"])), 0);
    assert_eq!(code(&infl(&["decide", "~~p => p", "--system", "qg"])), 1);
    assert_eq!(
        code(&infl(&["decide", "p ; ~p => bot", "--system", "gb"])),
        0
    );
}

#[test]
fn decide_trace_reveals_the_translation() {
    let out = infl(&["decide", "~~p => p", "--system", "g", "--trace"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("translated: ~~~~p => ~~p"));
}

#[test]
fn decide_rejects_structural_input_for_simple_systems() {
    assert_eq!(code(&infl(&["decide", "p , q => p", "--system", "g"])), 3);
    assert_eq!(code(&infl(&["decide", "p * q => p", "--system", "qg"])), 3);
}

#[test]
fn translate_applies_the_double_negation_clauses() {
    let out = infl(&["translate", "p \\ q", "--sugar"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "~~(~~p \\ ~~q)");
    assert_eq!(code(&infl(&["translate", "p * q"])), 3);
}

#[test]
fn check_proof_accepts_and_rejects() {
    let valid = r#"{"rule":"id","sequent":"p => p","premises":[]}"#;
    let out = infl_stdin(&["check-proof", "--system", "gb"], valid);
    assert_eq!(code(&out), 0);

    let invalid = r#"{"rule":"dotR","sequent":"p => p . p","premises":[]}"#;
    let out = infl_stdin(&["check-proof", "--system", "gb"], invalid);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("invalid"));

    let garbage = "not json";
    assert_eq!(
        code(&infl_stdin(&["check-proof", "--system", "gb"], garbage)),
        3
    );
}

#[test]
fn check_proof_round_trips_prover_output() {
    let proof = infl(&["prove", "p , p \\ q => q", "--json"]);
    assert_eq!(code(&proof), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&proof)).unwrap();
    let derivation = serde_json::to_string(&value["derivation"]).unwrap();
    let out = infl_stdin(&["check-proof", "--system", "gb"], &derivation);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
}

#[test]
fn check_algebra_builtin_passes_incrl() {
    let out = infl(&["check-algebra", "builtin:involutive", "--class", "incrl"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("pass"));
    // missing tables for the bounded class are an input error
    assert_eq!(
        code(&infl(&[
            "check-algebra",
            "builtin:involutive",
            "--class",
            "cbrl"
        ])),
        3
    );
    assert_eq!(
        code(&infl(&["check-algebra", "no-such-file", "--class", "crl"])),
        3
    );
}

#[test]
fn check_algebra_reports_failing_laws() {
    let dir = std::env::temp_dir();
    let path = dir.join("infl-cli-test-broken.alg");
    // two-chain with the identity negation: contraposition fails
    std::fs::write(
        &path,
        "elements: o i\nleq:\n1 1\n0 1\nneg: o i\ndot:\no o\no i\nunder:\ni i\no i\n",
    )
    .unwrap();
    let out = infl(&["check-algebra", path.to_str().unwrap(), "--class", "incrl"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("FAIL"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn expand_builtin_yields_a_cbrl() {
    let expanded = infl(&["expand", "builtin:involutive"]);
    assert_eq!(code(&expanded), 0);
    let text = stdout(&expanded);
    assert!(text.contains("star:"));
    assert!(text.contains("arrow:"));

    let dir = std::env::temp_dir();
    let path = dir.join("infl-cli-test-expanded.alg");
    std::fs::write(&path, &text).unwrap();
    let out = infl(&["check-algebra", path.to_str().unwrap(), "--class", "cbrl"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    std::fs::remove_file(&path).ok();
}

#[test]
fn expand_rejects_non_quasi_involutive_input() {
    let dir = std::env::temp_dir();
    let path = dir.join("infl-cli-test-not-qinc.alg");
    std::fs::write(
        &path,
        "elements: o i\nleq:\n1 1\n0 1\nneg: o i\ndot:\no o\no i\nunder:\ni i\no i\n",
    )
    .unwrap();
    let out = infl(&["expand", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("not expandable"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn countermodel_finds_and_misses() {
    let out = infl(&["countermodel", "p => q", "--max-size", "2"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("assignment:"));
    assert_eq!(
        code(&infl(&["countermodel", "p => p", "--max-size", "2"])),
        1
    );
    assert_eq!(
        code(&infl(&["countermodel", "p => q", "--max-size", "9"])),
        3
    );
}

#[test]
fn builtin_corpus_passes() {
    let out = infl(&["corpus"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("PASS fusion-2"));
    assert!(text.contains("0 failed"));
}

#[test]
fn corpus_reports_mismatches() {
    let dir = std::env::temp_dir();
    let path = dir.join("infl-cli-test-bad.corpus");
    std::fs::write(&path, "wrong | gb | p => q | proved | smoke:negative\n").unwrap();
    let out = infl(&["corpus", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("FAIL wrong"));
    std::fs::remove_file(&path).ok();

    assert_eq!(code(&infl(&["corpus", "no-such-file.corpus"])), 3);
}

#[test]
fn empty_corpus_is_a_clean_pass() {
    let dir = std::env::temp_dir();
    let path = dir.join("infl-cli-test-empty.corpus");
    std::fs::write(&path, "# nothing here\n").unwrap();
    let out = infl(&["corpus", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("0 total") || stdout(&out).contains("0 passed"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn corpus_json_output_is_deterministic() {
    let first = infl(&["corpus", "--json"]);
    let second = infl(&["corpus", "--json"]);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
    assert!(stdout(&first).contains("\"failed\": 0"));
}
