use std::process::{Command, Output};

use serde_json::Value;

fn plethyx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_plethyx"))
        .args(args)
        .env_remove("PLETHYX_CAP")
        .output()
        .expect("run plethyx")
}

fn stdout(args: &[&str]) -> String {
    let out = plethyx(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout)
        .unwrap()
        .trim_end()
        .to_string()
}

fn code(args: &[&str]) -> i32 {
    plethyx(args).status.code().expect("exit code")
}

#[test]
fn lr_values() {
    assert_eq!(stdout(&["lr", "3,2,1", "2,1", "2,1"]), "2");
    assert_eq!(stdout(&["lr", "2,1", "[]", "2,1"]), "1");
    assert_eq!(stdout(&["lr", "2", "1,1", "1"]), "0");
}

#[test]
fn lr_lists_tableaux() {
    let text = stdout(&["lr", "3,2,1", "2,1", "2,1", "--show-tableaux"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "2");
    assert_eq!(lines.len(), 3);
    assert!(lines[1..].iter().all(|l| l.starts_with("[[.,.,")));
}

#[test]
fn parse_errors_exit_2() {
    assert_eq!(code(&["lr", "1,2", "1", "1"]), 2);
    assert_eq!(code(&["lr", "x", "1", "1"]), 2);
    assert_eq!(code(&["plethysm", "q:2", "h:2"]), 2);
    assert_eq!(code(&["verify", "--suite", "nope", "--max-size", "3"]), 2);
}

#[test]
fn plethysm_examples() {
    assert_eq!(stdout(&["plethysm", "s:2", "h:2"]), "s[4] + s[2,2]");
    assert_eq!(stdout(&["plethysm", "e:2", "h:3"]), "s[5,1] + s[3,3]");
    assert_eq!(stdout(&["plethysm", "s:1", "s:2,1"]), "s[2,1]");
}

#[test]
fn plethysm_methods_agree() {
    let closed = stdout(&["plethysm", "s:2,1", "e:3"]);
    let oracle = stdout(&["plethysm", "s:2,1", "e:3", "--method", "oracle"]);
    assert_eq!(closed, oracle);
    assert_eq!(
        stdout(&["plethysm", "s:2,1", "e:3", "--method", "all"]),
        closed
    );
}

#[test]
fn oracle_cap_exit_3() {
    assert_eq!(code(&["plethysm", "s:3", "h:4", "--method", "oracle"]), 3);
    assert_eq!(code(&["plethysm", "s:3", "h:3", "--method", "oracle"]), 0);
    let out = Command::new(env!("CARGO_BIN_EXE_plethyx"))
        .args(["plethysm", "s:3", "h:3", "--method", "oracle"])
        .env("PLETHYX_CAP", "8")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn plethysm_json_round_trips() {
    let text = stdout(&["--format", "json", "plethysm", "e:2", "h:3"]);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(
        v,
        serde_json::json!({"terms": [
            {"partition": [5, 1], "coeff": 1},
            {"partition": [3, 3], "coeff": 1},
        ]})
    );
}

#[test]
fn restriction_examples() {
    assert_eq!(
        stdout(&["restriction", "1,1", "2,1", "--method", "all"]),
        "1 1 1"
    );
    assert_eq!(
        stdout(&["restriction", "1,1", "2", "--method", "oracle"]),
        "0"
    );
    let out = plethyx(&["restriction", "4", "4", "--method", "closed"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("requires λ_1 ≤ 3"));
    // Multisets of four rows summing to 4, i.e. partitions of 4.
    assert_eq!(
        stdout(&["restriction", "4", "4", "--method", "oracle"]),
        "5"
    );
}

#[test]
fn pleth_coeff_scope_and_fallback() {
    assert_eq!(stdout(&["pleth-coeff", "3,3", "1,1", "3"]), "1");
    assert_eq!(code(&["pleth-coeff", "4", "2", "2"]), 2);
    assert_eq!(stdout(&["pleth-coeff", "4", "2", "2", "--oracle"]), "1");
}

#[test]
fn table_rows() {
    assert_eq!(
        stdout(&["table", "1,1", "--max-mu", "3"]),
        "(2,1)\t1\n(1,1,1)\t1\n(1,1)\t1"
    );
    let v: Value = serde_json::from_str(&stdout(&[
        "--format", "json", "table", "[]", "--max-mu", "2",
    ]))
    .unwrap();
    assert_eq!(
        v,
        serde_json::json!({"lambda": [], "rows": [
            {"mu": [2], "value": 1},
            {"mu": [1], "value": 1},
            {"mu": [], "value": 1},
        ]})
    );
    assert_eq!(
        stdout(&["table", "1", "--max-mu", "2"]),
        "(2)\t1\n(1,1)\t1\n(1)\t1"
    );
}

#[test]
fn frobenius_and_adjoint() {
    assert_eq!(
        stdout(&["frobenius", "s:3", "--method", "all"]),
        "H * (s[3] + s[2] + s[1,1] + s[1])"
    );
    assert_eq!(stdout(&["frobenius", "e:2"]), "H * (s[1,1])");
    assert_eq!(
        stdout(&["frobenius", "h:1,1", "--method", "all", "--max-degree", "5"]),
        stdout(&["frobenius", "h:1,1", "--max-degree", "5"])
    );
    assert_eq!(stdout(&["adjoint", "s:3,1", "h:2"]), "s[1,1]");
    assert_eq!(code(&["adjoint", "s:2", "s:[]"]), 2);
}

#[test]
fn pieri_products() {
    assert_eq!(stdout(&["pieri", "1", "1"]), "s[2] + s[1,1]");
    assert_eq!(stdout(&["pieri", "1", "2", "--e"]), "s[2,1] + s[1,1,1]");
}

#[test]
fn verify_suites_pass() {
    for (suite, size) in [("plethysm-hr", "8"), ("restriction", "6"), ("ring", "6")] {
        let out = plethyx(&["verify", "--suite", suite, "--max-size", size]);
        assert_eq!(out.status.code(), Some(0), "{suite}");
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(text.starts_with(&format!("{suite}: checked=")), "{text}");
        assert!(text.contains("mismatches=0"));
    }
}

#[test]
fn output_independent_of_parallelism() {
    let args = [
        "--format",
        "json",
        "verify",
        "--suite",
        "restriction",
        "--max-size",
        "5",
    ];
    let one = stdout(&[&["--parallelism", "1"], &args[..]].concat());
    let four = stdout(&[&["--parallelism", "4"], &args[..]].concat());
    assert_eq!(one, four);
    let v: Value = serde_json::from_str(&one).unwrap();
    assert_eq!(v["suite"], "restriction");
    assert_eq!(v["mismatches"], serde_json::json!([]));
}
