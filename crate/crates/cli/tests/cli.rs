use std::process::{Command, Output};

use serde_json::Value;

fn braidrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidrep"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = braidrep(args);
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

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let v: Value = serde_json::from_str(&stdout(&all)).unwrap();
    assert_eq!(v["schema_version"], 1);
    v
}

#[test]
fn act_examples() {
    assert_eq!(
        stdout(&["act", "--rep", "artin", "--strands", "2", "1", "x1"]),
        "x1 x2 X1"
    );
    assert_eq!(
        stdout(&["act", "--rep", "wada3", "--strands", "2", "1", "x2"]),
        "X2 X1 x2"
    );
    assert_eq!(
        stdout(&["act", "--rep", "artin", "--strands", "3", "", "x1"]),
        "x1"
    );
    assert_eq!(
        stdout(&["act", "--rep", "wada1:2", "--strands", "2", "1", "x1"]),
        "x1 x1 x2 X1 X1"
    );
    assert_eq!(stdout(&["act", "--strands", "2", "-1", "x2"]), "X2 x1 x2");
}

#[test]
fn solve_compare_reduce() {
    assert_eq!(
        stdout(&["solve", "--strands", "3", "1 2 1 -2 -1 -2"]),
        "TRIVIAL"
    );
    assert_eq!(stdout(&["solve", "--strands", "2", "1"]), "POSITIVE");
    assert_eq!(stdout(&["solve", "--strands", "3", "-2"]), "NEGATIVE");
    assert_eq!(stdout(&["compare", "--strands", "3", "2", "1"]), "LESS");
    assert_eq!(stdout(&["compare", "--strands", "3", "", "1"]), "LESS");
    assert_eq!(
        stdout(&["compare", "--strands", "3", "1 2 1", "2 1 2"]),
        "EQUAL"
    );
    assert_eq!(stdout(&["reduce", "--strands", "3", "-1 2 1"]), "2 1 -2");
    let v = json(&["reduce", "--strands", "4", "2 -3"]);
    assert_eq!(v["main_index"], 2);
    assert_eq!(v["sign"], 1);
    assert_eq!(v["word"], "2 -3");
}

#[test]
fn magnus_output() {
    assert_eq!(
        stdout(&["magnus", "--rep", "wada1:2", "--strands", "2", "1", "--det"]),
        "-t^2"
    );
    assert_eq!(
        stdout(&["magnus", "--rep", "wada2", "1 -2 2 1 -1", "--det"]),
        "1"
    );
    let v = json(&["magnus", "--rep", "wada2", "--strands", "2", "1"]);
    assert_eq!(v["matrix"], serde_json::json!([["2", "-1"], ["1", "0"]]));
    assert_eq!(
        braidrep(&["magnus", "--rep", "wada3", "1"]).status.code(),
        Some(2)
    );
}

#[test]
fn relators_listing() {
    let out = stdout(&["relators", "--strands", "4"]);
    assert_eq!(out.lines().count(), 3);
    assert!(out.lines().any(|l| l == "1 3 -1 -3"));
}

#[test]
fn distinguish_reports() {
    let v = json(&["distinguish", "--a", "wada1:1", "--b", "wada1:3"]);
    assert_eq!(v["outcome"]["status"], "SEPARATED");
    assert_eq!(v["outcome"]["certificate"]["kind"], "determinant_exponent");
    let v = json(&["distinguish", "--a", "wada1:2", "--b", "wada1:-2"]);
    assert_eq!(v["outcome"]["status"], "INCONCLUSIVE");
    let text = stdout(&[
        "distinguish",
        "--a",
        "wada1:2",
        "--b",
        "wada3",
        "--strands",
        "4",
    ]);
    assert!(text.contains("SEPARATED"), "{text}");
    assert!(text.contains("x1 x1"), "{text}");
    assert_eq!(
        braidrep(&[
            "distinguish",
            "--a",
            "wada2",
            "--b",
            "wada3",
            "--strands",
            "2"
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn verify_suites() {
    let out = stdout(&["verify", "lemma", "--strands", "4", "--max-length", "8"]);
    assert!(out.starts_with("PASS lemma"), "{out}");
    let out = stdout(&["verify", "relations", "--strands", "6", "--samples", "50"]);
    assert!(out.starts_with("PASS relations"), "{out}");
    let out = stdout(&[
        "verify",
        "oracle",
        "--strands",
        "3",
        "--max-length",
        "6",
        "--samples",
        "200",
    ]);
    assert!(out.starts_with("PASS oracle"), "{out}");
    let v = json(&[
        "verify",
        "order",
        "--samples",
        "50",
        "--max-length",
        "8",
        "--seed",
        "7",
    ]);
    assert_eq!(v["cases"], 50);
}

#[test]
fn deterministic_for_a_seed() {
    let args = [
        "verify",
        "magnus",
        "--samples",
        "30",
        "--seed",
        "11",
        "--json",
    ];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn exit_codes() {
    assert_eq!(
        braidrep(&["solve", "--strands", "3", "1 x"]).status.code(),
        Some(2)
    );
    assert_eq!(
        braidrep(&["solve", "--strands", "3", "5"]).status.code(),
        Some(2)
    );
    assert_eq!(braidrep(&["act", "1", "x9"]).status.code(), Some(2));
    assert_eq!(braidrep(&["bogus"]).status.code(), Some(2));
    assert_eq!(
        braidrep(&[
            "solve",
            "--strands",
            "3",
            "--budget",
            "1",
            "-1 2 1 -2 -1 2 1 -2"
        ])
        .status
        .code(),
        Some(3)
    );
}
