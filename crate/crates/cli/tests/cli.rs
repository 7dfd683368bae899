use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_primfact"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = run(&full);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn value(args: &[&str]) -> String {
    json(args)["value"]
        .as_str()
        .expect("scalar value")
        .to_string()
}

#[test]
fn printed_examples() {
    assert_eq!(value(&["count", "--perm", "(1 2 3)", "--length", "2"]), "2");
    assert_eq!(
        value(&["count", "--perm", "(1 2 3 4)", "--type", "2,1"]),
        "3"
    );
    assert_eq!(value(&["count", "--perm", "(1 2)", "--length", "2"]), "0");
    assert_eq!(
        value(&["minimal", "--cycle-type", "6,4", "--type", "3,2,2,1"]),
        "25"
    );
    assert_eq!(value(&["minimal", "--cycle-type", "3"]), "2");
    assert_eq!(value(&["minimal", "--cycle-type", "1,1,1"]), "1");
    assert_eq!(value(&["full-cycle", "--n", "3", "--genus", "1"]), "10");
    assert_eq!(value(&["hurwitz", "--cycle-type", "5"]), "125");
    assert_eq!(
        value(&["correlator", "--perm", "(1 2)", "--dim", "2"]),
        "-1/6"
    );
    assert_eq!(
        value(&[
            "correlator",
            "--perm",
            "2,1",
            "--dim",
            "2",
            "--method",
            "gram"
        ]),
        "-1/6"
    );
}

#[test]
fn phi_outputs() {
    let doc = json(&["phi", "--cycle-type", "3", "--order", "6"]);
    let coeffs: Vec<&str> = doc["value"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(coeffs, ["0", "0", "2", "0", "10", "0", "42"]);
    assert_eq!(
        value(&["phi", "--cycle-type", "3", "--closed-form"]),
        "2*z^2 / (1 - 5*z^2 + 4*z^4)"
    );
}

#[test]
fn methods_give_identical_bytes() {
    for (perm, flag, arg) in [
        ("(1 2 3)", "--length", "4"),
        ("(1 2)(3 4 5)", "--length", "5"),
        ("(1 2 3 4)", "--type", "2,1"),
        ("(1 2 3)(4 5)", "--type", "2,1,1"),
    ] {
        let values: Vec<String> = ["auto", "brute", "jm", "character"]
            .iter()
            .map(|m| value(&["count", "--perm", perm, flag, arg, "--method", m]))
            .collect();
        assert!(
            values.windows(2).all(|w| w[0] == w[1]),
            "{perm} {arg}: {values:?}"
        );
    }
    let fc: Vec<String> = ["cf", "sinh", "brute"]
        .iter()
        .map(|m| value(&["full-cycle", "--n", "4", "--genus", "2", "--method", m]))
        .collect();
    assert!(fc.windows(2).all(|w| w[0] == w[1]), "{fc:?}");
    assert_eq!(
        value(&[
            "correlator",
            "--perm",
            "(1 2 3)(4)",
            "--dim",
            "5",
            "--method",
            "gram"
        ]),
        value(&[
            "correlator",
            "--perm",
            "(1 2 3)(4)",
            "--dim",
            "5",
            "--method",
            "character"
        ])
    );
}

/// Rebuilds a command line from the echoed query.
fn argv_from_query(query: &Value) -> Vec<String> {
    let mut argv = vec![
        "--json".to_string(),
        query["command"].as_str().unwrap().to_string(),
    ];
    for (key, val) in query["args"].as_object().unwrap() {
        argv.push(format!("--{key}"));
        let val = val.as_str().unwrap();
        if val != "true" {
            argv.push(val.to_string());
        }
    }
    argv
}

#[test]
fn json_round_trips() {
    let queries: [&[&str]; 7] = [
        &[
            "count", "--perm", "3,1,2", "--length", "4", "--method", "jm",
        ],
        &["count", "--perm", "(1 2 3 4)", "--type", "2,1"],
        &["minimal", "--cycle-type", "6,4", "--type", "3,2,2,1"],
        &["full-cycle", "--n", "5", "--genus", "2", "--method", "sinh"],
        &["hurwitz", "--cycle-type", "2,2", "--genus", "1"],
        &["phi", "--cycle-type", "2,2", "--closed-form"],
        &["correlator", "--perm", "(1 3)", "--dim", "4"],
    ];
    for args in queries {
        let first = json(args);
        let argv = argv_from_query(&first["query"]);
        let refs: Vec<&str> = argv.iter().map(String::as_str).collect();
        let out = run(&refs);
        assert!(out.status.success(), "{argv:?}");
        let second: Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(first["query"], second["query"], "{args:?}");
        assert_eq!(first["value"], second["value"], "{args:?}");
        assert_eq!(first["method"], second["method"], "{args:?}");
    }
}

#[test]
fn verify_suite_passes() {
    let out = run(&["verify", "--suite", "all", "--max-n", "4"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    let doc = json(&["verify", "--suite", "matrix", "--max-n", "3", "--jobs", "2"]);
    assert_eq!(doc["value"], "pass");
    let keys: Vec<&str> = doc["cases"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["case"].as_str().unwrap())
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn exit_codes() {
    assert_eq!(
        run(&["count", "--perm", "(1 2", "--length", "2"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(run(&["count", "--perm", "(1 2)"]).status.code(), Some(1));
    assert_eq!(
        run(&["count", "--perm", "(1 2)", "--length", "2", "--type", "1,1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["minimal", "--cycle-type", "3", "--type", "3"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["correlator", "--perm", "(1 2 3)", "--dim", "2"])
            .status
            .code(),
        Some(1)
    );
    let budget = run(&[
        "--max-nodes",
        "1000",
        "count",
        "--perm",
        "(1 2 3 4 5 6)",
        "--length",
        "9",
        "--method",
        "brute",
    ]);
    assert_eq!(budget.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&budget.stderr).contains("budget"));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn human_output_is_one_line() {
    let out = run(&["hurwitz", "--cycle-type", "4"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 1);
    assert!(text.starts_with("16  ["), "{text}");
}
