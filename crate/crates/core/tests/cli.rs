use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bicyclic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn golden(name: &str) -> Value {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    serde_json::from_str(&text).expect("golden file is json")
}

fn assert_json(args: &[&str], expected_code: i32, file: &str) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = run(&full);
    assert_eq!(out.status.code(), Some(expected_code), "{args:?}");
    let actual: Value = serde_json::from_str(&stdout(&out)).expect("one json document");
    assert_eq!(actual, golden(file), "{args:?}");
}

#[test]
fn text_examples() {
    let cases: [(&[&str], &str); 5] = [
        (&["mul", "b^1a^2", "b^3a^4"], "b^2a^4"),
        (&["pow", "b^1a^3", "4"], "b^1a^9"),
        (&["apply", "lambda(2,1)*vs", "b^1a^2"], "b^2a^4"),
        (&["compose", "sigma(1,2)", "sigma(3,4)"], "sigma(3,8)"),
        (
            &["classify", "--image-a", "b^2a^5", "--image-ba", "b^4a^4"],
            "PaperInjective lambda(3,1)*vs^2",
        ),
    ];
    for (args, expected) in cases {
        let out = run(args);
        assert!(out.status.success(), "{args:?}");
        assert_eq!(stdout(&out).trim_end(), expected, "{args:?}");
    }
}

#[test]
fn compose_chains_left_to_right() {
    let out = run(&["compose", "lambda(2)", "sigma(1,1)", "vs^2"]);
    assert_eq!(stdout(&out).trim_end(), "sigma(3,2)");
}

#[test]
fn json_documents_match_golden_files() {
    assert_json(&["mul", "b^1a^2", "b^3a^4"], 0, "mul.json");
    assert_json(&["compose", "sigma(1,2)", "sigma(3,4)"], 0, "compose.json");
    assert_json(&["classify", "--image-a", "b^2a^5", "--image-ba", "b^4a^4"], 0, "classify.json");
    assert_json(&["classify", "--image-a", "1", "--image-ba", "b^1a^1"], 0, "classify_inconsistent.json");
    assert_json(&["enumerate", "--gen-exp", "2", "--bound", "4", "--injective-only"], 0, "enumerate.json");
    assert_json(&["verify", "law-2.4", "--bound", "2"], 0, "verify.json");
    assert_json(&["apply", "lambda(2)", "b^1a^x"], 2, "parse_error.json");
}

#[test]
fn parse_errors_go_to_stderr_with_position() {
    let out = run(&["mul", "b^1a^x", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("position 5"), "{err}");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["verify", "law-9.9"]).status.code(), Some(2));
    assert_eq!(run(&["compose"]).status.code(), Some(2));
    assert_eq!(run(&["apply", "sigma(1,0)", "a"]).status.code(), Some(2));
}

#[test]
fn overflow_is_a_structured_error() {
    let big = format!("b^{}", u64::MAX);
    let out = run(&["--format", "json", "mul", &big, "b^1"]);
    assert_eq!(out.status.code(), Some(2));
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["error"]["kind"], "overflow");
}

#[test]
fn every_suite_passes_at_small_bounds() {
    let out = run(&["--format", "json", "suites"]);
    let doc: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let names: Vec<String> = doc["suites"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["name"].as_str().unwrap().to_owned())
        .collect();
    assert_eq!(names.len(), 11);
    for name in names {
        let bound = if name == "thm-3.10" || name == "core-axioms" { "6" } else { "3" };
        let out = run(&["verify", &name, "--bound", bound, "--gen-exp", "3"]);
        assert_eq!(out.status.code(), Some(0), "{name}: {}", stdout(&out));
        assert!(stdout(&out).trim_end().ends_with("PASS"));
    }
}

#[test]
fn csv_output() {
    let out = run(&["enumerate", "--gen-exp", "1", "--bound", "2", "--csv"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("a_image,ba_image,verdict,parameters,injective"));
    assert!(text.contains("a^1,b^1a^1,PaperInjective,id,true"));
}
