use std::path::PathBuf;

use blockinv::cli::{run, EXIT_MISMATCH, EXIT_NOT_GROUP_INVERTIBLE, EXIT_OK, EXIT_USAGE};
use blockinv::Matrix;
use serde_json::Value;
use tempfile::TempDir;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn blockinv(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("blockinv").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn write(dir: &TempDir, name: &str, json: &str) -> String {
    let path: PathBuf = dir.path().join(name);
    std::fs::write(&path, json).unwrap();
    path.to_str().unwrap().to_string()
}

fn json(s: &str) -> Value {
    serde_json::from_str(s.trim()).unwrap()
}

fn matrix(v: &Value) -> Matrix {
    serde_json::from_value(v.clone()).unwrap()
}

#[test]
fn drazin_subcommand() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "f.json", r#"{"rows": [["i", "i"], ["0", "0"]]}"#);
    let r = blockinv(&["drazin", &f]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    let v = json(&r.out);
    assert_eq!(v["index"], 1);
    assert_eq!(v["drazin"], json(r#"[["-i", "-i"], ["0", "0"]]"#));
    assert_eq!(v["pi"], json(r#"[["0", "-1"], ["0", "1"]]"#));
}

#[test]
fn groupinv_reports_index() {
    let dir = TempDir::new().unwrap();
    let a = write(&dir, "a.json", r#"{"rows": [["0", "1"], ["0", "0"]]}"#);
    let r = blockinv(&["groupinv", &a]);
    assert_eq!(r.code, EXIT_NOT_GROUP_INVERTIBLE);
    let v = json(&r.err);
    assert_eq!(v["error"], "NotGroupInvertible");
    assert_eq!(v["index"], 2);
    assert!(r.out.is_empty());
}

#[test]
fn block_worked_example_round_trips() {
    let dir = TempDir::new().unwrap();
    let e = write(&dir, "e.json", r#"{"rows": [["1", "2"], ["0", "-1"]]}"#);
    let f = write(&dir, "f.json", r#"{"rows": [["i", "i"], ["0", "0"]]}"#);
    let r = blockinv(&["block", "--theorem", "thm3.1", "--E", &e, "--F", &f, "--shape", "auto"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    let v = json(&r.out);
    let assembled = matrix(&v["assembled"]);
    assert_eq!(
        assembled,
        Matrix::from_str_rows([
            ["0", "1", "-i", "-i"],
            ["0", "-1", "0", "0"],
            ["-i", "-i", "1", "1"],
            ["0", "0", "0", "0"],
        ])
        .unwrap()
    );
    assert_eq!(matrix(&v["gamma"]), Matrix::from_int_rows([[0, 1], [0, -1]]));
    assert_eq!(v["delta"], v["lambda"]);
    assert!(v["conditions"]["conditions"].is_array());

    // Printed matrices parse back to themselves.
    let again = write(&dir, "m.json", &serde_json::json!({ "rows": v["assembled"] }).to_string());
    let r = blockinv(&["drazin", &again]);
    assert_eq!(matrix(&json(&r.out)["drazin"]).rows(), 4);
}

#[test]
fn block_failures() {
    let dir = TempDir::new().unwrap();
    let z = write(&dir, "z.json", r#"{"rows": [["0"]]}"#);
    let r = blockinv(&["block", "--theorem", "thm2.1", "--E", &z, "--F", &z]);
    assert_eq!(r.code, EXIT_NOT_GROUP_INVERTIBLE);
    let v = json(&r.err);
    assert_eq!(v["error"], "NotGroupInvertible");
    assert_eq!(v["index"], 2);
    assert_eq!(v["condition"], "E^pi F^pi=0");

    let r = blockinv(&["block", "--theorem", "thm2.1", "--E", &z, "--F", &z, "--shape", "EF_F0"]);
    assert_eq!(r.code, EXIT_USAGE);
    assert_eq!(json(&r.err)["error"], "UsageError");

    let r = blockinv(&["block", "--theorem", "thm9.9", "--E", &z, "--F", &z]);
    assert_eq!(r.code, EXIT_USAGE);
    assert_eq!(json(&r.err)["error"], "UnknownTheorem");

    let nil = write(&dir, "n.json", r#"{"rows": [["0", "1"], ["0", "0"]]}"#);
    let id = write(&dir, "i.json", r#"{"rows": [["1", "0"], ["0", "1"]]}"#);
    let r = blockinv(&["block", "--theorem", "cor3.3", "--E", &nil, "--F", &id]);
    assert_eq!(r.code, EXIT_USAGE);
    assert_eq!(json(&r.err)["error"], "HypothesisViolated");
}

#[test]
fn check_subcommand() {
    let dir = TempDir::new().unwrap();
    let z = write(&dir, "z.json", r#"{"rows": [["0"]]}"#);
    let r = blockinv(&["check", "--theorem", "thm2.1", "--E", &z, "--F", &z]);
    assert_eq!(r.code, EXIT_OK);
    let v = json(&r.out);
    assert_eq!(v["theorem"], "thm2.1");
    let entries = v["conditions"].as_array().unwrap();
    let epfp = entries.iter().find(|c| c["name"] == "E^pi F^pi=0").unwrap();
    assert_eq!(epfp["holds"], false);
    assert_eq!(epfp["residual"], json(r#"[["1"]]"#));
}

#[test]
fn parse_errors() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.json", r#"{"rows": [["1/0"]]}"#);
    let r = blockinv(&["drazin", &bad]);
    assert_eq!(r.code, EXIT_USAGE);
    assert_eq!(json(&r.err)["error"], "ParseError");

    let ragged = write(&dir, "ragged.json", r#"{"rows": [["1", "2"], ["3"]]}"#);
    assert_eq!(blockinv(&["drazin", &ragged]).code, EXIT_USAGE);

    let empty = write(&dir, "empty.json", r#"{"rows": []}"#);
    assert_eq!(blockinv(&["drazin", &empty]).code, EXIT_USAGE);

    let r = blockinv(&["drazin", "/nonexistent/a.json"]);
    assert_eq!(json(&r.err)["error"], "IoError");

    let r = blockinv(&["frobnicate"]);
    assert_eq!(r.code, EXIT_USAGE);
    assert_eq!(json(&r.err)["error"], "UsageError");

    assert_eq!(blockinv(&["--help"]).code, EXIT_OK);
}

#[test]
fn verify_campaign() {
    let r = blockinv(&["verify", "--theorem", "thm2.1", "--trials", "50", "--max-n", "4", "--seed", "7"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    let lines: Vec<Value> = r.out.lines().map(json).collect();
    assert_eq!(lines.len(), 51);
    for (k, line) in lines[..50].iter().enumerate() {
        assert_eq!(line["trial"], k);
        assert_eq!(line["verdict"], "AgreeExists");
    }
    let summary = &lines[50]["summary"];
    assert_eq!(summary["agree_exists"], 50);
    assert_eq!(summary["mismatch"], 0);

    let parallel = blockinv(&[
        "verify", "--theorem", "thm2.1", "--trials", "50", "--max-n", "4", "--seed", "7", "--jobs", "3",
    ]);
    assert_eq!(parallel.out, r.out);
}

#[test]
fn verify_negative_campaign() {
    let r = blockinv(&["verify", "--theorem", "cor3.2", "--trials", "10", "--max-n", "4", "--seed", "1", "--negative"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    let summary = json(r.out.lines().last().unwrap());
    assert_eq!(summary["summary"]["agree_not_exists"], 10);

    let r = blockinv(&["verify", "--theorem", "cor3.3", "--trials", "3", "--negative"]);
    assert_eq!(r.code, EXIT_USAGE);
    assert_eq!(json(&r.err)["error"], "GenerationExhausted");
}

#[test]
fn worked_example_subcommand() {
    let r = blockinv(&["example-3.5"]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.lines().any(|l| l.trim() == "PASS"));
    assert!(r.out.contains("-i"));
}

#[test]
fn exit_code_constants() {
    assert_eq!((EXIT_OK, EXIT_USAGE, EXIT_NOT_GROUP_INVERTIBLE, EXIT_MISMATCH), (0, 1, 2, 3));
}
