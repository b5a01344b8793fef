use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_nulldecomp"));
    cmd.env_remove("NULLDECOMP_MAX_N");
    cmd
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn run_with_stdin(mut cmd: Command, input: &str) -> Output {
    let mut child = cmd
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn analyze_figure_one_tree() {
    let out = bin()
        .arg("analyze")
        .arg(fixture("fig1_T1.edges"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["shape"], "tree");
    assert_eq!(r["nullity"], 2);
    assert_eq!(r["supp"], serde_json::json!([1, 2, 3]));
    assert_eq!(r["alpha"], 4);
    assert_eq!(r["nu"], 2);
    assert_eq!(r["labels"][1], "v2");
    assert_eq!(r["forest"]["core"], serde_json::json!([0]));
}

#[test]
fn analyze_figure_seven_with_verification() {
    let out = bin()
        .args(["analyze", "--verify"])
        .arg(fixture("fig7.edges"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["unicyclic"]["type"], "II");
    assert_eq!(r["nu"], 8);
    assert_eq!(r["verification"]["nu_oracle"], 8);
    assert_eq!(r["verification"]["mismatch"], false);
    assert_eq!(r["unicyclic"]["matching"].as_array().unwrap().len(), 8);
}

#[test]
fn reports_are_deterministic() {
    let run = || {
        bin()
            .args(["analyze", "--verify"])
            .arg(fixture("fig4.edges"))
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run(), run());
}

#[test]
fn malformed_input_exits_two() {
    let out = run_with_stdin(
        {
            let mut c = bin();
            c.arg("analyze");
            c
        },
        "0 1\n1 2 3\n",
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn unsupported_shape_exits_three() {
    let mut c = bin();
    c.args(["analyze", "--format", "g6"]);
    let out = run_with_stdin(c, "C~\n");
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn graph6_input() {
    let mut c = bin();
    c.args(["analyze", "--format", "g6"]);
    let out = run_with_stdin(c, "Bw\n");
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["shape"], "cycle");
    assert_eq!(r["unicyclic"]["pure_cycle"], true);
    assert_eq!(r["singular"], false);
}

#[test]
fn oracle_limit_from_environment() {
    let mut c = bin();
    c.args(["analyze", "--verify"]).env("NULLDECOMP_MAX_N", "5");
    let out = c.arg(fixture("fig1_T1.edges")).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert!(r["verification"]["skipped"]
        .as_str()
        .unwrap()
        .contains("limit 5"));
}

#[test]
fn dot_output() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("t1.dot");
    let out = bin()
        .arg("analyze")
        .arg("--dot")
        .arg(&dot)
        .arg(fixture("fig1_T1.edges"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(dot).unwrap();
    assert_eq!(text.matches("shape=box").count(), 3);
    assert!(text.contains("1 [label=\"v2\", shape=box];"));
}

#[test]
fn verify_cycles() {
    let out = bin()
        .args([
            "verify", "--kind", "cycle", "--count", "22", "--min-n", "3", "--max-n", "24",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("22/22 singular iff 4|n ok"));
    assert!(text.contains("singular at n in {4, 8, 12, 16, 20, 24}"));
}

#[test]
fn verify_trees() {
    let out = bin()
        .args(["verify", "--kind", "tree", "--count", "100", "--seed", "7"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    for check in ["α", "ν", "EG=Supp"] {
        assert!(text.contains(&format!("100/100 {check} ok")), "{text}");
    }
}

#[test]
fn fixtures_pass() {
    let out = bin()
        .args(["fixtures", "--dir"])
        .arg(fixture(""))
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
}

#[test]
fn fixtures_report_differences() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::copy(fixture("fig1_T1.edges"), dir.path().join("fig1_T1.edges")).unwrap();
    std::fs::write(
        dir.path().join("expected.json"),
        r#"{"cases": [{"name": "t1", "file": "fig1_T1.edges", "alpha": 5}]}"#,
    )
    .unwrap();
    let out = bin()
        .args(["fixtures", "--dir"])
        .arg(dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("<-- differs"));
    assert!(text.contains("expected"));
}
