use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sklyanin"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(args: &[&str], dir: &Path, name: &str) -> (i32, Value) {
    let path = dir.join(name);
    let mut full = args.to_vec();
    let p = path.to_str().unwrap().to_owned();
    full.extend(["--quiet", "--json", &p]);
    let out = run(&full);
    let text = std::fs::read_to_string(&path).expect("report written");
    (
        out.status.code().unwrap(),
        serde_json::from_str(&text).unwrap(),
    )
}

fn check<'a>(r: &'a Value, name: &str) -> &'a Value {
    r["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == name)
        .unwrap_or_else(|| panic!("no check {name}"))
}

#[test]
fn theorem1_default_passes() {
    let dir = tempfile::tempdir().unwrap();
    let (code, r) = report(&["theorem1"], dir.path(), "t1.json");
    assert_eq!(code, 0);
    assert_eq!(r["suite"], "theorem1");
    assert_eq!(r["config"]["trials"], 20);
    assert_eq!(r["elapsed_ms"], 0);
    for c in r["checks"].as_array().unwrap() {
        assert!(c["status"] != "fail", "{c}");
        assert!(c["paper_ref"].is_string() && c["data"].is_object());
    }
}

#[test]
fn corrupted_central_element_exits_one() {
    let out = run(&["theorem1", "--trials", "2", "--corrupt-c3", "--quiet"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["theorem1", "--trials", "0"]).status.code(), Some(2));
    assert_eq!(run(&["reps", "--n", "3"]).status.code(), Some(2));
    assert_eq!(run(&["blowup", "--n", "2,6"]).status.code(), Some(2));
    assert_eq!(run(&["reps", "--tol-rank", "-1"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["curve", "--seed", "x"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn reps_report_contents() {
    let dir = tempfile::tempdir().unwrap();
    let (code, r) = report(&["reps", "--n", "2,5"], dir.path(), "reps.json");
    assert_eq!(code, 0);
    let norm = check(&r, "norm-points (n=5)");
    assert_eq!(norm["status"], "pass");
    assert_eq!(
        norm["data"]["cubic"]["coefficients"]
            .as_array()
            .unwrap()
            .len(),
        10
    );
    let rel = check(&r, "relations (n=5)");
    assert_eq!(rel["data"]["rep"]["orientation"], "reverse");
    assert_eq!(check(&r, "simplicity (n=2)")["data"]["word_span"], 4);
}

#[test]
fn blowup_weights_and_recorded_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    let (code, r) = report(&["blowup", "--n", "2,5"], dir.path(), "b.json");
    assert_eq!(code, 0);
    let t2 = check(&r, "theorem3-report (n=2)");
    assert_eq!(t2["data"]["tangent_dim_b"], 7);
    let w2 = &check(&r, "normal-weights-B (n=2)")["data"]["weights"]["multiplicities"];
    assert_eq!(w2, &serde_json::json!({ "0": 2, "1": 2 }));
    let w5 = &check(&r, "normal-weights-B (n=5)")["data"]["weights"]["multiplicities"];
    assert_eq!(w5, &serde_json::json!({ "0": 2, "3": 1, "4": 1 }));
    assert_eq!(t2["status"], "mismatch");
    assert_eq!(t2["data"]["subring_match"], false);
}

#[test]
fn identical_seeds_give_identical_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let out = run(&[
            "all",
            "--seed",
            "7",
            "--quiet",
            "--json",
            p.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let c = dir.path().join("c.json");
    run(&[
        "curve",
        "--seed",
        "8",
        "--quiet",
        "--json",
        c.to_str().unwrap(),
    ]);
    let d = dir.path().join("d.json");
    run(&[
        "curve",
        "--seed",
        "7",
        "--quiet",
        "--json",
        d.to_str().unwrap(),
    ]);
    assert_ne!(std::fs::read(&c).unwrap(), std::fs::read(&d).unwrap());
}

#[test]
fn stdout_report_without_json_flag() {
    let out = run(&["torsion", "--n", "4", "--quiet"]);
    assert_eq!(out.status.code(), Some(0));
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(check(&r, "torsion-point (n=4)")["data"]["order"], 4);
}
