//! End-to-end runs of the `lab` binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn lab(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lab"))
        .args(args)
        .current_dir(dir)
        .env_remove("LAB_SEED")
        .output()
        .expect("lab runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn gen_cover_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let out = lab(&["gen", "gnp", "--n", "25", "--p", "0.4", "-o", "g.txt"], d);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let side: Value =
        serde_json::from_str(&fs::read_to_string(d.join("g.txt.json")).unwrap()).unwrap();
    assert_eq!(side["n"], 25);

    for algo in [
        "quadratic",
        "threshold",
        "peel22",
        "peel23",
        "partition-product",
    ] {
        let out = lab(&["cover", "-i", "g.txt", "--algo", algo, "-o", "c.json"], d);
        assert!(
            out.status.success(),
            "{algo}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        let cover: Value =
            serde_json::from_str(&fs::read_to_string(d.join("c.json")).unwrap()).unwrap();
        assert_eq!(cover["valid"], true);
        assert_eq!(cover["graph_hash"], side["graph_hash"]);
        let out = lab(&["verify", "-i", "g.txt", "--cover", "c.json"], d);
        assert!(out.status.success());
        assert_eq!(json(&out)["valid"], true);
    }
}

#[test]
fn verify_fails_on_bad_cover() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    fs::write(d.join("c4.txt"), "4 4\n0 1\n1 2\n2 3\n0 3\n").unwrap();
    fs::write(d.join("bad.json"), "[[0, 1], [1, 2], [2, 3]]").unwrap();
    let out = lab(&["verify", "-i", "c4.txt", "--cover", "bad.json"], d);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["uncovered_edges"], serde_json::json!([[0, 3]]));
    fs::write(d.join("nonclique.json"), "[[0, 2]]").unwrap();
    let out = lab(&["verify", "-i", "c4.txt", "--cover", "nonclique.json"], d);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exact_reports_oracles() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert!(
        lab(&["gen", "kab", "--a", "3", "--b", "3", "-o", "k33.txt"], d)
            .status
            .success()
    );
    let v = json(&lab(&["exact", "-i", "k33.txt"], d));
    assert_eq!(
        (v["alpha"].clone(), v["omega"].clone(), v["min_ecc"].clone()),
        (3.into(), 2.into(), 9.into())
    );
}

#[test]
fn seed_env_fallback_matches_flag() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let a = lab(
        &["--seed", "17", "gen", "gnp", "--n", "15", "--p", "0.5"],
        d,
    );
    let b = Command::new(env!("CARGO_BIN_EXE_lab"))
        .args(["gen", "gnp", "--n", "15", "--p", "0.5"])
        .env("LAB_SEED", "17")
        .output()
        .unwrap();
    let c = lab(&["gen", "gnp", "--n", "15", "--p", "0.5"], d);
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn experiment_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    fs::write(
        d.join("spec.json"),
        r#"{"instances":[{"family":"gnp","n":[10,20],"p":[0.5]},{"family":"kab","pairs":[[2,2]]}],"seeds":[1,2]}"#,
    )
    .unwrap();
    let a = lab(&["experiment", "--spec", "spec.json"], d);
    let b = lab(&["experiment", "--spec", "spec.json"], d);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.starts_with("instance_id,family,n,edge_count,algorithm,"));
    assert_eq!(text.lines().count(), 1 + 5 * 5);
    let j = lab(
        &[
            "experiment",
            "--spec",
            "spec.json",
            "--format",
            "json",
            "--emit-covers",
        ],
        d,
    );
    assert!(json(&j)["rows"][0]["cover"].is_array());
}

#[test]
fn conjecture_and_lowerbound() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let out = lab(&["conjecture", "--max-n", "6"], d);
    assert!(out.status.success());
    assert_eq!(json(&out)["counterexamples"], serde_json::json!([]));
    let out = lab(
        &["lowerbound", "--s", "3", "--sizes", "5", "--format", "json"],
        d,
    );
    assert!(out.status.success());
    assert_eq!(json(&out)[0]["cover_lower_bound"], 7);
}

#[test]
fn bad_input_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    fs::write(d.join("broken.txt"), "3 1\n0 0\n").unwrap();
    let out = lab(&["cover", "-i", "broken.txt"], d);
    assert_eq!(out.status.code(), Some(1));
    let out = lab(&["gen", "incidence", "--q", "4"], d);
    assert_eq!(out.status.code(), Some(1));
}
