use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_desargues")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn demo_reports_the_sweep() {
    let o = run(&["demo", "--n", "3", "--p", "5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("points: 15"), "{out}");
    assert!(out.contains("vertices: 15/15 pass"), "{out}");
    assert!(out.contains("identity: 15 = 8+1+6"), "{out}");
    assert!(out.contains("substructures: 15/20/15"), "{out}");
}

#[test]
fn demo_over_gf2_is_refused() {
    let o = run(&["demo", "--n", "2", "--p", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("FieldTooSmall"), "{}", stderr(&o));
}

#[test]
fn demo_json_and_extension_field() {
    let o = run(&["demo", "--n", "2", "--p", "2", "--k", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["points"], 10);
    assert_eq!(v["sweep"]["passed"], 10);
}

#[test]
fn seeded_output_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for p in [&a, &b] {
        let o = run(&["demo", "--n", "3", "--p", "7", "--seed", "42", "--out", path(p)]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    let e1 = stdout(&run(&["enumerate", "--kind", "sectioned", "--n", "2", "--p", "3", "--format", "json"]));
    let e2 = stdout(&run(&["enumerate", "--kind", "sectioned", "--n", "2", "--p", "3", "--format", "json"]));
    assert_eq!(e1, e2);
}

#[test]
fn enumerate_frames_matches_the_group() {
    let o = run(&["enumerate", "--kind", "frames", "--n", "2", "--p", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("ordered: 5616"), "{out}");
    assert!(out.contains("group order: 5616"), "{out}");
}

#[test]
fn file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let d = |name: &str| dir.path().join(name);
    let o = run(&[
        "demo",
        "--n",
        "3",
        "--p",
        "5",
        "--seed",
        "7",
        "--out",
        path(&d("config.json")),
        "--arc-out",
        path(&d("arc.json")),
        "--pair-out",
        path(&d("pair.json")),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));

    // Sectioning the written arc reproduces the configuration.
    let o = run(&["section", path(&d("arc.json")), "--out", path(&d("again.json"))]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(fs::read(d("config.json")).unwrap(), fs::read(d("again.json")).unwrap());

    for f in ["config.json", "pair.json"] {
        let o = run(&["verify", path(&d(f))]);
        assert_eq!(o.status.code(), Some(0), "{f}: {}", stdout(&o));
        assert!(!stdout(&o).contains("FAIL"));
    }

    // Lift the pair to an arc, section it again and compare around (1,2).
    let o = run(&["lift", path(&d("pair.json")), "--seed", "3", "--out", path(&d("lifted.json"))]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = run(&["section", path(&d("lifted.json")), "--out", path(&d("back.json"))]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let pair: Value = serde_json::from_str(&fs::read_to_string(d("pair.json")).unwrap()).unwrap();
    let back: Value = serde_json::from_str(&fs::read_to_string(d("back.json")).unwrap()).unwrap();
    let at = |i: u64, j: u64| {
        let label = serde_json::json!([i, j]);
        back["points"].as_array().unwrap().iter().find(|p| p["label"] == label).unwrap()["coords"].clone()
    };
    assert_eq!(at(1, 2), pair["vertex"]);
    for i in 0..4 {
        assert_eq!(at(1, i as u64 + 3), pair["a"][i]);
        assert_eq!(at(2, i as u64 + 3), pair["b"][i]);
    }

    let o = run(&["export", path(&d("config.json")), "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let csv = stdout(&o);
    assert!(csv.starts_with("point,"));
    assert_eq!(csv.lines().count(), 16);
    let o = run(&["export", path(&d("config.json")), "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["points"].as_array().unwrap().len(), 15);
}

#[test]
fn failed_check_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let pair = dir.path().join("pair.json");
    let o = run(&["demo", "--n", "2", "--p", "5", "--pair-out", path(&pair)]);
    assert_eq!(o.status.code(), Some(0));
    let mut v: Value = serde_json::from_str(&fs::read_to_string(&pair).unwrap()).unwrap();
    // A stored vertex that is not the centre of perspectivity.
    v["vertex"] = v["a"][0].clone();
    fs::write(&pair, serde_json::to_string(&v).unwrap()).unwrap();
    let o = run(&["verify", path(&pair)]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    assert!(stdout(&o).contains("FAIL vertex"), "{}", stdout(&o));
}

#[test]
fn usage_errors_exit_two() {
    let o = run(&["verify", "/nonexistent/config.json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("cannot read"));
    assert_eq!(run(&["demo", "--n", "3", "--p", "5", "--format", "csv"]).status.code(), Some(2));
    assert_eq!(run(&["demo", "--p", "5"]).status.code(), Some(2));
    assert_eq!(run(&["demo", "--n", "3", "--p", "6"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "--kind", "arcs", "--n", "2", "--p", "3"]).status.code(), Some(2));
}
