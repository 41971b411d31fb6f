use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superflats")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("JSON output")
}

#[test]
fn petersen_c_rank() {
    let v = json(&["crank", "petersen"]);
    assert_eq!(v["c_rank"], 3);
    assert_eq!(v["schema"], 1);
    let v = json(&["crank", "petersen", "--all-routes"]);
    for route in ["height", "matrix", "recursive", "transversal"] {
        assert_eq!(v["routes"][route], 3, "{route}");
    }
}

#[test]
fn heawood_independent_counts() {
    let v = json(&["independents", "heawood", "--count"]);
    assert_eq!(v["count"], 456);
    assert_eq!(v["by_size"], serde_json::json!([1, 14, 91, 350]));
}

#[test]
fn complement_of_petersen() {
    let v = json(&["complement", "petersen"]);
    assert_eq!(v["complement_c_rank"], 5);
    assert_eq!(v["report"]["sum"], 8);
}

#[test]
fn square_cm_rank_exceeds_c_rank() {
    let v = json(&["cmrank", "cycle:4"]);
    assert_eq!(v["c_rank"], 2);
    assert_eq!(v["cm_rank"], 3);
    assert_eq!(v["minor_c_rank"], 3);
}

#[test]
fn fano_levi_graph() {
    let v = json(&["levi", "fano"]);
    assert_eq!(v["girth"], 6);
    assert_eq!(v["flats_structure"]["flats"], 30);
    assert_eq!(v["flats_structure"]["coproduct_matches"], true);
}

#[test]
fn edge_list_file_input() {
    let dir = std::env::temp_dir().join(format!("superflats-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("k4.txt");
    std::fs::write(&path, "4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").unwrap();
    let v = json(&["crank", path.to_str().unwrap()]);
    assert_eq!(v["c_rank"], 4);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_deterministic() {
    for args in [&["analyze", "petersen"][..], &["flats", "coimbra"], &["forbidden", "2"], &["geo", "petersen"]] {
        let a = run(args);
        let b = run(args);
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn forbidden_minors_for_rank_two() {
    let out = run(&["forbidden", "2", "--plain"]);
    assert!(out.status.success());
    let lines: Vec<String> = String::from_utf8(out.stdout).unwrap().lines().map(String::from).collect();
    assert!(!lines.is_empty());
    for g6 in &lines {
        let v = json(&["crank", g6]);
        assert_eq!(v["c_rank"], 3, "{g6}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["crank", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["--limits", "cm=3", "cmrank", "petersen"]).status.code(), Some(3));
    assert_eq!(run(&["geo", "k:4"]).status.code(), Some(4));
    assert_eq!(run(&["crank", "g3"]).status.code(), Some(4));
    assert_eq!(run(&["crank", "/nonexistent/dir/"]).status.code(), Some(2));
}

#[test]
fn verification_suite_passes() {
    let out = run(&["verify-theorems", "--max-n", "6"]);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(out.status.success(), "{err}");
    assert!(!err.contains("FAIL"));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], 1);
}
