use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use qtau_core::BoundQuiverAlgebra;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures").join(format!("{name}.qa"))
}

fn qtau(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtau")).args(args).env("QTAU_SEED", "3").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn hasse_counts_nodes() {
    for (name, nodes) in [("a1b", 18), ("b1b", 6), ("point", 2)] {
        let o = qtau(&["hasse", path(&fixture(name))]);
        assert!(o.status.success());
        assert!(stdout(&o).contains(&format!("nodes={nodes} ")), "{name}: {}", stdout(&o));
        assert!(stdout(&o).contains("complete=true"));
    }
}

#[test]
fn hasse_writes_dot_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let (dot, json) = (dir.path().join("a1b.dot"), dir.path().join("a1b.json"));
    let o = qtau(&["hasse", path(&fixture("a1b")), "--dot", path(&dot), "--json", path(&json)]);
    assert!(o.status.success());
    let dot = std::fs::read_to_string(dot).unwrap();
    assert_eq!(dot.matches(" -> ").count(), 27);
    let value: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(json).unwrap()).unwrap();
    assert_eq!(value["nodes"].as_array().unwrap().len(), 18);
    assert_eq!(value["complete"], true);
}

#[test]
fn partial_poset_exits_nonzero() {
    let o = qtau(&["hasse", path(&fixture("a2")), "--max-nodes", "10"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("complete=false"));
}

#[test]
fn tau_of_three_two_one() {
    let o = qtau(&["tau", path(&fixture("a1a")), "uniserial:3>2>1"]);
    assert!(stdout(&o).starts_with("dims=(1,2,1)\n"), "{}", stdout(&o));
    let o = qtau(&["tau", path(&fixture("b1a")), "uniserial:2>1"]);
    assert!(stdout(&o).contains("layers=1/2"));
    let o = qtau(&["tau", path(&fixture("a2")), "proj:3"]);
    assert!(stdout(&o).contains("tau M = 0"));
}

#[test]
fn extend_writes_algebra_and_map() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("a.qa");
    let o = qtau(&["extend", path(&fixture("b2")), "--at", "3", "--out", path(&out)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let a = BoundQuiverAlgebra::parse(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let a2 = BoundQuiverAlgebra::parse(&std::fs::read_to_string(fixture("a2")).unwrap()).unwrap();
    assert_eq!(a.dim(), a2.dim());
    let map: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("a.qa.map.json")).unwrap()).unwrap();
    assert_eq!(map["new_vertex"]["label"], "5");
    assert_eq!(map["old_vertices"]["3"], 2);
    assert_eq!(map["new_arrows"][0]["target"], "3");
    assert_eq!(qtau(&["hasse", path(&out)]).status.code(), Some(0));
}

#[test]
fn extend_with_multiplicity() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("a.qa");
    assert!(qtau(&["extend", path(&fixture("b1b")), "--at", "2,2", "--out", path(&out)]).status.success());
    let a = BoundQuiverAlgebra::parse(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(a.dim(), 10);
}

#[test]
fn mutate_top_of_a1b() {
    let o = qtau(&["mutate", path(&fixture("a1b")), "proj:1 + proj:2 + proj:3", "--at", "1"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("to=2 ⊕ 2/1 ⊕ 3/2/1"), "{}", stdout(&o));
}

#[test]
fn mutate_at_simple_grows_support() {
    let o = qtau(&["mutate", path(&fixture("a2")), "simple:1 + simple:5 + simple:4 | 2,3", "--at", "5"]);
    assert!(stdout(&o).contains("to=(1 ⊕ 4, P2⊕P3⊕P5)"), "{}", stdout(&o));
}

#[test]
fn mutate_rejects_summand_in_fac() {
    let o = qtau(&["mutate", path(&fixture("a1b")), "simple:2 + uniserial:2>1 + uniserial:3>2>1", "--at", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("in Fac"));
}

#[test]
fn complements_of_second_example() {
    let o = qtau(&["complements", path(&fixture("a2")), "simple:1 + simple:4 | 2,3"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("(5, 0)") && out.contains("(0, P5)"), "{out}");
}

#[test]
fn verify_paper_passes_and_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("r.json");
    let o = qtau(&["verify-paper", "nonprojective", "--json", path(&json)]);
    assert_eq!(o.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(json).unwrap()).unwrap();
    assert_eq!(value["suite"], "nonprojective");
}

#[test]
fn broken_golden_fixture_fails_the_suite() {
    let broken = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/a1b_nodes.broken.json");
    let o = qtau(&["verify-paper", "s3-figure", "--golden", path(&broken)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("[fail] s3.a1b.golden"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(qtau(&["verify-paper", "s9"]).status.code(), Some(2));
    assert_eq!(qtau(&["hasse", "/nonexistent.qa"]).status.code(), Some(2));
    assert_eq!(qtau(&["hasse", path(&fixture("a1b")), "--bogus"]).status.code(), Some(2));
}
