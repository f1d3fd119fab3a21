use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use dicrit::graph::parse_dg;
use dicrit::subdivision::SubdivisionWitness;

fn dicrit(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dicrit"))
        .current_dir(dir)
        .env_remove("DICRIT_BUDGET")
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn gen_then_dicritical_d37() {
    let dir = tempfile::tempdir().unwrap();
    assert!(dicrit(dir.path(), &["gen", "Dkn", "3", "7", "-o", "d37.dg"]).status.success());
    let out = dicrit(dir.path(), &["dicritical", "d37.dg", "--k", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let out = dicrit(dir.path(), &["dicritical", "d37.dg", "--k", "4"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn d10_has_no_spindle_33() {
    let dir = tempfile::tempdir().unwrap();
    dicrit(dir.path(), &["gen", "Dn", "10", "-o", "d10.dg"]);
    let out = dicrit(dir.path(), &["find-spindle", "d10.dg", "--k", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("no subdivision of C(3,3)"));
}

#[test]
fn chi_of_acyclic_file_is_one() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("tt.dg"), "n 3\n# a transitive triangle\n0 1\n0 2\n1 2\n").unwrap();
    let out = dicrit(dir.path(), &["chi", "tt.dg"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn found_witness_is_valid_json() {
    let dir = tempfile::tempdir().unwrap();
    dicrit(dir.path(), &["gen", "bid", "4", "-o", "k4.dg"]);
    let out = dicrit(dir.path(), &["find", "spindle:2,2", "k4.dg"]);
    assert_eq!(out.status.code(), Some(0));
    let host = parse_dg(&fs::read_to_string(dir.path().join("k4.dg")).unwrap()).unwrap();
    let w = SubdivisionWitness::from_json(stdout(&out).trim(), &host).unwrap();
    w.validate().unwrap();
}

#[test]
fn min_counts_lengthen_paths() {
    let dir = tempfile::tempdir().unwrap();
    dicrit(dir.path(), &["gen", "cycle", "6", "-o", "c6.dg"]);
    let ok = dicrit(dir.path(), &["find", "cycle:3", "c6.dg", "--min-counts", "0-1=3"]);
    assert_eq!(ok.status.code(), Some(0));
    let none = dicrit(dir.path(), &["find", "cycle:3", "c6.dg", "--min-counts", "2"]);
    assert_eq!(none.status.code(), Some(1));
    let bad = dicrit(dir.path(), &["find", "cycle:3", "c6.dg", "--min-counts", "0-2=1"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn outstar_and_tree_finders() {
    let dir = tempfile::tempdir().unwrap();
    dicrit(dir.path(), &["gen", "paley7", "-o", "p.dg"]);
    dicrit(dir.path(), &["gen", "path", "2", "-o", "t.dg"]);
    let star = dicrit(dir.path(), &["find-outstar", "p.dg", "--u", "0", "--k", "3", "--l", "1"]);
    assert_eq!(star.status.code(), Some(0));
    let tree = dicrit(dir.path(), &["find-tree", "t.dg", "p.dg", "--counts", "1", "--mode", "oriented"]);
    assert_eq!(tree.status.code(), Some(0));

    dicrit(dir.path(), &["gen", "tt", "4", "-o", "tt.dg"]);
    let pre = dicrit(dir.path(), &["find-tree", "t.dg", "tt.dg"]);
    assert_eq!(pre.status.code(), Some(2));
}

#[test]
fn verify_prints_summary_and_dumps_counterexample() {
    let dir = tempfile::tempdir().unwrap();
    let pass = dicrit(dir.path(), &["verify", "T6.2", "--max-n", "5", "--jobs", "2"]);
    assert_eq!(pass.status.code(), Some(0));
    assert!(stdout(&pass).starts_with("SUITE T6.2 pass checked="));

    let fail = dicrit(dir.path(), &["verify", "T6.2-weakened", "--max-n", "3", "--dump", "cx.dg"]);
    assert_eq!(fail.status.code(), Some(1));
    assert!(stdout(&fail).starts_with("SUITE T6.2-weakened fail"));
    let cx = parse_dg(&fs::read_to_string(dir.path().join("cx.dg")).unwrap()).unwrap();
    assert_eq!((cx.order(), cx.arc_count()), (3, 3));

    let unknown = dicrit(dir.path(), &["verify", "T9.9"]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn enumerate_counts_and_budget() {
    let dir = tempfile::tempdir().unwrap();
    let out = dicrit(dir.path(), &["enumerate", "--n", "3", "--oriented", "--count"]);
    assert_eq!(stdout(&out).trim(), "7");
    let listed = dicrit(dir.path(), &["enumerate", "--n", "2"]);
    assert_eq!(stdout(&listed).matches("n 2").count(), 3);
    let refused = dicrit(dir.path(), &["enumerate", "--n", "8", "--count"]);
    assert_eq!(refused.status.code(), Some(2));
}

#[test]
fn budget_env_refuses_large_inputs() {
    let dir = tempfile::tempdir().unwrap();
    dicrit(dir.path(), &["gen", "bid", "5", "-o", "k5.dg"]);
    let out = Command::new(env!("CARGO_BIN_EXE_dicrit"))
        .current_dir(dir.path())
        .env("DICRIT_BUDGET", "4")
        .args(["chi", "k5.dg"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gen_join_and_digirth() {
    let dir = tempfile::tempdir().unwrap();
    dicrit(dir.path(), &["gen", "cycle", "4", "-o", "c4.dg"]);
    dicrit(dir.path(), &["gen", "join", "c4.dg", "-o", "w.dg"]);
    let out = dicrit(dir.path(), &["dicritical", "w.dg", "--k", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let g = dicrit(dir.path(), &["digirth", "c4.dg"]);
    assert_eq!(stdout(&g).trim(), "4");
    let p = dicrit(dir.path(), &["longest-path", "c4.dg"]);
    assert!(stdout(&p).starts_with("4 "));
    let usage = dicrit(dir.path(), &["gen", "nosuch", "3"]);
    assert_eq!(usage.status.code(), Some(2));
}
