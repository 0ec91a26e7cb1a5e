use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use fullerene_af::{fixtures, validate_fullerene, PlaneGraph};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fullerene")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn export(dir: &Path) {
    let o = run(&["fixture", "--dir", dir.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn validate_accepts_the_dodecahedron() {
    let o = run(&["validate", "fixture:f20"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("20 vertices"));
}

#[test]
fn validate_reports_the_cube_face() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("q3.graph");
    fs::write(&p, fixtures::cube().to_text(Some("cube"))).unwrap();
    let o = run(&["validate", p.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("face of size 4"), "{}", stdout(&o));
}

#[test]
fn truncated_file_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("cut.graph");
    let text: String = fixtures::F20_TEXT.lines().take(6).map(|l| format!("{l}\n")).collect();
    fs::write(&p, text).unwrap();
    assert_eq!(code(&run(&["validate", p.to_str().unwrap()])), 2);
    assert_eq!(code(&run(&["validate", "/no/such/file"])), 2);
}

#[test]
fn af_of_the_small_fixtures() {
    let o = run(&["af", "fixture:f20", "--jobs", "2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("af = 4"));
    assert!(stdout(&o).contains("witness: "));
    let o = run(&["af", "fixture:f26"]);
    assert!(stdout(&o).contains("af = 5"));
}

#[test]
fn af_budget_exceeded() {
    let o = run(&["af", "fixture:f20", "--budget", "3"]);
    assert_eq!(code(&o), 3);
    assert!(stdout(&o).contains("af > 3"));
}

#[test]
fn forcing_of_the_dodecahedron() {
    let o = run(&["forcing", "fixture:f20"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("f = 3"));
}

#[test]
fn cec_is_five() {
    for f in ["fixture:f20", "fixture:f24", "fixture:f26"] {
        let o = run(&["cec", f]);
        assert_eq!(code(&o), 0);
        assert!(stdout(&o).contains("cyclic edge connectivity = 5"));
    }
}

#[test]
fn digraph_exports() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("d.dot");
    let dump = dir.path().join("d.txt");
    let o = run(&["digraph", "--dot", dot.to_str().unwrap(), "--dump", dump.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("loops: 1"));
    assert!(out.contains("symmetric pairs: 3"));
    assert!(fs::read_to_string(&dot).unwrap().starts_with("digraph"));
    assert!(fs::read_to_string(&dump).unwrap().contains("[13333335]"));
}

#[test]
fn digraph_unwritable_path() {
    let o = run(&["digraph", "--dot", "/no/such/dir/d.dot"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn construct_28() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c28.graph");
    let o = run(&["construct", "--n", "28", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("af = 4 (verified)"));
    let plane = PlaneGraph::parse(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(validate_fullerene(&plane).unwrap().vertex_count(), 28);
}

#[test]
fn construct_domain_errors() {
    for n in ["22", "26", "27", "18"] {
        assert_eq!(code(&run(&["construct", "--n", n])), 4, "n = {n}");
    }
}

#[test]
fn construct_above_the_verification_limit() {
    let o = run(&["construct", "--n", "40"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("check af = 4: skip"));
}

#[test]
fn synthesize_the_dodecahedron_walk() {
    let dir = tempfile::tempdir().unwrap();
    export(dir.path());
    let walk = dir.path().join("f20.walk");
    let o = run(&["synthesize", "--seed", "Fs15", "--walk", walk.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("isomorphic to fixture f20"));
    assert!(stdout(&o).contains("af = 4 (verified)"));
}

#[test]
fn synthesize_rejects_a_bad_walk() {
    let dir = tempfile::tempdir().unwrap();
    let walk = dir.path().join("bad.walk");
    fs::write(&walk, "O7@1\n").unwrap();
    assert_eq!(code(&run(&["synthesize", "--seed", "Fs15", "--walk", walk.to_str().unwrap()])), 2);
    fs::write(&walk, "O3\n").unwrap();
    assert_eq!(code(&run(&["synthesize", "--seed", "Fs15", "--walk", walk.to_str().unwrap()])), 4);
}

#[test]
fn verify_all_is_deterministic() {
    let a = run(&["verify-all", "--no-timings", "--jobs", "2"]);
    let b = run(&["verify-all", "--no-timings", "--jobs", "2"]);
    assert_eq!(a.stdout, b.stdout);
    let out = stdout(&a);
    assert_eq!(out.lines().filter(|l| l.starts_with("criterion ")).count(), 11);
    assert!(!out.contains("s)\n"));
    let failed = out.lines().any(|l| l.contains(" FAIL: "));
    assert_eq!(code(&a), if failed { 1 } else { 0 });
}

#[test]
fn corrupted_fixture_fails_validation() {
    let dir = tempfile::tempdir().unwrap();
    export(dir.path());
    let p = dir.path().join("f26.graph");
    let text = fs::read_to_string(&p).unwrap();
    let mut lines: Vec<&str> = text.lines().collect();
    let last = lines.len() - 1;
    lines.swap(last, last - 1);
    fs::write(&p, lines.join("\n")).unwrap();
    let o = run(&["verify-all", "--no-timings", "--fixture-dir", dir.path().to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("criterion  0 FAIL"), "{}", stdout(&o));
}
