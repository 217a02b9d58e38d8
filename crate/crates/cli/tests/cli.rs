use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use hermitian_mixed::format::{parse_mg, serialize_mg};

fn graph_file(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/graphs").join(name)
}

fn hmix(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hmix")).args(args).output().expect("spawn hmix")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn run_on(cmd: &str, file: &str) -> Output {
    hmix(&[cmd, graph_file(file).to_str().unwrap()])
}

#[test]
fn spectrum_of_p4_sits_on_the_golden_threshold() {
    let o = run_on("spectrum", "p4.mg");
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("lambda-min: −1.6180339887 (−(1+√5)/2)"), "{out}");
    assert!(out.contains("Equal at −(1+√5)/2"), "{out}");
    assert!(out.contains("Less than −√2"), "{out}");
}

#[test]
fn spectrum_of_directed_path_triangle() {
    let out = stdout(&run_on("spectrum", "k3_21.mg"));
    assert!(out.contains("lambda-min: −2.0000000000"), "{out}");
}

#[test]
fn empty_file_reports_line_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.mg");
    fs::write(&path, "").unwrap();
    let o = hmix(&["spectrum", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 1"), "{err}");
}

#[test]
fn classify_accepts_knst() {
    let o = run_on("classify", "knst_4_3.mg");
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("accept H3 s=4 t=3\n"), "{out}");
    assert!(out.contains("certificate: verified"), "{out}");
}

#[test]
fn classify_rejects_claw() {
    let o = run_on("classify", "star.mg");
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("reject: induced K_{1,3}, λ_min=−√3\n"));
}

#[test]
fn classify_bowtie_as_coalescence() {
    let o = run_on("classify", "bowtie.mg");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("accept H2 K_3•K_3\n"), "{}", stdout(&o));
}

#[test]
fn classify_disconnected_is_an_error() {
    let o = run_on("classify", "disconnected.mg");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sqrt2_modes() {
    let strict = hmix(&["classify", "--sqrt2", "strict", graph_file("knst_2_3.mg").to_str().unwrap()]);
    assert_eq!(strict.status.code(), Some(0));
    assert!(stdout(&strict).starts_with("accept K_n[s,t] s=2 t=3"));
    let p4 = hmix(&["classify", "--sqrt2", "non-strict", graph_file("p4.mg").to_str().unwrap()]);
    assert_eq!(p4.status.code(), Some(1));
}

#[test]
fn equiv_finds_a_diagonal() {
    let a = graph_file("knst_2_3.mg");
    let b = graph_file("k5.mg");
    let o = hmix(&["equiv", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).trim().is_empty());
    let no = hmix(&["equiv", graph_file("p4.mg").to_str().unwrap(), graph_file("star.mg").to_str().unwrap()]);
    assert_eq!(no.status.code(), Some(1));
    assert_eq!(stdout(&no), "not equivalent\n");
}

#[test]
fn verify_small_census() {
    let o = hmix(&["verify", "--nmax", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("mismatches: 0"), "{out}");
    let again = hmix(&["verify", "--nmax", "4", "--jobs", "2"]);
    assert_eq!(stdout(&again), out);
}

#[test]
fn verify_writes_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.txt");
    let o = hmix(&["verify", "--nmax", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(fs::read_to_string(&path).unwrap().contains("verified: true"));
}

#[test]
fn catalog_includes_reconciliation() {
    let o = hmix(&["catalog"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.starts_with("reconcile ")), "{out}");
    let pinned = include_str!("../../core/data/scattered_catalog.txt");
    assert_eq!(out, pinned);
}

#[test]
fn corpus_round_trips() {
    for entry in fs::read_dir(graph_file("")).unwrap() {
        let path = entry.unwrap().path();
        let g = parse_mg(&fs::read_to_string(&path).unwrap()).unwrap();
        let text = serialize_mg(&g);
        assert_eq!(serialize_mg(&parse_mg(&text).unwrap()), text, "{}", path.display());
    }
}
