use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use cyclesynth::io::{gen_random_perm, serialize_spec};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclesynth")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

#[test]
fn synth_then_verify_and_cost() {
    let dir = tempfile::tempdir().unwrap();
    let spec = path(dir.path(), "f.spec");
    let circ = path(dir.path(), "f.circ");
    let rep = path(dir.path(), "f.rep");
    fs::write(&spec, serialize_spec(&gen_random_perm(7, 9, None).unwrap())).unwrap();

    for method in ["kcycle", "mmd", "hybrid"] {
        let o = run(&["synth", "--in", &spec, "--method", method, "--out", &circ, "--report", &rep]);
        assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
        let report = fs::read_to_string(&rep).unwrap();
        assert!(report.starts_with("method="));
        assert!(report.contains("verified=true\n"));

        let o = run(&["verify", &circ, &spec]);
        assert_eq!(code(&o), 0);
        assert_eq!(String::from_utf8_lossy(&o.stdout), "verified=true\n");

        let o = run(&["cost", &circ]);
        assert_eq!(code(&o), 0);
        let cost_line = String::from_utf8_lossy(&o.stdout).lines().find(|l| l.starts_with("cost=")).unwrap().to_string();
        assert!(report.contains(&format!("{cost_line}\n")));
    }
}

#[test]
fn synth_writes_to_stdout_and_stderr() {
    let dir = tempfile::tempdir().unwrap();
    let spec = path(dir.path(), "f.spec");
    fs::write(&spec, "n 2\n1\n0\n2\n3\n").unwrap();
    let o = run(&["synth", "--in", &spec]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stdout).contains("BEGIN"));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cost="));
}

#[test]
fn verify_mismatch_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let spec = path(dir.path(), "f.spec");
    let circ = path(dir.path(), "f.circ");
    fs::write(&spec, "n 2\n1\n0\n2\n3\n").unwrap();
    fs::write(&circ, ".v a,b\nBEGIN\nt1 b\nEND\n").unwrap();
    let o = run(&["verify", &circ, &spec]);
    assert_eq!(code(&o), 1);
    assert_eq!(String::from_utf8_lossy(&o.stdout), "verified=false\n");
}

#[test]
fn bad_inputs_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let spec = path(dir.path(), "bad.spec");
    fs::write(&spec, "n 2\n0\n0\n1\n2\n").unwrap();
    assert_eq!(code(&run(&["synth", "--in", &spec])), 2);
    assert_eq!(code(&run(&["synth", "--in", &path(dir.path(), "missing")])), 2);
    assert_eq!(code(&run(&["synth"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);

    let circ = path(dir.path(), "t.circ");
    fs::write(&circ, ".v a,b,c\nBEGIN\nt3 a,b,c\nEND\n").unwrap();
    assert_eq!(code(&run(&["cost", &circ])), 0);
    assert_eq!(code(&run(&["cost", &circ, "--lnn"])), 2);
}

#[test]
fn zero_timeout_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let spec = path(dir.path(), "f.spec");
    fs::write(&spec, serialize_spec(&gen_random_perm(8, 3, None).unwrap())).unwrap();
    let o = run(&["synth", "--in", &spec, "--method", "kcycle", "--timeout", "0"]);
    assert_eq!(code(&o), 3);
}

#[test]
fn bench_and_analyze() {
    let o = run(&["bench", "--family", "hwb", "--n", "7"]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stdout).contains("verified=true"));

    let o = run(&["bench", "--family", "random", "--n", "6", "--seed", "3", "--count", "3", "--method", "kcycle"]);
    assert_eq!(code(&o), 0);
    assert_eq!(String::from_utf8_lossy(&o.stdout).matches("method=kcycle").count(), 3);

    let dir = tempfile::tempdir().unwrap();
    let spec = path(dir.path(), "f.spec");
    let csv = path(dir.path(), "f.csv");
    fs::write(&spec, serialize_spec(&gen_random_perm(7, 1, None).unwrap())).unwrap();
    let o = run(&["analyze", &spec, "--csv", &csv]);
    assert_eq!(code(&o), 0);
    let out = String::from_utf8_lossy(&o.stdout).to_string();
    for key in ["n=7", "distance=", "nop=", "category=", "parity=", "schedule=", "estimate=", "worst_case_bound="] {
        assert!(out.contains(key), "{key}");
    }
    let rows = fs::read_to_string(&csv).unwrap();
    assert_eq!(rows.lines().count(), 129);
}
