//! End-to-end tests of the `lattice` binary and its exit-code contract:
//! 0 = success / true / pass, 1 = false / fail, 2 = usage, 3 = parse error.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lattice"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn gen_file(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name).to_string_lossy().into_owned();
    let out = run(&[&["gen"], args, &["-o", &path]].concat());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    path
}

#[test]
fn gen_analyze_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let d12 = gen_file(dir.path(), "d12.lat", &["divisor", "12"]);

    let out = run(&["analyze", &d12]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("socle:            6"), "{text}");
    assert!(text.contains("radical:          2"), "{text}");
    assert!(text.contains("loewy series:     1 < 6 < 12"), "{text}");

    let out = run(&["analyze", "--json", &d12]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["cardinality"], 6);
    assert_eq!(v["loewy_length"], 2);
    assert_eq!(v["is_p_extension"], false);

    let out = run(&["loewy", &d12]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1\n6\n12\n");
}

#[test]
fn gen_output_parses_back_identically() {
    let dir = tempfile::tempdir().unwrap();
    for (name, args) in [
        ("c.lat", vec!["chain", "4"]),
        ("q.lat", vec!["cube", "3"]),
        ("g.lat", vec!["grid", "2", "3"]),
        ("p.lat", vec!["pentagon"]),
        ("s.lat", vec!["subspace", "3", "2"]),
        ("e.lat", vec!["paper", "ex8_81"]),
        ("r.lat", vec!["random", "7", "40"]),
    ] {
        let path = gen_file(dir.path(), name, &args);
        let text = std::fs::read_to_string(&path).unwrap();
        let l = loewy::format::parse_lattice(&text).unwrap();
        assert_eq!(loewy::format::write_lattice(&l), text, "{name}");
    }
}

#[test]
fn check_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let d12 = gen_file(dir.path(), "d12.lat", &["divisor", "12"]);
    let cube = gen_file(dir.path(), "cube.lat", &["cube", "2"]);

    let out = run(&["check", "distributive", &d12]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "true\n");

    let out = run(&["check", "p-extension", &d12]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "false\n");

    let out = run(&["check", "boolean", &cube]);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&["check", "nonsense", &d12]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn parse_errors_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.lat");
    std::fs::write(&bad, "lattice broken\nelem a\nelem a\nend\n").unwrap();
    let out = run(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error:"));

    let out = run(&["analyze", "/nonexistent/file.lat"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_2() {
    let out = run(&["gen", "no-such-family", "3"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["gen", "divisor", "0"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["gen", "divisor", "x"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_suites_pass() {
    let out = run(&["verify", "thm8131", "--max-n", "200"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("PASS"));

    let out = run(&["verify", "thm8131", "--n", "360", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["failures"], serde_json::json!([]));
    assert_eq!(v["instances_checked"], 1);

    let out = run(&["verify", "core"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));

    let out = run(&["verify", "product", "--count", "10"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));

    let out = run(&["verify", "distributive", "--count", "20", "--max-size", "40"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));

    let out = run(&["verify", "p-extension"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn iso_matches_and_distinguishes() {
    let dir = tempfile::tempdir().unwrap();
    let d12 = gen_file(dir.path(), "d12.lat", &["divisor", "12"]);
    let sub = gen_file(dir.path(), "sub.lat", &["subgroup-cyclic", "12"]);
    let chain = gen_file(dir.path(), "c.lat", &["chain", "5"]);

    let out = run(&["iso", &d12, &sub]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("->"));

    let out = run(&["iso", &d12, &chain]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "not isomorphic\n");
}

#[test]
fn export_dot_marks_loewy_chain() {
    let dir = tempfile::tempdir().unwrap();
    let d12 = gen_file(dir.path(), "d12.lat", &["divisor", "12"]);
    let out = run(&["export-dot", "--loewy", &d12]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("digraph"), "{text}");
    assert!(text.contains("peripheries=2"), "{text}");
    assert!(text.contains("\"1\" -> \"6\""), "{text}");
}

#[test]
fn size_cap_env_is_honored() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("big.lat");
    let out = bin()
        .args(["gen", "divisor", "720720", "-o", path.to_str().unwrap()])
        .env("LATTICE_MAX_N", "100")
        .output()
        .unwrap();
    // cap violations on generation parameters are usage errors
    assert_eq!(out.status.code(), Some(2));

    let out = bin()
        .args(["gen", "divisor", "720720", "-o", path.to_str().unwrap()])
        .env("LATTICE_MAX_N", "500")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}
