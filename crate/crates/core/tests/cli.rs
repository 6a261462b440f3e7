//! The `bbgroup` binary end to end.

use std::process::Command;

use bbgroup::bbcore::io::{format_generators, GeneratorFile};
use bbgroup::bbcore::matrix::Matrix;
use bbgroup::ffield::ExplicitField;
use num_bigint::BigUint;

fn bbgroup(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_bbgroup")).args(args).env_remove("BBGROUP_SEED").output().expect("binary runs")
}

fn stdout(o: &std::process::Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn involution_run_is_clean_and_reproducible() {
    let args = ["involution", "--q", "16", "--trials", "100", "--seed", "7", "--reproducible"];
    let a = bbgroup(&args);
    assert!(a.status.success());
    let line = stdout(&a);
    assert!(line.starts_with("experiment=involution params=q:16 seed=7 trials=100 failures=0 "), "{line}");
    assert_eq!(line, stdout(&bbgroup(&args)));
}

#[test]
fn mr_composite_verdict() {
    let o = bbgroup(&["mr", "--n", "561"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("verdict:composite"));
}

#[test]
fn seed_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_bbgroup")).args(["mr", "--n", "97", "--reproducible"]).env("BBGROUP_SEED", "41").output().unwrap();
    assert!(stdout(&o).contains(" seed=41 "));
}

#[test]
fn usage_errors_exit_nonzero() {
    assert!(!bbgroup(&["mr", "--n", "561", "--frobnicate"]).status.success());
    assert!(!bbgroup(&["teleport"]).status.success());
    assert!(!bbgroup(&["mr", "--n", "10"]).status.success());
    assert!(!bbgroup(&["frobenius", "--group", "gl", "--p", "3", "--k", "2"]).status.success());
}

#[test]
fn frobenius_reports_law_and_control() {
    let o = bbgroup(&["frobenius", "--group", "psl2", "--p", "5", "--k", "2", "--trials", "200", "--seed", "1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].contains(" failures=0 "));
    assert!(lines[1].contains("control:identity-shift") && !lines[1].contains(" failures=0 "));
}

#[test]
fn verify_generator_file_with_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sl2_5.gens");
    let f = std::sync::Arc::new(ExplicitField::prime(BigUint::from(5u32)));
    let gens = vec![Matrix::from_u64(&f, &[&[1, 1], &[0, 1]]), Matrix::from_u64(&f, &[&[1, 0], &[1, 1]])];
    std::fs::write(&path, format_generators(&GeneratorFile { field: f, dim: 2, quotient: false, gens })).unwrap();
    let p = path.to_str().unwrap();
    let good = bbgroup(&["verify", "--gens", p, "--trials", "200"]);
    assert!(good.status.success(), "{}", String::from_utf8_lossy(&good.stderr));
    assert!(stdout(&good).contains(" failures=0 "));
    let bad = bbgroup(&["verify", "--gens", p, "--trials", "200", "--corrupt"]);
    assert!(!stdout(&bad).contains(" failures=0 "));
}
