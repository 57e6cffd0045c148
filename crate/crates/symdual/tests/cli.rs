//! Exit-code and format contract of the command-line interface.

use std::path::PathBuf;
use std::process::Command;

use symdual::catalog::{block_so_subalgebra, make_sl, make_so};
use symdual::liealg::Subspace;
use symdual::linalg::CMatrix;
use symdual::schema::{AlgebraJson, SubspaceJson};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_symdual"))
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("symdual-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).expect("temp file written");
    path
}

fn algebra_file(name: &str, alg: &symdual::liealg::MatrixLieAlgebra) -> PathBuf {
    let json = AlgebraJson::from_algebra(alg);
    write_temp(name, &serde_json::to_string(&json).unwrap())
}

fn subspace_file(name: &str, parent: &str, sub: &Subspace) -> PathBuf {
    let json = SubspaceJson::from_subspace(parent, sub);
    write_temp(name, &serde_json::to_string(&json).unwrap())
}

#[test]
fn check_passes_on_theta_stable_block() {
    let alg = make_so(1, 3).unwrap();
    let sub = block_so_subalgebra(&alg, &[0, 1, 2]).unwrap();
    let alg_path = algebra_file("so13.json", &alg);
    let sub_path = subspace_file("so12.json", &alg.name, &sub);
    let out = bin()
        .args(["check", alg_path.to_str().unwrap(), sub_path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("\"is_subalgebra\": true"));
    assert!(text.contains("\"reductive\": true"));
}

#[test]
fn check_fails_on_nilpotent_line() {
    let alg = make_sl(2).unwrap();
    let e01 = CMatrix::from_fn(2, 2, |i, j| {
        num_complex::Complex64::new(if (i, j) == (0, 1) { 1.0 } else { 0.0 }, 0.0)
    });
    let sub = Subspace::from_rows(&[alg.coords(&e01, 1e-9).unwrap()]);
    let alg_path = algebra_file("sl2.json", &alg);
    let sub_path = subspace_file("nilp.json", &alg.name, &sub);
    let out = bin()
        .args(["check", alg_path.to_str().unwrap(), sub_path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("\"reductive\": false"));
}

#[test]
fn malformed_json_exits_2() {
    let bad = write_temp("bad.json", "{ not json");
    let out = bin()
        .args(["check", bad.to_str().unwrap(), bad.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dualize_emits_compact_form() {
    let alg = make_sl(2).unwrap();
    let alg_path = algebra_file("sl2-dual.json", &alg);
    let out = bin()
        .args(["dualize", alg_path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stderr).contains("compact real form"));
    assert!(String::from_utf8_lossy(&out.stdout).contains("\"psi\""));
}

#[test]
fn dualize_rejects_non_theta_stable_subalgebra() {
    // upper-triangular (Borel-like) line span in sl(2,R)
    let alg = make_sl(2).unwrap();
    let e01 = CMatrix::from_fn(2, 2, |i, j| {
        num_complex::Complex64::new(if (i, j) == (0, 1) { 1.0 } else { 0.0 }, 0.0)
    });
    let h = CMatrix::from_fn(2, 2, |i, j| {
        num_complex::Complex64::new(
            match (i, j) {
                (0, 0) => 1.0,
                (1, 1) => -1.0,
                _ => 0.0,
            },
            0.0,
        )
    });
    let sub = Subspace::from_rows(&[
        alg.coords(&e01, 1e-9).unwrap(),
        alg.coords(&h, 1e-9).unwrap(),
    ]);
    let alg_path = algebra_file("sl2-borel.json", &alg);
    let sub_path = subspace_file("borel.json", &alg.name, &sub);
    let out = bin()
        .args([
            "dualize",
            alg_path.to_str().unwrap(),
            sub_path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn polar_reports_agreement_for_transitive_entry() {
    let out = bin().args(["polar", "transitive/so(1,2)"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("\"verdicts_agree\": true"));
    assert!(text.contains("\"cohomogeneity\": 0"));
}

#[test]
fn polar_unknown_key_exits_2() {
    let out = bin().args(["polar", "thm99/none"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_emits_matching_rows() {
    let out = bin()
        .args(["table7_1", "3", "2", "3", "--format", "csv"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    // header plus r = 0, 1, 2
    assert_eq!(text.trim().lines().count(), 4);
    assert!(text.lines().skip(1).all(|l| l.ends_with("true")));
}

#[test]
fn suite_json_is_deterministic() {
    let run = || {
        bin()
            .args(["suite", "--seed", "7"])
            .output()
            .unwrap()
    };
    let first = run();
    let second = run();
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
}
