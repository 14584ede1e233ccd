mod common;

use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

use common::*;
use symfact::exact::{MultiPoly, Rational};
use symfact::partitions::Partition;
use symfact::qops_schur::s_bar;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symfact")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("bad JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn poly(v: &Value) -> MultiPoly {
    serde_json::from_value(v.clone()).unwrap()
}

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

#[test]
fn basis_prints_normalized_polynomial() {
    let out = run(&["basis", "--kind", "m", "--lambda", "2,0", "--normalized"]);
    assert!(out.status.success());
    let half = Rational::new(1.into(), 2.into());
    assert_eq!(poly(&json(&out)), monomial_orbit(&p(&[2, 0])).scale(&half));
}

#[test]
fn separate_matches_substitution_oracle() {
    for lambda in [[2u32, 1, 0], [1, 1, 0], [3, 0, 0]] {
        let arg = lambda.map(|x| x.to_string()).join(",");
        let out = run(&["separate", "--basis", "s", "--lambda", &arg]);
        assert!(out.status.success());
        let v = json(&out);
        let expected = product_over_z(&restrict_first(&s_bar(&p(&lambda)).unwrap()), 3);
        assert_eq!(poly(&v["product"]), expected, "λ={arg}");
    }
}

#[test]
fn invert_and_lift_in_schur_basis() {
    let out = run(&["invert", "--basis", "s", "--lambda", "2,1,0"]);
    assert!(out.status.success());
    assert_eq!(poly(&json(&out)), s_bar(&p(&[2, 1, 0])).unwrap());

    let out = run(&["lift", "--basis", "s", "--lambda", "2,1"]);
    assert!(out.status.success());
    assert_eq!(poly(&json(&out)), s_bar(&p(&[2, 1, 0])).unwrap());
}

#[test]
fn apply_q_reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_symfact"))
        .args(["apply-q", "--basis", "m", "--poly", "-", "--z", "3"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    let input = r#"{"vars":["x1","x2"],"terms":[{"e":[1,0],"c":"1"}]}"#;
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    // (1/2)(3 x1 + x1) = 2 x1
    let expected = MultiPoly::monomial(xs(2), vec![1, 0], Rational::from_integer(2.into()));
    assert_eq!(poly(&json(&out)), expected);
}

#[test]
fn quadrature_selects_reciprocal_prefactor() {
    let out = run(&["quadrature", "--identity", "q", "--lambda", "2,1", "--z", "1.4", "--y", "0.7,1.9"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["convention"], "reciprocal");
    assert!(v["relErr"].as_f64().unwrap() <= 1e-10);
}

#[test]
fn verify_passes_and_is_reproducible() {
    let args = ["--seed", "7", "verify", "--suite", "quadrature", "--n", "2", "--max-weight", "2"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["passed"], Value::Bool(true));
    let other = run(&["--seed", "8", "verify", "--suite", "quadrature", "--n", "2", "--max-weight", "2"]);
    assert_ne!(a.stdout, other.stdout);
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["basis", "--kind", "m", "--lambda", "0,2"][..],
        &["basis", "--kind", "q", "--lambda", "1"],
        &["invert", "--basis", "E", "--lambda", "1,0"],
        &["verify", "--suite", "quadrature", "--n", "4"],
        &["quadrature", "--identity", "q", "--lambda", "1,0", "--z", "0.5", "--y", "1,2"],
        &["no-such-command"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn table_format_is_plain_text() {
    let out = run(&["--format", "table", "separate", "--basis", "m", "--lambda", "2,0"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("field"));
    assert!(text.contains("1/2*z^2 + 1/2"));
}
