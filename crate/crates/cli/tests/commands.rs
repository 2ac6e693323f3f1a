use std::process::{Command, Output};

use serde_json::Value;

fn ncdiv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncdiv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = ncdiv(&all);
    (out.status.code().unwrap(), serde_json::from_slice(&out.stdout).unwrap())
}

#[test]
fn quotient_of_j_by_i() {
    let out = ncdiv(&["quotient", "--algebra", "quaternions", "i", "j"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("solvable"));
    assert!(text.contains("kernel dimension: 12"));

    let (code, v) = json(&["quotient", "--algebra", "quaternions", "i", "j"]);
    assert_eq!(code, 0);
    assert_eq!(v["solvable"], true);
    assert_eq!(v["kernel_dim"], 12);
    assert_eq!(v["kernel_basis"].as_array().unwrap().len(), 12);
    assert_eq!(v["particular"], "k (x) 1");
}

#[test]
fn unsolvable_quotient_exits_one() {
    let (code, v) = json(&["quotient", "--algebra", "dual", "eps", "1"]);
    assert_eq!(code, 1);
    assert_eq!(v["solvable"], false);
    assert_eq!(v["particular"], Value::Null);
}

#[test]
fn eps_does_not_divide_one() {
    let out = ncdiv(&["divides", "--algebra", "dual", "eps", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out).trim(), "false");
    let out = ncdiv(&["divides", "--algebra", "dual", "eps", "3eps"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn worked_polynomial_division() {
    let out = ncdiv(&["polydiv", "--algebra", "quaternions", "x^2 + i*x + j", "x - k"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("remainder: -1"));
    let (_, v) = json(&["polydiv", "x^2 + i*x + j", "x - k"]);
    assert_eq!(v["remainder"], "-1");
    assert_eq!(v["quotient"], "(1 (x) 1)*x + (i (x) 1 + k (x) 1)");
}

#[test]
fn stuck_polynomial_division_is_unsolvable() {
    let (code, v) = json(&["polydiv", "--algebra", "dual", "x + 1", "eps*x"]);
    assert_eq!(code, 1);
    assert_eq!(v["solvable"], false);
}

#[test]
fn remainders_and_cosets() {
    let (code, v) = json(&["remainder", "--algebra", "dual", "eps", "3 + 2eps"]);
    assert_eq!(code, 0);
    assert_eq!(v["remainder"], "3");
    let (_, v) = json(&["remainder", "--algebra", "integers", "--strategy", "least-nonneg", "5", "-7"]);
    assert_eq!(v["remainder"], "3");
    let (_, v) = json(&["remainder", "--strategy", "min-norm", "2", "1 + i + j"]);
    assert_eq!(v["remainder"], "-k");

    assert_eq!(ncdiv(&["coset", "--algebra", "dual", "eps", "1", "1 + 5eps"]).status.code(), Some(0));
    assert_eq!(ncdiv(&["coset", "--algebra", "dual", "eps", "1", "2"]).status.code(), Some(1));
}

#[test]
fn quotient_algebras() {
    let out = ncdiv(&["modalg", "--algebra", "dual", "eps"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("dimension 1"));
    let (_, v) = json(&["modalg", "--algebra", "matrix2", "E11"]);
    assert_eq!(v["dim"], 0);
}

#[test]
fn prime_check_verdicts() {
    let (code, v) = json(&["prime-check", "x - i", "j*x + k"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "unit-quotient");
    let (code, v) = json(&["prime-check", "x - i", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "unit-divisor");
    let (code, v) = json(&["prime-check", "x - i", "x - j"]);
    assert_eq!(code, 1);
    assert_eq!(v["verdict"], "not-a-divisor");
}

#[test]
fn gcd_traces() {
    let (code, v) = json(&["gcd", "--algebra", "integers", "12", "18"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"], "6");
    assert_eq!(v["steps"].as_array().unwrap().len(), 3);
    let (_, v) = json(&["gcd", "--strategy", "degree", "x^2 + 1", "x - i"]);
    assert_eq!(v["result"], "x - i");
    let (_, v) = json(&["gcd", "--algebra", "quaternions", "3 + i", "2"]);
    assert_eq!(v["steps"].as_array().unwrap().len(), 2);
}

#[test]
fn algebra_from_file() {
    let path = std::env::temp_dir().join(format!("ncdiv-split-{}.json", std::process::id()));
    // Q × Q with idempotents e and f.
    let file = r#"{
        "name": "split",
        "dim": 2,
        "unit": ["1", "1"],
        "labels": ["e", "f"],
        "constants": [[["1", "0"], ["0", "0"]], [["0", "0"], ["0", "1"]]]
    }"#;
    std::fs::write(&path, file).unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(ncdiv(&["divides", "--algebra", p, "e", "f"]).status.code(), Some(1));
    let (code, v) = json(&["remainder", "--algebra", p, "e", "3e + 2f"]);
    assert_eq!(code, 0);
    assert_eq!(v["remainder"], "2f");
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn usage_and_parse_errors_exit_two() {
    let out = ncdiv(&["quotient", "i", "j +"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("offset"));
    assert_eq!(ncdiv(&["quotient", "--algebra", "octonions", "1", "1"]).status.code(), Some(2));
    assert_eq!(ncdiv(&["remainder", "--strategy", "nearest", "2", "3"]).status.code(), Some(2));
    assert_eq!(ncdiv(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(ncdiv(&["divides", "--algebra", "dual", "q", "1"]).status.code(), Some(2));
}
