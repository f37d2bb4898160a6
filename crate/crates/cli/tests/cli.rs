use std::process::{Command, Output};

use macdonald_core::{hhl, Composition, XPolynomial};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_macdonald")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_both_routes_agree() {
    let o = run(&["compute", "--mu", "1,0", "--method", "both", "--output", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "x1\nroutes agree\n");
}

#[test]
fn compute_latex() {
    let o = run(&["compute", "--mu", "0,1", "--method", "hhl", "--output", "latex"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim_end(), r"x_2 + \frac{q(1-t)}{1-qt} x_1");
}

#[test]
fn verify_eigen_passes() {
    let o = run(&["verify", "--check", "eigen", "--mu", "0,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS eigen"));
}

#[test]
fn verify_positional_check() {
    for check in ["cyclic", "frozen", "bijection", "exchange"] {
        let o = run(&["verify", check, "--mu", "1,0,2"]);
        assert_eq!(o.status.code(), Some(0), "{check}");
    }
    let o = run(&["verify", "cyclic", "--mu", "1,0,2", "--i", "2"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["compute", "--mu", "1,x"][..],
        &["compute", "--mu", "0,1", "--rho", "1,1"],
        &["compute", "--mu", "0,1", "--rho", "2,1", "--method", "hhl"],
        &["compute"],
        &["verify", "--mu", "0,1"],
        &["verify", "cyclic", "--mu", "0,1", "--i", "3"],
        &["compute", "--mu", "0,1", "--method", "nope"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn json_round_trips() {
    let o = run(&["compute", "--mu", "2,0,1", "--output", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["mu"], serde_json::json!([2, 0, 1]));
    assert_eq!(v["method"], "matrix");
    let poly: XPolynomial = serde_json::from_value(v["poly"].clone()).unwrap();
    let mu: Composition = "2,0,1".parse().unwrap();
    assert_eq!(poly, hhl::f_hhl(&mu).unwrap());
    assert_eq!(serde_json::to_string(&v).unwrap(), text.trim_end());
}

#[test]
fn convention_e_reverses() {
    // E_(0,1)(x1,x2) = f_(1,0)(x2,x1) = x2
    let o = run(&["compute", "--mu", "0,1", "--convention", "E"]);
    assert_eq!(stdout(&o), "x2\n");
    let o = run(&["compute", "--mu", "1,0", "--convention", "E"]);
    assert_eq!(stdout(&o).trim_end(), "q*(1 - t)/(1 - q*t)*x2 + x1");
}

#[test]
fn permuted_basement() {
    let o = run(&["compute", "--mu", "0,1", "--rho", "2,1"]);
    assert_eq!(o.status.code(), Some(0));
    let identity = run(&["compute", "--mu", "0,1", "--rho", "1,2"]);
    assert_eq!(stdout(&identity), stdout(&run(&["compute", "--mu", "0,1"])));
}

#[test]
fn expand_lists_terms() {
    let o = run(&["expand", "--mu", "2,0"]);
    assert_eq!(stdout(&o), "x1^2\t1\nx1*x2\t(1 - t)/(1 - q*t)\n");
}

#[test]
fn hecke_suite_is_reproducible() {
    let a = run(&["verify", "hecke", "--mu", "1,0", "--seed", "7", "--output", "json"]);
    let b = run(&["verify", "hecke", "--mu", "1,0", "--seed", "7", "--output", "json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
