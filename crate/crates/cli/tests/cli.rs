use std::process::{Command, Output};

use serde_json::Value;

fn iqw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_iqw"))
        .args(args)
        .output()
        .expect("run iqw")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = iqw(args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn expands_two_row_f() {
    let v = json(&[
        "--json", "poly", "expand", "--family", "F", "--lambda", "2", "--n", "2",
    ]);
    let terms: Vec<(String, String)> = v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| {
            (
                t["monomial"].as_str().unwrap().into(),
                t["coeff"].as_str().unwrap().into(),
            )
        })
        .collect();
    let want = [
        ("x1^2", "1"),
        ("x1*x2", "q + 1"),
        ("x2^2", "1"),
        ("x1^2*x2", "-q - 1"),
        ("x1*x2^2", "-q - 1"),
        ("x1^2*x2^2", "q"),
    ];
    assert_eq!(terms.len(), want.len());
    for (t, w) in terms.iter().zip(want) {
        assert_eq!((t.0.as_str(), t.1.as_str()), w);
    }
}

#[test]
fn evaluates_exactly_and_numerically() {
    let o = iqw(&[
        "poly", "eval", "--family", "F", "--lambda", "1", "--mu", "1", "--at", "1/3,1/4", "--q",
        "1/2",
    ]);
    assert_eq!(stdout(&o).trim(), "1/2");
    let o = iqw(&[
        "poly", "eval", "--family", "F", "--lambda", "1", "--mu", "1", "--at", "0.5,0.5", "--q",
        "0.5",
    ]);
    assert_eq!(stdout(&o).trim().parse::<f64>().unwrap(), 0.25);
}

#[test]
fn product_reports_agreement() {
    let v = json(&[
        "--json", "product", "--mu", "1", "--nu", "3,1", "--algo", "both",
    ]);
    assert_eq!(v["algorithms_agree"], true);
    assert_eq!(v["expansion"]["coefficients"].as_object().unwrap().len(), 7);
    assert_eq!(v["expansion"]["coefficients"]["4,1"], "1");
}

#[test]
fn pieri_skew_and_basis() {
    let v = json(&["--json", "pieri", "--nu", "1"]);
    assert_eq!(v["coefficients"]["1,1"], "-q + 1");
    let v = json(&["--json", "skew-expand", "--lambda", "1", "--mu", "1"]);
    assert_eq!(v["coefficients"][""], "1");
    assert_eq!(v["coefficients"]["1"], "-1");
    let v = json(&[
        "--json",
        "basis",
        "--direction",
        "W2F",
        "--lambda",
        "1,1",
        "--degree",
        "4",
    ]);
    assert_eq!(v["coefficients"]["1,1,1"], "2");
    assert_eq!(v["truncation"], 4);
}

#[test]
fn verify_exit_codes() {
    let o = iqw(&[
        "verify", "cauchy-F", "--mu", "1", "--nu", "2", "--n", "2", "--m", "2", "--deg", "6",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("exact-pass"));
    let v = json(&[
        "--json", "verify", "omega-F", "--lambda", "2,1", "--deg", "5",
    ]);
    assert_eq!(v["status"], "exact-pass");
    assert!(v["millis"].is_u64());
    let o = iqw(&["verify", "cauchy-F", "--q", "0.5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn dual_readings_are_reported() {
    let o = iqw(&[
        "verify",
        "dual-cauchy",
        "--mu",
        "1",
        "--nu",
        "1",
        "--deg",
        "4",
        "--readings",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("FAIL at"), "{out}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(iqw(&["nonsense"]).status.code(), Some(2));
    assert_eq!(
        iqw(&["poly", "expand", "--family", "X", "--lambda", "1", "--n", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(iqw(&["pieri", "--nu", "1,2"]).status.code(), Some(2));
    assert_eq!(
        iqw(&["measure", "table", "--alphas", "0.3,0.5", "--q", "0.5"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn spec_eval_exact_and_numeric() {
    let v = json(&[
        "--json", "spec", "eval", "--alphas", "2/5,3/10", "--betas", "1/5", "--q", "1/2",
        "--lambda", "2,1", "--mu", "1",
    ]);
    let exact = v["result"]["value"].as_str().unwrap().to_string();
    assert!(exact.contains('/'), "{exact}");
    let n = json(&[
        "--json", "spec", "eval", "--alphas", "0.4,0.3", "--betas", "0.2", "--q", "0.5",
        "--lambda", "2,1", "--mu", "1",
    ]);
    let x = n["result"]["numeric"].as_f64().unwrap();
    assert!((x - v["result"]["numeric"].as_f64().unwrap()).abs() < 1e-12);
    let g = json(&[
        "--json", "spec", "eval", "--gamma", "0.5", "--q", "0.5", "--lambda", "1", "--bar",
    ]);
    assert!((g["result"]["numeric"].as_f64().unwrap() - (0.5f64.exp() - 1.0)).abs() < 1e-10);
}

#[test]
fn measure_table_mass() {
    let v = json(&[
        "--json", "measure", "table", "--alphas", "0.4", "--q", "0.5", "--cap", "20",
    ]);
    assert!(v["tail_mass"].as_f64().unwrap().abs() < 1e-6);
    assert!(v["Z"].as_f64().unwrap() > 1.0);
    let total: f64 = v["entries"]
        .as_object()
        .unwrap()
        .values()
        .map(|x| x.as_f64().unwrap())
        .sum();
    assert!((total - 1.0).abs() < 1e-6);
}

#[test]
fn sampling_is_deterministic_across_thread_counts() {
    let args = [
        "measure", "sample", "--alphas", "0.4", "--q", "0.5", "--n", "2000", "--seed", "42",
    ];
    let a = iqw(&args);
    let b = Command::new(env!("CARGO_BIN_EXE_iqw"))
        .args(args)
        .env("IQW_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(a.stdout, b.stdout);
    let out = stdout(&a);
    assert_eq!(out.lines().count(), 2000);
    assert!(out.lines().any(|l| l == "∅"));
}

#[test]
fn help_lists_subcommands() {
    let out = stdout(&iqw(&["--help"]));
    for c in [
        "poly",
        "product",
        "pieri",
        "skew-expand",
        "basis",
        "verify",
        "spec",
        "measure",
    ] {
        assert!(out.contains(c), "{c}");
    }
}
