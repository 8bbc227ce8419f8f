use std::path::PathBuf;
use std::process::{Command, Output};

use formalode_cli::format::{Report, SeriesFile};
use serde_json::{json, Value};

fn formalode(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_formalode"))
        .args(args)
        .env_remove("FORMALODE_MAX_ORDER")
        .output()
        .expect("binary runs")
}

fn report(args: &[&str]) -> Report {
    let out = formalode(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    Report::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap()
}

fn code(args: &[&str]) -> i32 {
    formalode(args).status.code().expect("exited normally")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("formalode-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn write(name: &str, value: Value) -> String {
    let path = scratch(name);
    std::fs::write(&path, value.to_string()).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn coeffs_rational() {
    let r = report(&["coeffs", "--op", "2,3", "--order", "1"]);
    assert_eq!(r.coefficients, json!(["1/2", "-3/4"]));
    assert_eq!(r.ring, formalode_cli::format::RingJson::Rational);
}

#[test]
fn coeffs_trivial_operator() {
    let r = report(&["coeffs", "--op", "1", "--order", "3"]);
    assert_eq!(r.coefficients, json!(["1", "0", "0", "0"]));
}

#[test]
fn coeffs_padic() {
    let r = report(&[
        "coeffs",
        "--ring",
        "padic",
        "--prime",
        "5",
        "--precision",
        "3",
        "--op",
        "1,1",
        "--order",
        "3",
    ]);
    assert_eq!(r.coefficients, json!(["1", "124", "1", "124"]));
}

#[test]
fn solve_rational_integral() {
    let r = report(&["solve", "--op", "2,3", "--rhs", "5,2", "--verify"]);
    assert_eq!(r.coefficients, json!(["1", "1"]));
    assert_eq!(r.regime.as_deref(), Some("exact_polynomial"));
    assert!(r.integrality.unwrap().integral);
    assert!(r.verification.unwrap().verified);
}

#[test]
fn solve_rational_with_witness() {
    let r = report(&["solve", "--op", "2,3", "--rhs", "5,1"]);
    assert_eq!(r.coefficients, json!(["7/4", "1/2"]));
    let integrality = r.integrality.unwrap();
    assert!(!integrality.integral);
    let witness = integrality.witness.unwrap();
    assert_eq!((witness.index, witness.value.as_str()), (0, "7/4"));
}

#[test]
fn solve_padic_generator_verifies() {
    let r = report(&[
        "solve",
        "--ring",
        "padic",
        "--prime",
        "7",
        "--precision",
        "6",
        "--op",
        "1,1",
        "--generator",
        "ones",
        "--order",
        "5",
        "--verify",
    ]);
    let v = r.verification.unwrap();
    assert!(v.verified);
    assert_eq!(v.checked_order, 4);
    assert_eq!(r.regime.as_deref(), Some("padic_weak"));
    assert!(r.tail_cutoff.is_some());
    assert_eq!(r.coefficients.as_array().unwrap().len(), 6);
}

#[test]
fn solve_padic_strict_reports_regime() {
    let r = report(&[
        "solve",
        "--ring",
        "padic",
        "--prime",
        "2",
        "--precision",
        "8",
        "--op",
        "1,2",
        "--generator",
        "geometric(3)",
        "--order",
        "4",
    ]);
    assert_eq!(r.regime.as_deref(), Some("padic_strict"));
    assert_eq!(r.tail_cutoff, Some(5));
}

#[test]
fn rational_generator_is_rejected() {
    assert_eq!(code(&["solve", "--op", "2,3", "--generator", "ones"]), 4);
}

#[test]
fn fundamental_euler_series() {
    let r = report(&["fundamental", "--op", "1,-1", "--depth", "4", "--verify"]);
    assert_eq!(
        r.coefficients,
        json!({"x^-1": "1", "x^-2": "-1", "x^-3": "2", "x^-4": "-6"})
    );
    assert!(r.verification.unwrap().verified);
}

#[test]
fn fundamental_padic_defaults_to_cutoff() {
    let r = report(&[
        "fundamental",
        "--ring",
        "padic",
        "--prime",
        "3",
        "--precision",
        "2",
        "--op",
        "1,1",
    ]);
    let cutoff = r.tail_cutoff.unwrap();
    assert_eq!(r.coefficients.as_object().unwrap().len(), cutoff);
}

#[test]
fn convolve_with_reciprocal_x_echoes() {
    let b = write(
        "unit.json",
        json!({"kind": "laurent", "ring": {"kind": "rational"}, "coeffs": ["1"], "exact": true, "trunc_order": 1}),
    );
    let f = write(
        "f.json",
        json!({"kind": "power", "ring": {"kind": "rational"}, "coeffs": ["3", "-1/2", "0", "7"], "exact": true, "trunc_order": 3}),
    );
    let r = report(&["convolve", &b, &f]);
    assert_eq!(r.coefficients, json!(["3", "-1/2", "0", "7"]));

    let g = write(
        "g.json",
        json!({"kind": "laurent", "ring": {"kind": "rational"}, "coeffs": ["2", "5"], "exact": true, "trunc_order": 2}),
    );
    let r = report(&["convolve", &b, &g]);
    assert_eq!(r.coefficients, json!({"x^-1": "2", "x^-2": "5"}));
}

#[test]
fn convolve_rejects_mixed_rings_and_divergence() {
    let b = write(
        "b_trunc.json",
        json!({"kind": "laurent", "ring": {"kind": "rational"}, "coeffs": ["1", "1"], "exact": false, "trunc_order": 2}),
    );
    let f = write(
        "f_padic.json",
        json!({"kind": "power", "ring": {"kind": "padic", "p": 5, "precision": 2}, "coeffs": ["1"], "exact": true, "trunc_order": 0}),
    );
    assert_eq!(code(&["convolve", &b, &f]), 7);
    let f = write(
        "f_q.json",
        json!({"kind": "power", "ring": {"kind": "rational"}, "coeffs": ["1", "1", "1"], "exact": false, "trunc_order": 2}),
    );
    assert_eq!(code(&["convolve", &b, &f]), 6);
}

#[test]
fn laurent_solve_of_reciprocal_x_is_fundamental() {
    let solved = report(&[
        "laurent-solve",
        "--op",
        "1,1",
        "--rhs",
        "1",
        "--depth",
        "4",
        "--verify",
    ]);
    let fundamental = report(&["fundamental", "--op", "1,1", "--depth", "4"]);
    assert_eq!(solved.coefficients, fundamental.coefficients);
    assert!(solved.verification.unwrap().verified);
}

#[test]
fn reports_round_trip_and_feed_verify() {
    let out = scratch("solution.json");
    let out = out.to_str().unwrap();
    let args = [
        "solve",
        "--ring",
        "padic",
        "--prime",
        "3",
        "--precision",
        "5",
        "--op",
        "2,1,1",
        "--generator",
        "constant(4)",
        "--order",
        "6",
        "--output",
        out,
    ];
    assert_eq!(code(&args), 0);
    let text = std::fs::read_to_string(out).unwrap();
    let parsed = Report::from_json(&text).unwrap();
    assert_eq!(parsed.to_json(), text);
    let series = SeriesFile::from_json_text(&text, out).unwrap();
    assert_eq!(json!(series.coeffs), parsed.coefficients);

    let r = report(&[
        "verify",
        "--ring",
        "padic",
        "--prime",
        "3",
        "--precision",
        "5",
        "--op",
        "2,1,1",
        "--solution",
        out,
        "--generator",
        "constant(4)",
    ]);
    assert_eq!(r.verification.unwrap().checked_order, 4);

    let bad = code(&[
        "verify",
        "--ring",
        "padic",
        "--prime",
        "3",
        "--precision",
        "5",
        "--op",
        "2,1,1",
        "--solution",
        out,
        "--generator",
        "constant(5)",
    ]);
    assert_eq!(bad, 10);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["coeffs", "--op", "1,x", "--order", "2"]), 1);
    assert_eq!(code(&["coeffs", "--op", "0,1", "--order", "2"]), 2);
    assert_eq!(
        code(&[
            "coeffs",
            "--ring",
            "padic",
            "--prime",
            "3",
            "--precision",
            "2",
            "--op",
            "3,1",
            "--order",
            "2"
        ]),
        2
    );
    assert_eq!(
        code(&[
            "solve",
            "--ring",
            "padic",
            "--prime",
            "5",
            "--precision",
            "3",
            "--op",
            "5,1",
            "--rhs",
            "1"
        ]),
        3
    );
    assert_eq!(
        code(&[
            "coeffs",
            "--ring",
            "padic",
            "--prime",
            "4",
            "--precision",
            "2",
            "--op",
            "1",
            "--order",
            "1"
        ]),
        1
    );
    assert_eq!(
        code(&["coeffs", "--ring", "padic", "--op", "1", "--order", "1"]),
        1
    );
    assert_eq!(code(&["frobnicate"]), 1);
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(
        code(&["convolve", "/nonexistent/b.json", "/nonexistent/f.json"]),
        9
    );

    let f = write(
        "short.json",
        json!({"kind": "power", "ring": {"kind": "padic", "p": 5, "precision": 2}, "coeffs": ["1", "1"], "exact": false, "trunc_order": 1}),
    );
    assert_eq!(
        code(&[
            "solve",
            "--ring",
            "padic",
            "--prime",
            "5",
            "--precision",
            "2",
            "--op",
            "1,1",
            "--rhs-file",
            &f,
            "--order",
            "3",
        ]),
        5
    );
}

#[test]
fn max_order_cap() {
    let out = Command::new(env!("CARGO_BIN_EXE_formalode"))
        .args(["coeffs", "--op", "1,1", "--order", "6"])
        .env("FORMALODE_MAX_ORDER", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(8));
}

#[test]
fn parse_diagnostics_carry_columns() {
    let out = formalode(&["solve", "--op", "2,3", "--rhs", "5,2/0"]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("--rhs:1:"), "{stderr}");

    let bad = write("bad.json", json!("oops"));
    std::fs::write(&bad, "{\n  \"kind\": \"power\",\n  oops\n}").unwrap();
    let out = formalode(&["convolve", &bad, &bad]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains(&format!("{bad}:3:")));
}
