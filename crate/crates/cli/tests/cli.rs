//! End-to-end tests of the binary: formats, values, exit codes.

use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_squarewell"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("UTF-8 output")
}

fn json(output: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(output)).expect("valid JSON")
}

const PI: f64 = std::f64::consts::PI;

#[test]
fn spectrum_csv_rows() {
    let out = run(&["spectrum", "--n-max", "3", "--output-format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,energy"));
    let energies: Vec<f64> = lines
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert_eq!(energies.len(), 3);
    for (i, e) in energies.iter().enumerate() {
        let n = (i + 1) as f64;
        assert!((e - PI * PI / 2.0 * n * n).abs() < 1e-12);
    }
}

#[test]
fn spectrum_scales_with_length() {
    let narrow = run(&["spectrum", "--n-max", "1", "--output-format", "csv"]);
    let wide = run(&[
        "spectrum",
        "--n-max",
        "1",
        "--output-format",
        "csv",
        "--length",
        "2",
    ]);
    let parse = |o: &Output| -> f64 {
        stdout(o)
            .lines()
            .nth(1)
            .unwrap()
            .split(',')
            .nth(1)
            .unwrap()
            .parse()
            .unwrap()
    };
    let ratio = parse(&narrow) / parse(&wide);
    assert!((ratio - 4.0).abs() < 1e-12);
}

#[test]
fn spectrum_rejects_zero_levels() {
    let out = run(&["spectrum", "--n-max", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn minimize_reaches_the_bound() {
    let out = run(&["minimize", "--output-format", "json"]);
    assert!(out.status.success());
    let report = json(&out);
    let bound = report["exact_bound"].as_f64().unwrap();
    let energy = report["final_energy"].as_f64().unwrap();
    assert!((bound - PI * PI / 2.0).abs() < 1e-14);
    assert!((energy - bound) / bound < 1e-8);
    assert!(report["converged"].as_bool().unwrap());
    assert!(report["overlap_with_mode1"].as_f64().unwrap() >= 1.0 - 1e-6);
}

#[test]
fn minimize_different_seed_same_minimum() {
    let a = json(&run(&["minimize", "--output-format", "json"]));
    let b = json(&run(&[
        "minimize",
        "--output-format",
        "json",
        "--seed",
        "7",
    ]));
    let ea = a["final_energy"].as_f64().unwrap();
    let eb = b["final_energy"].as_f64().unwrap();
    assert!((ea - eb).abs() / ea < 1e-8);
    assert_ne!(
        a["iterations_used"].as_u64(),
        b["iterations_used"].as_u64(),
        "different seeds should walk different trajectories"
    );
}

#[test]
fn minimize_trajectory_csv_is_monotone() {
    let out = run(&[
        "minimize",
        "--output-format",
        "csv",
        "--max-iterations",
        "500",
    ]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("iteration,energy"));
    let energies: Vec<f64> = lines
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert!(energies.len() >= 2);
    for pair in energies.windows(2) {
        assert!(pair[1] <= pair[0] * (1.0 + 1e-14));
    }
}

#[test]
fn minimize_exhausted_budget_exits_three() {
    let out = run(&["minimize", "--max-iterations", "1"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn check_wirtinger_clean_run() {
    let out = run(&[
        "check-wirtinger",
        "--trials",
        "50",
        "--output-format",
        "json",
    ]);
    assert!(out.status.success());
    let summary = json(&out);
    assert_eq!(summary["trials"].as_u64(), Some(50));
    assert_eq!(summary["grid_violations"].as_u64(), Some(0));
    assert_eq!(summary["coeff_violations"].as_u64(), Some(0));
    assert!(summary["min_coeff_margin"].as_f64().unwrap() >= 0.0);
}

#[test]
fn check_wirtinger_reports_equality_case() {
    let out = run(&[
        "check-wirtinger",
        "--trials",
        "1",
        "--include-ground",
        "--output-format",
        "json",
    ]);
    assert!(out.status.success());
    let summary = json(&out);
    assert_eq!(summary["trials"].as_u64(), Some(2));
    assert!(summary["equality_cases"].as_u64().unwrap() >= 1);
    assert_eq!(summary["min_coeff_margin"].as_f64(), Some(0.0));
}

#[test]
fn bounds_ground_state_values() {
    let out = run(&["bounds", "ground", "--output-format", "json"]);
    assert!(out.status.success());
    let report = json(&out);
    assert_eq!(report["heisenberg_bound"].as_f64(), Some(0.5));
    let exact = report["exact_bound"].as_f64().unwrap();
    assert!((exact - 4.934802200544679).abs() < 1e-14);
    let ratio = report["bound_ratio"].as_f64().unwrap();
    assert!((ratio - PI * PI).abs() < 1e-12);
    let product = report["uncertainty_product"].as_f64().unwrap();
    assert!((product - 0.5678618083866119).abs() < 1e-4);
}

#[test]
fn bounds_second_mode_momentum() {
    let out = run(&["bounds", "mode:2", "--output-format", "json"]);
    let report = json(&out);
    let dp = report["delta_p"].as_f64().unwrap();
    assert!((dp - 2.0 * PI).abs() < 1e-3);
}

#[test]
fn bounds_rejects_boundary_violation() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.csv");
    std::fs::write(&path, "x,re,im\n0,0,0\n0.5,1,0\n1,0.25,0\n").unwrap();
    let out = run(&["bounds", &format!("file:{}", path.display())]);
    assert_eq!(out.status.code(), Some(4));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("boundary condition violated"));
}

#[test]
fn bounds_rejects_unknown_selector() {
    let out = run(&["bounds", "excited:1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bounds_missing_file_exits_four() {
    let out = run(&["bounds", "file:/definitely/not/here.csv"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn state_file_round_trips_through_coeffs() {
    let dir = tempfile::tempdir().unwrap();
    let state = dir.path().join("state.csv");
    let out = run(&[
        "minimize",
        "--state-out",
        state.to_str().unwrap(),
        "--output-format",
        "json",
    ]);
    assert!(out.status.success());
    assert!(Path::new(&state).exists());

    let out = run(&[
        "coeffs",
        &format!("file:{}", state.display()),
        "--truncation",
        "2",
        "--output-format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,re,im"));
    let first: Vec<f64> = lines
        .next()
        .unwrap()
        .split(',')
        .skip(1)
        .map(|v| v.parse().unwrap())
        .collect();
    assert!((first[0] - 1.0).abs() < 1e-6, "c1 should be ≈ 1");
}

#[test]
fn coeffs_exp_basis_of_ground() {
    let out = run(&[
        "coeffs",
        "ground",
        "--basis",
        "exp",
        "--truncation",
        "2",
        "--output-format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("k,re,im"));
    // rows: k = −2, −1, 0, 1, 2; a₋₁ ≈ +i, a₁ ≈ −i.
    let rows: Vec<Vec<f64>> = lines
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 5);
    assert!((rows[1][2] - 1.0).abs() < 1e-8);
    assert!((rows[3][2] + 1.0).abs() < 1e-8);
    assert!(rows[2][1].abs() < 1e-12 && rows[2][2].abs() < 1e-12);
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("levels.csv");
    let out = run(&[
        "spectrum",
        "--n-max",
        "2",
        "--output-format",
        "csv",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("n,energy\n"));
}

#[test]
fn rejects_nonpositive_physical_params() {
    for flag in ["--hbar", "--mass", "--length"] {
        let out = run(&["spectrum", flag, "0"]);
        assert_eq!(out.status.code(), Some(2), "{flag}=0 must be a usage error");
    }
}
