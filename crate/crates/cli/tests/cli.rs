//! End-to-end tests driving the compiled binary.

use std::process::{Command, Output};

fn cubechaos(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubechaos"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = cubechaos(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 output")
}

#[test]
fn orbit_csv_matches_golden_rows() {
    // lower corners at depth 35, truncated to 12 digits; independently
    // computed with arbitrary-precision fractions
    let expected = "step,x1,x2\n\
        0,0.574633735899,0.302773856499\n\
        1,0.298534943599,0.211095425999\n\
        2,0.194139774399,0.844381703999\n\
        3,0.776559097599,0.377526815999\n\
        4,0.106236390399,0.510107263999\n\
        5,0.424945561599,0.040429055999\n";
    let got = stdout_of(&[
        "orbit",
        "--dim",
        "2",
        "--init",
        "0.5746337359,0.3027738565",
        "--steps",
        "5",
    ]);
    assert_eq!(got, expected);
}

#[test]
fn orbit_from_zero_stays_at_zero() {
    let got = stdout_of(&["orbit", "--dim", "1", "--init", "0", "--steps", "10"]);
    let lines: Vec<&str> = got.lines().collect();
    assert_eq!(lines.len(), 11 + 1);
    assert_eq!(lines[0], "step,x1");
    for (i, line) in lines[1..].iter().enumerate() {
        assert_eq!(*line, format!("{i},0.000000000000"));
    }
}

#[test]
fn orbit_three_dimensional_stays_in_cube() {
    let got = stdout_of(&[
        "orbit",
        "--dim",
        "3",
        "--init",
        "0.3766437951,0.2649318230,0.0275998135",
        "--steps",
        "100",
    ]);
    let lines: Vec<&str> = got.lines().collect();
    assert_eq!(lines[0], "step,x1,x2,x3");
    assert_eq!(lines.len(), 102);
    for line in &lines[1..] {
        for coord in line.split(',').skip(1) {
            let value: f64 = coord.parse().unwrap();
            assert!((0.0..=1.0).contains(&value), "coordinate {coord}");
        }
    }
    // row 100 from the independent fraction oracle
    assert_eq!(
        lines[101],
        "100,0.508892057599,0.298088447999,0.193893375999"
    );
}

#[test]
fn orbit_bytes_are_reproducible() {
    let args = [
        "orbit",
        "--dim",
        "2",
        "--init",
        "0.5746337359,0.3027738565",
        "--steps",
        "50",
        "--format",
        "json",
    ];
    assert_eq!(stdout_of(&args), stdout_of(&args));
}

#[test]
fn orbit_writes_the_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("orbit.csv");
    let out = cubechaos(&[
        "orbit",
        "--dim",
        "1",
        "--init",
        "1/3",
        "--steps",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("step,x1\n0,0.333333333333\n"));
}

#[test]
fn verify_separation_reports_the_bound() {
    let got = stdout_of(&["verify", "separation", "--dim", "3"]);
    let json: serde_json::Value = serde_json::from_str(&got).unwrap();
    assert_eq!(json["pass"], serde_json::json!(true));
    assert_eq!(json["params"]["bound"], serde_json::json!("3/16"));
}

#[test]
fn verify_transitivity_visits_all_order_three_intervals() {
    let got = stdout_of(&["verify", "transitivity", "--dim", "1", "--order", "3"]);
    let json: serde_json::Value = serde_json::from_str(&got).unwrap();
    assert_eq!(json["pass"], serde_json::json!(true));
    assert_eq!(json["witnesses"].as_array().unwrap().len(), 64);
    assert_eq!(json["params"]["carrier_length"], serde_json::json!("228"));
}

#[test]
fn verify_liyorke_and_periodic_pass() {
    for args in [
        vec!["verify", "liyorke", "--dim", "1", "--segments", "10"],
        vec!["verify", "periodic", "--dim", "2", "--order", "8"],
        vec!["verify", "diagonal", "--dim", "5", "--order", "10"],
    ] {
        let got = stdout_of(&args);
        let json: serde_json::Value = serde_json::from_str(&got).unwrap();
        assert_eq!(json["pass"], serde_json::json!(true), "{args:?}");
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["verify", "diagonal", "--dim", "9999"],
        vec!["orbit", "--dim", "1", "--init", "abc"],
        vec!["orbit", "--dim", "2", "--init", "0.5"],
        vec![
            "orbit", "--dim", "1", "--init", "0.5", "--steps", "9", "--depth", "4",
        ],
        vec!["orbit", "--dim", "1", "--init", "1.5"],
        vec!["verify", "separation", "--dim", "3", "--format", "csv"],
        vec!["dense", "--dim", "1", "--order", "3", "--depth", "100"],
        vec!["nonsense"],
        vec!["orbit"],
    ] {
        let out = cubechaos(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn dense_export_lists_thirty_six_digits() {
    let got = stdout_of(&["dense", "--dim", "1", "--order", "2"]);
    let json: serde_json::Value = serde_json::from_str(&got).unwrap();
    assert_eq!(json["length"], serde_json::json!(36));
    assert_eq!(json["digits"].as_array().unwrap().len(), 36);
    let first: Vec<u64> = json["digits"].as_array().unwrap()[..4]
        .iter()
        .map(|d| d.as_u64().unwrap())
        .collect();
    assert_eq!(first, vec![1, 2, 3, 4]);
}

#[test]
fn sensitivity_export_reports_the_guaranteed_gap() {
    let got = stdout_of(&["sensitivity", "--dim", "1", "--prefix", "2,2", "--k", "2"]);
    let json: serde_json::Value = serde_json::from_str(&got).unwrap();
    assert_eq!(
        json["guaranteed_squared_separation"],
        serde_json::json!("1/16")
    );
    assert_eq!(json["original"], serde_json::json!([2, 2, 2]));
    assert_eq!(json["perturbed"], serde_json::json!([2, 2, 4]));
}

#[test]
fn periodic_export_contains_its_target() {
    let got = stdout_of(&["periodic", "--dim", "2", "--target", "5,9"]);
    let json: serde_json::Value = serde_json::from_str(&got).unwrap();
    assert_eq!(json["containment"], serde_json::json!(true));
    assert_eq!(json["approximant"], serde_json::json!([5, 9, 5, 9]));
}

#[test]
fn liyorke_export_lists_checkpoints() {
    let got = stdout_of(&["liyorke", "--dim", "1", "--segments", "3"]);
    let json: serde_json::Value = serde_json::from_str(&got).unwrap();
    assert_eq!(json["code_a"].as_array().unwrap().len(), 12);
    assert_eq!(json["agree_checkpoints"], serde_json::json!([0, 2, 6]));
    assert_eq!(
        json["disagree_checkpoints"],
        serde_json::json!([1, 4, 5, 9, 10, 11])
    );
}

#[test]
fn tent_export_checks_semiconjugacy() {
    let got = stdout_of(&["tent", "--init", "1/3", "--depth", "4"]);
    let json: serde_json::Value = serde_json::from_str(&got).unwrap();
    assert_eq!(json["itinerary"], serde_json::json!([2, 3, 3, 3]));
    assert_eq!(json["semiconjugacy"], serde_json::json!(true));
    assert_eq!(json["interval"]["lower"], serde_json::json!("85/256"));
}
