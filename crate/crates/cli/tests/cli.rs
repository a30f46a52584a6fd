//! End-to-end tests of the binary: fixture values, exit codes, and
//! byte-level determinism of the JSON output.

use std::process::{Command, Output};

use serde_json::Value;

fn regge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_regge"))
        .args(args)
        .output()
        .expect("binary runs")
}

/// Stdout of a run that must exit 0, parsed line by line.
fn run_json(args: &[&str]) -> Vec<Value> {
    let out = regge(args);
    assert!(
        out.status.success(),
        "regge {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout)
        .expect("utf8 output")
        .lines()
        .map(|l| serde_json::from_str(l).expect("json line"))
        .collect()
}

fn exit_code(args: &[&str]) -> i32 {
    regge(args).status.code().expect("exit code")
}

#[test]
fn sixj_reports_exact_values() {
    let v = &run_json(&["sixj", "0", "0", "0", "0", "0", "0"])[0];
    assert_eq!(v["valid"], true);
    assert_eq!(v["value"]["sign"], 1);
    assert_eq!(v["value"]["square_num"], "1");
    assert_eq!(v["value"]["square_den"], "1");

    let v = &run_json(&["sixj", "1", "1", "1", "1", "2", "2"])[0];
    assert_eq!(v["value"]["sign"], 1);
    assert_eq!(v["value"]["square_den"], "36");
    assert_eq!(v["u"]["square_den"], "4");
    assert!((v["float"].as_f64().unwrap() - 1.0 / 6.0).abs() < 1e-15);

    let v = &run_json(&["sixj", "1", "1", "1", "1", "0", "0"])[0];
    assert_eq!(v["value"]["sign"], -1);
    assert_eq!(v["value"]["square_den"], "4");
}

#[test]
fn invalid_labels_name_the_failing_triads_and_exit_zero() {
    let v = &run_json(&["sixj", "1", "1", "1", "1", "2", "1"])[0];
    assert_eq!(v["valid"], false);
    assert_eq!(v["value"]["sign"], 0);
    let triads: Vec<&str> = v["failing_triads"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t.as_str().unwrap())
        .collect();
    assert!(triads.contains(&"adf"));
}

#[test]
fn u_carries_the_dimension_weight() {
    let v = &run_json(&["u", "1", "1", "1", "1", "0", "0"])[0];
    assert_eq!(v["value"]["sign"], -1);
    assert_eq!(v["value"]["square_num"], "1");
    assert_eq!(v["value"]["square_den"], "4");
    let v = &run_json(&["u", "1", "1", "1", "1", "2", "2"])[0];
    // weight sqrt(3 * 3) = 3 on a 6j of 1/6, even label sum keeps the sign
    assert!((v["float"].as_f64().unwrap() - 0.5).abs() < 1e-15);
}

#[test]
fn orbit_is_constant_and_contains_the_scissors_image() {
    let v = &run_json(&["orbit", "4", "2", "2", "2", "4", "2"])[0];
    assert_eq!(v["constant"], true);
    let orbit = v["orbit"].as_array().unwrap();
    assert_eq!(orbit.len(), v["orbit_size"].as_u64().unwrap() as usize);
    let image = serde_json::json!([1, 3, 3, 3, 4, 2]);
    assert!(orbit.contains(&image));
}

#[test]
fn verify_suites_pass_and_exit_zero() {
    let lines = run_json(&["verify", "regge", "--max", "3"]);
    let summary = lines.last().unwrap();
    assert_eq!(summary["pass"], true);
    assert_eq!(summary["failed"], 0);
    assert!(summary["checked"].as_u64().unwrap() > 100);

    let lines = run_json(&["verify", "lemma", "--samples", "10", "--seed", "3"]);
    let summary = lines.last().unwrap();
    assert_eq!(summary["pass"], true);
    assert!(summary["max_deviation"].as_f64().unwrap() < 1e-10);
}

#[test]
fn verify_output_is_byte_deterministic() {
    let args = ["verify", "cm", "--samples", "40", "--seed", "11"];
    let a = regge(&args);
    let b = regge(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn malformed_input_exits_two() {
    assert_eq!(exit_code(&["sixj", "1", "2"]), 2);
    assert_eq!(exit_code(&["verify", "bogus"]), 2);
    assert_eq!(exit_code(&["tetra", "cm", "1", "1", "1", "1", "1", "x"]), 2);
    assert_eq!(
        exit_code(&[
            "fuchs", "coords", "--v1", "1,1", "--v2", "1,2,2", "--v3", "6,-3,-2", "--float",
        ]),
        2
    );
}

#[test]
fn tetra_regge_preserves_the_determinant() {
    let v = &run_json(&["tetra", "regge", "4", "2", "2", "2", "4", "2"])[0];
    assert_eq!(v["admissible"], true);
    assert_eq!(v["det_preserved"], true);
    assert_eq!(v["image"]["a"], "1");
    assert_eq!(v["image"]["b"], "3");
    assert_eq!(v["det_before"], v["det_after"]);
}

#[test]
fn tetra_cm_and_realize_agree_on_realizability() {
    let v = &run_json(&["tetra", "cm", "1", "1", "1", "1", "1", "1"])[0];
    assert_eq!(v["det"], "4");
    assert_eq!(v["realizable"], true);

    let v = &run_json(&[
        "tetra",
        "realize",
        "1",
        "1",
        "1",
        "1.7320508075688772",
        "1.4142135623730951",
        "1.4142135623730951",
    ])[0];
    assert_eq!(v["realizable"], true);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 3);

    let v = &run_json(&["tetra", "realize", "4", "2", "2", "2", "4", "2"])[0];
    assert_eq!(v["realizable"], false);
}

#[test]
fn pvi_solve_reproduces_the_series_fixture() {
    let v = &run_json(&[
        "pvi", "solve", "--t0", "3", "--y0", "2", "--y1", "0", "--theta", "0,0,0,1", "--order",
        "6",
    ])[0];
    let c2 = v["coefficients"][2].as_array().unwrap();
    assert!((c2[0].as_f64().unwrap() + 1.0 / 12.0).abs() < 1e-12);
    assert!(c2[1].as_f64().unwrap().abs() < 1e-14);
    assert!(v["residual_at_t0_plus_0_01"].as_f64().unwrap() < 1e-8);
}

#[test]
fn pvi_okamoto_shifts_parameters_and_keeps_residuals_small() {
    let v = &run_json(&[
        "pvi", "okamoto", "--t0", "3", "--y0", "2", "--y1", "0.3", "--theta", "1,1,1,1",
    ])[0];
    assert_eq!(v["defined"], true);
    assert_eq!(v["phi"][0], 2.0);
    for z in v["theta_shifted"].as_array().unwrap() {
        assert_eq!(z[0], -1.0);
    }
    assert!(v["image_residual_at_t0_plus_0_01"].as_f64().unwrap() < 1e-10);
}

#[test]
fn fuchs_exact_coordinates_match_the_lattice_fixture() {
    let v = &run_json(&[
        "fuchs", "coords", "--v1", "2,3,6", "--v2", "1,2,2", "--v3", "6,-3,-2", "--exact",
    ])[0];
    let c = &v["coords"];
    assert_eq!(c["theta"][0]["re"], "7");
    assert_eq!(c["theta"][3]["re"], "11");
    assert_eq!(c["lambda12"]["re"], "41/2");
    assert_eq!(c["tau"]["im"], "11");
    assert_eq!(c["tau_prime"]["im"], "-11");
}

#[test]
fn fuchs_okamoto_shifts_every_theta_by_half_the_sum() {
    let v = &run_json(&[
        "fuchs", "okamoto", "--v1", "2,3,6", "--v2", "1,2,2", "--v3", "6,-3,-2", "--float",
    ])[0];
    let shifted = v["coords_shifted"]["theta"].as_array().unwrap();
    // phi = (7 + 3 + 7 + 11) / 2 = 14
    let expect = [-7.0, -11.0, -7.0, -3.0];
    for (z, e) in shifted.iter().zip(expect) {
        assert!((z[0].as_f64().unwrap() - e).abs() < 1e-9);
    }
}

#[test]
fn fuchs_reconstruct_round_trips_the_coordinates() {
    let v = &run_json(&[
        "fuchs",
        "reconstruct",
        "--theta",
        "7,3,7,11",
        "--lambda12",
        "20.5",
        "--lambda23",
        "8.5",
    ])[0];
    assert_eq!(v["ok"], true);
    assert!(v["round_trip_deviation"].as_f64().unwrap() < 1e-9);
    assert_eq!(v["a1"].as_array().unwrap().len(), 2);
}

#[test]
fn json_flag_writes_the_report_to_a_file() {
    let path = std::env::temp_dir().join(format!("regge-cli-test-{}.jsonl", std::process::id()));
    let out = regge(&[
        "verify",
        "oracle",
        "--max",
        "2",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).expect("report file");
    std::fs::remove_file(&path).ok();
    let summary: Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
    assert_eq!(summary["pass"], true);
    assert_eq!(summary["suite"], "oracle");
}
