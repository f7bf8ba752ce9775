use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toric-elim"))
        .args(args)
        .env("TORIC_ELIM_THREADS", "1")
        .output()
        .expect("binary runs")
}

fn run_json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn path(name: &str) -> String {
    data(name).to_string_lossy().into_owned()
}

#[test]
fn dims_of_running_example() {
    let v = run_json(&["dims", &path("running_generic.json")]);
    assert_eq!(v["levels"], serde_json::json!([[12], [7, 4, 5], [1, 2, 1], [0]]));
}

#[test]
fn delta_flag_overrides_file() {
    let v = run_json(&["dims", &path("running_generic.json"), "--delta", "0,0"]);
    assert_eq!(v["levels"], serde_json::json!([[16], [11, 7, 7], [4, 4, 2], [1]]));
    let v = run_json(&["dims", &path("running_generic.json"), "--delta", "0,-1/2"]);
    assert_eq!(v["levels"], serde_json::json!([[12], [8, 4, 4], [2, 2, 0], [0]]));
}

#[test]
fn direction_rule_changes_bases() {
    let v = run_json(&["dims", &path("running_generic.json"), "--shift-rule", "direction"]);
    assert_eq!(v["levels"], serde_json::json!([[11], [6, 4, 4], [1, 1, 1], [0]]));
}

#[test]
fn resultant_matches_golden_text() {
    let out = run(&["resultant", &path("running_generic.json"), "--format", "text"]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    let golden = std::fs::read_to_string(data("running_resultant.golden")).unwrap();
    assert_eq!(stdout.lines().next().unwrap(), golden.trim_end());
}

#[test]
fn resultant_json_fields() {
    let v = run_json(&["resultant", &path("running_generic.json")]);
    assert_eq!(v["degrees"], serde_json::json!([4, 2, 2]));
    assert_eq!(v["mixed_volumes"], serde_json::json!([4, 2, 2]));
    assert_eq!(v["terms"].as_array().unwrap().len(), 7);
}

#[test]
fn resultant_output_is_seed_stable() {
    let a = run(&["resultant", &path("running_generic.json"), "--seed", "1"]);
    let b = run(&["resultant", &path("running_generic.json"), "--seed", "99"]);
    let c = run(&["resultant", &path("running_generic.json"), "--seed", "1"]);
    let poly = |o: &Output| serde_json::from_slice::<Value>(&o.stdout).unwrap()["polynomial"].clone();
    assert_eq!(poly(&a), poly(&b));
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn resultant_value_vanishes_at_common_zero() {
    let v = run_json(&["resultant", &path("running_common_zero.json")]);
    assert_eq!(v["value"], "0");
    let v = run_json(&["resultant", &path("running_no_zero.json")]);
    assert_ne!(v["value"], "0");
}

#[test]
fn minor_verification_reports_counts() {
    let v = run_json(&["resultant", &path("running_generic.json"), "--verify-minors", "30"]);
    let m = &v["minors"];
    assert_eq!(m["total"], 1820);
    assert_eq!(m["checked"], 30);
    assert_eq!(m["indivisible"].as_array().unwrap().len(), 0);
    assert_eq!(m["zero"].as_u64().unwrap() + m["divisible"].as_u64().unwrap(), 30);
}

#[test]
fn check_verdicts() {
    let v = run_json(&["check", &path("running_common_zero.json")]);
    assert_eq!(v["verdict"], "nonempty (not surjective)");
    let v = run_json(&["check", &path("running_no_zero.json")]);
    assert_eq!(v["verdict"], "empty (surjective)");
}

#[test]
fn certificate_found_and_verified() {
    let v = run_json(&["certificate", &path("running_no_zero.json"), "--target", "t^(2,2)"]);
    assert_eq!(v["verified"], true);
    assert_eq!(v["cofactors"].as_array().unwrap().len(), 3);
}

#[test]
fn no_certificate_exit_code() {
    let out = run(&["certificate", &path("running_common_zero.json"), "--target", "t^(2,2)"]);
    assert_eq!(out.status.code(), Some(5));
}

#[test]
fn mixed_volume_output() {
    let v = run_json(&["mixed-volume", &path("running_generic.json")]);
    assert_eq!(v["mixed_volumes"], serde_json::json!([4, 2, 2]));
}

#[test]
fn geometric_failure_exit_code() {
    let out = run(&["dims", &path("degenerate.json")]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn input_failure_exit_codes() {
    assert_eq!(run(&["dims", "/nonexistent/system.json"]).status.code(), Some(2));
    assert_eq!(run(&["dims", &path("running_generic.json"), "--delta", "a,b"]).status.code(), Some(2));
    assert_eq!(run(&["check", &path("running_generic.json")]).status.code(), Some(2));
    let out = run(&["certificate", &path("running_no_zero.json"), "--delta", "1,0", "--target", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sylvester_value_matches_root_product() {
    // f = (x - 1)(x - 2) is monic, so Res(f, g) = g(1) g(2) = 17/2 * 77/2
    let v = run_json(&["resultant", &path("sylvester_2_3_concrete.json")]);
    let value = v["value"].as_str().unwrap();
    assert!(value == "1309/4" || value == "-1309/4", "{value}");
    assert_eq!(v["degrees"], serde_json::json!([3, 2]));
}

#[test]
fn all_ones_certificate_for_corner_monomial() {
    let v = run_json(&["certificate", &path("running_all_ones.json"), "--target", "t^(2,2)"]);
    assert_eq!(v["verified"], true);
}

#[test]
fn target_outside_shifted_sum_is_input_error() {
    let out = run(&["certificate", &path("running_all_ones.json"), "--target", "t^(9,9)"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn wrong_polynomial_count_for_resultant() {
    let two = std::env::temp_dir().join(format!("toric-elim-two-{}.json", std::process::id()));
    std::fs::write(&two, r#"{"n": 2, "supports": [[[0,0],[1,0]], [[0,0],[0,1]]], "coefficients": "generic"}"#).unwrap();
    let out = run(&["resultant", two.to_str().unwrap()]);
    std::fs::remove_file(&two).ok();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("n+1"));
}

#[test]
fn mixed_volumes_of_simplices_and_points() {
    let v = run_json(&["mixed-volume", &path("dense_lines.json")]);
    assert_eq!(v["mixed_volumes"], serde_json::json!([1, 1, 1]));
    let v = run_json(&["mixed-volume", &path("point_support.json")]);
    assert_eq!(v["mixed_volumes"], serde_json::json!([1, 0, 0]));
}

#[test]
fn unknown_fields_are_rejected() {
    let bad = std::env::temp_dir().join(format!("toric-elim-bad-{}.json", std::process::id()));
    std::fs::write(&bad, r#"{"n": 1, "supports": [[[0],[1]], [[0],[1]]], "colour": "red"}"#).unwrap();
    let out = run(&["dims", bad.to_str().unwrap()]);
    std::fs::remove_file(&bad).ok();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn text_and_json_agree_on_dims() {
    let out = run(&["dims", &path("running_generic.json"), "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "level 0: 12\nlevel 1: 7 + 4 + 5\nlevel 2: 1 + 2 + 1\nlevel 3: 0\n");
}
