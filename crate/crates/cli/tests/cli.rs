//! End-to-end runs of the `pvka` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn pvka(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pvka")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("pvka-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn strip_wall_time(text: &[u8]) -> String {
    String::from_utf8_lossy(text).lines().filter(|l| !l.contains("\"wall_time\"")).collect::<Vec<_>>().join("\n")
}

#[test]
fn identity_h_reports_half() {
    let out = pvka(&["identity", "--system", "H", "--D", "2", "--N", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["results"][0]["name"], "identity");
    assert_eq!(v["results"][0]["proportionality_constant"], "1/2");
    assert_eq!(v["summary"]["fail"], 0);
    assert_eq!(v["spec"]["N"], 2);
}

#[test]
fn identity_c_passes() {
    let out = pvka(&["identity", "--system", "C", "--params", "g=9/2", "--D", "1", "--N", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["results"][0]["proportionality_constant"], "-7/5");
    assert_eq!(v["spec"]["lambda"]["g"], "9/2");
}

#[test]
fn n_below_max_d_is_a_usage_error() {
    assert_eq!(pvka(&["identity", "--system", "H", "--D", "2", "--N", "1"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(pvka(&["scan", "--trials", "0"]).status.code(), Some(2));
    assert_eq!(pvka(&["identity", "--system", "Q", "--D", "1", "--N", "1"]).status.code(), Some(2));
    assert_eq!(pvka(&["identity", "--system", "C", "--D", "1", "--N", "1"]).status.code(), Some(2));
    assert_eq!(pvka(&["potential", "--system", "H", "--D", "2", "--N", "2", "--grid", "1:2"]).status.code(), Some(2));
    assert_eq!(pvka(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn potential_h_csv_has_401_rows() {
    let csv = tmp("h.csv");
    let out = pvka(&[
        "potential",
        "--system",
        "H",
        "--D",
        "2",
        "--N",
        "2",
        "--grid",
        "-5:5:401",
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x,U_DC_minus_E,U_KA"));
    let rows: Vec<Vec<f64>> = lines.map(|l| l.split(',').map(|c| c.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 401);
    let mid = &rows[200];
    assert!(mid[0].abs() < 1e-12 && (mid[1] + 5.0).abs() < 1e-10 && (mid[2] + 5.0).abs() < 1e-10);
}

#[test]
fn potential_j_passes() {
    let out = pvka(&["potential", "--system", "J", "--params", "g=15/2,h=15/2", "--D", "1,2", "--N", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["results"][0]["status"], "pass");
}

#[test]
fn singular_potential_is_flagged() {
    let out = pvka(&["potential", "--system", "H", "--D", "1", "--N", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let details = json(&out)["results"][0]["details"].as_str().unwrap().to_string();
    assert!(details.contains("ka_condition false") && details.contains("singularities excluded"), "{details}");
}

#[test]
fn spectrum_and_report_pass() {
    let out = pvka(&["spectrum", "--system", "L", "--params", "g=11/2", "--D", "2", "--N", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let out = pvka(&["report", "--system", "M", "--params", "h=15/2,mu=1", "--D", "2", "--N", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let names: Vec<String> =
        json(&out)["results"].as_array().unwrap().iter().map(|r| r["name"].as_str().unwrap().to_string()).collect();
    assert!(names.contains(&"x_wronskian".to_string()) && names.contains(&"orthogonality".to_string()), "{names:?}");
}

#[test]
fn failing_check_exits_1() {
    // A tolerance below double precision cannot be met by the grid checks.
    let out = pvka(&["spectrum", "--system", "H", "--D", "2", "--N", "2", "--tol", "1e-30"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn scan_all_systems() {
    let out = pvka(&["scan", "--systems", "all", "--trials", "50", "--seed", "42", "--max-M", "3", "--max-N", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["results"].as_array().unwrap().len(), 550);
    assert_eq!(v["systems"].as_array().unwrap().len(), 11);
    assert_eq!(v["summary"]["fail"], 0);
}

#[test]
fn scan_is_deterministic_across_job_counts() {
    let args = ["scan", "--systems", "K,hst", "--trials", "20", "--seed", "7"];
    let a = pvka(&[&args[..], &["--jobs", "1"]].concat());
    let b = pvka(&[&args[..], &["--jobs", "3"]].concat());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(strip_wall_time(&a.stdout), strip_wall_time(&b.stdout));
    let v = json(&a);
    let order: Vec<(String, u64)> = v["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| (t["system"].as_str().unwrap().to_string(), t["trial"].as_u64().unwrap()))
        .collect();
    assert_eq!(order[0], ("K".to_string(), 0));
    assert_eq!(order[20], ("hst".to_string(), 0));
}

#[test]
fn config_file_with_flag_override() {
    let cfg = tmp("run.json");
    std::fs::write(&cfg, r#"{"system": "J", "params": {"g": "15/2", "h": "15/2"}, "D": [1, 2], "N": 5}"#).unwrap();
    let out_path = tmp("out.json");
    let out = pvka(&["identity", "--config", cfg.to_str().unwrap(), "--N", "2", "--out", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(v["spec"]["N"], 2);
    std::fs::write(&cfg, r#"{"sytem": "J"}"#).unwrap();
    assert_eq!(pvka(&["identity", "--config", cfg.to_str().unwrap()]).status.code(), Some(2));
}
