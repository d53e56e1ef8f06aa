use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run_with(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_capgeo"));
    cmd.args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .env_remove("CAPGEO_THREADS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn run(args: &[&str], stdin: &str) -> Output {
    run_with(args, stdin, &[])
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn family(name: &str, extra: &[&str]) -> String {
    let mut args = vec!["gallery", name];
    args.extend_from_slice(extra);
    let out = run(&args, "");
    assert_eq!(out.status.code(), Some(0));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn disk_exists() {
    let out = run(&["analyze", "-"], &family("disk", &[]));
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["status"], "exists");
    assert_eq!(v["criterion_path"][0], "convex_iff");
}

#[test]
fn pinocchio_is_refuted() {
    let out = run(&["analyze", "-"], &family("pinocchio", &["--T", "1"]));
    assert_eq!(out.status.code(), Some(10));
    assert_eq!(json(&out)["criterion_path"][0], "no_neck_iff");
}

#[test]
fn equal_balls_are_unresolved() {
    let out = run(&["analyze", "-"], &family("equal_balls", &[]));
    assert_eq!(out.status.code(), Some(20));
    assert_eq!(json(&out)["status"], "unresolved");
}

#[test]
fn square_cheeger_numbers() {
    let out = run(&["cheeger", "-"], &family("square", &[]));
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let h = 2.0 + std::f64::consts::PI.sqrt();
    assert!((v["h"].as_f64().unwrap() - h).abs() < 1e-6);
    assert!((v["r_star"].as_f64().unwrap() - 1.0 / h).abs() < 1e-6);
    assert_eq!(v["cheeger_set"]["components"].as_array().unwrap().len(), 1);
}

#[test]
fn gamma_is_passed_through() {
    let out = run(&["analyze", "-", "--gamma", "0.3"], &family("stadium", &[]));
    let v = json(&out);
    assert_eq!(v["gamma"], 0.3);
    assert!(v["criterion_path"].as_array().unwrap().contains(&"gamma_reduction".into()));
}

#[test]
fn erode_reports_raster_comparison() {
    let out = run(&["erode", "-", "--radius", "0.25"], &family("square", &[]));
    let v = json(&out);
    assert!((v["area"].as_f64().unwrap() - 0.25).abs() < 1e-12);
    assert!((v["raster_area"].as_f64().unwrap() - 0.25).abs() < 1e-2);
    assert_eq!(v["components"].as_array().unwrap().len(), 1);
}

#[test]
fn dumbbell_erosion_splits() {
    let out = run(&["erode", "-", "--radius", "0.5"], &family("dumbbell", &[]));
    assert_eq!(json(&out)["components"].as_array().unwrap().len(), 2);
}

#[test]
fn convex_report_and_nonconvex_nulls() {
    let v = json(&run(&["convex", "-"], &family("ellipse", &[])));
    assert_eq!(v["convex"], true);
    assert!((v["kappa_bar"].as_f64().unwrap() - 2.0).abs() < 0.04);
    assert_eq!(v["giusti"], false);
    // a coarser polygon shows its corners to the default sampling
    let v = json(&run(&["convex", "-"], &family("ellipse", &["--n", "1024"])));
    assert_eq!(v["kappa_bar"], Value::Null);
    let v = json(&run(&["convex", "-"], &family("dumbbell", &[])));
    assert_eq!(v["convex"], false);
    assert_eq!(v["kappa_bar"], Value::Null);
}

#[test]
fn reach_defaults_to_physical_radius() {
    let v = json(&run(&["reach", "-"], &family("stadium", &[])));
    let r_phys = (std::f64::consts::PI + 4.0) / (2.0 * std::f64::consts::PI + 4.0);
    assert!((v["radius"].as_f64().unwrap() - r_phys).abs() < 1e-9);
    assert_eq!(v["rolling"], true);
}

#[test]
fn malformed_json_is_an_error_object() {
    let out = run(&["analyze", "-"], "{\"start\": [0, 0], \"segments\": ");
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"]["kind"], "malformed_json");
}

#[test]
fn invalid_domain_is_reported() {
    let bowtie = r#"{"start":[0,0],"segments":[{"kind":"line","end":[1,1]},{"kind":"line","end":[1,0]},{"kind":"line","end":[0,1]},{"kind":"line","end":[0,0]}]}"#;
    let out = run(&["analyze", "-"], bowtie);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"]["kind"], "invalid_domain");
}

#[test]
fn missing_file_and_bad_flags() {
    let out = run(&["analyze", "/nonexistent/domain.json"], "");
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"]["kind"], "read");
    let out = run(&["analyze", "-", "--gamma", "2"], &family("disk", &[]));
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"]["kind"], "gamma_out_of_range");
    let out = run(&["frobnicate"], "");
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"]["kind"], "usage");
}

#[test]
fn thread_variable_is_validated() {
    let d = family("disk", &[]);
    let out = run_with(&["analyze", "-"], &d, &[("CAPGEO_THREADS", "zero")]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"]["kind"], "bad_environment");
    let out = run_with(&["analyze", "-"], &d, &[("CAPGEO_THREADS", "3")]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn svg_has_fixed_layers() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig.svg");
    let out = run(&["cheeger", "-", "--svg", path.to_str().unwrap()], &family("stadium", &[]));
    assert_eq!(out.status.code(), Some(0));
    let svg = std::fs::read_to_string(&path).unwrap();
    let order: Vec<usize> = ["boundary", "erosion", "cheeger-set", "witness", "rolling-disk"]
        .iter()
        .map(|g| svg.find(&format!("<g id=\"{g}\"")).unwrap())
        .collect();
    assert!(order.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn gallery_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tb.json");
    let p = path.to_str().unwrap();
    let out = run(&["gallery", "two_balls", "--d", "1.5", "--out", p], "");
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let doc: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["metadata"]["family"], "two_balls");
    let from_file = run(&["analyze", p], "");
    let from_stdin = run(&["analyze", "-"], &text);
    assert_eq!(from_file.stdout, from_stdin.stdout);
    assert_eq!(from_file.status.code(), Some(10));
}

#[test]
fn gallery_list_names_every_family() {
    let v = json(&run(&["gallery", "list"], ""));
    let names: Vec<&str> = v["families"].as_array().unwrap().iter().map(|f| f["name"].as_str().unwrap()).collect();
    assert_eq!(names.len(), capgeo_core::gallery::FAMILIES.len());
    assert!(names.contains(&"finn_giusti"));
    let out = run(&["gallery", "hexagon"], "");
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"]["kind"], "unknown_family");
}
