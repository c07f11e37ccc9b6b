//! End-to-end runs of the binary: exit codes, output schemas, determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polytrope"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is valid JSON")
}

#[test]
fn realize_emits_a_maximal_type() {
    let out = run(&["realize", "--k", "3", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["k"], 3);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 6);
    assert_eq!(v["edges"].as_array().unwrap().len(), 6);
}

#[test]
fn realize_rejects_singular_input() {
    let dir = std::env::temp_dir().join("polytrope-cli-singular.csv");
    std::fs::write(&dir, "0,1,1\n1,0,1\n1,0,1\n").unwrap();
    let out = run(&["realize", "--matrix", dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("singular"));
}

#[test]
fn realize_flags_a_deficient_type() {
    let dir = std::env::temp_dir().join("polytrope-cli-deficit.csv");
    std::fs::write(&dir, "0,5,1\n1,0,5\n5,1,0\n").unwrap();
    let out = run(&["realize", "--matrix", dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    // the partial type is still written before the failure is reported
    let v = stdout_json(&out);
    assert!(v["vertices"].as_array().unwrap().len() < 6);
}

#[test]
fn subdivide_passes_and_is_deterministic() {
    let args = ["subdivide", "--k", "3", "--blocks", "2,2,2", "--seed", "5"];
    let out = run(&args);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["cells"], 6);
    assert_eq!(v["all_pass"], true);
    assert_eq!(v["duality_pass"], true);
    assert_eq!(v["samples_passed"], v["samples_total"]);
    let again = run(&args);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn subdivide_emits_dot() {
    let out = run(&[
        "subdivide",
        "--k",
        "3",
        "--blocks",
        "2,2,2",
        "--format",
        "dot",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("graph dual {"));
    assert_eq!(text.matches(" -- ").count(), 6);
}

#[test]
fn subdivide_rejects_small_blocks() {
    let out = run(&["subdivide", "--k", "4", "--blocks", "1,2,2,2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn rank4_demo_reports_cells_splits_and_scan() {
    let out = run(&["rank4-demo"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["tilde_cells"], 14);
    assert_eq!(v["tilde_all_pass"], true);
    assert_eq!(v["splits"].as_array().unwrap().len(), 12);
    assert_eq!(v["scan"]["violations"], 0);
    assert!(v["scan"]["eligible"].as_u64().unwrap() > 0);
    assert_eq!(v["refinement_pass"], true);
}

#[test]
fn out_flag_writes_the_file() {
    let path = std::env::temp_dir().join("polytrope-cli-out.json");
    let _ = std::fs::remove_file(&path);
    let out = run(&[
        "realize",
        "--k",
        "3",
        "--seed",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["k"], 3);
}
