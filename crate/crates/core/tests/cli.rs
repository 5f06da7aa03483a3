use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_waringlab")).args(args).env("WARINGLAB_THREADS", "1").output().expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

fn without_timing(mut v: Value) -> Value {
    v["elapsed_ms"] = Value::Null;
    v
}

#[test]
fn rank_profile_examples() {
    for (form, b, r) in [("4:0,1,0,0,0", 2, 4), ("2:1,0,1", 2, 2), ("3:1,0,0,1", 2, 2)] {
        let out = run(&["rank-profile", form]);
        assert!(out.status.success());
        let v = report(&out);
        assert_eq!(v["schema"], 1);
        assert_eq!(v["outputs"]["border_rank"], b, "{form}");
        assert_eq!(v["outputs"]["rank"], r, "{form}");
        assert_eq!(v["pass"], true);
    }
}

#[test]
fn parse_errors_exit_nonzero_with_diagnostic() {
    let out = run(&["rank-profile", "3:1,2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("needs 4 coefficients"));
}

#[test]
fn wq_certifies_and_reports_failure() {
    let out = run(&["wq", "4:0,1,0,0,0", "--seed", "3"]);
    assert!(out.status.success());
    assert_eq!(report(&out)["outputs"]["certified_point"], true);

    let out = run(&["wq", "5:1,0,0,0,0,1", "--t", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let v = report(&out);
    assert_eq!(v["pass"], false);
    assert_eq!(v["outputs"]["subspace"]["proj_dim"], 1);
    assert_eq!(v["outputs"]["samples_used"], 1);
    assert!(v["outputs"]["reason"].is_string());
}

#[test]
fn reports_are_reproducible() {
    let a = run(&["wq", "7:3,-1,4,1,-5,9,2,6", "--seed", "11"]);
    let b = run(&["wq", "7:3,-1,4,1,-5,9,2,6", "--seed", "11"]);
    assert_eq!(without_timing(report(&a)), without_timing(report(&b)));
}

#[test]
fn unknown_suite_lists_available() {
    let out = run(&["verify", "b7"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("a3, a2, q1, q2, q3, a45, a43, i1"), "{err}");
}

#[test]
fn small_verify_run() {
    let out = run(&["verify", "q1", "--seed", "7", "--samples", "5"]);
    assert!(out.status.success());
    let v = report(&out);
    assert_eq!(v["command"], "verify");
    assert_eq!(v["anchor"]["statement"], "q1");
    assert_eq!(v["outputs"]["pass"], true);
}

#[test]
fn a43_range_violation_names_the_hypothesis() {
    let out = run(&["a43", "--b", "2", "--k", "8"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("d + 2 - b"));
}

#[test]
fn h1_from_file_and_json_output() {
    let dir = tempfile::tempdir().unwrap();
    let pts = dir.path().join("points.txt");
    let mut text = String::from("# eight collinear points and two more\n");
    for t in 0..8 {
        text.push_str(&format!("1:{t}:0\n"));
    }
    text.push_str("0:0:1\n1:1:1\n");
    std::fs::write(&pts, text).unwrap();
    let json = dir.path().join("out.json");
    let out = run(&["h1", pts.to_str().unwrap(), "--d", "6", "--json", json.to_str().unwrap()]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(v["outputs"]["h1"], 1);
    assert_eq!(v["outputs"]["witness"]["kind"], "line");
    assert_eq!(v["outputs"]["witness"]["points"].as_array().unwrap().len(), 8);

    // too many points for the configuration search
    let mut big = String::new();
    for i in 0..20 {
        big.push_str(&format!("1:{i}:{}\n", i * i + 1));
    }
    std::fs::write(&pts, big).unwrap();
    let out = run(&["h1", pts.to_str().unwrap(), "--d", "6"]);
    assert!(out.status.success());
    let v = report(&out);
    assert_eq!(v["outputs"]["searched"], false);
    assert!(v["outputs"]["witness_search"].as_str().unwrap().starts_with("skipped"));
}

#[test]
fn qsa_on_rational_normal_curve() {
    let out = run(&["qsa", "--curve", "rnc", "--r", "4", "--seed", "2"]);
    assert!(out.status.success());
    assert_eq!(report(&out)["outputs"]["rank"], 3);
}
