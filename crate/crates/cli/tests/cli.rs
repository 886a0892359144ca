use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_extraconn"))
        .args(args)
        .current_dir(dir)
        .env_remove("EXTRACONN_THREADS")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn gen_writes_both_formats() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["gen", "hypercube:4", "-o", "q4.g6"], dir.path());
    assert!(out.status.success());
    let g6 = fs::read_to_string(dir.path().join("q4.g6")).unwrap();
    assert_eq!(g6.lines().count(), 1);

    let out = run(&["gen", "cartesian:K4,K4", "-o", "g.el"], dir.path());
    assert!(out.status.success());
    let el = fs::read_to_string(dir.path().join("g.el")).unwrap();
    assert_eq!(el.lines().next(), Some("16 48"));
    assert_eq!(el.lines().count(), 49);

    let out = run(&["gen", "remark27:2"], dir.path());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("12 "));

    let out = run(&["gen", "cycle:5", "--format", "g6"], dir.path());
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "Dhc");
}

#[test]
fn analyze_hypercube_from_file() {
    let dir = tempfile::tempdir().unwrap();
    run(&["gen", "hypercube:4", "-o", "q4.g6"], dir.path());
    let v = json(&run(&["analyze", "q4.g6", "--h", "2"], dir.path()));
    assert_eq!(v["schema"], "extraconn.analysis/1");
    assert_eq!(v["lambda_h"], serde_json::json!([4, 6, 8]));
    assert_eq!(v["super"], serde_json::json!([true, true, false]));
    assert_eq!(v["order"], 16);
    assert_eq!(v["girth"], 4);
    assert!(v.get("millis").is_none());
}

#[test]
fn analyze_petersen_with_rho() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(&run(&["analyze", "petersen", "--rho"], dir.path()));
    assert_eq!(v["rho"][1]["rho"], 1);
}

#[test]
fn analyze_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = run(&["analyze", "torus:3,4", "--rho"], dir.path());
    let b = run(&["analyze", "torus:3,4", "--rho"], dir.path());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let t = json(&run(&["analyze", "torus:3,4", "--timings"], dir.path()));
    assert!(t["millis"].is_u64());
}

#[test]
fn rho_modes_agree() {
    let dir = tempfile::tempdir().unwrap();
    run(&["gen", "hypercube:4", "-o", "q4.el"], dir.path());
    let fast = json(&run(&["rho", "q4.el", "--h", "1"], dir.path()));
    assert_eq!(fast["schema"], "extraconn.rho/1");
    assert_eq!(fast["rho"], 2);
    assert_eq!(fast["witness"].as_array().unwrap().len(), 3);
    let plain = json(&run(&["rho", "q4.el", "--h", "1", "--no-prune"], dir.path()));
    assert_eq!(plain["rho"], 2);
    assert_eq!(plain["method"], "search");
    let k4 = json(&run(&["rho", "complete:4", "--oracle"], dir.path()));
    assert_eq!(k4["rho"], 2);
    assert_eq!(k4["method"], "definition");
}

#[test]
fn verify_small_corpus_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["verify", "--builtin", "small8", "--checks", "L1.4,T1.2", "-o", "r.json"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&fs::read_to_string(dir.path().join("r.json")).unwrap()).unwrap();
    assert_eq!(v["schema"], "extraconn.report/1");
    assert_eq!(v["summary"]["fail"], 0);
    assert_eq!(v["summary"]["graphs"], 12313);
}

#[test]
fn verify_specs_and_graph6_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(&run(&["verify", "petersen", "hypercube:4", "--checks", "T2.4"], dir.path()));
    assert_eq!(v["checks"], serde_json::json!(["T2.4i", "T2.4ii"]));
    assert_eq!(v["graphs"][1]["graph"], "hypercube:4");

    fs::write(dir.path().join("c.g6"), "C~\nDhc\n").unwrap();
    let v = json(&run(&["verify", "--corpus", "c.g6", "--checks", "T1.2"], dir.path()));
    assert_eq!(v["summary"]["graphs"], 2);
    assert_eq!(v["graphs"][0]["graph"], "g6:C~");
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let code = |args: &[&str]| run(args, dir.path()).status.code();
    assert_eq!(code(&["verify", "--checks", "NOPE"]), Some(2));
    assert_eq!(code(&["analyze", "bogus"]), Some(2));
    assert_eq!(code(&["gen", "hypercube:x"]), Some(2));
    assert_eq!(code(&["analyze", "missing.el"]), Some(1));
    assert_eq!(code(&["rho", "cycle:8"]), Some(3));
    assert_eq!(code(&["rho", "hypercube:5", "--budget", "0"]), Some(5));

    fs::write(dir.path().join("split.el"), "4 3\n0 1\n1 2\n0 2\n").unwrap();
    let out = run(&["analyze", "split.el"], dir.path());
    assert_ne!(out.status.code(), Some(0));
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn threads_flag_is_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let v = json(&run(&["--threads", "2", "analyze", "cycle:6"], dir.path()));
    assert_eq!(v["lambda_h"][0], 2);
}
