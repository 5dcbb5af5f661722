use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_alghyper")).args(args).output().expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn build_quaternion_commuting_is_exact() {
    let out = stdout(&["build", "quaternion", "commuting"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["kind"], "commuting");
    assert_eq!(v["edges"].as_array().unwrap().len(), 3);
    for e in v["edges"].as_array().unwrap() {
        assert_eq!(e.as_array().unwrap().len(), 4);
    }
}

#[test]
fn output_is_byte_deterministic() {
    for args in [
        ["build", "product:(cyclic:2),(cyclic:4)", "generating"],
        ["export", "sym:4", "commuting"],
        ["export", "dihedral:6", "power"],
    ] {
        assert_eq!(stdout(&args), stdout(&args), "{args:?}");
    }
}

#[test]
fn dot_export_has_one_box_per_edge() {
    let dot = stdout(&["export", "klein", "generating", "--format", "dot"]);
    assert!(dot.starts_with("graph "));
    assert_eq!(dot.matches("shape=box").count(), 3);
    assert_eq!(dot.matches(" -- ").count(), 6);
}

#[test]
fn export_writes_file() {
    let path = std::env::temp_dir().join(format!("alghyper-export-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    assert_eq!(code(&["export", "cyclic:6", "power", "--out", p]), 0);
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(written, stdout(&["build", "cyclic:6", "power"]));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["build", "nope:3", "power"]), 2);
    assert_eq!(code(&["build", "cyclic:4", "bogus"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["build", "sym:3", "identity_max"]), 3);
    assert_eq!(code(&["build", "dihedral:4", "identity_min"]), 3);
    assert_eq!(code(&["build", "multmod:10", "identity_max"]), 3);
    assert_eq!(code(&["chains", "10000000000"]), 4);
    assert_eq!(code(&["build", "cyclic:5000", "power"]), 4);
    assert_eq!(code(&["verify", "matroid", "--group", "cyclic:6"]), 1);
    assert_eq!(code(&["verify", "matroid", "--group", "quaternion"]), 0);
    assert_eq!(code(&["verify", "no-such-theorem"]), 2);
}

#[test]
fn verify_chain_count_theorem() {
    let out = stdout(&["verify", "pow-chain-count", "--max-n", "300"]);
    assert!(out.contains("PASS"));
    assert!(!out.contains("FAIL"));
}

#[test]
fn chains_json_lists_twelve() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["chains", "12", "--json"])).unwrap();
    assert_eq!(v["count"], "3");
    let sizes: Vec<u64> = v["chains"].as_array().unwrap().iter().map(|c| c["edge_size"].as_u64().unwrap()).collect();
    assert_eq!(sizes, [8, 8, 9]);
}

#[test]
fn smallest_n_small_bound() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["smallest-n", "1000000", "--json"])).unwrap();
    assert!(v["result"].is_null());
}

#[test]
fn analyze_reports_connectivity() {
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["analyze", "multmod:10", "power", "--json"])).unwrap();
    assert_eq!(v["order"], 10);
    assert_eq!(v["connected"], false);
}
