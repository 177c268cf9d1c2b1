use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn alcove(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_alcove"))
        .args(args)
        .env_remove("ALCOVE_CONFIG")
        .output()
        .expect("binary runs")
}

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data")
}

/// Compares stdout with `tests/data/<name>.json`; `UPDATE_GOLDEN=1` rewrites it.
fn golden(name: &str, args: &[&str], code: i32) -> Value {
    let out = alcove(args);
    assert_eq!(out.status.code(), Some(code), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    let path = data_dir().join(format!("{name}.json"));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &text).unwrap();
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(text, want, "output drifted from {}", path.display());
    serde_json::from_str(&text).unwrap()
}

fn b(v: &Value) -> Vec<String> {
    v["data"]["b"].as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect()
}

#[test]
fn coeffs_a4_both_routes() {
    let v = golden("coeffs_a4", &["coeffs", "--type", "A4", "--kmax", "6", "--method", "both"], 0);
    assert_eq!(b(&v)[4], "4830");
    assert_eq!(v["data"]["b"], v["data"]["b_alcove"]);
    assert_eq!(v["status"], "pass");
}

#[test]
fn coeffs_a1_order_zero() {
    let v = golden("coeffs_a1_k0", &["coeffs", "--type", "A1", "--kmax", "0"], 0);
    assert_eq!(b(&v), ["1"]);
}

#[test]
fn coeffs_g2_vanishes_at_four() {
    let v = golden("coeffs_g2", &["coeffs", "--type", "G2", "--kmax", "4", "--method", "both"], 0);
    assert_eq!(b(&v)[4], "0");
}

#[test]
fn peterson_e6() {
    let v = golden("peterson_e6", &["verify", "--suite", "peterson", "--type", "E6"], 0);
    assert_eq!(v["data"]["count"], 64);
}

#[test]
fn roots_f234() {
    let v = golden("roots_f234", &["verify", "--suite", "roots-f234"], 0);
    let roots: Vec<&Value> = v["data"]["f"].as_array().unwrap().iter().map(|r| &r["integer_roots"]).collect();
    assert_eq!(roots[2], &serde_json::json!([0, 1, 3, 14]));
}

#[test]
fn seven_numbers_a2_fails_at_dual_coxeter() {
    let v = golden("seven_numbers_a2", &["verify", "--suite", "seven-numbers", "--type", "A2"], 1);
    let failing: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "fail")
        .map(|c| c["claim"].as_str().unwrap())
        .collect();
    assert_eq!(failing, ["legs-equal-k3"]);
}

#[test]
fn reruns_are_byte_identical() {
    for args in [
        &["verify", "--suite", "ideal-chains", "--type", "B3"][..],
        &["alcoves", "--type", "G2", "--max-length", "7"][..],
        &["fk", "--kmax", "8", "--eval", "24", "--lehmer"][..],
    ] {
        assert_eq!(alcove(args).stdout, alcove(args).stdout, "{args:?}");
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "--suite", "no-such-suite", "--type", "A2"][..],
        &["verify", "--suite", "parity"][..],
        &["coeffs", "--type", "Q7"][..],
        &["mcore", "--m", "1"][..],
    ] {
        let out = alcove(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error"));
    }
}

#[test]
fn scale_guard_and_allow_big() {
    let args = ["alcoves", "--type", "A1", "--max-length", "100"];
    assert_eq!(alcove(&args).status.code(), Some(2));
    let mut big = vec!["--allow-big"];
    big.extend(args);
    assert_eq!(alcove(&big).status.code(), Some(0));
}

#[test]
fn config_file_overrides_limits() {
    let dir = std::env::temp_dir().join(format!("alcove-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("limits.json");
    std::fs::write(&path, r#"{"max_length": 3}"#).unwrap();
    let run = |len: &str| {
        Command::new(env!("CARGO_BIN_EXE_alcove"))
            .args(["alcoves", "--type", "A2", "--max-length", len])
            .env("ALCOVE_CONFIG", &path)
            .output()
            .unwrap()
    };
    assert_eq!(run("3").status.code(), Some(0));
    let out = run("4");
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds"));

    std::fs::write(&path, "not json").unwrap();
    assert_eq!(run("1").status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn summary_is_a_table() {
    let out = alcove(&["--summary", "verify", "--suite", "bott", "--type", "D4", "--kmax", "8"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("bott [D4] PASS\n"));
    assert!(text.contains("poincare-series"));
}

#[test]
fn mcore_reports_core_of_given_partition() {
    let out = alcove(&["mcore", "--m", "3", "--partition", "3,3", "--kmax", "2", "--max-length", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["data"]["core"]["null"], true);
}
