use std::process::{Command, Output};

use serde_json::Value;

fn dwbc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dwbc")).args(args).env_remove("DWBC_DIGITS").output().expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = dwbc(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (v, out.status.code().unwrap())
}

fn got<'a>(v: &'a Value, name: &str) -> &'a str {
    v["results"].as_array().unwrap().iter().find(|e| e["name"] == name).unwrap()["got"].as_str().unwrap()
}

#[test]
fn count_reports_match() {
    let (v, code) = json(&["count", "--n", "4", "--x", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["command"], "count");
    assert_eq!(v["params"]["n"], 4);
    assert_eq!(got(&v, "A(4)"), "42");
    let refined: Vec<&str> = (1..=4).map(|r| got(&v, &format!("A(4,{r};x)"))).collect();
    assert_eq!(refined, ["7", "14", "14", "7"]);
    assert!(v["results"].as_array().unwrap().iter().all(|e| e["verdict"] == "MATCH" || e["verdict"] == "PASS"));
    assert!(v["elapsed_ms"].is_u64());

    let (v, code) = json(&["count", "--n", "3", "--x", "3"]);
    assert_eq!(code, 0);
    assert_eq!(got(&v, "A(3;3)"), "9");
    let (v, _) = json(&["count", "--n", "1", "--x", "1"]);
    assert_eq!(got(&v, "A(1)"), "1");
}

#[test]
fn verify_suites() {
    let (v, code) = json(&["verify", "--suite", "inhom", "--n", "4", "--q", "2"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["params"]["q"], "2");
    let (_, code) = json(&["verify", "--suite", "diffeq", "--max-n", "12"]);
    assert_eq!(code, 0);
    let (v, code) = json(&["verify", "--suite", "numeric", "--n", "4", "--digits", "40"]);
    assert_eq!(code, 0, "{v}");
    assert!(v["results"][0]["expected"].as_str().unwrap().starts_with('≤'));
}

#[test]
fn partition_values() {
    let (v, code) = json(&["partition", "--ice", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(got(&v, "Z_2"), "9/8");
    assert_eq!(got(&v, "exact form"), "(√3/2)^4 · 2");
    let (v, _) = json(&["partition", "--ice", "--n", "1"]);
    assert_eq!(got(&v, "Z_1"), "1/2·√3");
    // truncated decimal angles land within 1e-7 of 9/8
    let (v, code) = json(&["partition", "--lambda", "1.5707963", "--eta", "0.5235988", "--n", "2", "--digits", "50"]);
    assert_eq!(code, 0);
    let z: f64 = got(&v, "Z_2 numeric").parse().unwrap();
    assert!((z - 1.125).abs() < 1e-7);
    let (v, _) = json(&["partition", "--lambda", "pi/2", "--eta", "pi/6", "--n", "2", "--digits", "50"]);
    assert!(got(&v, "Z_2 numeric").starts_with("1.12500000000000000000000000000000000000000"));
}

#[test]
fn digits_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_dwbc"))
        .args(["partition", "--ice", "--n", "2", "--format", "json"])
        .env("DWBC_DIGITS", "25")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["params"]["digits"], 25);
}

#[test]
fn csv_and_text() {
    let out = dwbc(&["count", "--n", "2", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next().unwrap(), "name,expected,got,verdict");
    assert!(text.lines().any(|l| l == "A(2),2,2,MATCH"));
    let out = dwbc(&["count", "--n", "2"]);
    assert!(String::from_utf8(out.stdout).unwrap().contains("0 failed"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["count", "--n", "0"],
        vec!["count", "--n", "3", "--x", "1.5"],
        vec!["partition", "--n", "2"],
        vec!["partition", "--n", "2", "--lambda", "0.1", "--eta", "0.5"],
        vec!["verify", "--suite", "inhom", "--q", "1"],
        vec!["verify", "--suite", "nope"],
        vec!["count", "--n", "2", "--digits", "5"],
    ] {
        assert_eq!(dwbc(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn deterministic_given_seed() {
    let a = dwbc(&["verify", "--suite", "inhom", "--n", "3", "--seed", "9", "--format", "csv"]);
    let b = dwbc(&["verify", "--suite", "inhom", "--n", "3", "--seed", "9", "--format", "csv"]);
    assert_eq!(a.stdout, b.stdout);
}
