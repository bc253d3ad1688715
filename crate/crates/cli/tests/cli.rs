use std::process::{Command, Output};

use serde_json::Value;

use rootcond_cli::report::VerificationReport;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rootcond")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = run(&full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn table_text_and_json() {
    let out = run(&["table", "--group", "S3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("S3 (order 6, 3 classes)"));
    assert!(text.contains("X.2    2  -1   0"));

    let v = json(&["table", "--group", "C2xS3"]);
    assert_eq!(v.to_string(), json(&["table", "--group", "C2xS3"]).to_string());
}

#[test]
fn classify_counts_cases() {
    let v = json(&["classify", "--group", "S3", "--normal", "derived"]);
    let cases: Vec<&str> = v["characters"].as_array().unwrap().iter().map(|c| c["case"].as_str().unwrap()).collect();
    assert_eq!(cases, ["restricted", "restricted", "induced"]);

    // D4 has three index-2 normal subgroups, so the selector must be explicit
    assert_eq!(run(&["classify", "--group", "D4", "--normal", "index:2"]).status.code(), Some(2));
    let v = json(&["classify", "--group", "D4", "--normal", "elements:0,1,3,6"]);
    assert_eq!(v["characters"].as_array().unwrap().len(), 5);
}

#[test]
fn invalid_input_exits_with_two() {
    for args in [
        &["classify", "--group", "S3", "--normal", "gens:1"][..],
        &["conduct", "--context", "no-such-context"],
        &["table", "--group", "Z99"],
        &["bound", "--disc", "0", "--q", "2"],
        &["bound", "--disc", "4", "--q", "4"],
        &["verify", "--suite", "nonsense"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"), "{args:?}");
    }
}

#[test]
fn conduct_outputs() {
    let v = json(&["conduct", "--context", "gauss", "--all"]);
    assert_eq!(v["characters"][1]["norm"], "4");
    assert_eq!(v["conductor_discriminant"], true);

    let v = json(&["conduct", "--context", "quad-m23", "--char", "1"]);
    assert_eq!(v["characters"].as_array().unwrap().len(), 1);
    assert_eq!(v["characters"][0]["norm"], "23");

    let v = json(&["conduct", "--context", "s3-m23", "--induced", "derived"]);
    assert_eq!(v["characters"][0]["root_conductor"]["exact"], "23^(1/2)");
    assert_eq!(v["induced"]["exact_equal"], true);
}

#[test]
fn bound_from_flags() {
    let v = json(&["bound", "--disc", "4", "--q", "2", "--norm-ftheta", "2"]);
    assert_eq!(v["induced"]["exact"], "2^(3/2)");
    let out = run(&["bound", "--dataset", "martinet-constants"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("C = disc * T = 11034394624 = 2^15 * 11^4 * 23"));
}

#[test]
fn json_is_deterministic() {
    let a = json(&["verify", "--suite", "conductor"]);
    let b = json(&["verify", "--suite", "conductor"]);
    assert_eq!(a.to_string(), b.to_string());
    let report: VerificationReport = serde_json::from_value(a).unwrap();
    assert!(report.passed());
    assert_eq!(report.summary.total, report.checks.len());
}

#[test]
fn verify_text_ends_with_summary() {
    let out = run(&["verify", "--suite", "gallagher", "--max-order", "12"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.trim_end().lines().last().unwrap().starts_with("PASS: "));
}

#[test]
fn catalog_lists_groups_and_data() {
    let out = run(&["catalog", "list"]);
    let text = String::from_utf8(out.stdout).unwrap();
    for name in ["S4", "Q8", "D6", "quintic11", "martinet-constants"] {
        assert!(text.contains(name), "{name}");
    }
}
