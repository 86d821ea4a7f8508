use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn g2tok(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_g2tok"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn lines(path: &Path) -> Vec<Value> {
    std::fs::read_to_string(path)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn verify_grid_writes_one_report_per_weight() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("reports.jsonl");
    let out = g2tok(&[
        "verify",
        "--l1",
        "0..2",
        "--l2",
        "0..1",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let reports = lines(&path);
    assert_eq!(reports.len(), 7);
    for r in &reports[..6] {
        assert_eq!(r["schema_version"], 1);
        assert_eq!(r["task"], "conjecture");
        assert_eq!(r["equal"], true);
        assert!(r["mismatches"].as_array().unwrap().is_empty());
        assert!(r.get("elapsed_ms").is_none());
    }
    assert_eq!(
        reports[0]["parameters"],
        serde_json::json!({"l1": 0, "l2": 0})
    );
    assert_eq!(
        reports[1]["parameters"],
        serde_json::json!({"l1": 0, "l2": 1})
    );
    assert_eq!(reports[6]["task"], "conjecture-summary");
    assert_eq!(reports[6]["weights"], 6);
}

#[test]
fn trivial_weight_census_in_report() {
    let out = g2tok(&["verify", "--l1", "0", "--l2", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let first: Value =
        serde_json::from_slice(out.stdout.split(|&b| b == b'\n').next().unwrap()).unwrap();
    assert_eq!(
        first["counts"],
        serde_json::json!({"patterns": 64, "zero": 24, "bad_middle": 12, "altered": 7})
    );
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    let one = g2tok(&["--threads", "1", "verify", "--l1", "1..2", "--l2", "0..2"]);
    let many = g2tok(&["--threads", "4", "verify", "--l1", "1..2", "--l2", "0..2"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn timings_are_opt_in() {
    let out = g2tok(&["verify", "--l1", "1", "--l2", "0", "--timings"]);
    let first: Value =
        serde_json::from_slice(out.stdout.split(|&b| b == b'\n').next().unwrap()).unwrap();
    assert!(first["elapsed_ms"].is_number());
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "--l1", "3..1"][..],
        &["verify", "--l1", "-1"],
        &["verify", "--bogus"],
        &["gk", "--max-degree", "-1"],
        &["gk", "--max-degree", "4", "--mode", "sideways"],
        &["dump", "everything", "--l1", "0", "--l2", "0"],
        &["--threads", "0", "verify"],
        &["verify", "--output", "/nonexistent/dir/out.jsonl"],
        &[],
    ] {
        assert_eq!(g2tok(args).status.code(), Some(2), "{args:?}");
    }
    assert_eq!(g2tok(&["--help"]).status.code(), Some(0));
}

#[test]
fn gk_triple_modes() {
    for n in ["0", "8"] {
        let out = g2tok(&["gk", "--max-degree", n, "--mode", "triple"]);
        assert_eq!(out.status.code(), Some(0));
        let r: Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(r["task"], "gk-triple");
        assert_eq!(r["equal"], true);
        assert_eq!(r["parameters"]["max_degree"], n.parse::<i64>().unwrap());
    }
}

#[test]
fn gk_audit_reproduces_reference_marks() {
    let out = g2tok(&[
        "gk",
        "--max-degree",
        "16",
        "--mode",
        "audit",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["matches_reference"], true);
    let marked = |row: &str| -> Vec<String> {
        let mut v: Vec<String> = r["rows"][row]
            .as_object()
            .unwrap()
            .iter()
            .filter(|(_, b)| b.as_bool().unwrap())
            .map(|(k, _)| k.clone())
            .collect();
        v.sort();
        v
    };
    assert_eq!(
        marked("vp"),
        ["24", "245", "256", "26", "4", "45", "56", "6"]
    );
    assert_eq!(
        marked("corr"),
        ["24", "245", "2456", "246", "4", "45", "456", "46"]
    );

    let text = g2tok(&["gk", "--max-degree", "16", "--mode", "audit"]);
    assert_eq!(text.status.code(), Some(0));
    let s = String::from_utf8(text.stdout).unwrap();
    assert!(s.contains("marks match reference: yes"));
}

#[test]
fn gk_audit_below_the_smallest_witnesses_fails() {
    // The 456 and 2456 columns first appear in degrees 14 and 15.
    let out = g2tok(&["gk", "--max-degree", "8", "--mode", "audit"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn dump_patterns_json_and_csv() {
    let out = g2tok(&["dump", "patterns", "--l1", "1", "--l2", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let records: Vec<Value> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(records.len(), 64);
    let zero = records
        .iter()
        .filter(|r| r["contribution"].as_array().unwrap().is_empty())
        .count();
    assert!(zero >= 24);
    let special = records
        .iter()
        .find(|r| r["entries"] == serde_json::json!([3, 2, 3, 1, 0, 0]))
        .unwrap();
    assert_eq!(special["contribution"], serde_json::json!([0, 0, 1, -1]));
    assert_eq!(special["monomial"], serde_json::json!({"m": 6, "n": 3}));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("patterns.csv");
    let out = g2tok(&[
        "dump",
        "patterns",
        "--l1",
        "1",
        "--l2",
        "1",
        "--format",
        "csv",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let mut reader = csv::Reader::from_path(&path).unwrap();
    assert_eq!(
        reader.headers().unwrap(),
        vec![
            "a",
            "b",
            "c",
            "d",
            "e",
            "f",
            "circled",
            "boxed",
            "m",
            "n",
            "contribution"
        ]
    );
    assert_eq!(reader.records().count(), 64);
}

#[test]
fn dump_character_of_seven_dimensional_representation() {
    let out = g2tok(&["dump", "character", "--l1", "1", "--l2", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let terms: Vec<Value> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(terms.len(), 7);
    assert!(terms.iter().all(|t| t["coeffs"] == serde_json::json!([1])));
}

#[test]
fn dump_numerator_of_trivial_weight() {
    let out = g2tok(&[
        "dump",
        "numerator",
        "--l1",
        "0",
        "--l2",
        "0",
        "--format",
        "text",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.starts_with("1 "));
}

#[test]
fn dump_a2_table() {
    let out = g2tok(&["dump", "a2", "--l1", "1", "--l2", "1", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let s = String::from_utf8(out.stdout).unwrap();
    let contributions: Vec<&str> = s
        .lines()
        .map(|l| {
            l.split("  ")
                .filter(|p| !p.is_empty())
                .last()
                .unwrap()
                .trim()
        })
        .collect();
    assert_eq!(
        contributions,
        ["1", "-t", "-t", "-t + t^2", "t^2", "0", "t^2", "-t^3"]
    );
    assert!(String::from_utf8(out.stderr).unwrap().contains("equal"));
}

#[test]
fn output_is_reproducible() {
    let a = g2tok(&[
        "dump", "patterns", "--l1", "2", "--l2", "1", "--format", "csv",
    ]);
    let b = g2tok(&[
        "dump", "patterns", "--l1", "2", "--l2", "1", "--format", "csv",
    ]);
    assert_eq!(a.stdout, b.stdout);
}
