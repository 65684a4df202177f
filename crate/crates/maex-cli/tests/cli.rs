//! End-to-end tests of the `maex` binary: output formats, exit codes,
//! determinism, and agreement of the tabulated T window with q-series
//! extraction.

use std::process::{Command, Output};

use maex_core::pell::TQSeries;

fn maex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_maex"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

#[test]
fn table_sigma_maex_exact_csv() {
    let out = maex(&["table", "--stat", "sigma-maex", "--max-n", "5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "n,sigma-maex\n1,0\n2,1\n3,2\n4,6\n5,10\n");
}

#[test]
fn table_expectation_renders_rationals() {
    let out = maex(&["table", "--stat", "expectation", "--max-n", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "n,expectation\n1,1/1\n2,1/1\n");
}

#[test]
fn table_json_round_trips() {
    let out = maex(&["table", "--stat", "p", "--max-n", "6", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["stat"], "p");
    assert_eq!(doc["max_n"], 6);
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 6);
    // big integers are decimal strings, never JSON numbers
    assert_eq!(rows[5]["n"], 6);
    assert_eq!(rows[5]["value"], "11");
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = ["table", "--stat", "diff", "--max-n", "40", "--format", "json"];
    let first = maex(&args);
    let second = maex(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn out_flag_writes_the_same_payload() {
    let dir = std::env::temp_dir().join("maex-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.csv");
    let piped = maex(&["table", "--stat", "sigma-L", "--max-n", "8"]);
    let written = maex(&[
        "table",
        "--stat",
        "sigma-L",
        "--max-n",
        "8",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(written.status.success());
    assert!(written.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), piped.stdout);
}

#[test]
fn t_window_matches_qseries_extraction() {
    let out = maex(&["table", "--stat", "T", "--max-n", "20"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,T"));
    let qseries = TQSeries::new(20).unwrap();
    let mut rows = 0;
    for line in lines {
        let (n, value) = line.split_once(',').unwrap();
        let n: i64 = n.parse().unwrap();
        let value: i64 = value.parse().unwrap();
        assert_eq!(value, qseries.eval(n).unwrap(), "T({})", n);
        rows += 1;
    }
    assert_eq!(rows, 41); // window [-479, 481] in steps of 24
}

#[test]
fn verify_pass_reports_and_exit_zero() {
    let out = maex(&["verify", "--identity", "cohen", "--order", "64"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["status"], "pass");
    assert_eq!(report["checks"][0]["name"], "cohen-identity");
    assert_eq!(report["checks"][0]["cases"], 65);
}

#[test]
fn verify_trivial_order_zero_passes() {
    let out = maex(&["verify", "--identity", "cohen", "--order", "0"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_reports_are_deterministic_up_to_timing() {
    let args = ["verify", "--identity", "zagier-t"];
    let mut first: serde_json::Value = serde_json::from_str(&stdout(&maex(&args))).unwrap();
    let mut second: serde_json::Value = serde_json::from_str(&stdout(&maex(&args))).unwrap();
    assert_eq!(first["status"], "pass");
    first.as_object_mut().unwrap().remove("timing_ms");
    second.as_object_mut().unwrap().remove("timing_ms");
    assert_eq!(first, second);
}

#[test]
fn unknown_identity_is_usage_error() {
    let out = maex(&["verify", "--identity", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn unknown_stat_is_usage_error() {
    let out = maex(&["table", "--stat", "nonsense", "--max-n", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exceeding_pell_budget_is_resource_error() {
    // order 300 needs T(1-24k) with |n| up to 7201 > default 4801
    let out = maex(&["verify", "--identity", "thm2.2", "--order", "300"]);
    assert_eq!(out.status.code(), Some(2));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["status"], "error");
    // raising the budget makes it pass
    let out = maex(&[
        "verify",
        "--identity",
        "thm2.2",
        "--order",
        "300",
        "--budget",
        "pell=7201",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn brute_budget_clamps_enumeration() {
    let out = maex(&[
        "verify",
        "--identity",
        "eq1.1",
        "--order",
        "40",
        "--budget",
        "brute=10",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    // n = 0 convention plus n = 1..=10
    assert_eq!(report["checks"][0]["cases"], 11);
}

#[test]
fn malformed_budget_is_usage_error() {
    let out = maex(&["verify", "--identity", "cohen", "--budget", "브루트60"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn asymptotics_small_probes() {
    let out = maex(&[
        "asymptotics",
        "--probe",
        "50,100,200",
        "--t-grid",
        "0.5,0.2,0.1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["sigma_l_deviation_decreasing"], true);
    assert_eq!(report["difference_deviation_decreasing"], true);
    assert_eq!(report["eta_deviation_decreasing"], true);
    assert_eq!(report["expectation"][0]["n"], 50);
    // exact integers ride along as strings
    assert!(report["sigma_l"][0]["exact"].is_string());
}

#[test]
fn clap_usage_errors_exit_two() {
    let out = maex(&["table", "--stat", "p"]); // missing --max-n
    assert_eq!(out.status.code(), Some(2));
    let out = maex(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn every_identity_passes_at_reduced_orders() {
    let runs: &[(&str, &str)] = &[
        ("thm1.1-all", "40"),
        ("eq1.1", "20"),
        ("eq1.6", "60"),
        ("cohen", "60"),
        ("prop2.1", "16"),
        ("theta", "241"),
        ("roots-of-unity", "8"),
        ("zagier-t", "4"),
        ("thm2.2", "40"),
        ("partial-sum", "8"),
        ("euler-sum", "30"),
        ("bijection", "10"),
        ("monotonicity", "60"),
        ("pell-agreement", "241"),
    ];
    for (identity, order) in runs {
        let out = maex(&["verify", "--identity", identity, "--order", order]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{} at order {}: {}",
            identity,
            order,
            stdout(&out)
        );
        let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(report["status"], "pass", "{}", identity);
    }
}
