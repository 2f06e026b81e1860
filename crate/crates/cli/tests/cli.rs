//! Black-box tests of the installed binary: flag surface, exit-code
//! contract, output formats and determinism.

use std::process::{Command, Output};

fn qaffine(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qaffine"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

#[test]
fn char_table_lists_the_level_one_coefficients() {
    let out = qaffine(&[
        "char", "--algebra", "a1_1", "--level", "1", "--k0", "0", "--spec", "1,2", "--order",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(2).collect();
    assert_eq!(rows, vec!["0\t1", "1\t0", "2\t1", "3\t1", "4\t1", "5\t1"]);
}

#[test]
fn char_json_reports_the_twisted_series() {
    let out = qaffine(&[
        "char", "--algebra", "a2_2", "--level", "3", "--k0", "0", "--spec", "1,1", "--order",
        "20", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json output");
    let modules = doc.as_array().expect("array of modules");
    assert_eq!(modules.len(), 1);
    let coeffs = modules[0]["series"]["coefficients"].as_array().expect("coefficients");
    let head: Vec<&str> = coeffs.iter().take(6).map(|c| c.as_str().unwrap()).collect();
    assert_eq!(head, vec!["1", "1", "2", "3", "4", "6"]);
}

#[test]
fn char_sweeps_every_module_when_k0_is_omitted() {
    let out = qaffine(&[
        "char", "--algebra", "a1_1", "--level", "3", "--spec", "1,2", "--order", "8",
        "--format", "json", "--jobs", "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json output");
    let k0s: Vec<i64> =
        doc.as_array().unwrap().iter().map(|m| m["k0"].as_i64().unwrap()).collect();
    assert_eq!(k0s, vec![0, 1, 2, 3]);
}

#[test]
fn char_csv_has_a_stable_header() {
    let out = qaffine(&[
        "char", "--algebra", "a2_1", "--level", "3", "--spec", "4,1,1", "--order", "8",
        "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("k0,exponent,coefficient\n3,0,1\n"));
}

#[test]
fn missing_level_is_a_usage_error() {
    let out = qaffine(&["char", "--algebra", "a1_1", "--spec", "1,2", "--order", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--level"));
}

#[test]
fn even_twisted_levels_are_rejected() {
    let out = qaffine(&[
        "char", "--algebra", "a2_2", "--level", "4", "--spec", "1,1", "--order", "10",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("odd"));
}

#[test]
fn unknown_algebra_labels_are_rejected() {
    let out = qaffine(&[
        "char", "--algebra", "b2_1", "--level", "1", "--spec", "1,2", "--order", "5",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn a2_1_takes_no_k0() {
    let out = qaffine(&[
        "char", "--algebra", "a2_1", "--level", "3", "--k0", "1", "--spec", "1,1,1",
        "--order", "5",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("vacuum"));
}

#[test]
fn nonpositive_specializations_are_rejected() {
    let out = qaffine(&[
        "char", "--algebra", "a1_1", "--level", "1", "--k0", "0", "--spec", "1,0",
        "--order", "5",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn duality_accepts_the_level_k_alias() {
    let out = qaffine(&["duality", "--level-k", "2", "--order", "40"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("all identities hold"));
}

#[test]
fn duality_json_reports_holds() {
    let out = qaffine(&["duality", "--level", "1", "--order", "30", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json output");
    assert_eq!(doc["holds"], serde_json::json!(true));
    assert_eq!(doc["cases"].as_array().unwrap().len(), 2);
}

#[test]
fn duality_k0_out_of_range_is_invalid() {
    let out = qaffine(&["duality", "--level", "2", "--k0", "5", "--order", "20"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn qtrace_chain_holds_at_level_one() {
    let out = qaffine(&["qtrace", "--level", "1", "--order", "30"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("all identities hold"));
}

#[test]
fn qtrace_output_is_independent_of_the_thread_count() {
    let one = qaffine(&["qtrace", "--level", "2", "--order", "40", "--jobs", "1"]);
    let four = qaffine(&["qtrace", "--level", "2", "--order", "40", "--jobs", "4"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(four.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn duality_output_is_bytewise_reproducible() {
    let first = qaffine(&["duality", "--level", "1", "--order", "30", "--format", "json"]);
    let second = qaffine(&["duality", "--level", "1", "--order", "30", "--format", "json"]);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn appendix_emits_a_json_snapshot() {
    let out = qaffine(&["appendix", "--order", "9"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("json output");
    assert_eq!(doc["theta_assembly"]["matches_character"], serde_json::json!(true));
    assert!(doc["specialization_411"]["coefficients"].is_array());
}

#[test]
fn appendix_has_no_csv_form() {
    let out = qaffine(&["appendix", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn selftest_passes_and_summarizes() {
    let out = qaffine(&["selftest", "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("all suites pass"));
    assert!(text.lines().count() >= 8, "one line per suite plus the verdict");
}

#[test]
fn output_flag_writes_the_report_to_a_file() {
    let path = std::env::temp_dir().join(format!("qaffine-cli-test-{}.txt", std::process::id()));
    let out = qaffine(&[
        "describe", "--algebra", "a1_1", "--output",
        path.to_str().expect("utf8 temp path"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).is_empty());
    let written = std::fs::read_to_string(&path).expect("report file");
    assert!(written.contains("dual Coxeter number 2"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn jobs_zero_is_invalid() {
    let out = qaffine(&["selftest", "--jobs", "0"]);
    assert_eq!(out.status.code(), Some(2));
}
