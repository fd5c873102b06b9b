//! Black-box tests of the binary: exit codes, diagnostics, and rendered
//! output.

use std::path::Path;
use std::process::{Command, Output};

fn binet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_binet"))
        .args(args)
        .output()
        .unwrap()
}

fn write(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn verify_passes_with_exit_zero() {
    let out = binet(&[
        "verify", "--identity", "classical", "--n", "2", "--N", "4", "--count", "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("passed 3/3"), "unexpected output: {text}");
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let out = binet(&["verify", "--identity", "classical", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn wrong_shape_input_names_the_offending_dimension() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.csv", "1,2,3\n4,5,6\n");
    let b = write(dir.path(), "b.csv", "1,0\n0,1\n1,1\n");
    // A is 2x3 but --n 2 --N 4 expects 2x4
    let out = binet(&[
        "verify", "--identity", "classical", "--n", "2", "--N", "4", "--a", &a, "--b", &b,
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(
        err.contains("matrix A is 2x3") && err.contains("2x4"),
        "diagnostic should name the shapes: {err}"
    );
}

#[test]
fn verify_from_files_succeeds_on_matching_shapes() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.csv", "1,2,3\n4,5,6\n");
    let b = write(dir.path(), "b.csv", "1,0\n0,1\n1,1\n");
    let out = binet(&[
        "verify", "--identity", "classical", "--n", "2", "--N", "3", "--a", &a, "--b", &b,
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn compound_prints_expected_minors() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "m.csv", "1,2,3\n4,5,6\n");
    let out = binet(&["compound", "--input", &input, "--level", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    // single row {1 2} against columns {1 2}, {1 3}, {2 3}
    assert!(text.contains("{1 2}"), "labels should be 1-based: {text}");
    assert!(
        text.contains("-3,-6,-3"),
        "level-2 minors of [[1,2,3],[4,5,6]] should be -3,-6,-3: {text}"
    );
}

#[test]
fn compound_level_out_of_range_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "m.csv", "1,2,3\n4,5,6\n");
    let out = binet(&["compound", "--input", &input, "--level", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn parseval_basis_instance_passes() {
    let dir = tempfile::tempdir().unwrap();
    let instance = write(
        dir.path(),
        "inst.json",
        r#"{
            "n": 2, "M": 5,
            "a": [{"kind": "basis", "m": 0}, {"kind": "basis", "m": 1}],
            "b": [{"kind": "basis", "m": 0}, {"kind": "basis", "m": 1}]
        }"#,
    );
    let out = binet(&["parseval", "--instance", &instance]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("abs_errors"), "expected a JSON study: {text}");
}

#[test]
fn parseval_window_too_small_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let instance = write(
        dir.path(),
        "inst.json",
        r#"{
            "n": 2, "M": 0,
            "a": [{"kind": "basis", "m": 0}, {"kind": "basis", "m": 1}],
            "b": [{"kind": "basis", "m": 0}, {"kind": "basis", "m": 1}]
        }"#,
    );
    let out = binet(&["parseval", "--instance", &instance]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("window"), "diagnostic should mention the window: {err}");
}

#[test]
fn parseval_csv_schedule_output() {
    let dir = tempfile::tempdir().unwrap();
    let instance = write(
        dir.path(),
        "inst.json",
        r#"{
            "n": 1, "M": 10,
            "a": [{"kind": "poly_t", "degree": 1}],
            "b": [{"kind": "poly_t", "degree": 1}]
        }"#,
    );
    let out = binet(&[
        "parseval", "--instance", &instance, "--schedule", "5,10", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("M,re_sum,im_sum,abs_error,tail_bound"));
    assert_eq!(text.trim_end().lines().count(), 3);
}

#[test]
fn bench_emits_consistent_timing_table() {
    let out = binet(&["bench", "--max-n", "2", "--max-N", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("n,N,minor_sum_seconds,direct_seconds"));
    // n in 1..=2, N in n..=4: 4 + 3 rows
    assert_eq!(text.lines().count(), 8);
}
