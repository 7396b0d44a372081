//! Exercises the installed binary end to end: output bytes, exit codes,
//! and file round-trips.

use std::path::Path;
use std::process::{Command, Output};

use lagrass::plucker::{build_matrix, FormConvention};
use lagrass_cli::io;

fn lagrass(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lagrass")).args(args).output().expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = lagrass(args);
    assert!(
        out.status.success(),
        "lagrass {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn exit_code(args: &[&str]) -> i32 {
    lagrass(args).status.code().expect("no signal")
}

#[test]
fn matrix_csv_smallest_case_exact_bytes() {
    let args = ["matrix", "--n", "2", "--format", "csv"];
    let first = stdout_of(&args);
    assert_eq!(first, "row,col,value\n1,3,1\n1,4,1\n");
    assert_eq!(stdout_of(&args), first);
}

#[test]
fn matrix_mtx_reruns_are_byte_identical_and_read_back() {
    let dir = tempfile::tempdir().unwrap();
    let path_a = dir.path().join("a.mtx");
    let path_b = dir.path().join("b.mtx");
    let write = |path: &Path| {
        let out = lagrass(&["matrix", "--n", "6", "--out", path.to_str().unwrap()]);
        assert!(out.status.success());
        assert!(out.stdout.is_empty(), "file mode must not also print");
    };
    write(&path_a);
    write(&path_b);

    let bytes_a = std::fs::read(&path_a).unwrap();
    let bytes_b = std::fs::read(&path_b).unwrap();
    assert_eq!(bytes_a, bytes_b);

    let text = String::from_utf8(bytes_a).unwrap();
    assert_eq!(text.lines().nth(1), Some("495 924 1260"));
    let read_back = io::read_mtx(&text).unwrap();
    assert_eq!(read_back, build_matrix(6, FormConvention::Plain).unwrap());
}

#[test]
fn table_json_parses_and_reruns_identically() {
    let args = ["table", "--n", "2", "--json"];
    let first = stdout_of(&args);
    assert_eq!(stdout_of(&args), first);

    let value: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(value["n"], 2);
    assert_eq!(value["ambient"]["rows"], 1);
    assert_eq!(value["ambient"]["cols"], 6);
    let ranks: Vec<u64> = value["table"]
        .as_array()
        .unwrap()
        .iter()
        .map(|row| row["rank"].as_u64().unwrap())
        .collect();
    assert_eq!(ranks, [1, 1, 1, 1, 1]);
}

#[test]
fn verify_exit_codes_track_the_outcome() {
    // Plain and signed agree mod 2, so both succeed at p = 2.
    assert_eq!(
        exit_code(&["verify", "--n", "4", "--p", "2", "--samples", "3", "--convention", "plain"]),
        0
    );
    // Signed is the default and holds at every prime.
    assert_eq!(exit_code(&["verify", "--n", "4", "--p", "5", "--samples", "3"]), 0);

    // Plain fails away from characteristic 2; seed 7 gives 0/3 at p = 5.
    let out = lagrass(&[
        "verify",
        "--n",
        "6",
        "--p",
        "5",
        "--samples",
        "3",
        "--seed",
        "7",
        "--convention",
        "plain",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let report = String::from_utf8(out.stdout).unwrap();
    assert!(report.contains("plain 0/3"), "report was: {report}");
    assert!(report.contains("signed 3/3"), "report was: {report}");
}

#[test]
fn error_exit_codes() {
    // 2: rejected argument values, ours and clap's alike.
    assert_eq!(exit_code(&["table", "--chars", "0,4"]), 2);
    assert_eq!(exit_code(&["table", "--chars", "banana"]), 2);
    assert_eq!(exit_code(&["no-such-command"]), 2);

    // 3: unwritable output path.
    assert_eq!(exit_code(&["matrix", "--n", "2", "--out", "/nonexistent-dir/x.mtx"]), 3);

    // 4: size guard, configurable per invocation.
    assert_eq!(exit_code(&["table", "--n", "9"]), 4);
    assert_eq!(exit_code(&["scan", "--ns", "2,9"]), 4);
    assert_eq!(exit_code(&["partition", "--n", "20"]), 4);
    assert_eq!(exit_code(&["table", "--n", "6", "--max-n", "5"]), 4);
}

#[test]
fn stderr_carries_the_error_message() {
    let out = lagrass(&["table", "--n", "9"]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("exceeds the configured maximum"), "stderr was: {err}");
}
