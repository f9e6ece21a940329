//! End-to-end tests of the `hlrc` binary: output contracts, exit codes, and
//! reproducibility.

use std::process::{Command, Output};

use hlrc_core::codes::LinearCode;
use hlrc_core::construct::punctured_simplex;

fn hlrc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hlrc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn construct_writes_a_parseable_matrix() {
    let out = hlrc(&["construct", "--q", "2", "--m", "4", "--s", "2"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("2 4 12\n"));
    assert!(stderr(&out).contains("[12,4,6]"));
    // Bit-exact round trip through the text format.
    let parsed = LinearCode::from_matrix_text(&text).unwrap();
    let direct = punctured_simplex(2, 4, 2).unwrap();
    assert_eq!(parsed.columns(), direct.code().columns());
}

#[test]
fn construct_reports_figure_parameters() {
    let out = hlrc(&["construct", "--q", "2", "--m", "3", "--s", "0"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stderr(&out).contains("[7,3,4]"));
}

#[test]
fn construct_writes_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("matrix.txt");
    let out = hlrc(&[
        "construct",
        "--q",
        "2",
        "--m",
        "4",
        "--s",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("[12,4,6]"));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("2 4 12\n"));
}

#[test]
fn construct_resolves_relative_output_under_the_override_dir() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_hlrc"))
        .args(["construct", "--q", "2", "--m", "3", "--s", "1", "--out", "m.txt"])
        .env("HLRC_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 0);
    let text = std::fs::read_to_string(dir.path().join("m.txt")).unwrap();
    assert!(text.starts_with("2 3 6\n"));
}

#[test]
fn construct_rejects_invalid_specs_with_exit_2() {
    let out = hlrc(&["construct", "--q", "2", "--m", "4", "--s", "4"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("s = 4"));
    let out = hlrc(&["construct", "--q", "6", "--m", "3", "--s", "0"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn unknown_flags_exit_2() {
    let out = hlrc(&["construct", "--q", "2", "--m", "4", "--s", "2", "--bogus"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn analyze_reference_code_passes_all_checks() {
    let out = hlrc(&["analyze", "--q", "2", "--m", "4", "--s", "2"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("schema_version: 1\n"));
    assert!(text.contains("formula: {0: 1, 6: 12, 8: 3}"));
    assert!(text.contains("total: 15"));
    assert!(text.contains("type: S(3)-S(1) = [6,3,3]\n      count: 12"));
    assert!(text.contains("type: S(3)-S(2) = [4,3,2]\n      count: 3"));
    assert!(text.contains("levels=[(3,3),(2,2)]"));
    assert!(text.contains("all_optimal: true"));
    assert!(!text.contains("ok: false"));
}

#[test]
fn analyze_reed_muller_and_ternary_entries() {
    let out = hlrc(&["analyze", "--q", "2", "--m", "5", "--s", "4"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("reed_muller: true"));
    assert!(text.contains("n: 16"));
    assert!(text.contains("k: 5"));
    assert!(text.contains("d: 8"));

    let out = hlrc(&["analyze", "--q", "3", "--m", "3", "--s", "1"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("n: 12"));
    assert!(text.contains("formula: {0: 1, 8: 18, 9: 8}"));
}

#[test]
fn table_markdown_reproduces_the_binary_grid() {
    let out = hlrc(&["table"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    for cell in [
        "[3,2,2]",
        "[2,2,1] RM(1,1)",
        "[7,3,4]",
        "[6,3,3]",
        "[4,3,2] RM(1,2)",
        "[15,4,8]",
        "[14,4,7]",
        "[12,4,6]",
        "[8,4,4] RM(1,3)",
        "[31,5,16]",
        "[30,5,15]",
        "[28,5,14]",
        "[24,5,12]",
        "[16,5,8] RM(1,4)",
        "[63,6,32]",
        "[62,6,31]",
        "[60,6,30]",
        "[56,6,28]",
        "[48,6,24]",
    ] {
        assert!(text.contains(cell), "missing cell {cell}");
    }
    assert!(text.contains("[12,4,6] -> [6,3,3], [4,3,2]"));
    // The distance-1 type is never an edge target.
    assert!(!text.contains("-> [2,2,1]"));
}

#[test]
fn table_single_cell_and_csv() {
    let out = hlrc(&["table", "--m-max", "2", "--s-max", "0"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("[3,2,2]"));
    assert!(!text.contains("[7,3,4]"));

    let out = hlrc(&["table", "--format", "csv"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("m,s,n,k,d,reed_muller,locality\n"));
    assert!(text.contains("4,2,12,4,6,false,\"[6,3,3] [4,3,2]\""));
    assert!(text.contains("2,1,2,2,1,true,"));
    assert_eq!(text.lines().count(), 1 + 19);
}

#[test]
fn bounds_evaluates_the_reference_hierarchy() {
    let out = hlrc(&[
        "bounds", "--q", "2", "--n", "12", "--d", "6", "--locality", "3,3;2,2",
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("k_opt: 4"));
    assert!(text.contains("levels: [(3,3),(2,2)]"));
    assert!(text.contains("k_bound: 4"));
    assert!(text.contains("singleton_d_bound_at_k_bound: 7"));
}

#[test]
fn bounds_without_locality_stops_at_the_unconstrained_block() {
    let out = hlrc(&["bounds", "--q", "2", "--n", "12", "--d", "6"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("locality: (none)"));
    assert!(text.contains("k_opt: 4"));
    assert!(!text.contains("hierarchical:"));
}

#[test]
fn bounds_rejects_bad_locality_strings_with_exit_2() {
    let out = hlrc(&[
        "bounds", "--q", "2", "--n", "12", "--d", "6", "--locality", "2,2;3,3",
    ]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("exceeds the previous level's"));

    let out = hlrc(&[
        "bounds", "--q", "2", "--n", "12", "--d", "6", "--locality", "3,3;x",
    ]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("level 2"));
}

#[test]
fn simulate_is_deterministic_and_matches_the_locality_promise() {
    let args = [
        "simulate", "--q", "2", "--m", "4", "--s", "2", "--failures", "5", "--trials", "100",
        "--seed", "7",
    ];
    let first = hlrc(&args);
    assert_eq!(exit_code(&first), 0);
    let text = stdout(&first);
    // Single failures: repaired at the innermost level from 2 nodes, always.
    assert!(text.contains("contacted_histogram: {2: 100}"));
    assert!(text.contains("level_histogram: {kappa=2: 100}"));
    assert!(text.contains("all_succeeded: true"));
    // Bit-identical rerun.
    let second = hlrc(&args);
    assert_eq!(stdout(&second), text);
}

#[test]
fn simulate_with_every_node_lost_recovers_nothing() {
    let out = hlrc(&[
        "simulate", "--q", "2", "--m", "4", "--s", "2", "--failures", "12", "--trials", "10",
        "--seed", "3",
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    let last = text
        .split("- failures: 12")
        .nth(1)
        .expect("12-failure block present");
    assert!(last.contains("successes: 0"));
    assert!(text.contains("all_succeeded: false"));
}
