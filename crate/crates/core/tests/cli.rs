use std::fs;
use std::path::PathBuf;

use ttp2::cli::main_with_args;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = main_with_args(std::iter::once("ttp2").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ttp2-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn gen_solve_validate_round_trip() {
    let inst = scratch("inst.txt");
    let tt = scratch("tt.txt");
    let report = scratch("report.json");
    let (code, _, _) = run(&["gen", "--kind", "circle", "--n", "14", "--seed", "4", "--out", inst.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (code, _, _) = run(&[
        "solve",
        "--instance",
        inst.to_str().unwrap(),
        "--out",
        tt.to_str().unwrap(),
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let json: serde_json::Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(json["n"], 14);
    assert_eq!(json["violations"], 0);
    let (code, _, _) = run(&["validate", "--timetable", tt.to_str().unwrap(), "--instance", inst.to_str().unwrap()]);
    assert_eq!(code, 0);

    // Swap two rows: the timetable stays well formed but breaks constraints.
    let text = fs::read_to_string(&tt).unwrap();
    let mut rows: Vec<&str> = text.lines().collect();
    rows.swap(0, 5);
    let bad = scratch("bad.txt");
    fs::write(&bad, rows.join("\n")).unwrap();
    let (code, out, _) = run(&["validate", "--timetable", bad.to_str().unwrap()]);
    assert_eq!(code, 1, "{out}");
}

#[test]
fn usage_and_parse_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["solve", "--n", "ten"]).0, 2);
    assert_eq!(run(&["solve", "--n", "12"]).0, 2);
    assert_eq!(run(&["exact", "--n", "10"]).0, 2);
    let junk = scratch("junk.txt");
    fs::write(&junk, "3\n0 1\n").unwrap();
    assert_eq!(run(&["solve", "--instance", junk.to_str().unwrap()]).0, 2);
    assert_eq!(run(&["validate", "--timetable", junk.to_str().unwrap()]).0, 2);
    assert_eq!(run(&["validate", "--timetable", "/nonexistent/tt.txt"]).0, 2);
}

#[test]
fn other_commands_succeed() {
    let (code, out, _) = run(&["bounds", "--kind", "euclidean", "--n", "10", "--seed", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("lb1"), "{out}");
    assert_eq!(run(&["exact", "--kind", "circle", "--n", "4"]).0, 0);
    let (code, out, _) = run(&["bench", "--n-min", "10", "--n-max", "14", "--seeds", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 4);
}

#[test]
fn exact_node_limit_fails_with_one() {
    assert_eq!(run(&["exact", "--n", "6", "--node-limit", "10"]).0, 1);
}
