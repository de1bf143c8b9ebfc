use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn lcdmds(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lcdmds"))
        .args(args)
        .env_remove("LCDMDS_BUDGET")
        .output()
        .unwrap()
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_lcdmds"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn construct_picks_divisor_construction() {
    let out = lcdmds(&["construct", "--q", "5", "--n", "4", "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["construction"], "DivisorOfQMinus1");
    assert_eq!(v["verified"]["hull_dimension"], 0);
    assert_eq!(v["verified"]["min_distance"], 3);
}

#[test]
fn construct_exit_codes() {
    let none = lcdmds(&["construct", "--q", "7", "--n", "5", "--k", "2"]);
    assert_eq!(none.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&none.stderr).contains("none of the five"));
    let not_pp = lcdmds(&["construct", "--q", "6", "--n", "4", "--k", "2"]);
    assert_eq!(not_pp.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&not_pp.stderr).contains("not a prime power"));
    let forced =
        lcdmds(&["construct", "--q", "7", "--n", "6", "--k", "2", "--theorem", "Window2n"]);
    assert_eq!(forced.status.code(), Some(3));
    let budget = lcdmds(&["construct", "--q", "9", "--n", "9", "--k", "4", "--budget", "1"]);
    assert_eq!(budget.status.code(), Some(5));
}

#[test]
fn construct_with_field_as_p_and_e() {
    let out =
        lcdmds(&["construct", "--p", "3", "--e", "2", "--n", "9", "--k", "4", "--theorem", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["construction"], "PrimePowerLength");
}

#[test]
fn construct_overrides() {
    let out = lcdmds(&[
        "construct",
        "--q",
        "7",
        "--n",
        "6",
        "--k",
        "3",
        "--theorem",
        "divisor",
        "--multipliers",
        "2,5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["spec"]["multipliers"], serde_json::json!([1, 1, 1, 1, 2, 5]));
    let bad = lcdmds(&["construct", "--q", "5", "--n", "6", "--k", "2", "--gamma", "4"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn construct_then_verify_round_trip_over_grid() {
    let dir = tempfile::tempdir().unwrap();
    let mut count = 0;
    for q in [5u32, 7, 9, 11, 13] {
        let field = lcdmds::Field::from_order(q).unwrap();
        for n in 4..=q as usize + 1 {
            for k in 2..=n / 2 {
                if lcdmds::applicable_constructions(&field, n, k).is_empty() {
                    continue;
                }
                let (qs, ns, ks) = (q.to_string(), n.to_string(), k.to_string());
                let out = lcdmds(&["construct", "--q", &qs, "--n", &ns, "--k", &ks]);
                assert_eq!(out.status.code(), Some(0), "q={q} [{n},{k}]");
                let path = dir.path().join(format!("{q}_{n}_{k}.json"));
                std::fs::write(&path, &out.stdout).unwrap();
                let ver = lcdmds(&["verify", path.to_str().unwrap()]);
                assert_eq!(ver.status.code(), Some(0), "q={q} [{n},{k}]");
                assert_eq!(json(&ver)["is_lcd"], true);
                count += 1;
            }
        }
    }
    assert_eq!(count, 71);
}

#[test]
fn verify_self_orthogonal_line() {
    let out = with_stdin(&["verify", "-", "--q", "5"], "[[1,2]]");
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["hull_dimension"], 1);
    let file = r#"{"field": {"p": 5, "e": 1, "modulus": [0, 1]}, "generator": [[1, 2]]}"#;
    assert_eq!(with_stdin(&["verify", "-"], file).status.code(), Some(1));
}

#[test]
fn verify_rejects_malformed_input() {
    assert_eq!(with_stdin(&["verify", "-"], r#"{"field": {"p": 5"#).status.code(), Some(2));
    assert_eq!(with_stdin(&["verify", "-"], "[[1,2]]").status.code(), Some(2));
    assert_eq!(with_stdin(&["verify", "-", "--q", "5"], "[[1,7]]").status.code(), Some(2));
    assert_eq!(lcdmds(&["verify", "/nonexistent/code.json"]).status.code(), Some(2));
}

#[test]
fn sweep_q7_marks_none_row() {
    let out = lcdmds(&["sweep", "--q", "7", "--threads", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let rows = v["rows"].as_array().unwrap();
    let row = rows.iter().find(|r| r["n"] == 5 && r["k"] == 2).unwrap();
    assert_eq!(row["condition"], "none");
    assert!(String::from_utf8_lossy(&out.stderr).contains("condition"));
}

#[test]
fn sweep_files_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let run = |threads: &str, name: &str| {
        let path = dir.path().join(name);
        let table = dir.path().join(format!("{name}.txt"));
        let out = lcdmds(&[
            "sweep",
            "--q",
            "9",
            "--threads",
            threads,
            "--out",
            path.to_str().unwrap(),
            "--table",
            table.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
        assert!(std::fs::read_to_string(table).unwrap().starts_with("q = 9"));
        std::fs::read(path).unwrap()
    };
    assert_eq!(run("1", "a.json"), run("4", "b.json"));
}

#[test]
fn sweep_rejects_even_characteristic() {
    assert_eq!(lcdmds(&["sweep", "--q", "4"]).status.code(), Some(2));
}

#[test]
fn sweep_budget_exhaustion_keeps_rows() {
    let out = lcdmds(&["sweep", "--q", "5", "--budget", "1"]);
    assert_eq!(out.status.code(), Some(5));
    let v = json(&out);
    assert!(v["rows"].as_array().unwrap().iter().all(|r| r["status"] == "budget_exceeded"));
}

#[test]
fn info_lists_applicable_constructions() {
    let out = lcdmds(&["info", "--q", "9", "--n", "8", "--k", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["primitive_element"], 4);
    assert_eq!(v["applicable"], serde_json::json!(["DivisorOfQMinus1", "LargeNPlusK"]));
}

#[test]
fn env_budget_is_honoured() {
    let out = Command::new(env!("CARGO_BIN_EXE_lcdmds"))
        .args(["construct", "--q", "9", "--n", "9", "--k", "4"])
        .env("LCDMDS_BUDGET", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(5));
}
