//! Exit codes and output formats of the command-line interface.

use std::process::{Command, Output};

fn sbgdd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sbgdd"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn construct_writes_a_verified_file_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("d.txt");
    let o = sbgdd(&[
        "construct", "-g", "2", "-u", "6", "--mu", "0", "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("type 2^6 mu=0 blocks=590 frequencies=[0, 59]"));
    let v = sbgdd(&["verify", out.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(0));
    assert!(stdout(&v).contains("frequencies=[0, 59]"));
}

#[test]
fn nonexistent_parameters_exit_two_with_the_reason() {
    let o = sbgdd(&["construct", "-g", "1", "-u", "4", "--mu", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("g=1, u=4, mu=0"));

    let o = sbgdd(&["construct", "-g", "2", "-u", "5", "--mu", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not divisible by 3"));
}

#[test]
fn admissible_answers_yes_and_no() {
    let o = sbgdd(&["admissible", "3", "9", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "yes");

    let o = sbgdd(&["admissible", "2", "5", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).starts_with("no:"));
}

#[test]
fn verify_flags_a_damaged_design() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("d.txt");
    sbgdd(&["construct", "-g", "2", "-u", "4", "--mu", "0", "--out", out.to_str().unwrap()]);
    let mut text = std::fs::read_to_string(&out).unwrap();
    // drop the first block line
    let cut = text
        .lines()
        .position(|l| l.chars().next().is_some_and(|c| c.is_ascii_digit()))
        .unwrap();
    text = text
        .lines()
        .enumerate()
        .filter(|(i, _)| *i != cut)
        .map(|(_, l)| format!("{l}\n"))
        .collect();
    std::fs::write(&out, text).unwrap();
    let o = sbgdd(&["verify", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn parse_errors_exit_four() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "not a design\n").unwrap();
    let o = sbgdd(&["verify", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
    let o = sbgdd(&["verify", dir.path().join("missing.txt").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn json_and_text_renderings_verify_identically() {
    let dir = tempfile::tempdir().unwrap();
    let t = dir.path().join("d.txt");
    let j = dir.path().join("d.json");
    for (path, fmt) in [(&t, "text"), (&j, "json")] {
        let o = sbgdd(&[
            "construct", "-g", "3", "-u", "4", "--mu", "1",
            "--out", path.to_str().unwrap(), "--format", fmt,
        ]);
        assert_eq!(o.status.code(), Some(0));
    }
    let a = sbgdd(&["verify", t.to_str().unwrap()]);
    let b = sbgdd(&["verify", j.to_str().unwrap()]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn search_runs_from_a_spec_file() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("spec.json");
    std::fs::write(&spec, r#"{"groups": [2,2,2], "target": {"interval": 0}}"#).unwrap();
    let o = sbgdd(&["search", spec.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stderr(&o).contains("frequencies=[0, 11]"));

    // infeasible residue: type 1^5 starting at 1
    std::fs::write(&spec, r#"{"groups": [1,1,1,1,1], "target": {"interval": 1}}"#).unwrap();
    let o = sbgdd(&["search", spec.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn catalog_list_and_check() {
    let o = sbgdd(&["catalog", "list"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 29);
    let o = sbgdd(&["catalog", "check"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().all(|l| l.ends_with(": ok")));
}

#[test]
fn emitted_manifest_is_valid_json() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("d.txt");
    let man = dir.path().join("d.manifest.json");
    let o = sbgdd(&[
        "construct", "-g", "4", "-u", "4", "--mu", "0",
        "--out", out.to_str().unwrap(),
        "--emit-manifest", man.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&man).unwrap()).unwrap();
    assert_eq!(v["strategy"], "td-template");
}
