use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_branching")).args(args).env_remove("BRANCHING_ORDER").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn hwv_cell_prints_the_worked_example() {
    let o = run(&["hwv", "--module", "V1", "--depth", "3/2", "--class", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("144* - 234 - 234*"), "{s}");
    assert!(s.contains("eigenvalues=(1/2, 3/5)"), "{s}");
}

#[test]
fn labeled_hwvs_pass() {
    let o = run(&["hwv"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn single_table_regenerates() {
    let o = run(&["tables", "--id", "quartic----+"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("11*22* | 122* | 0 | 0 | 0 | 0 | 0"));
}

#[test]
fn disputed_tables_exit_one() {
    let o = run(&["tables", "--id", "l0-low", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["checks"][0]["status"], "FAIL");
    assert!(v["table"].as_str().unwrap().starts_with("columns:"));
}

#[test]
fn bad_flags_exit_two() {
    assert_eq!(run(&["identities", "--order", "8"]).status.code(), Some(2));
    assert_eq!(run(&["conformal", "--max-depth", "4"]).status.code(), Some(2));
    assert_eq!(run(&["nope"]).status.code(), Some(2));
    assert_eq!(run(&["hwv", "--module", "V1"]).status.code(), Some(2));
}

#[test]
fn identities_json_and_env_order() {
    let o = Command::new(env!("CARGO_BIN_EXE_branching"))
        .args(["identities", "--format", "json"])
        .env("BRANCHING_ORDER", "32")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let arr = v.as_array().unwrap();
    assert!(!arr.is_empty());
    assert!(arr.iter().all(|r| r["status"] == "PASS" && r.get("check").is_some()));
}

#[test]
fn out_file_is_written() {
    let path = std::env::temp_dir().join(format!("branching-cli-{}.md", std::process::id()));
    let o = run(&["graded-dims", "--format", "markdown", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("| check | status | detail |"));
    let _ = std::fs::remove_file(path);
}
