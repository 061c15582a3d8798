mod common;

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use designlink::io::{read_document, Document};

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_designlink")).current_dir(dir).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn generate_downlink_verify() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let o = run(d, &["gen", "--pattern", "kite", "--order", "17", "--profile", "degree2", "-o", "kite.json"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(run(d, &["verify", "kite.json"]).status.code(), Some(0));

    let o = run(d, &["downlink", "kite.json", "--minimal", "-o", "cert.json"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let o = run(d, &["verify", "cert.json"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("valid"));

    let Document::Certificate(c) = read_document(&d.join("cert.json")).unwrap() else { panic!("not a certificate") };
    assert!(common::is_downlink(&c));
    assert_eq!(c.target_order(), 16);
}

#[test]
fn tampered_documents_fail_verification() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert!(run(d, &["gen", "--pattern", "c3", "--order", "9", "-o", "sts.json"]).status.success());
    let text = fs::read_to_string(d.join("sts.json")).unwrap();
    let mut value: serde_json::Value = serde_json::from_str(&text).unwrap();
    value["blocks"].as_array_mut().unwrap().pop();
    fs::write(d.join("sts.json"), value.to_string()).unwrap();
    let o = run(d, &["verify", "sts.json"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!stdout(&o).trim().is_empty());
    assert_eq!(run(d, &["downlink", "sts.json", "-o", "c.json"]).status.code(), Some(1));
    assert!(!d.join("c.json").exists());
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(run(dir.path(), &["gen", "--pattern", "p4"]).status.code(), Some(2));
    assert_eq!(run(dir.path(), &["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(dir.path(), &["spectrum", "--pattern", "hexagon", "--order", "4"]).status.code(), Some(2));
    assert_eq!(run(dir.path(), &["--help"]).status.code(), Some(0));
}

#[test]
fn spectrum_reports_unknown_on_a_tiny_budget() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(dir.path(), &["spectrum", "--pattern", "c3", "--order", "9", "--budget", "1"]);
    assert_eq!(o.status.code(), Some(3));
    let o = run(dir.path(), &["spectrum", "--pattern", "c3", "--order", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["eta"], 8);
}

#[test]
fn oracle_subcommands() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let o = run(d, &["oracle", "decompose", "--pattern", "c4", "--order", "9", "-o", "c4.json"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(run(d, &["verify", "c4.json"]).status.code(), Some(0));
    assert_eq!(run(d, &["oracle", "decompose", "--pattern", "c4", "--order", "7"]).status.code(), Some(1));

    let o = run(d, &["oracle", "downlink", "c4.json", "--order", "8", "-o", "cert.json"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(run(d, &["verify", "cert.json"]).status.code(), Some(0));
}

#[test]
fn fixtures_are_listed_and_written() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let o = run(d, &["fixture"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().any(|l| l.trim() == "c5-k11-cyclic"));
    assert!(run(d, &["fixture", "c5-k11-cyclic", "-o", "c5.json"]).status.success());
    assert_eq!(run(d, &["verify", "c5.json"]).status.code(), Some(0));
    assert_eq!(run(d, &["fixture", "no-such-thing"]).status.code(), Some(1));
}
