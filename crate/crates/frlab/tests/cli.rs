//! The binary: exit codes, JSON output and the caps variable.

use std::path::PathBuf;
use std::process::{Command, Output};

use frlab::report::CheckReport;

fn frlab(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut c = Command::new(env!("CARGO_BIN_EXE_frlab"));
    c.args(args).env_remove("FRLAB_CAPS");
    for (k, v) in env {
        c.env(k, v);
    }
    c.output().expect("binary runs")
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn analyze_prints_the_series() {
    let o = frlab(&["analyze", "S4", "--class", "supersoluble"], &[]);
    assert!(o.status.success());
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("chief series (orders): 1 < 4 < 12 < 24"), "{text}");
    assert!(text.contains("class supersoluble: member no"));
}

#[test]
fn verify_json_round_trips() {
    let o = frlab(&["verify", "baer", "--tier", "tiny", "--format", "json"], &[]);
    assert_eq!(o.status.code(), Some(0));
    let r = CheckReport::from_json(std::str::from_utf8(&o.stdout).unwrap()).unwrap();
    assert!(r.invariant_holds());
    assert_eq!((r.check.as_str(), r.fail), ("baer", 0));
    assert!(r.universe.size >= 40);
}

#[test]
fn input_errors_exit_two() {
    let bad = scratch("bad.grp", "table 3\n0 1 2\n1 2\n");
    let o = frlab(&["analyze", bad.to_str().unwrap()], &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
    assert_eq!(frlab(&["verify", "no_such_check", "--tier", "tiny"], &[]).status.code(), Some(2));
    assert_eq!(frlab(&["analyze", "cyclic(4"], &[]).status.code(), Some(2));
}

#[test]
fn cap_exceedance_exits_three() {
    let o = frlab(&["analyze", "S4"], &[("FRLAB_CAPS", "table_order=10")]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn recipe_files_resolve_relative_paths() {
    scratch("c3.grp", "table 3\n0 1 2\n1 2 0\n2 0 1\n");
    let r = scratch("twice.grp-recipe", "# C3 x C3\ndirect(from_file(\"c3.grp\"), cyclic(3))\n");
    let o = frlab(&["analyze", r.to_str().unwrap(), "--format", "json"], &[]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["order"], 9);
    assert_eq!(v["group"], "twice");
}

#[test]
fn catalog_listing_is_deterministic() {
    let a = frlab(&["catalog", "--tier", "small", "--format", "json"], &[]);
    let b = frlab(&["catalog", "--tier", "small", "--format", "json"], &[]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}
