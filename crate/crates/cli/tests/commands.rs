use std::path::Path;
use std::process::{Command, Output};

use tenk_core::import_table;

fn tenk(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tenk"))
        .args(args)
        .current_dir(dir)
        .env_remove("TENK_OUT_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn solve_prints_the_game_value_and_writes_the_policy() {
    let dir = tempfile::tempdir().unwrap();
    let out = tenk(&["solve"], dir.path());
    assert!(out.status.success());
    assert_eq!(stdout(&out), "5.8720189185\n");
    let bundle = import_table(&dir.path().join("policy-all.csv")).unwrap();
    assert_eq!(bundle.rows[0].value_dec, "5.8720189185");
}

#[test]
fn solve_honours_the_output_directory_variable() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_tenk"))
        .args(["solve", "--format", "json", "--precision", "4"])
        .env("TENK_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out), "5.8720\n");
    assert!(dir.path().join("policy-all.json").exists());
}

#[test]
fn restricted_variant() {
    let dir = tempfile::tempdir().unwrap();
    let out = tenk(&["variants", "--actions", "s,r"], dir.path());
    assert!(out.status.success());
    assert_eq!(stdout(&out), "5.5763262782\n");

    let out = tenk(&["variants"], dir.path());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 6);
    assert!(text.lines().last().unwrap().ends_with("5.8720189185"));
}

#[test]
fn pig() {
    let dir = tempfile::tempdir().unwrap();
    let text = stdout(&tenk(&["pig"], dir.path()));
    assert!(text.starts_with("tau*=20\nV(0)=8.14\n"), "{text}");
}

#[test]
fn verify_reports_every_check() {
    let dir = tempfile::tempdir().unwrap();
    let out = tenk(&["verify"], dir.path());
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS") || l.starts_with("FAIL")).count(), 7);
    // the published action row has one column the exact solve disagrees with
    assert_eq!(out.status.code(), Some(1), "{text}");
    assert!(text.contains("FAIL published-table-actions"));

    let out = tenk(&["verify", "--skip", "published-table-actions"], dir.path());
    assert!(out.status.success());
    let out = tenk(&["verify", "--skip", "nonsense"], dir.path());
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn simulate_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["simulate", "--episodes", "100000", "--seed", "5"];
    let a = tenk(&args, dir.path());
    let b = tenk(&args, dir.path());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("episodes 100000 seed 5"));
    let c = tenk(&["simulate", "--episodes", "100000", "--seed", "6"], dir.path());
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn export_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("restricted.json");
    let out = tenk(&["export", "--actions", "s,r,m5", "--out", path.to_str().unwrap()], dir.path());
    assert!(out.status.success());
    let bundle = import_table(&path).unwrap();
    assert_eq!(bundle.metadata.variant, "s,r,m5");
    assert_eq!(bundle.rows[0].value_dec, "5.8011800370");
}

#[test]
fn bad_input_exits_nonzero() {
    let dir = tempfile::tempdir().unwrap();
    let out = tenk(&["solve", "--bogus"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    let out = tenk(&["variants", "--actions", "m5"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    let out = tenk(&["solve", "--out", "/nonexistent/dir/policy.csv"], dir.path());
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cannot write"));
}
