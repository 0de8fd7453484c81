use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn trinoise(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trinoise"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("spawn trinoise")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn rows(csv: &str) -> Vec<Vec<f64>> {
    csv.lines()
        .skip(1)
        .map(|l| l.split(',').map(|f| f.parse().unwrap()).collect())
        .collect()
}

#[test]
fn sweep_writes_header_and_rows() {
    let dir = TempDir::new().unwrap();
    let out = trinoise(
        &["sweep", "--sites", "a", "--p-steps", "2", "--out", "s.csv"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    let csv = std::fs::read_to_string(dir.path().join("s.csv")).unwrap();
    assert!(csv.starts_with("p,n_a_bc,n_b_ac,n_c_ab,tripartite,raw_trace\n"));
    assert!(!csv.contains('\r'));
    let rows = rows(&csv);
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0][0], 0.0);
    assert_eq!(rows[0][4], 1.0);
    assert_eq!(rows[1][0], 1.0);
}

#[test]
fn default_sweep_has_101_rows() {
    let dir = TempDir::new().unwrap();
    let out = trinoise(&["sweep"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let csv = std::fs::read_to_string(dir.path().join("sweep.csv")).unwrap();
    assert_eq!(csv.lines().count(), 102);
}

#[test]
fn w_state_at_zero() {
    let dir = TempDir::new().unwrap();
    let out = trinoise(
        &[
            "sweep",
            "--state",
            "W",
            "--p-min",
            "0",
            "--p-max",
            "0",
            "--p-steps",
            "1",
            "--out",
            "w.csv",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    let rows = rows(&std::fs::read_to_string(dir.path().join("w.csv")).unwrap());
    assert_eq!(rows.len(), 1);
    assert!((rows[0][4] - 2.0 * 2f64.sqrt() / 3.0).abs() < 1e-11);
}

#[test]
fn corr2_summary_reports_death_and_revival() {
    let dir = TempDir::new().unwrap();
    let out = trinoise(&["sweep", "--sites", "ab", "--p-steps", "201"], dir.path());
    let text = stdout(&out);
    assert!(text.contains("death_p=0.75 "), "{text}");
    assert!(text.contains("revival_p=0.755"), "{text}");
}

#[test]
fn death_output_format() {
    let dir = TempDir::new().unwrap();
    let corr3 = stdout(&trinoise(&["death"], dir.path()));
    assert_eq!(corr3, "death_p=0.7500\n");
    let w = stdout(&trinoise(&["death", "--state", "w"], dir.path()));
    assert_eq!(w, "death_p=none\n");
    let nc2 = stdout(&trinoise(
        &["death", "--sites", "ab", "--correlation", "non_correlated"],
        dir.path(),
    ));
    assert_eq!(nc2, "death_p=0.4146\n");
}

#[test]
fn verify_exit_status_and_warning() {
    let dir = TempDir::new().unwrap();
    let nc = trinoise(
        &["verify", "--sites", "ab", "--correlation", "non_correlated"],
        dir.path(),
    );
    assert_eq!(nc.status.code(), Some(0));
    let text = stdout(&nc);
    assert_eq!(text.lines().filter(|l| l.starts_with("p=")).count(), 5);
    for l in text.lines().filter(|l| l.starts_with("p=")) {
        let defect: f64 = l
            .split_whitespace()
            .find_map(|f| f.strip_prefix("completeness_defect="))
            .unwrap()
            .parse()
            .unwrap();
        assert!(defect <= 1e-12, "{l}");
    }
    assert!(!text.contains("warning"));

    let corr = trinoise(&["verify", "--sites", "ab"], dir.path());
    assert_eq!(corr.status.code(), Some(0));
    let text = stdout(&corr);
    assert!(text.contains("warning"));
    assert!(
        text.contains("p=0.75 completeness_defect=2.12132034356"),
        "{text}"
    );

    let single = stdout(&trinoise(&["verify", "--sites", "b"], dir.path()));
    assert!(single.contains("status=ok"));
}

#[test]
fn compare_report_blocks() {
    let dir = TempDir::new().unwrap();
    let out = trinoise(&["compare"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(dir.path().join("compare.txt")).unwrap();
    assert_eq!(text.matches("\n== ").count(), 5);
    let corr3 = text.split("== ghz-corr3 ==").nth(1).unwrap();
    assert!(corr3.contains("  p=0 verdict=match"));
    let single = text
        .split("== ghz-single ==")
        .nth(1)
        .unwrap()
        .split("\n== ")
        .next()
        .unwrap();
    assert!(single.contains("  p=0.5 verdict=mismatch"));
    assert!(single.contains("|111⟩⟨100|"));
    assert!(single.contains("|111⟩⟨011|"));

    let w = trinoise(&["compare", "--state", "w", "--out", "w.txt"], dir.path());
    assert_eq!(w.status.code(), Some(0));
    let text = std::fs::read_to_string(dir.path().join("w.txt")).unwrap();
    assert_eq!(text.matches("\n== ").count(), 6);
    let nc3 = text
        .split("== w-nc3 ==")
        .nth(1)
        .unwrap()
        .split("\n== ")
        .next()
        .unwrap();
    assert_eq!(nc3.matches("\n  p=").count(), 11);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let code = |args: &[&str]| trinoise(args, dir.path()).status.code();
    assert_eq!(
        code(&["sweep", "--p-min", "0.8", "--p-max", "0.2"]),
        Some(1)
    );
    assert_eq!(code(&["sweep", "--p-max", "1.5"]), Some(1));
    assert_eq!(code(&["sweep", "--sites", "xyz"]), Some(1));
    assert_eq!(code(&["sweep", "--p-steps", "1"]), Some(1));
    assert_eq!(code(&["sweep", "--state", "bell"]), Some(1));
    assert_eq!(code(&["frobnicate"]), Some(1));
    assert_eq!(code(&[]), Some(1));
    assert_eq!(code(&["--help"]), Some(0));
    assert_eq!(code(&["--version"]), Some(0));
    assert_eq!(code(&["death", "--sites", "a", "--p-min", "0.6"]), Some(1));
    assert_eq!(code(&["sweep", "--out", "missing/dir/s.csv"]), Some(2));
    assert_eq!(code(&["compare", "--out", "missing/dir/c.txt"]), Some(2));
}

#[test]
fn usage_errors_go_to_stderr() {
    let dir = TempDir::new().unwrap();
    let out = trinoise(&["sweep", "--p-min", "0.8", "--p-max", "0.2"], dir.path());
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("--p-min"));
}

#[test]
fn seed_is_accepted_and_ignored() {
    let dir = TempDir::new().unwrap();
    trinoise(&["sweep", "--seed", "1", "--out", "a.csv"], dir.path());
    trinoise(&["sweep", "--seed", "99", "--out", "b.csv"], dir.path());
    let a = std::fs::read(dir.path().join("a.csv")).unwrap();
    let b = std::fs::read(dir.path().join("b.csv")).unwrap();
    assert_eq!(a, b);
}
