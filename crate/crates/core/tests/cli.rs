//! End-to-end checks of the `hyperf` binary: exit codes, report
//! determinism, and the sweep table.

use std::path::PathBuf;
use std::process::{Command, Output};

fn hyperf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn temp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("hyperf-test-{}-{name}", std::process::id()))
}

#[test]
fn algebra_suite_passes_exactly_on_rational_parameters() {
    for a in ["1/4", "1/3", "1/2"] {
        let out = hyperf(&[
            "run",
            "--instance",
            "dunkl_ramirez",
            "--a",
            a,
            "--suite",
            "algebra",
            "--level",
            "15",
            "--count",
            "20",
        ]);
        assert!(out.status.success(), "a = {a}: {}", String::from_utf8_lossy(&out.stderr));
        let text = stdout(&out);
        assert!(text.contains("hard-failures = 0"), "a = {a}");
        assert!(text.contains("check characters-multiplicative [hard] pass"));
    }
}

#[test]
fn hausdorff_young_at_two_is_tight() {
    let out = hyperf(&[
        "run", "--suite", "hy", "--p", "2", "--level", "20", "--count", "40",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("check plancherel-anchor [hard] pass"));
    assert!(text.contains("hard-failures = 0"));
}

#[test]
fn config_errors_exit_with_two() {
    // Empty suite list.
    let out = hyperf(&["run", "--suite", ""]);
    assert_eq!(out.status.code(), Some(2), "{}", String::from_utf8_lossy(&out.stderr));
    // Unknown instance.
    let out = hyperf(&["run", "--instance", "torus"]);
    assert_eq!(out.status.code(), Some(2));
    // Unknown key in a config file.
    let path = temp_path("bad.conf");
    std::fs::write(&path, "bogus = 1\n").unwrap();
    let out = hyperf(&["run", "--config", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_file(&path).ok();
    // Excessive truncation for H_a carries a cap suggestion.
    let out = hyperf(&[
        "run", "--instance", "dunkl_ramirez", "--a", "1/4", "--level", "600", "--suite", "hy",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap the level"));
    // Usage errors from the argument parser share the exit code.
    let out = hyperf(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reports_are_byte_deterministic() {
    let first = temp_path("report-a.txt");
    let second = temp_path("report-b.txt");
    let args = |path: &PathBuf| {
        vec![
            "run".to_string(),
            "--suite".to_string(),
            "hy,paley".to_string(),
            "--level".to_string(),
            "20".to_string(),
            "--count".to_string(),
            "30".to_string(),
            "--out".to_string(),
            path.to_str().unwrap().to_string(),
        ]
    };
    let out = Command::new(env!("CARGO_BIN_EXE_hyperf"))
        .args(args(&first))
        .output()
        .unwrap();
    assert!(out.status.success());
    // A second run under a different thread cap must produce the same bytes.
    let out = Command::new(env!("CARGO_BIN_EXE_hyperf"))
        .args(args(&second))
        .env("HYPERF_THREADS", "1")
        .output()
        .unwrap();
    assert!(out.status.success());
    let a = std::fs::read(&first).unwrap();
    let b = std::fs::read(&second).unwrap();
    assert_eq!(a, b, "reports differ between runs/thread caps");
    std::fs::remove_file(&first).ok();
    std::fs::remove_file(&second).ok();
}

#[test]
fn sweep_emits_aggregate_csv() {
    let out = hyperf(&[
        "sweep", "--param", "p", "--values", "1.25,1.5,2", "--suite", "paley", "--level", "15",
        "--count", "20",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("parameter,value,suite,sup_ratio,pass"));
    let rows: Vec<&str> = lines.collect();
    assert!(rows.iter().all(|r| r.ends_with(",pass")), "{text}");
    // The p = 2 anchor collapses the Paley ratio to 1.
    let last = rows.iter().find(|r| r.starts_with("p,2,paley,")).expect("p = 2 row");
    let sup: f64 = last.split(',').nth(3).unwrap().parse().unwrap();
    assert!((sup - 1.0).abs() < 1e-9, "sup ratio at p = 2: {sup}");
}

#[test]
fn sweep_over_parameter_a_passes_algebra_exactly() {
    let out = hyperf(&[
        "sweep",
        "--instance",
        "dunkl_ramirez",
        "--param",
        "a",
        "--values",
        "1/4,1/3,1/2",
        "--suite",
        "algebra",
        "--level",
        "12",
        "--count",
        "10",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    for a in ["1/4", "1/3", "1/2"] {
        assert!(text.contains(&format!("a,{a},algebra-tables,,pass")), "{text}");
    }
}

#[test]
fn mphi_subcommand_prints_the_functional() {
    let out = hyperf(&["mphi", "--instance", "conj_su2", "--level", "40", "--beta", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("mphi = 1.0000000000000000e0"), "{text}");
}

#[test]
fn multiplier_bound_subcommand_reports_sharp_diagonal() {
    let out = hyperf(&[
        "multiplier-bound",
        "--p",
        "2",
        "--q",
        "2",
        "--symbol",
        "random:5",
        "--level",
        "12",
        "--trials",
        "2",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let ratio_line = text.lines().find(|l| l.starts_with("ratio = ")).unwrap();
    let ratio: f64 = ratio_line.trim_start_matches("ratio = ").parse().unwrap();
    assert!((ratio - 1.0).abs() < 1e-6, "{text}");
}

#[test]
fn csv_format_is_available() {
    let out = hyperf(&[
        "run", "--suite", "hy", "--p", "1.5", "--level", "12", "--count", "10", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("suite,params,metric,value,pass"), "{text}");
    assert!(text.contains("hy,"));
}
