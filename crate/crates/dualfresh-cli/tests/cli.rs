//! End-to-end checks of the installed binary: output schemas, determinism,
//! precedence rules, and error contracts.

use std::path::Path;
use std::process::{Command, Output};

fn dualfresh(args: &[&str]) -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_dualfresh"));
    cmd.args(args).env_remove("DUALFRESH_SEED");
    cmd
}

fn run_ok(args: &[&str]) -> String {
    let out = dualfresh(args).output().expect("binary runs");
    assert!(
        out.status.success(),
        "expected success for {args:?}, stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("stdout is UTF-8")
}

fn run_err(args: &[&str]) -> String {
    let out = dualfresh(args).output().expect("binary runs");
    assert!(!out.status.success(), "expected failure for {args:?}");
    String::from_utf8(out.stderr).expect("stderr is UTF-8")
}

#[test]
fn analytic_prints_table() {
    let stdout = run_ok(&["analytic", "--system", "mm", "--mu-a", "1", "--mu-b", "1"]);
    assert!(stdout.contains("avg_aoi 1.25\n"));
    assert!(stdout.contains("avg_paoi 1.33333333333\n"));
    assert!(stdout.contains("effective_rate 1.5\n"));
    assert!(stdout.contains("obsolete_ratio 0.25\n"));
}

#[test]
fn analytic_emits_json() {
    let stdout = run_ok(&[
        "analytic", "--system", "md", "--mu", "1", "--period", "1", "--json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&stdout).expect("valid JSON");
    assert_eq!(doc["config"]["system"]["kind"], "md");
    assert_eq!(doc["metrics"]["avg_aoi"], 1.2051586515);
    assert_eq!(doc["metrics"]["avg_paoi"], 1.44587573318);
}

#[test]
fn analytic_rejects_systems_without_closed_forms() {
    let dd = run_err(&["analytic", "--system", "dd", "--period-a", "1", "--period-b", "1"]);
    assert!(dd.contains("no closed form; use simulate"), "stderr: {dd}");
    let mm2 = run_err(&["analytic", "--system", "mm2", "--lambda", "1", "--mu", "1"]);
    assert!(mm2.contains("no closed form; use simulate"), "stderr: {mm2}");
}

#[test]
fn errors_name_the_offending_flag() {
    let stderr = run_err(&["analytic", "--system", "mm", "--mu-a", "0", "--mu-b", "1"]);
    assert!(stderr.contains("--mu-a"), "stderr: {stderr}");

    let stderr = run_err(&["analytic", "--system", "md", "--mu", "1"]);
    assert!(stderr.contains("--period"), "stderr: {stderr}");

    let stderr = run_err(&[
        "analytic", "--system", "mm", "--mu-a", "1", "--mu-b", "1", "--period", "2",
    ]);
    assert!(stderr.contains("--period does not apply"), "stderr: {stderr}");
}

#[test]
fn simulate_is_deterministic_and_self_describing() {
    let args = [
        "simulate", "--system", "mm", "--mu-a", "1", "--mu-b", "1", "--seed", "5",
        "--accepted", "3000", "--warmup", "300",
    ];
    let first = run_ok(&args);
    let second = run_ok(&args);
    assert_eq!(first, second, "repeated seed must give byte-identical JSON");

    let doc: serde_json::Value = serde_json::from_str(&first).expect("valid JSON");
    assert_eq!(doc["config"]["seed"], 5);
    assert_eq!(doc["config"]["target_accepted"], 3300);
    assert_eq!(doc["config"]["batches"], 32);
    assert_eq!(doc["reference"]["avg_aoi"], 1.25);
    assert_eq!(doc["stats"]["n_accepted"], 3000);
    assert!(doc["stats"]["avg_aoi"].as_f64().unwrap() > 0.0);
    assert!(doc["reference"]["avg_aoi_rel_error"].as_f64().unwrap() < 0.1);
}

#[test]
fn simulate_reports_no_reference_without_closed_form() {
    let stdout = run_ok(&[
        "simulate", "--system", "dd", "--period-a", "1", "--period-b", "1", "--offset",
        "0.25", "--accepted", "2000", "--warmup", "200", "--seed", "1",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&stdout).expect("valid JSON");
    assert!(doc["reference"].is_null());
    let avg = doc["stats"]["avg_aoi"].as_f64().unwrap();
    assert!((avg - 1.3125).abs() < 1e-6, "phase-0.25 average is exact, got {avg}");
}

#[test]
fn seed_precedence_flag_config_env() {
    let args = [
        "simulate", "--system", "mm", "--mu-a", "1", "--mu-b", "1", "--accepted", "1000",
        "--warmup", "100",
    ];
    let from_env = {
        let out = dualfresh(&args).env("DUALFRESH_SEED", "5").output().unwrap();
        assert!(out.status.success());
        String::from_utf8(out.stdout).unwrap()
    };
    let mut flag_args = args.to_vec();
    flag_args.extend(["--seed", "5"]);
    let from_flag = run_ok(&flag_args);
    assert_eq!(from_env, from_flag, "env seed must act as the default seed");

    let mut other_flag = args.to_vec();
    other_flag.extend(["--seed", "6"]);
    let out = dualfresh(&other_flag).env("DUALFRESH_SEED", "5").output().unwrap();
    assert!(out.status.success());
    let overridden = String::from_utf8(out.stdout).unwrap();
    assert_ne!(overridden, from_env, "the flag must beat the env var");

    let out = dualfresh(&args).env("DUALFRESH_SEED", "not-a-number").output().unwrap();
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("DUALFRESH_SEED"));
}

#[test]
fn config_file_yields_to_flags() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.toml");
    std::fs::write(&path, "accepted = 1500\nseed = 9\n").unwrap();
    let config = path.to_str().unwrap();

    let stdout = run_ok(&[
        "simulate", "--system", "mm", "--mu-a", "1", "--mu-b", "1", "--config", config,
    ]);
    let doc: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(doc["config"]["seed"], 9);
    assert_eq!(doc["config"]["target_accepted"], 2500);

    let stdout = run_ok(&[
        "simulate", "--system", "mm", "--mu-a", "1", "--mu-b", "1", "--config", config,
        "--accepted", "2000", "--seed", "3",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(doc["config"]["seed"], 3);
    assert_eq!(doc["config"]["target_accepted"], 3000);

    std::fs::write(&path, "acccepted = 1500\n").unwrap();
    let stderr = run_err(&[
        "simulate", "--system", "mm", "--mu-a", "1", "--mu-b", "1", "--config", config,
    ]);
    assert!(stderr.contains("invalid config file"), "stderr: {stderr}");
}

#[test]
fn trace_file_has_the_documented_schema() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("trace.csv");
    run_ok(&[
        "simulate", "--system", "mm", "--mu-a", "1", "--mu-b", "2", "--accepted", "500",
        "--warmup", "50", "--seed", "4", "--trace", path.to_str().unwrap(),
    ]);
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "t,gen_time,sensor,prev_state,new_state,path_l,Y,T_service"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 550, "one row per accepted refresh, warmup included");

    let first: Vec<&str> = rows[0].split(',').collect();
    assert!(first[3].is_empty(), "no previous state on the first refresh");
    assert!(first[5].is_empty(), "no path on the first refresh");
    for row in &rows {
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields.len(), 8);
        assert!(fields[2] == "A" || fields[2] == "B");
        let t: f64 = fields[0].parse().unwrap();
        let gen: f64 = fields[1].parse().unwrap();
        assert!(gen <= t);
    }
    for pair in rows.windows(2) {
        let t0: f64 = pair[0].split(',').next().unwrap().parse().unwrap();
        let t1: f64 = pair[1].split(',').next().unwrap().parse().unwrap();
        assert!(t0 < t1, "refresh times must increase");
    }
}

fn sweep_args<'a>(out: &'a str, workers: &'a str) -> Vec<&'a str> {
    vec![
        "sweep", "--systems", "mm,md", "--variable", "rate-ratio", "--start", "0.5",
        "--stop", "1", "--steps", "3", "--metrics", "avg_aoi", "--mode", "both",
        "--accepted", "4000", "--seed", "9", "--workers", workers, "--out", out,
    ]
}

#[test]
fn sweep_csv_schema_order_and_agreement() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.csv");
    run_ok(&sweep_args(path.to_str().unwrap(), "2"));
    let text = std::fs::read_to_string(&path).unwrap();

    let mut lines = text.lines();
    let echo = lines.next().unwrap();
    assert!(echo.starts_with("# mode=both"), "echo line: {echo}");
    assert!(echo.contains("accepted=4000"));
    assert_eq!(
        lines.next().unwrap(),
        "system,param,metric,analytic,simulated,ci_half_width,seed"
    );

    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 6);
    let expected_order = [
        ("mm", "0.5"), ("mm", "0.75"), ("mm", "1"),
        ("md", "0.5"), ("md", "0.75"), ("md", "1"),
    ];
    for (row, (system, param)) in rows.iter().zip(expected_order) {
        assert_eq!(row[0], system);
        assert_eq!(row[1], param);
        assert_eq!(row[2], "avg_aoi");
        let analytic: f64 = row[3].parse().unwrap();
        let simulated: f64 = row[4].parse().unwrap();
        let ci: f64 = row[5].parse().unwrap();
        assert!(
            (simulated - analytic).abs() <= (3.0 * ci).max(0.02 * analytic),
            "row {row:?} disagrees with its closed form"
        );
        assert!(!row[6].is_empty(), "simulated rows carry their seed");
    }

    // Same grid, same seed, different worker count: identical bytes.
    let again = dir.path().join("again.csv");
    run_ok(&sweep_args(again.to_str().unwrap(), "1"));
    assert_eq!(text, std::fs::read_to_string(&again).unwrap());
}

#[test]
fn sweep_stdout_matches_file_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.csv");
    let mut args = sweep_args(path.to_str().unwrap(), "1");
    args.truncate(args.len() - 2); // drop --out so it prints instead
    let stdout = run_ok(&args);
    run_ok(&sweep_args(path.to_str().unwrap(), "1"));
    assert_eq!(stdout, std::fs::read_to_string(&path).unwrap());
}

#[test]
fn sweep_analytic_mode_needs_closed_forms() {
    let stderr = run_err(&[
        "sweep", "--systems", "dd", "--variable", "period", "--start", "0.5", "--stop", "2",
        "--steps", "3", "--mode", "analytic",
    ]);
    assert!(stderr.contains("no closed form"), "stderr: {stderr}");

    let stderr = run_err(&[
        "sweep", "--systems", "mm", "--variable", "rate-ratio", "--start", "1", "--stop",
        "0.5", "--steps", "3",
    ]);
    assert!(stderr.contains("--start must be below --stop"), "stderr: {stderr}");

    let stderr = run_err(&[
        "sweep", "--systems", "mm2", "--variable", "rate-ratio", "--start", "0.5", "--stop",
        "1", "--steps", "3",
    ]);
    assert!(stderr.contains("does not apply"), "stderr: {stderr}");
}

#[test]
fn simulate_rejects_the_analytic_baseline() {
    let stderr = run_err(&["simulate", "--system", "single", "--mu", "1"]);
    assert!(stderr.contains("no simulator"), "stderr: {stderr}");
}

#[test]
fn validate_reports_all_passes() {
    let stdout = run_ok(&["validate", "--seed", "0"]);
    assert!(stdout.contains("validation: 8/8 checks passed"), "stdout: {stdout}");
    assert!(!stdout.contains("FAIL"), "stdout: {stdout}");
    assert_eq!(stdout.matches("PASS").count(), 8);
}
