//! End-to-end runs of the `verify` binary: exit codes, report schema and
//! determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn verify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verify")).args(args).output().expect("verify runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("verify-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn report(path: &PathBuf) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn status_of<'a>(report: &'a serde_json::Value, id: &str) -> Option<&'a str> {
    report["checks"].as_array().unwrap().iter().find(|c| c["id"] == id).and_then(|c| c["status"].as_str())
}

#[test]
fn rmatrix_rank_two_symbolic_passes_with_ybe() {
    let out = scratch("rmatrix.json");
    let o = verify(&["rmatrix", "--n", "2", "--mode", "symbolic", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let r = report(&out);
    assert_eq!(r["suite"], "rmatrix");
    assert_eq!(status_of(&r, "ybe.n2"), Some("pass"));
}

#[test]
fn rank_one_is_rejected_by_the_rank_two_suites() {
    for suite in ["rep", "gauss", "central", "embed", "currents"] {
        let o = verify(&[suite, "--n", "1"]);
        assert_eq!(o.status.code(), Some(2), "{suite}");
        assert!(o.stdout.is_empty(), "{suite}: no report on configuration errors");
    }
}

#[test]
fn invalid_options_are_configuration_errors() {
    for args in [
        &["cartan", "--window", "0"][..],
        &["cartan", "--eval-param", "0"],
        &["cartan", "--eval-param", "abc"],
        &["cartan", "--mode", "fast"],
        &["nosuchsuite"],
        &["cartan", "--threads", "0"],
    ] {
        assert_eq!(verify(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn failing_checks_give_exit_code_one_and_a_report() {
    // The vector-representation suite reports the literal displayed forms
    // that fail alongside their passing variants.
    let out = scratch("rep.json");
    let o = verify(&["rep", "--n", "2", "--window", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let r = report(&out);
    let checks = r["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["status"] == "fail"));
    assert!(checks.iter().filter(|c| c["status"] == "fail").all(|c| c["counterexample"].is_string()));
}

#[test]
fn report_ids_are_sorted_and_reports_are_reproducible() {
    let (a, b) = (scratch("det-a.json"), scratch("det-b.json"));
    for (path, threads) in [(&a, "1"), (&b, "2")] {
        let o = verify(&["currents", "--n", "2", "--window", "2", "--threads", threads, "--out", path.to_str().unwrap()]);
        assert!(matches!(o.status.code(), Some(0 | 1)));
    }
    let (ta, tb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ta, tb, "reports differ between runs");
    let r = report(&a);
    let ids: Vec<&str> = r["checks"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert!(r.get("wall_time_ms").is_none());
}

#[test]
fn report_goes_to_stdout_without_out_and_timing_is_opt_in() {
    let o = verify(&["cartan", "--n", "3", "--timing"]);
    assert_eq!(o.status.code(), Some(0));
    let r: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r["params"]["n"], 3);
    assert!(r["wall_time_ms"].is_u64());
    assert_eq!(status_of(&r, "cartan.btilde.n3"), Some("pass"));
}

#[test]
fn grid_is_selected_automatically_for_the_rmatrix_suite_at_rank_three() {
    let config = twisted_rtt::cli::VerifyConfig::new(twisted_rtt::cli::Suite::Rmatrix, 3);
    let (mode, notice) = config.mode_for(twisted_rtt::cli::Suite::Rmatrix);
    assert_eq!(mode, twisted_rtt::exact_algebra::Mode::Grid);
    assert!(notice.unwrap().contains("grid"));
    let mut explicit = config.clone();
    explicit.mode = Some(twisted_rtt::exact_algebra::Mode::Symbolic);
    assert_eq!(explicit.mode_for(twisted_rtt::cli::Suite::Rmatrix), (twisted_rtt::exact_algebra::Mode::Symbolic, None));
}

#[test]
fn eval_param_is_recorded_and_honoured() {
    let out = scratch("eval.json");
    let o = verify(&["currents", "--n", "2", "--window", "1", "--eval-param", "3/2", "--out", out.to_str().unwrap()]);
    assert!(matches!(o.status.code(), Some(0 | 1)));
    let r = report(&out);
    assert_eq!(r["params"]["eval_param"], "3/2");
    assert_eq!(status_of(&r, "currents.hihjmp.n2"), Some("pass"));
}
