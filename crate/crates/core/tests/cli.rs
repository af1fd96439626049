use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_diracsea"));
    c.env_remove("DIRACSEA_WORKERS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn diracsea")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("diracsea-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    dir
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["nonsense"]).status.code(), Some(1));
    assert_eq!(run(&["states", "--kind", "bound", "--n", "1", "--kappa", "1"]).status.code(), Some(1));
    assert_eq!(run(&["states", "--kind", "bound", "--n", "1", "--kappa", "0"]).status.code(), Some(1));
    assert_eq!(run(&["figures", "--id", "11"]).status.code(), Some(1));
    assert_eq!(run(&["vpsum", "--r", "-1"]).status.code(), Some(1));
    assert_eq!(run(&["selftest", "--only", "12"]).status.code(), Some(1));
}

#[test]
fn help_exits_zero() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    for sub in ["states", "balance", "uehling", "vpsum", "compare", "figures", "selftest"] {
        assert!(text.contains(sub), "{sub} missing from help");
    }
}

#[test]
fn states_writes_csv() {
    let out = run(&["states", "--kind", "bound", "--n", "2", "--kappa", "-1", "--points", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("r,g,f,gp,fp,gpp,fpp"));
    assert_eq!(lines.count(), 4);
}

#[test]
fn closed_form_outside_window_falls_back() {
    let out = run(&["states", "--kind", "continuum", "--p", "20", "--r-max", "2", "--points", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("ODE"));
}

#[test]
fn balance_threshold_decides_exit() {
    assert_eq!(run(&["balance", "--points", "3"]).status.code(), Some(0));
    assert_eq!(run(&["balance", "--points", "3", "--threshold", "0"]).status.code(), Some(2));
    assert_eq!(run(&["balance", "--alpha", "0", "--points", "3"]).status.code(), Some(0));
}

#[test]
fn vpsum_writes_csv_and_manifest() {
    let dir = scratch("vpsum");
    let out = run(&["vpsum", "--preset", "desk", "--r", "0.3", "--workers", "1", "--out-dir", dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let csv = std::fs::read_to_string(dir.join("vpsum.csv")).unwrap();
    assert!(csv.starts_with("r,v_sum,v_uehling,rho_sum,rel_diff,err_est,kappa_max_used,p_max,n_p,runtime_s\n"));
    let manifest: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest["command"], "vpsum");
    assert_eq!(manifest["workers"], 1);
    assert_eq!(manifest["config"]["n_p"], 400);
}

#[test]
fn config_file_and_env_workers() {
    let dir = scratch("config");
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("run.toml");
    std::fs::write(&cfg, format!("alpha = 0.0\nr_list = [0.2]\np_max_factor = 40.0\nn_p = 200\nout_dir = {:?}\n", dir.join("out"))).unwrap();
    let out = bin()
        .args(["vpsum", "--config", cfg.to_str().unwrap()])
        .env("DIRACSEA_WORKERS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let manifest: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("out/manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest["workers"], 2);
    assert_eq!(manifest["config"]["alpha"], 0.0);

    std::fs::write(&cfg, "r_list = [0.2]\nn_p = 200\n").unwrap();
    assert_eq!(run(&["vpsum", "--config", cfg.to_str().unwrap()]).status.code(), Some(1));
    std::fs::write(&cfg, "alpha = 0.0\nunknown_key = 1\n").unwrap();
    assert_eq!(run(&["vpsum", "--config", cfg.to_str().unwrap()]).status.code(), Some(1));
    let out = bin().args(["vpsum", "--r", "0.2"]).env("DIRACSEA_WORKERS", "many").output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn figures_write_one_csv_each() {
    let dir = scratch("figures");
    let out = run(&["figures", "--id", "1", "--id", "10", "--out-dir", dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(dir.join("fig1.csv").exists());
    assert!(dir.join("fig10.csv").exists());
    assert!(dir.join("manifest.json").exists());
}

#[test]
fn selftest_reports_and_fails_with_three() {
    let out = run(&["selftest", "--only", "2,3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 2);
    assert!(text.lines().all(|l| l.contains("PASS")));
    // an impossible tolerance must fail
    assert_eq!(run(&["selftest", "--only", "3", "--tolerance-scale", "0"]).status.code(), Some(3));
}
