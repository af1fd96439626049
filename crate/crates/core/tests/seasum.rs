use std::f64::consts::PI;

use approx::assert_relative_eq;
use diracsea::figures::{o3_shift, slope_deviation};
use diracsea::seasum::{
    build_integrand_table, combined_integrand, force_sum_row, run_row, run_vp, subtract_counterterms, tail_limit,
    VPConfig, SIGMA,
};
use diracsea::selftest::vpsum_csv_with_workers;
use diracsea::ALPHA;

fn desk_at(r: f64) -> VPConfig {
    let mut cfg = VPConfig::desk();
    cfg.r_list = vec![r];
    cfg
}

#[test]
fn sign_convention() {
    assert_eq!(SIGMA, -1.0);
    let row = run_row(0.1, &desk_at(0.1));
    assert!(row.v_sum < 0.0 && row.v_uehling < 0.0, "{row:?}");
}

#[test]
fn counterterms_without_integral() {
    assert_relative_eq!(subtract_counterterms(0.0, 1.0, ALPHA, false), -2.0 * ALPHA / PI);
    let a3 = ALPHA.powi(3);
    assert_relative_eq!(o3_shift(0.5, ALPHA), -4.0 / (3.0 * PI) * a3 / 0.5 + 1.5 * PI * a3 * 0.25, max_relative = 1e-12);
}

#[test]
fn null_at_zero_coupling() {
    let mut cfg = VPConfig::desk();
    cfg.alpha = 0.0;
    for r in [0.05, 0.5, 2.0] {
        let row = run_row(r, &cfg);
        assert_eq!(row.status, "ok");
        assert!(row.v_sum.abs() <= 1e-10, "r = {r}: {}", row.v_sum);
    }
}

#[test]
fn integrand_is_linear_in_alpha() {
    let r = 0.5;
    for p in [1.0, 6.0, 30.0] {
        let (w1, _) = combined_integrand(p, r, ALPHA, 300, 1e-13).unwrap();
        let (w2, _) = combined_integrand(p, r, 0.5 * ALPHA, 300, 1e-13).unwrap();
        assert_relative_eq!(w1 / ALPHA, w2 / (0.5 * ALPHA), max_relative = 1e-3);
    }
}

#[test]
fn large_momentum_slope() {
    let dev = slope_deviation(0.5, ALPHA, 20.0, 100.0, 9).unwrap();
    assert!(dev <= 0.01, "{dev}");
}

#[test]
fn grid_refinement_stays_within_error_estimate() {
    let r = 0.3;
    let coarse = run_row(r, &desk_at(r));
    let mut cfg = desk_at(r);
    cfg.n_p = 800;
    let fine = run_row(r, &cfg);
    assert_eq!(coarse.status, "ok");
    assert_eq!(fine.status, "ok");
    let gap = (coarse.v_sum - fine.v_sum).abs();
    assert!(gap <= coarse.err_est + fine.err_est, "gap {gap:.2e}, estimates {:.2e} {:.2e}", coarse.err_est, fine.err_est);
}

#[test]
fn tail_coefficient_near_first_order_value() {
    let r = 1.0;
    let table = build_integrand_table(r, &desk_at(r), false).unwrap();
    let fit = tail_limit(&table.p_grid, &table.integral_fn, table.window()).unwrap();
    let expected = ALPHA * r / (2.0 * PI);
    assert!(!fit.fallback);
    assert!((fit.a / expected - 1.0).abs() <= 0.25, "a = {:.4e}, expected {expected:.4e}", fit.a);
}

#[test]
fn force_sums_balance_and_match_density() {
    for r in [0.1, 0.5] {
        let row = force_sum_row(r, &desk_at(r)).unwrap();
        assert!(row.rel_residual <= 1e-9, "r = {r}: {row:?}");
        assert_relative_eq!(row.f_elec, row.f_elec_from_density, max_relative = 1e-9);
    }
}

#[test]
fn byte_identical_across_workers_and_runs() {
    let mut cfg = VPConfig::desk();
    cfg.r_list = vec![0.05, 0.4];
    let a = vpsum_csv_with_workers(&cfg, 1).unwrap();
    let b = vpsum_csv_with_workers(&cfg, 3).unwrap();
    let c = vpsum_csv_with_workers(&cfg, 1).unwrap();
    assert_eq!(a, b);
    assert_eq!(a, c);
}

#[test]
fn rows_keep_input_order() {
    let mut cfg = VPConfig::desk();
    cfg.r_list = vec![0.8, 0.1, 0.4];
    let rows = run_vp(&cfg).unwrap();
    let rs: Vec<f64> = rows.iter().map(|row| row.r).collect();
    assert_eq!(rs, cfg.r_list);
}
