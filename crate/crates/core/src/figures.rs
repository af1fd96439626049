//! Data series behind the ten figures of the sea-sum write-up.
//!
//! Single-radius figures (1-6, 10) use `r`; radius scans (7-9) use
//! `cfg.r_list`. Every function returns plain tables; nothing is plotted.

use std::f64::consts::PI;

use crate::dirac::EnergySign::{Negative, Positive};
use crate::report::Table;
use crate::seasum::{
    build_integrand_table, combined_integrand, damp_by_steps, kappa_block, mode_density, momentum_counterterm_slope,
    run_vp, subtract_counterterms, tail_limit, IntegrandTable, VPConfig, SIGMA,
};
use crate::uehling::uehling_density;
use crate::{Error, Result};

pub const FIGURE_TITLES: [&str; 10] = [
    "charge densities of +E and -E states at fixed kappa",
    "+-E, +-kappa combined density per |kappa|",
    "partial kappa sums",
    "converged kappa sum and the line 8 alpha r p / pi",
    "kappa sum after the linear subtraction",
    "integral function, raw and damped",
    "V(r) before and after the real-space subtraction",
    "sea sum against the Uehling density",
    "normalised difference, with and without the O(alpha^3) terms",
    "tail oscillation of the integral function, raw and damped",
];

/// Evenly spaced momenta on (0, p_max].
fn momenta(p_max: f64, n: usize) -> Vec<f64> {
    (1..=n).map(|i| p_max * i as f64 / n as f64).collect()
}

fn fig1(r: f64, cfg: &VPConfig) -> Result<Table> {
    let mut t = Table::new("fig1", &["p", "kappa", "w_negative_e", "w_positive_e", "difference"]);
    for kappa in [-1, 1] {
        for p in momenta(12.0 / r, 240) {
            let wn = mode_density(p, kappa, Negative, r, cfg.alpha)?;
            let wp = mode_density(p, kappa, Positive, r, cfg.alpha)?;
            t.push(vec![p.into(), kappa.into(), wn.into(), wp.into(), (wn - wp).into()]);
        }
    }
    Ok(t)
}

fn fig2(r: f64, cfg: &VPConfig) -> Result<Table> {
    let mut t = Table::new("fig2", &["p", "abs_kappa", "block"]);
    for k in 1..=8u32 {
        for p in momenta(12.0 / r, 240) {
            t.push(vec![p.into(), k.into(), (SIGMA * kappa_block(p, k, r, cfg.alpha)?).into()]);
        }
    }
    Ok(t)
}

fn fig3(r: f64, cfg: &VPConfig) -> Result<Table> {
    let mut t = Table::new("fig3", &["p", "kappa_max", "partial_sum"]);
    let ps = momenta(12.0 / r, 240);
    for p in &ps {
        let mut sum = 0.0;
        for k in 1..=32u32 {
            sum += SIGMA * kappa_block(*p, k, r, cfg.alpha)?;
            if k.is_power_of_two() {
                t.push(vec![(*p).into(), k.into(), sum.into()]);
            }
        }
    }
    Ok(t)
}

fn fig4_5(table: &IntegrandTable) -> (Table, Table) {
    let slope = momentum_counterterm_slope(table.r, table.alpha);
    let mut t4 = Table::new("fig4", &["p", "w", "reference", "kappa_used"]);
    let mut t5 = Table::new("fig5", &["p", "w_subtracted"]);
    for i in 0..table.p_grid.len() {
        let p = table.p_grid[i];
        t4.push(vec![p.into(), table.w_raw[i].into(), (slope * p).into(), table.kappa_used[i].into()]);
        t5.push(vec![p.into(), table.w_sub[i].into()]);
    }
    (t4, t5)
}

fn fig6(table: &IntegrandTable) -> Result<Table> {
    let win = table.window();
    let m = table.grid().steps_per_half_period;
    let u = win.uniform_start;
    let damped = damp_by_steps(&table.integral_fn[u..], m)?;
    let limit = tail_limit(&table.p_grid, &table.integral_fn, win)?.limit;
    let mut t = Table::new("fig6", &["p", "integral", "damped", "limit"]);
    for (i, &p) in table.p_grid.iter().enumerate() {
        let d = if i >= u && !damped.shrunk[i - u] { damped.values[i - u] } else { f64::NAN };
        t.push(vec![p.into(), table.integral_fn[i].into(), d.into(), limit.into()]);
    }
    Ok(t)
}

/// Oscillating part of the integral function in the upper half of the
/// uniform grid, before and after damping, and the ratio of the two
/// amplitudes.
#[derive(Debug, Clone, PartialEq)]
pub struct TailOscillation {
    pub p: Vec<f64>,
    pub raw: Vec<f64>,
    pub damped: Vec<f64>,
    pub amplitude_raw: f64,
    pub amplitude_damped: f64,
}

impl TailOscillation {
    pub fn reduction(&self) -> f64 {
        self.amplitude_raw / self.amplitude_damped
    }
}

/// y minus its least-squares fit by c₀ + c₁/p + c₂/p².
fn detrend(p: &[f64], y: &[f64]) -> Vec<f64> {
    let p0 = p[0];
    let basis = |x: f64| [1.0, p0 / x, (p0 / x).powi(2)];
    let mut a = [[0.0; 3]; 3];
    let mut b = [0.0; 3];
    for (&x, &v) in p.iter().zip(y) {
        let phi = basis(x);
        for i in 0..3 {
            b[i] += phi[i] * v;
            for j in 0..3 {
                a[i][j] += phi[i] * phi[j];
            }
        }
    }
    // Gaussian elimination on the 3x3 normal equations
    for c in 0..3 {
        for row in c + 1..3 {
            let f = a[row][c] / a[c][c];
            let pivot = a[c];
            for (x, y) in a[row].iter_mut().zip(pivot).skip(c) {
                *x -= f * y;
            }
            b[row] -= f * b[c];
        }
    }
    let mut coef = [0.0; 3];
    for c in (0..3).rev() {
        let s: f64 = (c + 1..3).map(|k| a[c][k] * coef[k]).sum();
        coef[c] = (b[c] - s) / a[c][c];
    }
    p.iter()
        .zip(y)
        .map(|(&x, &v)| {
            let phi = basis(x);
            v - (coef[0] * phi[0] + coef[1] * phi[1] + coef[2] * phi[2])
        })
        .collect()
}

pub fn tail_oscillation(table: &IntegrandTable) -> Result<TailOscillation> {
    let m = table.grid().steps_per_half_period;
    let u = table.window().uniform_start;
    let n = table.p_grid.len();
    let damped = damp_by_steps(&table.integral_fn[u..], m)?;
    let p_half = 0.5 * table.grid().p_max();
    let idx: Vec<usize> = (u..n)
        .filter(|&i| table.p_grid[i] >= p_half && !damped.shrunk[i - u])
        .collect();
    if idx.len() < 4 * m {
        return Err(Error::domain("tail_oscillation: uniform grid too short"));
    }
    let p: Vec<f64> = idx.iter().map(|&i| table.p_grid[i]).collect();
    let raw_y: Vec<f64> = idx.iter().map(|&i| table.integral_fn[i]).collect();
    let damped_y: Vec<f64> = idx.iter().map(|&i| damped.values[i - u]).collect();
    let raw = detrend(&p, &raw_y);
    let damped = detrend(&p, &damped_y);
    let amp = |v: &[f64]| v.iter().fold(0.0f64, |a, x| a.max(x.abs()));
    Ok(TailOscillation {
        amplitude_raw: amp(&raw),
        amplitude_damped: amp(&damped),
        p,
        raw,
        damped,
    })
}

fn fig10(table: &IntegrandTable) -> Result<Table> {
    let osc = tail_oscillation(table)?;
    let mut t = Table::new("fig10", &["p", "raw", "damped"]);
    for i in 0..osc.p.len() {
        t.push(vec![osc.p[i].into(), osc.raw[i].into(), osc.damped[i].into()]);
    }
    Ok(t)
}

/// Change of V when the O(α³) terms are also subtracted.
pub fn o3_shift(r: f64, alpha: f64) -> f64 {
    subtract_counterterms(0.0, r, alpha, true) - subtract_counterterms(0.0, r, alpha, false)
}

fn scans(cfg: &VPConfig) -> Result<[Table; 3]> {
    let rows = run_vp(cfg)?;
    let mut t7 = Table::new("fig7", &["r", "v_integrated", "subtraction", "v_sum"]);
    let mut t8 = Table::new("fig8", &["r", "v_sum", "v_uehling", "rho_sum", "rho_uehling"]);
    let mut t9 = Table::new("fig9", &["r", "rel_diff", "rel_diff_o3", "err_est_rel"]);
    for row in rows {
        let r = row.r;
        let line = 2.0 * cfg.alpha / PI * r;
        let shift = o3_shift(r, cfg.alpha);
        let v_plain = if cfg.subtract_o3 { row.v_sum - shift } else { row.v_sum };
        let v_o3 = v_plain + shift;
        let ue = uehling_density(r, cfg.alpha)?;
        let rel = |v: f64| (v - ue.v_reduced) / ue.v_reduced.abs();
        t7.push(vec![r.into(), (v_plain + line).into(), line.into(), v_plain.into()]);
        t8.push(vec![r.into(), v_plain.into(), ue.v_reduced.into(), (v_plain / (4.0 * PI * r * r)).into(), ue.rho.into()]);
        t9.push(vec![
            r.into(),
            rel(v_plain).into(),
            rel(v_o3).into(),
            (row.err_est / ue.v_reduced.abs()).into(),
        ]);
    }
    Ok([t7, t8, t9])
}

/// Tables for one figure (1-10).
pub fn figure(id: u32, cfg: &VPConfig, r: f64) -> Result<Vec<Table>> {
    cfg.validate()?;
    if !(r > 0.0) {
        return Err(Error::Config(format!("figure radius r = {r} must be positive")));
    }
    Ok(match id {
        1 => vec![fig1(r, cfg)?],
        2 => vec![fig2(r, cfg)?],
        3 => vec![fig3(r, cfg)?],
        4 | 5 => {
            let (t4, t5) = fig4_5(&build_integrand_table(r, cfg, false)?);
            vec![if id == 4 { t4 } else { t5 }]
        }
        6 => vec![fig6(&build_integrand_table(r, cfg, false)?)?],
        7..=9 => {
            let [t7, t8, t9] = scans(cfg)?;
            vec![[t7, t8, t9][id as usize - 7].clone()]
        }
        10 => vec![fig10(&build_integrand_table(r, cfg, false)?)?],
        _ => return Err(Error::Config(format!("unknown figure {id}; expected 1-10"))),
    })
}

/// All ten figures, sharing the expensive tables.
pub fn all_figures(cfg: &VPConfig, r: f64) -> Result<Vec<Table>> {
    cfg.validate()?;
    let table = build_integrand_table(r, cfg, false)?;
    let (t4, t5) = fig4_5(&table);
    let [t7, t8, t9] = scans(cfg)?;
    Ok(vec![
        fig1(r, cfg)?,
        fig2(r, cfg)?,
        fig3(r, cfg)?,
        t4,
        t5,
        fig6(&table)?,
        t7,
        t8,
        t9,
        fig10(&table)?,
    ])
}

/// Relative deviation of the converged κ sum from (8α/π) r p over the
/// points with pr in [lo, hi].
pub fn slope_deviation(r: f64, alpha: f64, pr_lo: f64, pr_hi: f64, points: usize) -> Result<f64> {
    let slope = momentum_counterterm_slope(r, alpha);
    let mut worst: f64 = 0.0;
    for i in 0..points {
        let pr = pr_lo + (pr_hi - pr_lo) * i as f64 / (points - 1).max(1) as f64;
        let p = pr / r;
        let (w, _) = combined_integrand(p, r, alpha, 400, 1e-12)?;
        worst = worst.max((SIGMA * w / (slope * p) - 1.0).abs());
    }
    Ok(worst)
}
