use std::f64::consts::PI;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::grid::{build_p_grid, PGrid};
use super::integrand::combined_sample;
use super::interp::integrate_samples;
use super::tail::{tail_limit, tail_limit_like, TailFit, TailWindow};
use crate::uehling::uehling_density;
use crate::{Error, Result, ALPHA};

/// Sign relating the charge-symmetric mode sum W to the reduced density
/// V = 4πr²ρ/e: V = ∫ σW dp after renormalisation. Fixed by the sign of
/// the Uehling density (negative at all r > 0).
pub const SIGMA: f64 = -1.0;

/// Radii covered by the reference results.
pub const R_RANGE: (f64, f64) = (0.01, 4.0);

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct VPConfig {
    pub alpha: f64,
    pub r_list: Vec<f64>,
    pub p_max_factor: f64,
    pub n_p: usize,
    pub kappa_max: u32,
    pub kappa_rel_tol: f64,
    pub damping: bool,
    pub subtract_o3: bool,
    pub extrapolate_tail: bool,
}

impl Default for VPConfig {
    fn default() -> Self {
        VPConfig {
            alpha: ALPHA,
            r_list: vec![0.05, 0.1, 0.2, 0.5],
            p_max_factor: 160.0,
            n_p: 1200,
            kappa_max: 200,
            kappa_rel_tol: 1e-8,
            damping: true,
            subtract_o3: false,
            extrapolate_tail: true,
        }
    }
}

impl VPConfig {
    /// Reduced grid that runs in seconds per radius.
    pub fn desk() -> Self {
        VPConfig {
            p_max_factor: 40.0,
            n_p: 400,
            kappa_max: 80,
            kappa_rel_tol: 1e-12,
            ..Self::default()
        }
    }

    /// Full-fidelity settings at r = 0.2.
    pub fn paper() -> Self {
        VPConfig {
            r_list: vec![0.2],
            kappa_rel_tol: 1e-12,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Config(m));
        if !(self.alpha >= 0.0 && self.alpha < 1.0) {
            return bad(format!("alpha = {} must lie in [0, 1)", self.alpha));
        }
        if self.r_list.is_empty() || self.r_list.iter().any(|r| !(*r > 0.0) || !r.is_finite()) {
            return bad("r_list must be a non-empty list of positive radii".into());
        }
        if !(self.p_max_factor > 0.0) {
            return bad(format!("p_max_factor = {} must be positive", self.p_max_factor));
        }
        if self.kappa_max < 1 {
            return bad("kappa_max must be at least 1".into());
        }
        if !(self.kappa_rel_tol > 0.0) {
            return bad("kappa_rel_tol must be positive".into());
        }
        Ok(())
    }

    /// Radii outside `R_RANGE`, which run but deserve a warning.
    pub fn warnings(&self) -> Vec<String> {
        self.r_list
            .iter()
            .filter(|&&r| r < R_RANGE.0 || r > R_RANGE.1)
            .map(|r| format!("r = {r} lies outside [{}, {}]", R_RANGE.0, R_RANGE.1))
            .collect()
    }
}

/// κ-summed integrand on the momentum grid for one radius.
#[derive(Debug, Clone, PartialEq)]
pub struct IntegrandTable {
    pub r: f64,
    pub alpha: f64,
    pub p_grid: Vec<f64>,
    /// σW(p; r), reduced units
    pub w_raw: Vec<f64>,
    /// w_raw - (8α/π) r p
    pub w_sub: Vec<f64>,
    /// ∫₀^p w_sub
    pub integral_fn: Vec<f64>,
    pub kappa_used: Vec<u32>,
    pub kappa_converged: Vec<bool>,
    pub last_block: Vec<f64>,
    pub damping_applied: bool,
    /// reduced confinement / electrostatic force sums, when requested
    pub f_conf: Option<Vec<f64>>,
    pub f_elec: Option<Vec<f64>>,
    grid: PGrid,
}

impl IntegrandTable {
    pub fn window(&self) -> TailWindow {
        TailWindow {
            uniform_start: self.grid.uniform_start,
            shift: if self.damping_applied { self.grid.steps_per_half_period } else { 0 },
        }
    }

    pub fn grid(&self) -> &PGrid {
        &self.grid
    }
}

/// Momentum counter-term slope (8α/π) r.
pub fn momentum_counterterm_slope(r: f64, alpha: f64) -> f64 {
    8.0 * alpha / PI * r
}

/// ∫₀^p of the samples, with the integrand taken as 0 at p = 0.
pub fn integrate_reduced(p: &[f64], w: &[f64]) -> Result<Vec<f64>> {
    let mut x = Vec::with_capacity(p.len() + 1);
    let mut y = Vec::with_capacity(p.len() + 1);
    x.push(0.0);
    y.push(0.0);
    x.extend_from_slice(p);
    y.extend_from_slice(w);
    let mut c = integrate_samples(&x, &y)?;
    c.remove(0);
    Ok(c)
}

pub fn build_integrand_table(r: f64, cfg: &VPConfig, forces: bool) -> Result<IntegrandTable> {
    cfg.validate()?;
    let mut grid = build_p_grid(r, cfg.p_max_factor, cfg.n_p)?;
    if grid.steps_per_half_period % 2 == 1 {
        // even shifts allow the half-density grid used for the error proxy
        grid = even_grid(r, cfg)?;
    }
    let samples: Vec<_> = grid
        .p
        .par_iter()
        .map(|&p| combined_sample(p, r, cfg.alpha, cfg.kappa_max, cfg.kappa_rel_tol, forces))
        .collect::<Result<Vec<_>>>()?;
    let slope = momentum_counterterm_slope(r, cfg.alpha);
    let w_raw: Vec<f64> = samples.iter().map(|s| SIGMA * s.w).collect();
    let w_sub: Vec<f64> = w_raw.iter().zip(&grid.p).map(|(w, p)| w - slope * p).collect();
    let integral_fn = integrate_reduced(&grid.p, &w_sub)?;
    Ok(IntegrandTable {
        r,
        alpha: cfg.alpha,
        w_raw,
        w_sub,
        integral_fn,
        kappa_used: samples.iter().map(|s| s.info.kappa_used).collect(),
        kappa_converged: samples.iter().map(|s| s.info.converged).collect(),
        last_block: samples.iter().map(|s| s.info.last_block).collect(),
        damping_applied: cfg.damping,
        f_conf: forces.then(|| samples.iter().map(|s| s.f_conf).collect()),
        f_elec: forces.then(|| samples.iter().map(|s| s.f_elec).collect()),
        p_grid: grid.p.clone(),
        grid,
    })
}

/// Smallest grid with at least `n_p` points and an even number of steps
/// per half-period.
fn even_grid(r: f64, cfg: &VPConfig) -> Result<PGrid> {
    let mut n = cfg.n_p;
    loop {
        let g = build_p_grid(r, cfg.p_max_factor, n)?;
        if g.steps_per_half_period % 2 == 0 && g.p.len() >= cfg.n_p {
            return Ok(g);
        }
        n += 1;
    }
}

/// Real-space counter-terms: V = V_int - (2α/π) r, and optionally the two
/// O(α³) pieces (4/3π) α³/r and -(3π/2) α³ r².
pub fn subtract_counterterms(v_integrated: f64, r: f64, alpha: f64, subtract_o3: bool) -> f64 {
    let mut v = v_integrated - 2.0 * alpha / PI * r;
    if subtract_o3 {
        let a3 = alpha.powi(3);
        v -= 4.0 / (3.0 * PI) * a3 / r;
        v -= -1.5 * PI * a3 * r * r;
    }
    v
}

/// Renormalised, integrated and extrapolated value of one summed series.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesReduction {
    pub value: f64,
    pub tail: Option<TailFit>,
}

/// Reduce a series `raw` whose momentum and real-space counter-terms are
/// `scale` times those of the density.
fn reduce_series(
    table: &IntegrandTable,
    raw: &[f64],
    scale: f64,
    cfg: &VPConfig,
    reference: Option<&TailFit>,
) -> Result<SeriesReduction> {
    let r = table.r;
    let slope = scale * momentum_counterterm_slope(r, cfg.alpha);
    let sub: Vec<f64> = raw.iter().zip(&table.p_grid).map(|(w, p)| w - slope * p).collect();
    let integral = integrate_reduced(&table.p_grid, &sub)?;
    reduce_integral(table, &table.p_grid, &integral, table.window(), scale, cfg, reference)
}

fn reduce_integral(
    table: &IntegrandTable,
    p: &[f64],
    integral: &[f64],
    win: TailWindow,
    scale: f64,
    cfg: &VPConfig,
    reference: Option<&TailFit>,
) -> Result<SeriesReduction> {
    let (limit, tail) = if cfg.extrapolate_tail {
        let t = match reference {
            Some(reference) => tail_limit_like(p, integral, win, reference)?,
            None => tail_limit(p, integral, win)?,
        };
        (t.limit, Some(t))
    } else {
        let n = integral.len();
        let m = win.shift;
        let last = if m > 0 {
            0.25 * integral[n - 1 - 2 * m] + 0.5 * integral[n - 1 - m] + 0.25 * integral[n - 1]
        } else {
            integral[n - 1]
        };
        (last, None)
    };
    let ct = subtract_counterterms(0.0, table.r, cfg.alpha, cfg.subtract_o3);
    Ok(SeriesReduction {
        value: limit + scale * ct,
        tail,
    })
}

/// One row of the sea-sum comparison.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VPResultRow {
    pub r: f64,
    /// 4πr²ρ/e from the sea sum
    pub v_sum: f64,
    pub v_uehling: f64,
    /// ρ/e from the sea sum
    pub rho_sum: f64,
    pub rel_diff: f64,
    pub err_est: f64,
    pub kappa_max_used: u32,
    pub p_max: f64,
    pub n_p: usize,
    pub runtime_s: f64,
    /// "ok" or the reason the row failed
    pub status: String,
    #[serde(skip)]
    pub diagnostics: RowDiagnostics,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct RowDiagnostics {
    pub err_kappa: f64,
    pub err_grid: f64,
    pub err_tail: f64,
    pub tail_pairs: usize,
    pub tail_fallback: bool,
    pub tail_a: f64,
    pub kappa_unconverged: usize,
    pub warnings: Vec<String>,
}

/// Reduce a table to (v_sum, error budget).
pub fn reduce_table(table: &IntegrandTable, cfg: &VPConfig) -> Result<(f64, RowDiagnostics)> {
    let main = reduce_integral(table, &table.p_grid, &table.integral_fn, table.window(), 1.0, cfg, None)?;
    // the same reduction on every second grid point
    let idx: Vec<usize> = (0..table.p_grid.len()).rev().step_by(2).rev().collect();
    let p2: Vec<f64> = idx.iter().map(|&i| table.p_grid[i]).collect();
    let w2: Vec<f64> = idx.iter().map(|&i| table.w_sub[i]).collect();
    let i2 = integrate_reduced(&p2, &w2)?;
    let win = table.window();
    let u2 = idx.iter().position(|&i| i >= win.uniform_start).unwrap_or(0);
    let coarse = reduce_integral(
        table,
        &p2,
        &i2,
        TailWindow {
            uniform_start: u2,
            shift: win.shift / 2,
        },
        1.0,
        cfg,
        None,
    )?;
    let err_grid = (main.value - coarse.value).abs();
    // κ truncation: the last block at each p bounds the remainder
    let lb: Vec<f64> = table.last_block.clone();
    let err_kappa = integrate_reduced(&table.p_grid, &lb)?.last().copied().unwrap_or(0.0);
    let (err_tail, pairs, fallback, a) = match &main.tail {
        Some(t) => (t.err, t.pairs, t.fallback, t.a),
        None => (0.0, 0, false, 0.0),
    };
    let diag = RowDiagnostics {
        err_kappa,
        err_grid,
        err_tail,
        tail_pairs: pairs,
        tail_fallback: fallback,
        tail_a: a,
        kappa_unconverged: table.kappa_converged.iter().filter(|c| !**c).count(),
        warnings: Vec::new(),
    };
    Ok((main.value, diag))
}

fn failed_row(r: f64, cfg: &VPConfig, err: &Error, runtime_s: f64) -> VPResultRow {
    VPResultRow {
        r,
        v_sum: f64::NAN,
        v_uehling: f64::NAN,
        rho_sum: f64::NAN,
        rel_diff: f64::NAN,
        err_est: f64::NAN,
        kappa_max_used: 0,
        p_max: cfg.p_max_factor / r,
        n_p: cfg.n_p,
        runtime_s,
        status: format!("error: {err}"),
        diagnostics: RowDiagnostics::default(),
    }
}

/// Sea sum at one radius compared with the Uehling density.
pub fn run_row(r: f64, cfg: &VPConfig) -> VPResultRow {
    let t0 = Instant::now();
    let attempt = || -> Result<VPResultRow> {
        let table = build_integrand_table(r, cfg, false)?;
        let (v_sum, mut diag) = reduce_table(&table, cfg)?;
        if r < R_RANGE.0 || r > R_RANGE.1 {
            diag.warnings.push(format!("r = {r} lies outside [{}, {}]", R_RANGE.0, R_RANGE.1));
        }
        let ue = uehling_density(r, cfg.alpha)?;
        let rel_diff = if ue.v_reduced != 0.0 {
            (v_sum - ue.v_reduced) / ue.v_reduced.abs()
        } else {
            0.0
        };
        let err_est = (diag.err_kappa.powi(2) + diag.err_grid.powi(2) + diag.err_tail.powi(2)).sqrt();
        Ok(VPResultRow {
            r,
            v_sum,
            v_uehling: ue.v_reduced,
            rho_sum: v_sum / (4.0 * PI * r * r),
            rel_diff,
            err_est,
            kappa_max_used: table.kappa_used.iter().copied().max().unwrap_or(0),
            p_max: table.grid.p_max(),
            n_p: table.p_grid.len(),
            runtime_s: 0.0,
            status: "ok".into(),
            diagnostics: diag,
        })
    };
    match attempt() {
        Ok(mut row) => {
            row.runtime_s = t0.elapsed().as_secs_f64();
            row
        }
        Err(e) => failed_row(r, cfg, &e, t0.elapsed().as_secs_f64()),
    }
}

/// Sea sum for every radius of the configuration, in order.
pub fn run_vp(cfg: &VPConfig) -> Result<Vec<VPResultRow>> {
    cfg.validate()?;
    Ok(cfg.r_list.iter().map(|&r| run_row(r, cfg)).collect())
}

/// Summed confinement and electrostatic force densities at one radius
/// (units e² λ_C⁻⁴ with e² = α).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ForceSumRow {
    pub r: f64,
    pub f_conf: f64,
    pub f_elec: f64,
    pub residual: f64,
    pub rel_residual: f64,
    /// α v_sum / (4π r⁴), the field of the point charge acting on ρ_sum
    pub f_elec_from_density: f64,
    pub v_sum: f64,
}

pub fn force_sum_row(r: f64, cfg: &VPConfig) -> Result<ForceSumRow> {
    let table = build_integrand_table(r, cfg, true)?;
    let density = reduce_series(&table, &table.w_raw, 1.0, cfg, None)?;
    let reference = density.tail.as_ref();
    // per mode, 4πr² f_elec = -(α/r²) w; the combined sum carries no σ
    let scale = -SIGMA * cfg.alpha / (r * r);
    let elec = reduce_series(&table, table.f_elec.as_ref().unwrap(), scale, cfg, reference)?;
    let conf = reduce_series(&table, table.f_conf.as_ref().unwrap(), -scale, cfg, reference)?;
    let to_phys = 1.0 / (4.0 * PI * r * r);
    let (f_conf, f_elec) = (conf.value * to_phys, elec.value * to_phys);
    let residual = f_conf + f_elec;
    let denom = f_conf.abs().max(f_elec.abs());
    Ok(ForceSumRow {
        r,
        f_conf,
        f_elec,
        residual,
        rel_residual: if denom > 0.0 { residual.abs() / denom } else { 0.0 },
        f_elec_from_density: cfg.alpha * density.value / (4.0 * PI * r.powi(4)),
        v_sum: density.value,
    })
}

/// Force-density sums for every radius of the configuration.
pub fn force_density_sums(cfg: &VPConfig) -> Result<Vec<ForceSumRow>> {
    cfg.validate()?;
    cfg.r_list.iter().map(|&r| force_sum_row(r, cfg)).collect()
}
