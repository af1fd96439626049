//! Acceptance checks, one function per criterion.
//!
//! `tolerance_scale` multiplies every tolerance; values below 1 tighten the
//! checks (a scale of 1e-6 makes the suite fail on purpose).

use std::f64::consts::PI;
use std::time::Instant;

use crate::dirac::EnergySign::{Negative, Positive};
use crate::dirac::{
    bound_radial, bound_radial_ode, continuum_radial_closed, continuum_radial_ode, free_radial, DiracState,
};
use crate::figures::{o3_shift, tail_oscillation};
use crate::forces::{balance_residual, confinement_force, shell_stress};
use crate::report::vpsum_table;
use crate::seasum::{
    build_integrand_table, combined_integrand, damp_by_steps, force_density_sums, run_row, run_vp, VPConfig,
};
use crate::uehling::{uehling_asymptotic, uehling_density, uehling_oracle, Regime};
use crate::{Error, Result, ALPHA};

/// Criteria that cannot pass as stated; see the README.
pub const KNOWN_RED: [u32; 1] = [8];

/// Criteria run by default (paper scale is opt-in).
pub const DESK_CRITERIA: [u32; 9] = [1, 2, 3, 4, 5, 6, 7, 9, 10];

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub id: u32,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl Outcome {
    pub fn line(&self) -> String {
        format!(
            "criterion {:>2}  {}  {:<44} {}  ({:.1} s)",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.detail,
            self.seconds
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Options {
    pub tolerance_scale: f64,
}

impl Default for Options {
    fn default() -> Self {
        Options { tolerance_scale: 1.0 }
    }
}

pub const TITLES: [&str; 10] = [
    "shell force balance over the state matrix",
    "hydrogen 1s balance",
    "Uehling density against its oracle",
    "ODE against closed-form wavefunctions",
    "alpha = 0 null test",
    "damping operator",
    "desk-scale sea summation",
    "paper-scale spot check at r = 0.2",
    "summed force-density balance",
    "determinism across worker counts",
];

fn log_grid(n: usize, lo: f64, hi: f64) -> Vec<f64> {
    (0..n)
        .map(|i| lo * (hi / lo).powf(i as f64 / (n - 1) as f64))
        .collect()
}

fn bound_matrix(alpha: f64) -> Vec<DiracState> {
    let mut states = Vec::new();
    for n in 1..=3u32 {
        for k in [-2, -1, 1, 2] {
            if let Ok(s) = DiracState::bound(n, k, alpha) {
                states.push(s);
            }
        }
    }
    states
}

type Check = Result<(bool, String)>;

fn c1(o: &Options) -> Check {
    let tol = 1e-9 * o.tolerance_scale;
    let mut states = bound_matrix(ALPHA);
    for p in [0.25, 0.5, 1.0, 2.0, 4.0] {
        for k in [-3, -2, -1, 1, 2, 3] {
            for sign in [Positive, Negative] {
                states.push(DiracState::continuum(p, k, sign, ALPHA)?);
            }
        }
    }
    let mut worst: f64 = 0.0;
    let rs = log_grid(20, 0.01, 4.0);
    for s in &states {
        for &r in &rs {
            worst = worst.max(balance_residual(s, r)?.rel_residual);
        }
    }
    Ok((worst <= tol, format!("{} states x 20 radii, max rel residual {worst:.2e}", states.len())))
}

fn c2(o: &Options) -> Check {
    let tol = 1e-12 * o.tolerance_scale;
    let a = ALPHA;
    let s = DiracState::bound(1, -1, a)?;
    let gamma = (1.0 - a * a).sqrt();
    let c = a / (1.0 + gamma);
    let identity = (2.0 * c - a * (1.0 + c * c)).abs() / c;
    let mut worst_abs: f64 = 0.0;
    let mut worst_ratio: f64 = 0.0;
    let mut worst_stress: f64 = 0.0;
    for bohr in [0.5, 1.0, 2.0] {
        let r = bohr / a;
        let v = s.radial(r)?;
        worst_ratio = worst_ratio.max((v.f / v.g + c).abs() / c);
        worst_abs = worst_abs.max(balance_residual(&s, r)?.residual.abs());
        let fc = confinement_force(&s, r)?;
        let want = 2.0 / (4.0 * PI) * 2.0 * c * v.g * v.g / (r * r);
        worst_abs = worst_abs.max((fc - want).abs());
        worst_stress = worst_stress.max(shell_stress(&s, r)?.t_rr.abs() / (v.g * v.g));
    }
    let ok = identity <= tol && worst_ratio <= tol && worst_abs <= tol && worst_stress <= tol;
    Ok((
        ok,
        format!("identity {identity:.1e}, f/g {worst_ratio:.1e}, |residual| {worst_abs:.1e}"),
    ))
}

fn c3(o: &Options) -> Check {
    let tol = 1e-9 * o.tolerance_scale;
    let mut worst: f64 = 0.0;
    for r in log_grid(50, 0.01, 4.0) {
        let a = uehling_density(r, ALPHA)?.rho;
        let b = uehling_oracle(r, ALPHA)?;
        worst = worst.max((a - b).abs() / b.abs());
    }
    let small = |r: f64| -> Result<f64> {
        Ok(uehling_density(r, ALPHA)?.rho / uehling_asymptotic(r, ALPHA, Regime::Small)? - 1.0)
    };
    let large = |r: f64| -> Result<f64> {
        Ok(uehling_density(r, ALPHA)?.rho / uehling_asymptotic(r, ALPHA, Regime::Large)? - 1.0)
    };
    let s: Vec<f64> = [1e-2, 1e-3, 1e-4, 1e-5].iter().map(|&r| small(r)).collect::<Result<_>>()?;
    let l: Vec<f64> = [5.0, 10.0, 20.0, 40.0].iter().map(|&r| large(r)).collect::<Result<_>>()?;
    let trend = |v: &[f64]| v.windows(2).all(|w| w[1].abs() < w[0].abs());
    let ok = worst <= tol && trend(&s) && trend(&l) && s[3].abs() < 0.01 && l[3].abs() < 0.05;
    Ok((
        ok,
        format!(
            "max rel {worst:.1e}; asymptote ratios - 1: small {:.1e}, large {:.1e}",
            s[3], l[3]
        ),
    ))
}

fn rel_pair(a: (f64, f64), b: (f64, f64)) -> f64 {
    ((a.0 - b.0).abs() + (a.1 - b.1).abs()) / (b.0.abs() + b.1.abs())
}

fn c4(o: &Options) -> Check {
    let tol = 1e-8 * o.tolerance_scale;
    let mut bound: f64 = 0.0;
    let rs = log_grid(20, 0.01, 10.0);
    for s in bound_matrix(ALPHA) {
        for (r, v) in rs.iter().zip(bound_radial_ode(&s, &rs)?) {
            let c = bound_radial(&s, *r)?;
            bound = bound.max(rel_pair((v.g, v.f), (c.g, c.f)));
        }
    }
    let mut cont: f64 = 0.0;
    for p in [0.25, 1.0, 4.0] {
        for k in [-3, -2, -1, 1, 2, 3] {
            for sign in [Positive, Negative] {
                let s = DiracState::continuum(p, k, sign, ALPHA)?;
                let rs: Vec<f64> = log_grid(10, 0.05, 30.0).iter().map(|x| x / (2.0 * p)).collect();
                for (r, v) in rs.iter().zip(continuum_radial_ode(&s, &rs)?) {
                    let c = continuum_radial_closed(&s, *r)?;
                    cont = cont.max(rel_pair((v.g, v.f), (c.g, c.f)));
                }
            }
        }
    }
    let mut free: f64 = 0.0;
    for p in [0.5, 2.0] {
        for k in [-2, -1, 1, 2] {
            for sign in [Positive, Negative] {
                let weak = DiracState::continuum(p, k, sign, 1e-8)?;
                let exact = DiracState::free(p, k, sign)?;
                let rs: Vec<f64> = log_grid(10, 0.05, 30.0).iter().map(|x| x / p).collect();
                for (r, v) in rs.iter().zip(continuum_radial_ode(&weak, &rs)?) {
                    let c = free_radial(&exact, *r)?;
                    free = free.max(rel_pair((v.g, v.f), (c.g, c.f)));
                }
            }
        }
    }
    let ok = bound <= tol && cont <= tol && free <= 1e-6 * o.tolerance_scale;
    Ok((ok, format!("bound {bound:.1e}, continuum {cont:.1e}, free limit {free:.1e}")))
}

fn c5(o: &Options) -> Check {
    let tol = 1e-10 * o.tolerance_scale;
    let mut cfg = VPConfig::desk();
    cfg.alpha = 0.0;
    let r = 0.2;
    let table = build_integrand_table(r, &cfg, false)?;
    let mut worst = table.w_raw.iter().fold(0.0f64, |a, w| a.max(w.abs()));
    for &p in table.p_grid.iter().step_by(37) {
        worst = worst.max(combined_integrand(p, r, 0.0, cfg.kappa_max, cfg.kappa_rel_tol)?.0.abs());
    }
    let row = run_row(r, &cfg);
    if row.status != "ok" {
        return Err(Error::Numerical(row.status));
    }
    let ok = worst <= tol && row.v_sum.abs() <= tol;
    Ok((
        ok,
        format!("max |W| {worst:.1e} over {} points, |v_sum| {:.1e}", table.p_grid.len(), row.v_sum.abs()),
    ))
}

fn c6(o: &Options) -> Check {
    let eps = 1e-13 * o.tolerance_scale;
    let m = 12;
    let n = 400;
    let h = PI / (2.0 * m as f64);
    let sine: Vec<f64> = (0..n).map(|i| (2.0 * (i as f64 * h) + 0.3).sin()).collect();
    let affine: Vec<f64> = (0..n).map(|i| 3.0 - 0.7 * i as f64 * h).collect();
    let ds = damp_by_steps(&sine, m)?;
    let da = damp_by_steps(&affine, m)?;
    let mut sine_left: f64 = 0.0;
    let mut affine_err: f64 = 0.0;
    for (i, x) in affine.iter().enumerate().filter(|&(i, _)| !ds.shrunk[i]) {
        sine_left = sine_left.max(ds.values[i].abs());
        affine_err = affine_err.max((da.values[i] - x).abs() / x.abs().max(1.0));
    }
    let mut cfg = VPConfig::paper();
    cfg.r_list = vec![0.5];
    let osc = tail_oscillation(&build_integrand_table(0.5, &cfg, false)?)?;
    let ratio = osc.reduction();
    let ok = sine_left <= eps && affine_err <= eps && ratio > 1e3 / o.tolerance_scale;
    Ok((
        ok,
        format!("sine left {sine_left:.1e}, affine {affine_err:.1e}, tail reduction {ratio:.2e} at r = 0.5"),
    ))
}

/// Size of the O(α³) terms left in V when they are not subtracted.
pub fn o3_envelope(r: f64, alpha: f64) -> f64 {
    let a3 = alpha.powi(3);
    4.0 / (3.0 * PI) * a3 / r + 1.5 * PI * a3 * r * r
}

fn c7(o: &Options) -> Check {
    let tol = 1e-3 * o.tolerance_scale;
    let cfg = VPConfig::desk();
    let rows = run_vp(&cfg)?;
    let mut ok = true;
    let mut worst: f64 = 0.0;
    let mut uncovered = Vec::new();
    for row in &rows {
        if row.status != "ok" {
            return Err(Error::Numerical(row.status.clone()));
        }
        worst = worst.max(row.rel_diff.abs());
        ok &= row.rel_diff.abs() <= tol;
        let gap = (row.v_sum - row.v_uehling).abs();
        if gap > (row.err_est + o3_envelope(row.r, cfg.alpha)) * o.tolerance_scale {
            ok = false;
            uncovered.push(row.r);
        }
    }
    let detail = if uncovered.is_empty() {
        format!("max |rel_diff| {worst:.2e}, residuals covered")
    } else {
        format!("max |rel_diff| {worst:.2e}, uncovered at r = {uncovered:?}")
    };
    Ok((ok, detail))
}

fn c8(o: &Options) -> Check {
    let cfg = VPConfig::paper();
    let row = run_row(0.2, &cfg);
    if row.status != "ok" {
        return Err(Error::Numerical(row.status));
    }
    let with_o3 = (row.v_sum + o3_shift(0.2, cfg.alpha) - row.v_uehling) / row.v_uehling.abs();
    let ok = row.rel_diff.abs() <= 3e-5 * o.tolerance_scale && with_o3.abs() <= 1e-5 * o.tolerance_scale;
    Ok((
        ok,
        format!(
            "rel_diff {:.2e} (limit 3e-5), with O(alpha^3) terms {with_o3:.2e} (limit 1e-5)",
            row.rel_diff
        ),
    ))
}

fn c9(o: &Options) -> Check {
    let tol = 1e-9 * o.tolerance_scale;
    let rows = force_density_sums(&VPConfig::desk())?;
    let worst = rows.iter().fold(0.0f64, |a, row| a.max(row.rel_residual));
    Ok((worst <= tol, format!("{} radii, max rel residual {worst:.2e}", rows.len())))
}

/// vpsum CSV bytes for `cfg` computed on `workers` threads.
pub fn vpsum_csv_with_workers(cfg: &VPConfig, workers: usize) -> Result<Vec<u8>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Config(e.to_string()))?;
    let rows = pool.install(|| run_vp(cfg))?;
    vpsum_table(&rows, false).to_csv_bytes()
}

fn c10(_: &Options) -> Check {
    let mut cfg = VPConfig::desk();
    cfg.r_list = vec![0.1, 0.5];
    let a = vpsum_csv_with_workers(&cfg, 1)?;
    let b = vpsum_csv_with_workers(&cfg, 4)?;
    Ok((a == b, format!("{} bytes, 1 vs 4 workers {}", a.len(), if a == b { "identical" } else { "differ" })))
}

pub fn run_criterion(id: u32, opts: &Options) -> Outcome {
    let t0 = Instant::now();
    let res = match id {
        1 => c1(opts),
        2 => c2(opts),
        3 => c3(opts),
        4 => c4(opts),
        5 => c5(opts),
        6 => c6(opts),
        7 => c7(opts),
        8 => c8(opts),
        9 => c9(opts),
        10 => c10(opts),
        _ => Err(Error::Config(format!("no criterion {id}"))),
    };
    let (passed, detail) = res.unwrap_or_else(|e| (false, format!("error: {e}")));
    Outcome {
        id,
        title: TITLES.get(id.wrapping_sub(1) as usize).copied().unwrap_or("unknown"),
        passed,
        detail,
        seconds: t0.elapsed().as_secs_f64(),
    }
}

pub fn run(ids: &[u32], opts: &Options) -> Vec<Outcome> {
    ids.iter().map(|&id| run_criterion(id, opts)).collect()
}
