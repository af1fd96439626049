//! Per-mode densities and the κ-summed, charge-symmetric integrand.

use crate::dd::DD;
use crate::dirac::ode::ContinuumSolver;
use crate::dirac::EnergySign::{self, Negative, Positive};
use crate::forces::{confinement_from_values, electrostatic_from_values};
use crate::{Error, Result};

/// Filled-shell reduced density per unit p, w = 2|κ| r² (f² + g²).
pub fn mode_density(p: f64, kappa: i32, sign: EnergySign, r: f64, alpha: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::domain(format!("mode_density: r = {r} must be positive")));
    }
    let solver = ContinuumSolver::new(kappa, p, sign, alpha)?;
    let (g, f) = solver.values_at(&[r])?[0];
    Ok(2.0 * kappa.unsigned_abs() as f64 * r * r * (f * f + g * g))
}

/// The three per-mode quantities summed by the sea sum: reduced density
/// and the reduced confinement and electrostatic force densities
/// (each multiplied by 4πr²).
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub(crate) struct ModeTerms {
    pub density: f64,
    pub f_conf: f64,
    pub f_elec: f64,
}

pub(crate) fn mode_terms(p: f64, kappa: i32, sign: EnergySign, r: f64, alpha: f64, forces: bool) -> Result<ModeTerms> {
    let solver = ContinuumSolver::new(kappa, p, sign, alpha)?;
    let (g, f) = solver.values_at(&[r])?[0];
    let density = 2.0 * kappa.unsigned_abs() as f64 * r * r * (f * f + g * g);
    if !forces {
        return Ok(ModeTerms { density, ..Default::default() });
    }
    let four_pi_r2 = 4.0 * std::f64::consts::PI * r * r;
    Ok(ModeTerms {
        density,
        f_conf: four_pi_r2 * confinement_from_values(kappa, solver.energy(), alpha, r, g, f),
        f_elec: four_pi_r2 * electrostatic_from_values(kappa, alpha, r, g, f),
    })
}

/// κ-sum diagnostics at one p.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KappaSumInfo {
    /// largest |κ| included
    pub kappa_used: u32,
    /// magnitude of the last |κ| block
    pub last_block: f64,
    /// false when kappa_max was reached before the tolerance was met
    pub converged: bool,
}

/// W(p; r) and, optionally, the matching force-density sums.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct CombinedSample {
    pub w: f64,
    pub f_conf: f64,
    pub f_elec: f64,
    pub info: KappaSumInfo,
}

/// ½ Σ_{|κ|} [w(κ,-) + w(-κ,-) - w(κ,+) - w(-κ,+)] with the pairs that
/// cancel at α = 0 combined first.
pub(crate) fn combined_sample(
    p: f64,
    r: f64,
    alpha: f64,
    kappa_max: u32,
    kappa_rel_tol: f64,
    forces: bool,
) -> Result<CombinedSample> {
    if !(p > 0.0) || !p.is_finite() {
        return Err(Error::domain(format!("combined_integrand: p = {p} must be positive")));
    }
    let mut sum = [DD::ZERO; 3];
    let mut last_block = 0.0;
    let mut kappa_used = 0;
    let mut converged = false;
    let pr = p * r;
    for k in 1..=kappa_max as i32 {
        let a_m = mode_terms(p, k, Negative, r, alpha, forces)?;
        let b_p = mode_terms(p, -k, Positive, r, alpha, forces)?;
        let c_m = mode_terms(p, -k, Negative, r, alpha, forces)?;
        let d_p = mode_terms(p, k, Positive, r, alpha, forces)?;
        // charge conjugation pairs (κ,-) with (-κ,+)
        let pair = |get: fn(&ModeTerms) -> f64| {
            0.5 * ((get(&a_m) - get(&b_p)) + (get(&c_m) - get(&d_p)))
        };
        let block = [pair(|t| t.density), pair(|t| t.f_conf), pair(|t| t.f_elec)];
        for (s, b) in sum.iter_mut().zip(block) {
            *s = *s + b;
        }
        last_block = block[0].abs();
        kappa_used = k as u32;
        let partial = sum[0].to_f64().abs();
        if k as f64 > pr + 1.0 && last_block <= kappa_rel_tol * partial {
            converged = true;
            break;
        }
        if partial == 0.0 && last_block == 0.0 && k as f64 > pr + 1.0 {
            converged = true;
            break;
        }
    }
    Ok(CombinedSample {
        w: sum[0].to_f64(),
        f_conf: sum[1].to_f64(),
        f_elec: sum[2].to_f64(),
        info: KappaSumInfo {
            kappa_used,
            last_block,
            converged,
        },
    })
}

/// One |κ| block of W(p; r): ½[w(κ,-) - w(-κ,+) + w(-κ,-) - w(κ,+)].
pub fn kappa_block(p: f64, abs_kappa: u32, r: f64, alpha: f64) -> Result<f64> {
    let k = abs_kappa as i32;
    if k < 1 {
        return Err(Error::domain("kappa_block: |κ| must be at least 1"));
    }
    let w = |kappa, sign| mode_density(p, kappa, sign, r, alpha);
    Ok(0.5 * ((w(k, Negative)? - w(-k, Positive)?) + (w(-k, Negative)? - w(k, Positive)?)))
}

/// W(p; r) with its κ-sum diagnostics.
pub fn combined_integrand(
    p: f64,
    r: f64,
    alpha: f64,
    kappa_max: u32,
    kappa_rel_tol: f64,
) -> Result<(f64, KappaSumInfo)> {
    let s = combined_sample(p, r, alpha, kappa_max, kappa_rel_tol, false)?;
    Ok((s.w, s.info))
}
