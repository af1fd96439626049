//! Whittaker closed form of the Coulomb continuum and its normalisation.

use std::f64::consts::{FRAC_PI_2, PI};

use super::{DiracState, Energy, RadialValues, StateKind};
use crate::specfun::{ln_gamma, ln_gamma_complex, whittaker_m, Complex};
use crate::{Error, Result};

/// Largest 2pr at which the closed form is evaluated.
pub const CLOSED_FORM_MAX_2PR: f64 = 30.0;

/// S = √((-κ + iα/p)(γ + iδ)) on the principal branch.
fn s_factor(kappa: f64, gamma: f64, alpha: f64, p: f64, delta: f64) -> Complex {
    (Complex::new(-kappa, alpha / p) * Complex::new(gamma, delta)).sqrt()
}

/// ln A with A = √(2/π) |Γ(γ+iδ)| / Γ(1+2γ) · e^{πδ/2}.
fn ln_amplitude(gamma: f64, delta: f64) -> Result<f64> {
    Ok(0.5 * (2.0 / PI).ln() + ln_gamma_complex(Complex::new(gamma, delta))?.re - ln_gamma(1.0 + 2.0 * gamma)?
        + FRAC_PI_2 * delta)
}

/// Leading small-r coefficient of the regular solution: G = rg ~ c r^γ for
/// κ < 0, F = rf ~ c r^γ for κ > 0. Returned as (ln|c|, sign c).
///
/// The sign follows the free-wave convention (positive G for κ < 0, F of
/// sign -sign(E) for κ > 0), which keeps the solution continuous in α at 0.
pub(crate) fn leading_coefficient(kappa: i32, gamma: f64, en: Energy, p: f64, alpha: f64) -> Result<(f64, f64)> {
    let delta = alpha * en.e / p;
    let s = s_factor(kappa as f64, gamma, alpha, p, delta);
    let base = ln_amplitude(gamma, delta)? + gamma * (2.0 * p).ln();
    if kappa < 0 {
        Ok((base + 0.5 * (en.ep1 / (2.0 * en.e)).ln() + s.re.abs().ln(), 1.0))
    } else {
        Ok((base + 0.5 * (en.em1 / (2.0 * en.e)).ln() + s.im.abs().ln(), -en.e.signum()))
    }
}

/// Continuum state from the Whittaker closed form,
///
/// ```text
/// r·g = +A √((E+1)/2E) (2pr)^γ Re F
/// r·f = -A √((E-1)/2E) (2pr)^γ Im F · sign(E)
/// F   = S (i2pr)^{-γ-½} M_{-(½+iδ),γ}(i2pr) = S e^{-ipr} ₁F₁(γ+1+iδ; 2γ+1; i2pr)
/// ```
///
/// with the overall sign fixed to the free-wave convention. Only valid for
/// 2pr ≤ [`CLOSED_FORM_MAX_2PR`]; use [`super::continuum_radial_ode`] beyond.
pub fn continuum_radial_closed(state: &DiracState, r: f64) -> Result<RadialValues> {
    let StateKind::Continuum { p, .. } = state.kind() else {
        return Err(Error::domain("continuum_radial_closed needs a continuum state"));
    };
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::domain(format!("continuum_radial_closed: r = {r} must be positive")));
    }
    if 2.0 * p * r > CLOSED_FORM_MAX_2PR {
        return Err(Error::Precision {
            context: format!("closed-form continuum at 2pr = {}; use continuum_radial_ode", 2.0 * p * r),
            achieved: f64::NAN,
            budget: 1e-10,
        });
    }
    let (kappa, alpha) = (state.kappa(), state.alpha());
    let en = state.energy_parts();
    let gamma = state.qn().gamma(alpha)?;
    let delta = alpha * en.e / p;
    let s = s_factor(kappa as f64, gamma, alpha, p, delta);
    let z = Complex::new(0.0, 2.0 * p * r);
    let lambda = Complex::new(-0.5, -delta);
    let m = whittaker_m(lambda, gamma, z)?;
    // F = S e^{-ipr} ₁F₁ ; M = e^{-z/2} z^{γ+½} ₁F₁ with e^{-z/2} = e^{-ipr}
    let big_f = s * m.value * (-(gamma + 0.5) * z.ln()).exp();
    let phase = if kappa < 0 { s.re.signum() } else { s.im.signum() };
    let ln_pref = ln_amplitude(gamma, delta)? + gamma * (2.0 * p * r).ln();
    let pref = ln_pref.exp() * phase;
    let rg = pref * (en.ep1 / (2.0 * en.e)).sqrt() * big_f.re;
    let rf = -pref * (en.em1 / (2.0 * en.e)).sqrt() * big_f.im * en.e.signum();
    Ok(state.derivatives(r, rg / r, rf / r))
}

/// Damped mean of r²(f² + g²) over pr ∈ [pr_lo, pr_hi]. Tends to 1/π.
///
/// Each sample is replaced by ¼Q(r-h) + ½Q(r) + ¼Q(r+h) with h = π/(2p),
/// which removes the cos 2pr oscillation, and the damped samples are
/// averaged.
pub fn damped_window_mean(state: &DiracState, pr_lo: f64, pr_hi: f64) -> Result<f64> {
    let p = match state.kind() {
        StateKind::Continuum { p, .. } | StateKind::Free { p, .. } => p,
        StateKind::Bound { .. } => return Err(Error::domain("damped_window_mean needs a scattering state")),
    };
    if !(pr_hi > pr_lo && pr_lo > 0.0) {
        return Err(Error::domain(format!("bad window [{pr_lo}, {pr_hi}]")));
    }
    let h = FRAC_PI_2 / p;
    let sub = 16usize;
    let dr = h / sub as f64;
    let r_lo = pr_lo / p - h;
    let n = (((pr_hi - pr_lo) / p + 2.0 * h) / dr).ceil() as usize + 1;
    let targets: Vec<f64> = (0..n).map(|i| r_lo + dr * i as f64).collect();
    let values = super::continuum_radial_ode(state, &targets)?;
    let q: Vec<f64> = targets
        .iter()
        .zip(&values)
        .map(|(r, v)| r * r * (v.g * v.g + v.f * v.f))
        .collect();
    let mut acc = 0.0;
    let mut count = 0usize;
    for i in sub..n - sub {
        if targets[i] > pr_hi / p {
            break;
        }
        acc += 0.25 * q[i - sub] + 0.5 * q[i] + 0.25 * q[i + sub];
        count += 1;
    }
    if count == 0 {
        return Err(Error::numerical("empty normalisation window"));
    }
    let mean = acc / count as f64;
    if !mean.is_finite() {
        return Err(Error::numerical(format!("normalisation window mean = {mean}")));
    }
    Ok(mean)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirac::EnergySign::{Negative, Positive};

    // mpmath, 40 digits, straight from the printed Whittaker form
    // (columns: p, κ, sign E, α, r, r·g, r·f) with the sign convention above
    const ORACLE: &[(f64, i32, f64, f64, f64, f64, f64)] = &include!("continuum_oracle.in");

    #[test]
    fn matches_independent_oracle() {
        for &(p, kappa, se, alpha, r, rg, rf) in ORACLE {
            let sign = if se > 0.0 { Positive } else { Negative };
            let s = DiracState::continuum(p, kappa, sign, alpha).unwrap();
            let v = continuum_radial_closed(&s, r).unwrap();
            let scale = rg.abs() + rf.abs();
            assert!((v.g * r - rg).abs() < 1e-10 * scale, "g p={p} κ={kappa} r={r}: {} vs {rg}", v.g * r);
            assert!((v.f * r - rf).abs() < 1e-10 * scale, "f p={p} κ={kappa} r={r}: {} vs {rf}", v.f * r);
        }
    }

    #[test]
    fn out_of_window_is_a_precision_error() {
        let s = DiracState::continuum(2.0, -1, Positive, 0.1).unwrap();
        assert!(matches!(continuum_radial_closed(&s, 8.0), Err(Error::Precision { .. })));
    }

    #[test]
    fn small_alpha_approaches_free_wave() {
        for kappa in [-3, -1, 1, 2] {
            for sign in [Positive, Negative] {
                let c = DiracState::continuum(0.9, kappa, sign, 1e-10).unwrap();
                let f = DiracState::free(0.9, kappa, sign).unwrap();
                for r in [0.2, 3.0, 15.0] {
                    let a = continuum_radial_closed(&c, r).unwrap();
                    let b = f.radial(r).unwrap();
                    let scale = b.g.abs() + b.f.abs();
                    assert!((a.g - b.g).abs() < 1e-8 * scale, "κ={kappa} r={r}");
                    assert!((a.f - b.f).abs() < 1e-8 * scale, "κ={kappa} r={r}");
                }
            }
        }
    }
}
