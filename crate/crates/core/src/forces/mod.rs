//! Filled-shell stress tensor and force densities.
//!
//! For a filled m_j shell the stress tensor is diagonal and isotropic in the
//! angles, and its divergence (the confinement force density) balances the
//! electrostatic force density ρE^r of the same shell exactly, state by
//! state, without reference to the energy.

use std::f64::consts::PI;

use crate::dd::DD;
use crate::dirac::{DiracState, Energy};
use crate::{Error, Result};

/// Diagonal stress components summed over a filled shell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShellStress {
    pub t_rr: f64,
    pub t_thth: f64,
    pub t_phph: f64,
}

/// Radial force densities of a filled shell. Tangential components vanish.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShellForces {
    pub f_conf_r: f64,
    pub f_elec_r: f64,
    pub residual: f64,
    pub rel_residual: f64,
}

fn shell_weight(kappa: i32) -> f64 {
    2.0 * kappa.unsigned_abs() as f64 / (4.0 * PI)
}

fn check_r(r: f64) -> Result<()> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::domain(format!("force densities need r > 0, got {r}")));
    }
    Ok(())
}

pub fn shell_stress(state: &DiracState, r: f64) -> Result<ShellStress> {
    check_r(r)?;
    let v = state.radial(r)?;
    let c = shell_weight(state.kappa());
    let t_rr = -c * (v.f * v.gp - v.fp * v.g);
    let t_thth = -c * state.kappa() as f64 * v.f * v.g / r;
    Ok(ShellStress {
        t_rr,
        t_thth,
        t_phph: t_thth,
    })
}

/// Confinement force density from (g, f) at r, with g', f', g'', f'' taken
/// from the radial equation and everything carried in double-double.
pub fn confinement_from_values(kappa: i32, en: Energy, alpha: f64, r: f64, g: f64, f: f64) -> f64 {
    let k = kappa as f64;
    let (g, f, rd) = (DD::new(g), DD::new(f), DD::new(r));
    let a_r = DD::new(alpha) / rd;
    let upper = a_r + en.ep1;
    let lower = -(a_r + en.em1);
    let r2 = rd.sqr();
    let gp = -(g * (k + 1.0)) / rd + upper * f;
    let fp = f * (k - 1.0) / rd + lower * g;
    let gpp = g * (k + 1.0) / r2 - gp * (k + 1.0) / rd - f * alpha / r2 + upper * fp;
    let fpp = -(f * (k - 1.0)) / r2 + fp * (k - 1.0) / rd + g * alpha / r2 + lower * gp;
    let fg = f * g;
    let wr = f * gp - fp * g;
    let second = f * gpp - fpp * g;
    let bracket = fg * (2.0 * k) / r2 - wr * 2.0 / rd - second;
    (bracket * shell_weight(kappa)).to_f64()
}

/// Electrostatic force density -α (2|κ|/4π)(f² + g²)/r².
pub fn electrostatic_from_values(kappa: i32, alpha: f64, r: f64, g: f64, f: f64) -> f64 {
    -alpha * shell_weight(kappa) * (f * f + g * g) / (r * r)
}

/// Radial confinement force density Σ f_ψ^r of a filled shell.
pub fn confinement_force(state: &DiracState, r: f64) -> Result<f64> {
    check_r(r)?;
    let v = state.radial(r)?;
    Ok(confinement_from_values(
        state.kappa(),
        state.energy_parts(),
        state.alpha(),
        r,
        v.g,
        v.f,
    ))
}

/// Charge density ρ (units e = √α) and electrostatic force density of a
/// filled shell.
pub fn electrostatic_force(state: &DiracState, r: f64) -> Result<(f64, f64)> {
    check_r(r)?;
    let v = state.radial(r)?;
    let rho = -state.alpha().sqrt() * shell_weight(state.kappa()) * (v.f * v.f + v.g * v.g);
    Ok((rho, electrostatic_from_values(state.kappa(), state.alpha(), r, v.g, v.f)))
}

/// Relative residual |a + b| / max(|a|, |b|, floor).
pub fn relative_residual(f_conf: f64, f_elec: f64) -> (f64, f64) {
    let residual = f_conf + f_elec;
    let floor = 1e-300 * (1.0 + f_conf.abs());
    (residual, residual.abs() / f_conf.abs().max(f_elec.abs()).max(floor))
}

/// f_conf + f_elec for a filled shell; vanishes identically.
pub fn balance_residual(state: &DiracState, r: f64) -> Result<ShellForces> {
    check_r(r)?;
    let v = state.radial(r)?;
    let (k, a) = (state.kappa(), state.alpha());
    let f_conf_r = confinement_from_values(k, state.energy_parts(), a, r, v.g, v.f);
    let f_elec_r = electrostatic_from_values(k, a, r, v.g, v.f);
    let (residual, rel_residual) = relative_residual(f_conf_r, f_elec_r);
    Ok(ShellForces {
        f_conf_r,
        f_elec_r,
        residual,
        rel_residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirac::EnergySign::{self, *};

    fn log_grid(n: usize, lo: f64, hi: f64) -> Vec<f64> {
        (0..n)
            .map(|i| lo * (hi / lo).powf(i as f64 / (n - 1) as f64))
            .collect()
    }

    #[test]
    fn hydrogen_ground_state() {
        let a = 1.0 / 137.035999;
        let s = DiracState::bound(1, -1, a).unwrap();
        let gamma = (1.0 - a * a).sqrt();
        // c = (1 - γ)/α without the cancellation
        let c = a / (1.0 + gamma);
        // the algebraic identity behind the balance
        assert!((2.0 * c - a * (1.0 + c * c)).abs() < 1e-15 * c);
        for r in [0.5, 1.0, 2.0] {
            let v = s.radial(r).unwrap();
            let fc = confinement_force(&s, r).unwrap();
            let want = 2.0 / (4.0 * PI) * 2.0 * c * v.g * v.g / (r * r);
            assert!(fc > 0.0);
            assert!((fc - want).abs() < 1e-12 * want);
            let st = shell_stress(&s, r).unwrap();
            assert!(st.t_rr.abs() < 1e-15 * (v.g * v.g));
            let b = balance_residual(&s, r).unwrap();
            assert!(b.residual.abs() < 1e-12, "{}", b.residual);
        }
    }

    #[test]
    fn balance_over_state_matrix() {
        let a = 1.0 / 137.035999;
        let rs = log_grid(20, 0.01, 4.0);
        let mut states = Vec::new();
        for n in 1..=3u32 {
            for k in [-2, -1, 1, 2] {
                if let Ok(s) = DiracState::bound(n, k, a) {
                    states.push(s);
                }
            }
        }
        for p in [0.25, 0.5, 1.0, 2.0, 4.0] {
            for k in [-3, -2, -1, 1, 2, 3] {
                for sign in [Positive, Negative] {
                    states.push(DiracState::continuum(p, k, sign, a).unwrap());
                }
            }
        }
        let mut worst: f64 = 0.0;
        for s in &states {
            for &r in &rs {
                worst = worst.max(balance_residual(s, r).unwrap().rel_residual);
            }
        }
        assert!(worst <= 1e-9, "{worst}");
    }

    #[test]
    fn electrostatic_sign_and_scaling() {
        let s = DiracState::continuum(0.7, 2, Negative, 0.05).unwrap();
        for r in [0.05, 0.5, 3.0] {
            let v = s.radial(r).unwrap();
            let (rho, fe) = electrostatic_force(&s, r).unwrap();
            assert!(fe < 0.0 && rho < 0.0);
            let c = fe * r * r / (v.f * v.f + v.g * v.g);
            assert!((c + 0.05 * 4.0 / (4.0 * PI)).abs() < 1e-15);
        }
        let free = DiracState::free(0.7, 2, Negative).unwrap();
        assert_eq!(electrostatic_force(&free, 1.0).unwrap().1, 0.0);
    }

    #[test]
    fn free_states_carry_no_confinement_force() {
        for k in [-2, 1, 3] {
            let s = DiracState::free(1.4, k, Positive).unwrap();
            for r in [0.1, 1.0, 6.0] {
                let v = s.radial(r).unwrap();
                let scale = (v.g * v.g + v.f * v.f) / (r * r) + v.gp.abs() * v.f.abs() / r;
                assert!(confinement_force(&s, r).unwrap().abs() < 1e-10 * scale);
            }
        }
    }

    #[test]
    fn energy_independence() {
        for p in [0.5, 2.0] {
            let s = DiracState::continuum(p, 2, Negative, 1.0 / 137.035999).unwrap();
            assert!(balance_residual(&s, 0.3).unwrap().rel_residual <= 1e-10);
        }
    }

    #[test]
    fn divergence_of_stress_by_finite_differences() {
        // (∇·T)^r = ∂_r T^rr + (2T^rr - T^θθ - T^φφ)/r
        let cases: [(DiracState, f64); 3] = [
            (DiracState::bound(2, 1, 0.3).unwrap(), 1.5),
            (DiracState::continuum(1.0, -2, EnergySign::Positive, 0.2).unwrap(), 0.8),
            (DiracState::continuum(2.5, 3, EnergySign::Negative, 0.1).unwrap(), 2.0),
        ];
        let h = 1e-5;
        for (s, r) in cases {
            let up = shell_stress(&s, r + h).unwrap();
            let dn = shell_stress(&s, r - h).unwrap();
            let mid = shell_stress(&s, r).unwrap();
            let div = (up.t_rr - dn.t_rr) / (2.0 * h) + (2.0 * mid.t_rr - mid.t_thth - mid.t_phph) / r;
            let fc = confinement_force(&s, r).unwrap();
            assert!((div - fc).abs() < 1e-6 * fc.abs().max(mid.t_rr.abs() / r), "{div} vs {fc}");
        }
    }

    #[test]
    fn homogeneous_of_degree_two() {
        let en = Energy::continuum(1.2, Positive);
        let (g, f, r) = (0.37, -0.21, 0.9);
        let base = confinement_from_values(-3, en, 0.1, r, g, f);
        let scaled = confinement_from_values(-3, en, 0.1, r, 3.0 * g, 3.0 * f);
        assert!((scaled - 9.0 * base).abs() < 1e-14 * scaled.abs());
    }

    #[test]
    fn sign_of_energy_leaves_radial_stress_sign_pattern() {
        let a = DiracState::continuum(1.0, -2, Positive, 0.0).unwrap();
        let b = DiracState::continuum(1.0, -2, Negative, 0.0).unwrap();
        let r = 0.7;
        let (sa, sb) = (shell_stress(&a, r).unwrap(), shell_stress(&b, r).unwrap());
        assert_eq!(sa.t_thth, sa.t_phph);
        // f → -f up to the |E|±1 weights: the tangential stress flips sign
        assert!(sa.t_thth * sb.t_thth < 0.0);
        let fa = balance_residual(&a, r).unwrap();
        assert!(fa.f_conf_r.abs() < 1e-12 && fa.f_elec_r == 0.0);
    }
}
