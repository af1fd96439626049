//! Leading-order (Uehling) vacuum-polarization charge density of a point
//! charge,
//!
//! ```text
//! ρ = -e (2α/3π²) { Ki₁(z) + K₀(z)/z - (1 - 2/z²) K₁(z) },   z = 2r
//! ```
//!
//! and an independent integral representation used as a test oracle.

use std::f64::consts::PI;

use crate::specfun::{bessel_k, bickley_ki1, BesselKOrder};
use crate::{Error, Result};

/// Above this z the density is below the smallest normal f64.
const UNDERFLOW_Z: f64 = 700.0;

/// Uehling density at one radius. `rho` is in units of e λ_C⁻³ and
/// `v_reduced` = 4πr²ρ/e.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UehlingPoint {
    pub r: f64,
    pub z: f64,
    pub rho: f64,
    pub v_reduced: f64,
    pub underflow: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Small,
    Large,
}

fn check_r(r: f64) -> Result<()> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::domain(format!("Uehling density needs r > 0, got {r}")));
    }
    Ok(())
}

pub fn uehling_density(r: f64, alpha: f64) -> Result<UehlingPoint> {
    check_r(r)?;
    let z = 2.0 * r;
    if z > UNDERFLOW_Z {
        return Ok(UehlingPoint {
            r,
            z,
            rho: 0.0,
            v_reduced: 0.0,
            underflow: true,
        });
    }
    let k0 = bessel_k(BesselKOrder::Zero, z)?;
    let k1 = bessel_k(BesselKOrder::One, z)?;
    let ki1 = bickley_ki1(z)?;
    let braces = ki1 + k0 / z - (1.0 - 2.0 / (z * z)) * k1;
    let rho = -2.0 * alpha / (3.0 * PI * PI) * braces;
    Ok(UehlingPoint {
        r,
        z,
        rho,
        v_reduced: 4.0 * PI * r * r * rho,
        underflow: rho == 0.0 && alpha != 0.0,
    })
}

/// Printed limits: -α/(6π² r³) for r → 0 and
/// -√2 α/(8π^{3/2}) r⁻³ z^{1/2} e^{-z} for r → ∞ (units of e).
pub fn uehling_asymptotic(r: f64, alpha: f64, regime: Regime) -> Result<f64> {
    check_r(r)?;
    Ok(match regime {
        Regime::Small => -alpha / (6.0 * PI * PI * r.powi(3)),
        Regime::Large => {
            let z = 2.0 * r;
            -(2.0f64).sqrt() * alpha / (8.0 * PI.powf(1.5)) / r.powi(3) * z.sqrt() * (-z).exp()
        }
    })
}

/// ρ/e from the Laplacian of the spectral representation of the Uehling
/// potential,
///
/// ```text
/// ρ = -(2α/3π²) (1/r) ∫₁^∞ e^{-2rt} (1 + 1/2t²) √(t² - 1) dt,
/// ```
///
/// by double-exponential quadrature after t = 1 + x/2r, x = u/(1-u).
pub fn uehling_oracle(r: f64, alpha: f64) -> Result<f64> {
    check_r(r)?;
    let two_r = 2.0 * r;
    // integrand in x, scaled by 2r so the integral is O(1) at small r
    let integrand = |u: f64| {
        if u >= 1.0 {
            return 0.0;
        }
        let x = u / (1.0 - u);
        let dx = 1.0 / ((1.0 - u) * (1.0 - u));
        let t = 1.0 + x / two_r;
        let root = (x / two_r * (2.0 + x / two_r)).sqrt();
        (-x).exp() * (1.0 + 0.5 / (t * t)) * root * dx * two_r
    };
    let out = quadrature::double_exponential::integrate(integrand, 0.0, 1.0, 1e-13);
    if !out.integral.is_finite() || out.error_estimate > 1e-10 * out.integral.abs().max(1e-300) {
        return Err(Error::numerical(format!(
            "Uehling oracle quadrature at r = {r}: {} ± {}",
            out.integral, out.error_estimate
        )));
    }
    // ∫ dt = ∫ dx/2r; undo the 2r scaling
    let integral = out.integral / (two_r * two_r) * (-two_r).exp();
    Ok(-2.0 * alpha / (3.0 * PI * PI) / r * integral)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ALPHA;

    fn log_grid(n: usize, lo: f64, hi: f64) -> Vec<f64> {
        (0..n)
            .map(|i| lo * (hi / lo).powf(i as f64 / (n - 1) as f64))
            .collect()
    }

    #[test]
    fn matches_oracle() {
        let mut worst: f64 = 0.0;
        for r in log_grid(50, 0.01, 4.0) {
            let a = uehling_density(r, ALPHA).unwrap().rho;
            let b = uehling_oracle(r, ALPHA).unwrap();
            worst = worst.max((a - b).abs() / b.abs());
        }
        assert!(worst <= 1e-9, "{worst}");
    }

    #[test]
    fn small_r_limit() {
        let ratio = |r: f64| {
            uehling_density(r, ALPHA).unwrap().rho / uehling_asymptotic(r, ALPHA, Regime::Small).unwrap()
        };
        let (a, b) = (ratio(1e-3), ratio(1e-4));
        assert!((b - 1.0).abs() < 0.02 && (b - 1.0).abs() < (a - 1.0).abs(), "{a} {b}");
        assert!((ratio(1e-5) - 1.0).abs() < 0.01);
        let unit = uehling_asymptotic(1.0, ALPHA, Regime::Small).unwrap();
        assert!((unit + ALPHA / (6.0 * PI * PI)).abs() < 1e-18);
    }

    #[test]
    fn large_r_limit() {
        let ratio = |z: f64| {
            let r = z / 2.0;
            uehling_density(r, ALPHA).unwrap().rho / uehling_asymptotic(r, ALPHA, Regime::Large).unwrap()
        };
        let (a, b) = (ratio(20.0), ratio(60.0));
        assert!((a - 1.0).abs() < 0.1 && (b - 1.0).abs() < (a - 1.0).abs(), "{a} {b}");
        assert_eq!(uehling_asymptotic(1000.0, ALPHA, Regime::Large).unwrap(), 0.0);
    }

    #[test]
    fn linear_in_alpha() {
        for r in [0.01, 0.3, 2.0] {
            let a = uehling_density(r, ALPHA).unwrap().rho;
            let b = uehling_density(r, 2.0 * ALPHA).unwrap().rho;
            assert!((b - 2.0 * a).abs() <= 1e-15 * b.abs());
            let a = uehling_oracle(r, ALPHA).unwrap();
            let b = uehling_oracle(r, 2.0 * ALPHA).unwrap();
            assert!((b - 2.0 * a).abs() <= 1e-12 * b.abs());
        }
    }

    #[test]
    fn negative_and_decaying() {
        for r in log_grid(30, 1e-3, 10.0) {
            assert!(uehling_oracle(r, ALPHA).unwrap() < 0.0);
        }
        let mut prev = f64::NEG_INFINITY;
        for r in log_grid(40, 2.0, 30.0) {
            let rho = uehling_density(r, ALPHA).unwrap().rho;
            assert!(rho < 0.0 && rho > prev);
            prev = rho;
        }
    }

    #[test]
    fn underflow_flag() {
        let p = uehling_density(400.0, ALPHA).unwrap();
        assert!(p.underflow && p.rho == 0.0);
        let p = uehling_density(1.0, ALPHA).unwrap();
        assert!(!p.underflow && (p.v_reduced - 4.0 * PI * p.rho).abs() < 1e-18);
    }
}
