//! Radial solutions of the Dirac equation in the Coulomb potential of a
//! positive point charge,
//!
//! ```text
//! f' = +(κ-1)/r · f + [1 - (E + α/r)] · g
//! g' = -(κ+1)/r · g + [1 + (E + α/r)] · f
//! ```
//!
//! Bound states use the Laguerre closed form, free states the half-integer
//! Bessel form, and continuum states are integrated from the origin
//! ([`ode`]) with the Whittaker closed form ([`continuum`]) as a cross-check
//! inside its precision window. Bound states can also be integrated
//! ([`bound_radial_ode`]) as an independent check of the closed form.

mod bound;
mod bound_ode;
pub mod continuum;
mod free;
pub mod ode;

pub use bound::{bound_energy, bound_radial};
pub use bound_ode::bound_radial_ode;
pub use continuum::{continuum_radial_closed, damped_window_mean, CLOSED_FORM_MAX_2PR};
pub use free::free_radial;
pub use ode::continuum_radial_ode;

use crate::{Error, Result};

/// Relativistic angular quantum number κ = ±1, ±2, …
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuantumNumbers {
    kappa: i32,
}

impl QuantumNumbers {
    pub fn new(kappa: i32) -> Result<Self> {
        if kappa == 0 {
            return Err(Error::domain("κ = 0 is not an allowed quantum number"));
        }
        Ok(Self { kappa })
    }

    pub fn kappa(&self) -> i32 {
        self.kappa
    }

    /// j = |κ| - ½
    pub fn j(&self) -> f64 {
        self.kappa.unsigned_abs() as f64 - 0.5
    }

    /// Orbital angular momentum of the upper component, l = |κ + ½| - ½.
    pub fn l(&self) -> u32 {
        if self.kappa < 0 {
            (-self.kappa - 1) as u32
        } else {
            self.kappa as u32
        }
    }

    /// Orbital angular momentum of the lower component, l̄ = |κ - ½| - ½.
    pub fn l_lower(&self) -> u32 {
        if self.kappa < 0 {
            (-self.kappa) as u32
        } else {
            (self.kappa - 1) as u32
        }
    }

    /// Filled-shell degeneracy 2j + 1 = 2|κ|.
    pub fn degeneracy(&self) -> u32 {
        2 * self.kappa.unsigned_abs()
    }

    /// γ = √(κ² - α²); requires α < |κ|.
    pub fn gamma(&self, alpha: f64) -> Result<f64> {
        let k2 = (self.kappa as f64).powi(2);
        if alpha < 0.0 || alpha * alpha >= k2 {
            return Err(Error::domain(format!(
                "supercritical or negative coupling α = {alpha} for κ = {}",
                self.kappa
            )));
        }
        Ok((k2 - alpha * alpha).sqrt())
    }
}

/// Sign of the energy of a continuum or free state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EnergySign {
    Positive,
    Negative,
}

impl EnergySign {
    pub fn value(self) -> f64 {
        match self {
            EnergySign::Positive => 1.0,
            EnergySign::Negative => -1.0,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            EnergySign::Positive => EnergySign::Negative,
            EnergySign::Negative => EnergySign::Positive,
        }
    }
}

/// Energy together with accurately formed E + 1 and E - 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Energy {
    pub e: f64,
    pub ep1: f64,
    pub em1: f64,
}

impl Energy {
    /// E = ±√(1 + p²) without cancellation in E ∓ 1 at small p.
    pub fn continuum(p: f64, sign: EnergySign) -> Self {
        let root = (1.0 + p * p).sqrt();
        let near = p * p / (1.0 + root);
        match sign {
            EnergySign::Positive => Energy {
                e: root,
                ep1: root + 1.0,
                em1: near,
            },
            EnergySign::Negative => Energy {
                e: -root,
                ep1: -near,
                em1: -root - 1.0,
            },
        }
    }

    pub fn from_value(e: f64) -> Self {
        Energy {
            e,
            ep1: e + 1.0,
            em1: e - 1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StateKind {
    /// Discrete level with principal quantum number n.
    Bound { n: u32 },
    /// Coulomb continuum state of radial momentum p.
    Continuum { p: f64, sign: EnergySign },
    /// Free spherical wave (the α → 0 limit).
    Free { p: f64, sign: EnergySign },
}

/// A radial Dirac–Coulomb state. Immutable once built.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiracState {
    qn: QuantumNumbers,
    alpha: f64,
    kind: StateKind,
    energy: Energy,
    /// numerical renormalisation factor for bound states
    norm: f64,
}

impl DiracState {
    pub fn bound(n: u32, kappa: i32, alpha: f64) -> Result<Self> {
        let qn = QuantumNumbers::new(kappa)?;
        if !(alpha > 0.0) {
            return Err(Error::domain("bound states require α > 0"));
        }
        let mut state = DiracState {
            qn,
            alpha,
            kind: StateKind::Bound { n },
            energy: bound::bound_energy_parts(n, kappa, alpha)?,
            norm: 1.0,
        };
        state.norm = bound::renormalisation(&state)?;
        Ok(state)
    }

    pub fn continuum(p: f64, kappa: i32, sign: EnergySign, alpha: f64) -> Result<Self> {
        let qn = QuantumNumbers::new(kappa)?;
        if !(p > 0.0) || !p.is_finite() {
            return Err(Error::domain(format!("continuum momentum p = {p} must be positive")));
        }
        qn.gamma(alpha)?;
        Ok(DiracState {
            qn,
            alpha,
            kind: StateKind::Continuum { p, sign },
            energy: Energy::continuum(p, sign),
            norm: 1.0,
        })
    }

    pub fn free(p: f64, kappa: i32, sign: EnergySign) -> Result<Self> {
        let qn = QuantumNumbers::new(kappa)?;
        if !(p > 0.0) || !p.is_finite() {
            return Err(Error::domain(format!("free momentum p = {p} must be positive")));
        }
        Ok(DiracState {
            qn,
            alpha: 0.0,
            kind: StateKind::Free { p, sign },
            energy: Energy::continuum(p, sign),
            norm: 1.0,
        })
    }

    pub fn qn(&self) -> QuantumNumbers {
        self.qn
    }

    pub fn kappa(&self) -> i32 {
        self.qn.kappa
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn kind(&self) -> StateKind {
        self.kind
    }

    pub fn energy(&self) -> f64 {
        self.energy.e
    }

    pub fn energy_parts(&self) -> Energy {
        self.energy
    }

    pub(crate) fn bound_norm(&self) -> f64 {
        self.norm
    }

    /// Radial momentum of a continuum/free state, or the decay constant
    /// √(1 - E²) of a bound state.
    pub fn momentum(&self) -> f64 {
        match self.kind {
            StateKind::Continuum { p, .. } | StateKind::Free { p, .. } => p,
            StateKind::Bound { .. } => (-(self.energy.ep1 * self.energy.em1)).sqrt(),
        }
    }

    /// Radial values at r using the authoritative evaluator for the kind:
    /// closed form for bound and free states, the integrator for continuum.
    pub fn radial(&self, r: f64) -> Result<RadialValues> {
        match self.kind {
            StateKind::Bound { .. } => bound_radial(self, r),
            StateKind::Free { .. } => free_radial(self, r),
            StateKind::Continuum { .. } => continuum_radial_ode(self, &[r]).map(|mut v| v.remove(0)),
        }
    }

    /// Fill derivatives for (g, f) at r from the radial equation.
    pub fn derivatives(&self, r: f64, g: f64, f: f64) -> RadialValues {
        derivatives_from_dirac(self.qn.kappa, self.energy, self.alpha, r, g, f)
    }
}

/// g, f and their first two radial derivatives (units λ_C^{-3/2}).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RadialValues {
    pub g: f64,
    pub f: f64,
    pub gp: f64,
    pub fp: f64,
    pub gpp: f64,
    pub fpp: f64,
}

/// First and second derivatives from the radial equation and its
/// r-derivative; no numerical differentiation.
pub fn derivatives_from_dirac(kappa: i32, en: Energy, alpha: f64, r: f64, g: f64, f: f64) -> RadialValues {
    let k = kappa as f64;
    let a_r = alpha / r;
    // 1 - E - α/r and 1 + E + α/r
    let lower = -en.em1 - a_r;
    let upper = en.ep1 + a_r;
    let gp = -(k + 1.0) / r * g + upper * f;
    let fp = (k - 1.0) / r * f + lower * g;
    let r2 = r * r;
    let gpp = (k + 1.0) / r2 * g - (k + 1.0) / r * gp - alpha / r2 * f + upper * fp;
    let fpp = -(k - 1.0) / r2 * f + (k - 1.0) / r * fp + alpha / r2 * g + lower * gp;
    RadialValues { g, f, gp, fp, gpp, fpp }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantum_number_bookkeeping() {
        for kappa in [-4, -3, -2, -1, 1, 2, 3, 4] {
            let q = QuantumNumbers::new(kappa).unwrap();
            assert_eq!(q.j(), kappa.unsigned_abs() as f64 - 0.5);
            assert_eq!(q.l() as f64, (kappa as f64 + 0.5).abs() - 0.5);
            assert_eq!(q.l_lower() as f64, (kappa as f64 - 0.5).abs() - 0.5);
            assert_eq!(q.degeneracy() as f64, 2.0 * q.j() + 1.0);
        }
        assert!(QuantumNumbers::new(0).is_err());
    }

    #[test]
    fn supercritical_coupling_rejected() {
        let q = QuantumNumbers::new(-1).unwrap();
        assert!(q.gamma(1.0).is_err());
        assert!(q.gamma(0.999).is_ok());
        assert!(DiracState::continuum(1.0, 1, EnergySign::Positive, 1.2).is_err());
    }

    #[test]
    fn energy_parts_are_consistent() {
        for p in [1e-6, 1e-2, 1.0, 300.0] {
            for s in [EnergySign::Positive, EnergySign::Negative] {
                let e = Energy::continuum(p, s);
                assert!((e.ep1 - (e.e + 1.0)).abs() <= 1e-15 * e.e.abs().max(1.0));
                assert!((e.em1 - (e.e - 1.0)).abs() <= 1e-15 * e.e.abs().max(1.0));
                assert!((e.ep1 * e.em1 - p * p).abs() <= 1e-14 * p * p);
            }
        }
    }

    #[test]
    fn free_spherical_wave_satisfies_second_derivative() {
        // α = 0, κ = -1: g = C sin(pr)/r solves g'' + 2g'/r + p² g = 0
        let p = 1.3;
        let en = Energy::continuum(p, EnergySign::Positive);
        for r in [0.2, 1.0, 3.7] {
            let g = (p * r).sin() / r;
            let gp = p * (p * r).cos() / r - (p * r).sin() / (r * r);
            let f = gp / en.ep1;
            let v = derivatives_from_dirac(-1, en, 0.0, r, g, f);
            let resid = v.gpp + 2.0 * v.gp / r + p * p * v.g;
            assert!(resid.abs() < 1e-12 * (p * p * g.abs() + v.gpp.abs()), "r={r} resid={resid}");
            assert!((v.gp - gp).abs() < 1e-13);
        }
    }
}
