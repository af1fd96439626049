//! Regular continuum solution by outward integration of the radial equation.
//!
//! In G = rg, F = rf the system reads
//!
//! ```text
//! r G' = -κ G + (α + (1+E) r) F
//! r F' = +κ F + (-α + (1-E) r) G
//! ```
//!
//! A convergent Frobenius series about the origin carries the solution to
//! pr ≈ 1 + 1.5√γ; from there Taylor steps of adaptive order advance it to
//! each requested radius. The amplitude is fixed analytically by the small-r
//! coefficient of the closed form, so no matching at large r is needed.

use super::continuum::leading_coefficient;
use super::{DiracState, Energy, EnergySign, RadialValues, StateKind};
use crate::{Error, Result};

const REL_TOL: f64 = 1e-17;
const MAX_TERMS: usize = 400;

/// Regular scattering solution for fixed (κ, E, α).
#[derive(Debug, Clone, Copy)]
pub struct ContinuumSolver {
    kappa: f64,
    gamma: f64,
    alpha: f64,
    p: f64,
    en: Energy,
    ln_lead: f64,
    lead_sign: f64,
}

/// G, F stored as mantissas times e^{ln_scale}.
#[derive(Debug, Clone, Copy)]
pub(super) struct Scaled {
    pub big_g: f64,
    pub big_f: f64,
    pub ln_scale: f64,
}

impl Scaled {
    pub(super) fn renormalise(&mut self) {
        let m = self.big_g.abs().max(self.big_f.abs());
        if m > 0.0 && m.is_finite() {
            self.big_g /= m;
            self.big_f /= m;
            self.ln_scale += m.ln();
        }
    }
}

impl ContinuumSolver {
    pub fn new(kappa: i32, p: f64, sign: EnergySign, alpha: f64) -> Result<Self> {
        let qn = super::QuantumNumbers::new(kappa)?;
        let gamma = qn.gamma(alpha)?;
        if !(p > 0.0) || !p.is_finite() {
            return Err(Error::domain(format!("continuum momentum p = {p} must be positive")));
        }
        let en = Energy::continuum(p, sign);
        let (ln_lead, lead_sign) = leading_coefficient(kappa, gamma, en, p, alpha)?;
        Ok(Self {
            kappa: kappa as f64,
            gamma,
            alpha,
            p,
            en,
            ln_lead,
            lead_sign,
        })
    }

    pub fn from_state(state: &DiracState) -> Result<Self> {
        match state.kind() {
            StateKind::Continuum { p, sign } | StateKind::Free { p, sign } => {
                Self::new(state.kappa(), p, sign, state.alpha())
            }
            StateKind::Bound { .. } => Err(Error::domain("continuum_radial_ode needs a scattering state")),
        }
    }

    /// Radius up to which the origin series is used.
    pub(super) fn series_radius(&self) -> f64 {
        (1.0 + 1.5 * self.gamma.sqrt()) / self.p.max(0.05)
    }

    /// Frobenius series at r. G = c r^γ ΣT, F = c r^γ ΣU.
    pub(super) fn series(&self, r: f64) -> Result<Scaled> {
        let (k, g, a) = (self.kappa, self.gamma, self.alpha);
        let (ep1, one_minus_e) = (self.en.ep1, -self.en.em1);
        let (mut t, mut u) = if k < 0.0 { (1.0, -a / (g - k)) } else { (a / (g + k), 1.0) };
        let (mut st, mut su) = (t, u);
        let mut small = 0;
        for n in 1..MAX_TERMS {
            let nf = n as f64;
            let det = nf * (2.0 * g + nf);
            let tn = r * ((g + nf - k) * ep1 * u + a * one_minus_e * t) / det;
            let un = r * ((g + nf + k) * one_minus_e * t - a * ep1 * u) / det;
            t = tn;
            u = un;
            st += t;
            su += u;
            if t.abs() + u.abs() <= REL_TOL * (st.abs() + su.abs()) {
                small += 1;
                if small >= 3 {
                    return Ok(Scaled {
                        big_g: st * self.lead_sign,
                        big_f: su * self.lead_sign,
                        ln_scale: self.ln_lead + g * r.ln(),
                    });
                }
            } else {
                small = 0;
            }
        }
        Err(Error::numerical(format!("Frobenius series did not converge at r = {r}")))
    }

    /// Solution with unit leading coefficient at an arbitrary energy. `p`
    /// only sets the series radius and step sizes.
    pub(super) fn unnormalised(kappa: i32, en: Energy, alpha: f64, p: f64) -> Result<Self> {
        let gamma = super::QuantumNumbers::new(kappa)?.gamma(alpha)?;
        Ok(Self {
            kappa: kappa as f64,
            gamma,
            alpha,
            p,
            en,
            ln_lead: 0.0,
            lead_sign: 1.0,
        })
    }

    /// Step length at r0.
    fn step_len(&self, r0: f64) -> f64 {
        let e = self.en.e.abs();
        let centrifugal = (self.kappa.abs() + self.alpha) / r0;
        // exponential growth tolerates long steps, oscillation does not
        let c = if self.kappa.abs() / r0 > 1.5 * (self.p + 1.0) { 6.0 } else { 2.5 };
        (0.4 * r0).min(c / (e + 1.0 + centrifugal))
    }

    /// Carry y from r0 to r1 in either direction.
    pub(super) fn advance(&self, r0: f64, y: Scaled, r1: f64) -> Result<Scaled> {
        self.walk(r0, y, r1, |_, _| ())
    }

    /// Like `advance`, returning every intermediate step as well.
    pub(super) fn path(&self, r0: f64, y: Scaled, r1: f64) -> Result<Vec<(f64, Scaled)>> {
        let mut out = vec![(r0, y)];
        self.walk(r0, y, r1, |r, y| out.push((r, y)))?;
        Ok(out)
    }

    fn walk(&self, mut r0: f64, mut y: Scaled, r1: f64, mut visit: impl FnMut(f64, Scaled)) -> Result<Scaled> {
        while r0 != r1 {
            let dist = r1 - r0;
            let h = self.step_len(r0).min(dist.abs()).copysign(dist);
            self.taylor(r0, h, &mut y)?;
            r0 = if (r1 - (r0 + h)).abs() <= 1e-14 * r1 { r1 } else { r0 + h };
            visit(r0, y);
        }
        Ok(y)
    }

    /// One Taylor step of length h from r0.
    fn taylor(&self, r0: f64, h: f64, y: &mut Scaled) -> Result<()> {
        let (k, a) = (self.kappa, self.alpha);
        let (ep1, one_minus_e) = (self.en.ep1, -self.en.em1);
        // scaled coefficients g_n = G_n hⁿ
        let (mut g0, mut f0) = (y.big_g, y.big_f);
        let (mut gm, mut fm) = (0.0, 0.0);
        let (mut sg, mut sf) = (g0, f0);
        let ratio = h / r0;
        let cg = a + ep1 * r0;
        let cf = -a + one_minus_e * r0;
        let norm0 = g0.abs() + f0.abs();
        let mut small = 0;
        for n in 0..MAX_TERMS {
            let nf = n as f64;
            let q = ratio / (nf + 1.0);
            let g1 = q * (-(nf + k) * g0 + cg * f0 + ep1 * h * fm);
            let f1 = q * (-(nf - k) * f0 + cf * g0 + one_minus_e * h * gm);
            gm = g0;
            fm = f0;
            g0 = g1;
            f0 = f1;
            sg += g0;
            sf += f0;
            if g0.abs() + f0.abs() <= REL_TOL * (sg.abs() + sf.abs()).max(1e-3 * norm0) {
                small += 1;
                if small >= 3 {
                    y.big_g = sg;
                    y.big_f = sf;
                    y.renormalise();
                    return Ok(());
                }
            } else {
                small = 0;
            }
        }
        Err(Error::numerical(format!("Taylor step did not converge at r = {r0}, h = {h}")))
    }

    /// (G, F) in scaled form at each ascending target radius.
    pub(super) fn scaled_at(&self, r_targets: &[f64]) -> Result<Vec<Scaled>> {
        if r_targets.is_empty() {
            return Err(Error::domain("continuum_radial_ode: no target radii"));
        }
        let mut prev = 0.0;
        for &r in r_targets {
            if !(r > 0.0) || !r.is_finite() || r < prev {
                return Err(Error::domain("continuum_radial_ode: radii must be positive and ascending"));
            }
            prev = r;
        }
        let rs = self.series_radius();
        let mut out = Vec::with_capacity(r_targets.len());
        let mut state: Option<(f64, Scaled)> = None;
        for &r in r_targets {
            if r <= rs {
                out.push(self.series(r)?);
                continue;
            }
            let (r0, y) = match state {
                Some(s) => s,
                None => (rs, self.series(rs)?),
            };
            let y = self.advance(r0, y, r)?;
            state = Some((r, y));
            out.push(y);
        }
        Ok(out)
    }

    /// g and f at each ascending target radius. Values below the f64 range
    /// underflow to zero.
    pub fn values_at(&self, r_targets: &[f64]) -> Result<Vec<(f64, f64)>> {
        let scaled = self.scaled_at(r_targets)?;
        Ok(r_targets
            .iter()
            .zip(scaled)
            .map(|(&r, y)| {
                let s = y.ln_scale.exp() / r;
                (y.big_g * s, y.big_f * s)
            })
            .collect())
    }

    /// ln(r²(f² + g²)) at a single radius, robust to under/overflow.
    pub fn ln_density(&self, r: f64) -> Result<f64> {
        let y = self.scaled_at(&[r])?[0];
        Ok((y.big_g * y.big_g + y.big_f * y.big_f).ln() + 2.0 * y.ln_scale)
    }

    pub fn energy(&self) -> Energy {
        self.en
    }
}

/// Continuum (or free, α = 0) radial functions at ascending radii by
/// outward integration of the radial equation.
pub fn continuum_radial_ode(state: &DiracState, r_targets: &[f64]) -> Result<Vec<RadialValues>> {
    let solver = ContinuumSolver::from_state(state)?;
    let values = solver.values_at(r_targets)?;
    Ok(r_targets
        .iter()
        .zip(values)
        .map(|(&r, (g, f))| state.derivatives(r, g, f))
        .collect())
}
