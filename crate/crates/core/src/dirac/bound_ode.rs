//! Bound states by integration of the radial equation: outward from the
//! origin series, inward from the exponential tail, matched at r ≈ n/λ and
//! normalised by quadrature. Shares no code with the Laguerre closed form
//! beyond the energy.

use std::cell::RefCell;

use super::ode::{ContinuumSolver, Scaled};
use super::{DiracState, RadialValues, StateKind};
use crate::{Error, Result};

/// Decay lengths between the matching radius and the inward start.
const TAIL_LENGTHS: f64 = 40.0;

struct BoundSolver {
    solver: ContinuumSolver,
    r_series: f64,
    r_match: f64,
    r_far: f64,
    /// ascending in r, from the series radius to the matching radius
    outward: Vec<(f64, Scaled)>,
    /// descending in r, from r_far to the matching radius
    inward: Vec<(f64, Scaled)>,
    /// ln|c| and sign of the factor carrying the inward solution onto the outward one
    ln_c: f64,
    sign_c: f64,
    /// overall sign matching the Laguerre form
    sign: f64,
    ln_norm: f64,
}

impl BoundSolver {
    fn new(state: &DiracState) -> Result<Self> {
        let StateKind::Bound { n } = state.kind() else {
            return Err(Error::domain("bound_radial_ode needs a bound state"));
        };
        let en = state.energy_parts();
        let lambda = (-en.em1 * en.ep1).sqrt();
        let solver = ContinuumSolver::unnormalised(state.kappa(), en, state.alpha(), lambda)?;
        let r_match = (n as f64 / lambda).max(solver.series_radius());
        let r_far = r_match + TAIL_LENGTHS / lambda;
        let far = Scaled {
            big_g: 1.0,
            big_f: -lambda / en.ep1,
            ln_scale: 0.0,
        };
        let rs = solver.series_radius();
        let outward = solver.path(rs, solver.series(rs)?, r_match)?;
        let inward = solver.path(r_far, far, r_match)?;
        let outer = outward.last().unwrap().1;
        let inner = inward.last().unwrap().1;
        let dot = outer.big_g * inner.big_g + outer.big_f * inner.big_f;
        let nn = inner.big_g.powi(2) + inner.big_f.powi(2);
        let s = dot / nn;
        let mismatch = ((outer.big_g - s * inner.big_g).powi(2) + (outer.big_f - s * inner.big_f).powi(2)).sqrt()
            / (outer.big_g.powi(2) + outer.big_f.powi(2)).sqrt();
        if !(mismatch < 1e-7) {
            return Err(Error::numerical(format!(
                "bound state n = {n}, κ = {}: inward and outward solutions disagree by {mismatch:.2e}",
                state.kappa()
            )));
        }
        let mut me = BoundSolver {
            solver,
            r_series: rs,
            r_match,
            r_far,
            outward,
            inward,
            ln_c: outer.ln_scale - inner.ln_scale + s.abs().ln(),
            sign_c: s.signum(),
            sign: if state.kappa() > 0 { -1.0 } else { 1.0 },
            ln_norm: 0.0,
        };
        me.ln_norm = 0.5 * me.norm_integral()?.ln();
        Ok(me)
    }

    /// Unnormalised (G, F) as a scaled pair.
    fn scaled(&self, r: f64) -> Result<Scaled> {
        if r <= self.r_series {
            self.solver.series(r)
        } else if r <= self.r_match {
            let i = self.outward.partition_point(|(x, _)| *x <= r) - 1;
            let (r0, y) = self.outward[i];
            self.solver.advance(r0, y, r)
        } else {
            let i = self.inward.partition_point(|(x, _)| *x >= r).max(1) - 1;
            let (r0, y) = self.inward[i];
            let mut y = self.solver.advance(r0, y, r)?;
            y.big_g *= self.sign_c;
            y.big_f *= self.sign_c;
            y.ln_scale += self.ln_c;
            Ok(y)
        }
    }

    fn norm_integral(&self) -> Result<f64> {
        let err = RefCell::new(None);
        let density = |r: f64| {
            if r <= 0.0 {
                return 0.0;
            }
            match self.scaled(r) {
                Ok(y) => (y.big_g * y.big_g + y.big_f * y.big_f) * (2.0 * y.ln_scale).exp(),
                Err(e) => {
                    err.borrow_mut().get_or_insert(e);
                    0.0
                }
            }
        };
        let mut total = 0.0;
        let mut edges = vec![0.0];
        let inner_segments = 12;
        for i in 1..=inner_segments {
            edges.push(self.r_match * i as f64 / inner_segments as f64);
        }
        let outer_segments = 16;
        for i in 1..=outer_segments {
            edges.push(self.r_match + (self.r_far - self.r_match) * i as f64 / outer_segments as f64);
        }
        for w in edges.windows(2) {
            total += quadrature::double_exponential::integrate(density, w[0], w[1], 1e-12).integral;
        }
        if let Some(e) = err.into_inner() {
            return Err(e);
        }
        if !(total > 0.0) || !total.is_finite() {
            return Err(Error::numerical(format!("bound ODE norm integral = {total}")));
        }
        Ok(total)
    }

    fn values(&self, r: f64) -> Result<(f64, f64)> {
        let y = self.scaled(r)?;
        let s = self.sign * (y.ln_scale - self.ln_norm).exp() / r;
        Ok((y.big_g * s, y.big_f * s))
    }
}

/// Bound radial functions at the given radii, normalised to
/// ∫(f² + g²) r² dr = 1, signed like the closed form (sgn g = -sgn κ near
/// the origin).
pub fn bound_radial_ode(state: &DiracState, r_targets: &[f64]) -> Result<Vec<RadialValues>> {
    if r_targets.iter().any(|r| !(*r > 0.0) || !r.is_finite()) {
        return Err(Error::domain("bound_radial_ode: radii must be positive"));
    }
    let solver = BoundSolver::new(state)?;
    r_targets
        .iter()
        .map(|&r| {
            let (g, f) = solver.values(r)?;
            Ok(state.derivatives(r, g, f))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirac::bound_radial;

    #[test]
    fn agrees_with_closed_form() {
        for alpha in [1.0 / 137.035999, 0.2] {
            for (n, kappa) in [(1, -1), (2, -1), (2, 1), (2, -2), (3, -1), (3, 2), (3, -3)] {
                let st = DiracState::bound(n, kappa, alpha).unwrap();
                let lambda = st.momentum();
                let rs = [0.01, 0.1, 1.0, 10.0, 0.5 / lambda, 2.0 / lambda, 8.0 / lambda];
                let ode = bound_radial_ode(&st, &rs).unwrap();
                for (r, v) in rs.iter().zip(ode) {
                    let c = bound_radial(&st, *r).unwrap();
                    let scale = c.g.abs().max(c.f.abs());
                    assert!(
                        (v.g - c.g).abs() <= 1e-8 * scale && (v.f - c.f).abs() <= 1e-8 * scale,
                        "n={n} κ={kappa} α={alpha} r={r}: ode ({}, {}) closed ({}, {})",
                        v.g,
                        v.f,
                        c.g,
                        c.f
                    );
                }
            }
        }
    }

    #[test]
    fn rejects_scattering_states() {
        let st = DiracState::continuum(1.0, -1, crate::dirac::EnergySign::Positive, 0.01).unwrap();
        assert!(bound_radial_ode(&st, &[1.0]).is_err());
    }
}
