//! Momentum grid: uniform spacing Δ = (π/2r)/m anchored at p_max, so every
//! damping shift ±π/2r lands on grid points, joined to a geometric
//! refinement toward p = 0.

use std::f64::consts::FRAC_PI_2;

use crate::{Error, Result};

/// Fewest points kept for the geometric part.
const MIN_GEOMETRIC: usize = 16;
/// The geometric part takes over below this many uniform spacings.
const JOIN_SPACINGS: f64 = 8.0;

#[derive(Debug, Clone, PartialEq)]
pub struct PGrid {
    /// strictly ascending, all > 0, last = p_max
    pub p: Vec<f64>,
    /// uniform spacing
    pub delta: f64,
    /// grid steps per damping half-period π/2r
    pub steps_per_half_period: usize,
    /// index of the first point of the uniform part
    pub uniform_start: usize,
}

impl PGrid {
    pub fn p_max(&self) -> f64 {
        *self.p.last().expect("grid is never empty")
    }

    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }
}

pub fn build_p_grid(r: f64, p_max_factor: f64, n_p: usize) -> Result<PGrid> {
    if !(r > 0.0) || !(p_max_factor > 0.0) {
        return Err(Error::Config(format!("p-grid needs r > 0 and p_max_factor > 0 (r = {r})")));
    }
    let p_max = p_max_factor / r;
    let half_period = FRAC_PI_2 / r;
    let periods = p_max / half_period;
    let budget = n_p.saturating_sub(MIN_GEOMETRIC) as f64 - JOIN_SPACINGS;
    let m = (budget / periods).floor() as usize;
    if m < 2 || n_p < 64 {
        return Err(Error::Config(format!(
            "n_p = {n_p} is too small for p_max = {p_max} (need ≥ 2 points per half-period)"
        )));
    }
    let delta = half_period / m as f64;
    let mut uniform = Vec::new();
    let mut j = 0usize;
    loop {
        let p = p_max - delta * j as f64;
        if p < JOIN_SPACINGS * delta * (1.0 - 1e-12) {
            break;
        }
        uniform.push(p);
        j += 1;
    }
    let p_join = *uniform.last().unwrap();
    let n_geo = n_p - uniform.len();
    let q = 1.0 / (1.0 - delta / p_join);
    let mut p = Vec::with_capacity(n_p);
    let mut x = p_join;
    for _ in 0..n_geo {
        x /= q;
        p.push(x);
    }
    p.reverse();
    let uniform_start = p.len();
    uniform.reverse();
    p.extend(uniform);
    Ok(PGrid {
        p,
        delta,
        steps_per_half_period: m,
        uniform_start,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paper_size_grid() {
        let g = build_p_grid(0.5, 160.0, 1200).unwrap();
        assert_eq!(g.len(), 1200);
        assert!((g.p_max() - 320.0).abs() < 1e-12);
        assert!(g.p.windows(2).all(|w| w[1] > w[0]) && g.p[0] > 0.0);
        let mean = g.p_max() / g.len() as f64;
        assert!(g.p[1] - g.p[0] <= 0.1 * mean);
    }

    #[test]
    fn half_period_lands_on_grid() {
        let r = 0.2;
        let g = build_p_grid(r, 40.0, 400).unwrap();
        let m = g.steps_per_half_period;
        for i in g.uniform_start..g.len() - m {
            let shifted = g.p[i] + FRAC_PI_2 / r;
            assert!((g.p[i + m] - shifted).abs() < 1e-9 * shifted);
        }
    }

    #[test]
    fn spacing_is_continuous_at_the_join() {
        let g = build_p_grid(1.0, 40.0, 400).unwrap();
        let i = g.uniform_start;
        let below = g.p[i] - g.p[i - 1];
        let above = g.p[i + 1] - g.p[i];
        assert!((below - above).abs() < 1e-9 * above);
    }

    #[test]
    fn too_few_points_rejected() {
        assert!(build_p_grid(0.5, 160.0, 100).is_err());
    }
}
