//! Limit of the oscillating integral function I(p) as p → ∞.
//!
//! The damped integral function is searched for inflection points in the
//! last decade of p; consecutive inflection points whose oscillatory slopes
//! have opposite signs are averaged in pairs and I_∞ - a/p² is fitted to the
//! pair averages. With fewer than four pairs the model is fitted to the
//! damped samples directly and the fit is flagged. The model is passed
//! through the same damping and pair averaging as the data, so a pure
//! I_∞ - a/p² input is recovered exactly.

use super::damping::damp_by_steps;
use super::interp::Interpolant;
use crate::{Error, Result};

const MIN_PAIRS: usize = 4;

#[derive(Debug, Clone, PartialEq)]
pub struct TailFit {
    /// extrapolated I_∞
    pub limit: f64,
    /// coefficient of the -a/p² approach
    pub a: f64,
    /// standard error of `limit`
    pub err: f64,
    /// number of inflection pairs used (0 in the fallback)
    pub pairs: usize,
    /// true when the fit fell back to the damped samples
    pub fallback: bool,
    /// the inflection pairs, reusable on other series of the same table
    pub pair_points: Vec<(f64, f64)>,
}

/// Where and how the tail is read off.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailWindow {
    /// index of the first point of the uniform part of the grid
    pub uniform_start: usize,
    /// damping shift in grid steps, 0 for no damping
    pub shift: usize,
}

struct Prepared {
    interp: Interpolant,
    /// damping shift in p
    h: f64,
    lo: f64,
    hi: f64,
}

fn prepare(p: &[f64], integral: &[f64], win: TailWindow) -> Result<Prepared> {
    let u = win.uniform_start;
    let m = win.shift;
    if p.len() != integral.len() || p.len() < u + 2 * m + 16 {
        return Err(Error::domain("tail_limit: table too short for the damping stencil"));
    }
    let (xs, ys) = if m > 0 {
        let d = damp_by_steps(&integral[u..], m)?;
        let n = d.values.len();
        (p[u + m..u + n - m].to_vec(), d.values[m..n - m].to_vec())
    } else {
        (p[u..].to_vec(), integral[u..].to_vec())
    };
    let h = if m > 0 { p[u + m] - p[u] } else { 0.0 };
    let hi = *xs.last().unwrap();
    let lo = (0.1 * hi).max(xs[0]);
    Ok(Prepared {
        interp: Interpolant::new(&xs, &ys)?,
        h,
        lo,
        hi,
    })
}

/// 1/p² after the same damping as the data
fn model(p: f64, h: f64) -> f64 {
    if h == 0.0 {
        1.0 / (p * p)
    } else {
        0.25 / ((p - h) * (p - h)) + 0.5 / (p * p) + 0.25 / ((p + h) * (p + h))
    }
}

/// Least squares y ≈ c - a·x; returns (c, a, standard error of c).
fn fit(xs: &[f64], ys: &[f64]) -> Result<(f64, f64, f64)> {
    let n = xs.len();
    if n < 3 {
        return Err(Error::numerical("tail fit needs at least three points"));
    }
    let nf = n as f64;
    let mx = xs.iter().sum::<f64>() / nf;
    let my = ys.iter().sum::<f64>() / nf;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    if sxx == 0.0 {
        return Ok((my, 0.0, 0.0));
    }
    let slope = sxy / sxx;
    let c = my - slope * mx;
    let rss: f64 = xs.iter().zip(ys).map(|(x, y)| (y - c - slope * x).powi(2)).sum();
    let s2 = rss / (nf - 2.0);
    let se = (s2 * (1.0 / nf + mx * mx / sxx)).sqrt();
    Ok((c, -slope, se))
}

fn inflection_pairs(prep: &Prepared) -> Vec<(f64, f64)> {
    let it = &prep.interp;
    let nodes: Vec<f64> = it.nodes().iter().copied().filter(|&x| x >= prep.lo && x <= prep.hi).collect();
    let mut roots = Vec::new();
    for w in nodes.windows(2) {
        let (mut a, mut b) = (w[0], w[1]);
        let (mut fa, fb) = (it.second_derivative(a + 1e-12 * a), it.second_derivative(b - 1e-12 * b));
        if fa == 0.0 || fa.signum() == fb.signum() {
            continue;
        }
        for _ in 0..60 {
            let mid = 0.5 * (a + b);
            let fm = it.second_derivative(mid);
            if fm.signum() == fa.signum() {
                a = mid;
                fa = fm;
            } else {
                b = mid;
            }
        }
        roots.push(0.5 * (a + b));
    }
    let mut pairs = Vec::new();
    let mut i = 0;
    while i + 1 < roots.len() {
        let (x1, x2) = (roots[i], roots[i + 1]);
        let chord = (it.value(x2) - it.value(x1)) / (x2 - x1);
        let s1 = it.derivative(x1) - chord;
        let s2 = it.derivative(x2) - chord;
        if s1 * s2 < 0.0 {
            pairs.push((x1, x2));
            i += 2;
        } else {
            i += 1;
        }
    }
    pairs
}

fn fit_pairs(prep: &Prepared, pairs: &[(f64, f64)]) -> Result<TailFit> {
    let it = &prep.interp;
    let xs: Vec<f64> = pairs.iter().map(|&(a, b)| 0.5 * (model(a, prep.h) + model(b, prep.h))).collect();
    let ys: Vec<f64> = pairs.iter().map(|&(a, b)| 0.5 * (it.value(a) + it.value(b))).collect();
    let (limit, a, err) = fit(&xs, &ys)?;
    Ok(TailFit {
        limit,
        a,
        err,
        pairs: pairs.len(),
        fallback: false,
        pair_points: pairs.to_vec(),
    })
}

fn fit_samples(prep: &Prepared) -> Result<TailFit> {
    let it = &prep.interp;
    let (xs, ys): (Vec<f64>, Vec<f64>) = it
        .nodes()
        .iter()
        .filter(|&&x| x >= prep.lo && x <= prep.hi)
        .map(|&x| (model(x, prep.h), it.value(x)))
        .unzip();
    let (limit, a, se) = fit(&xs, &ys)?;
    // residual oscillation is correlated, so widen the formal error
    let rms = (xs.iter().zip(&ys).map(|(x, y)| (y - limit + a * x).powi(2)).sum::<f64>() / xs.len() as f64).sqrt();
    Ok(TailFit {
        limit,
        a,
        err: 3.0 * se + rms,
        pairs: 0,
        fallback: true,
        pair_points: Vec::new(),
    })
}

/// I_∞ from an integral function tabulated on the momentum grid.
pub fn tail_limit(p: &[f64], integral: &[f64], win: TailWindow) -> Result<TailFit> {
    let prep = prepare(p, integral, win)?;
    let pairs = inflection_pairs(&prep);
    if pairs.len() >= MIN_PAIRS {
        fit_pairs(&prep, &pairs)
    } else {
        fit_samples(&prep)
    }
}

/// Same fit as `reference` (identical pairs or fallback), applied to
/// another integral function on the same grid. Linear in `integral`.
pub fn tail_limit_like(p: &[f64], integral: &[f64], win: TailWindow, reference: &TailFit) -> Result<TailFit> {
    let prep = prepare(p, integral, win)?;
    if reference.fallback {
        fit_samples(&prep)
    } else {
        fit_pairs(&prep, &reference.pair_points)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seasum::grid::build_p_grid;

    fn window(r: f64, factor: f64, n: usize) -> (Vec<f64>, TailWindow) {
        let g = build_p_grid(r, factor, n).unwrap();
        let w = TailWindow {
            uniform_start: g.uniform_start,
            shift: g.steps_per_half_period,
        };
        (g.p, w)
    }

    #[test]
    fn synthetic_tail() {
        let r = 1.0;
        let (p, win) = window(r, 40.0, 400);
        let vals: Vec<f64> = p.iter().map(|&x| 3.0 - 1.0 / (x * x) + 1e-6 * (2.0 * r * x).sin() / x).collect();
        let t = tail_limit(&p, &vals, win).unwrap();
        assert!((t.limit - 3.0).abs() < 1e-8, "{t:?}");
        assert!((t.a - 1.0).abs() < 1e-3);
    }

    #[test]
    fn oscillation_dominated_tail_uses_pairs() {
        let r = 0.5;
        let (p, mut win) = window(r, 40.0, 400);
        win.shift = 0;
        let vals: Vec<f64> = p.iter().map(|&x| -2.0 - 0.3 / (x * x) + 1e-3 * (2.0 * r * x + 0.4).sin() / x).collect();
        let t = tail_limit(&p, &vals, win).unwrap();
        assert!(!t.fallback && t.pairs >= 4, "{t:?}");
        assert!((t.limit + 2.0).abs() < 1e-5, "{t:?}");
        // the same pairs applied to a scaled copy give a scaled limit
        let scaled: Vec<f64> = vals.iter().map(|v| -3.0 * v).collect();
        let u = tail_limit_like(&p, &scaled, win, &t).unwrap();
        assert!((u.limit + 3.0 * t.limit).abs() < 1e-12);
    }

    #[test]
    fn constant_input() {
        let (p, win) = window(0.3, 40.0, 400);
        let vals = vec![1.25; p.len()];
        let t = tail_limit(&p, &vals, win).unwrap();
        assert!((t.limit - 1.25).abs() < 1e-14);
    }

    #[test]
    fn undamped_window() {
        let (p, mut win) = window(0.3, 40.0, 400);
        win.shift = 0;
        let vals: Vec<f64> = p.iter().map(|&x| 0.5 - 2.0 / (x * x)).collect();
        let t = tail_limit(&p, &vals, win).unwrap();
        assert!((t.limit - 0.5).abs() < 1e-12);
    }
}
