//! Half-period smoothing F̄(p) = ¼F(p - h) + ½F(p) + ¼F(p + h).

use crate::{Error, Result};

/// Result of [`damp_oscillations`]; `shrunk[i]` marks samples whose
/// stencil had to be narrowed near the ends of the window.
#[derive(Debug, Clone, PartialEq)]
pub struct Damped {
    pub values: Vec<f64>,
    pub shrunk: Vec<bool>,
}

/// Damp samples on a uniform window with the given spacing; `period` is the
/// oscillation period, so the stencil shift is period/2 and must be a
/// whole number of spacings.
pub fn damp_oscillations(samples: &[f64], spacing: f64, period: f64) -> Result<Damped> {
    let steps = 0.5 * period / spacing;
    let m = steps.round() as usize;
    if m == 0 || (steps - m as f64).abs() > 1e-6 * steps {
        return Err(Error::domain(format!(
            "damping: half-period {} is not a multiple of the spacing {spacing}",
            0.5 * period
        )));
    }
    damp_by_steps(samples, m)
}

/// Same as [`damp_oscillations`] with the shift given in grid steps.
pub fn damp_by_steps(samples: &[f64], m: usize) -> Result<Damped> {
    let n = samples.len();
    if n < 2 * m + 1 {
        return Err(Error::domain(format!(
            "damping window of {n} samples cannot hold a ±{m}-step stencil"
        )));
    }
    let mut values = Vec::with_capacity(n);
    let mut shrunk = Vec::with_capacity(n);
    for i in 0..n {
        let k = m.min(i).min(n - 1 - i);
        values.push(0.25 * samples[i - k] + 0.5 * samples[i] + 0.25 * samples[i + k]);
        shrunk.push(k < m);
    }
    Ok(Damped { values, shrunk })
}
