use std::f64::consts::PI;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StruveOrder {
    MinusOne,
    Zero,
}

/// Modified Struve function L₋₁ or L₀ by its power series (all terms positive).
pub fn struve_l(order: StruveOrder, x: f64) -> Result<f64> {
    if !(x >= 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("struve_l: x = {x} must be non-negative")));
    }
    // L_ν(x) = Σ_k (x/2)^{2k+ν+1} / (Γ(k+3/2) Γ(k+ν+3/2))
    let q = 0.25 * x * x;
    let (mut term, shift) = match order {
        StruveOrder::MinusOne => (2.0 / PI, 0.5),
        StruveOrder::Zero => (2.0 * x / PI, 1.5),
    };
    let mut sum = term;
    let mut k = 0.0;
    loop {
        term *= q / ((k + 1.5) * (k + shift));
        sum += term;
        k += 1.0;
        if !sum.is_finite() {
            return Err(Error::Overflow(format!("struve_l at x = {x}")));
        }
        if term <= 1e-17 * sum || term == 0.0 {
            break;
        }
    }
    Ok(sum)
}
