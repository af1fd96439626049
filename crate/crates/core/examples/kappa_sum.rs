//! Mode densities, their ±E, ±κ combination and the converged κ sum
//! against the linear counter-term.

use diracsea::dirac::EnergySign;
use diracsea::seasum::{combined_integrand, kappa_block, mode_density, momentum_counterterm_slope, SIGMA};
use diracsea::ALPHA;

fn main() -> diracsea::Result<()> {
    let r = 0.5;
    let p = 10.0;
    for k in [-1, 1] {
        let wn = mode_density(p, k, EnergySign::Negative, r, ALPHA)?;
        let wp = mode_density(p, k, EnergySign::Positive, r, ALPHA)?;
        println!("κ = {k:+}: w(-E) = {wn:.10e}  w(+E) = {wp:.10e}");
    }
    let mut partial = 0.0;
    for k in 1..=12 {
        partial += SIGMA * kappa_block(p, k, r, ALPHA)?;
        println!("|κ| ≤ {k:2}: {partial:+.10e}");
    }
    let (w, info) = combined_integrand(p, r, ALPHA, 200, 1e-12)?;
    let line = momentum_counterterm_slope(r, ALPHA) * p;
    println!("converged at |κ| = {}: {:+.10e}, (8α/π) r p = {line:.10e}", info.kappa_used, SIGMA * w);
    Ok(())
}
