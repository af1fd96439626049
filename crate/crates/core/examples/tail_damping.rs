//! The integral function at one radius: raw, damped, and the fitted limit.

use diracsea::figures::tail_oscillation;
use diracsea::seasum::{build_integrand_table, damp_by_steps, tail_limit, VPConfig};

fn main() -> diracsea::Result<()> {
    let r = 0.5;
    let cfg = VPConfig::desk();
    let table = build_integrand_table(r, &cfg, false)?;
    let win = table.window();
    let damped = damp_by_steps(&table.integral_fn[win.uniform_start..], win.shift)?;
    let n = table.p_grid.len();
    for i in (win.uniform_start..n).step_by(n / 20) {
        let d = &damped;
        let j = i - win.uniform_start;
        let dv = if d.shrunk[j] { f64::NAN } else { d.values[j] };
        println!("p = {:8.3}  I = {:+.8e}  damped = {:+.8e}", table.p_grid[i], table.integral_fn[i], dv);
    }
    let fit = tail_limit(&table.p_grid, &table.integral_fn, win)?;
    println!("limit {:+.10e} ± {:.1e}, a = {:.4e}, {} pairs", fit.limit, fit.err, fit.a, fit.pairs);
    let osc = tail_oscillation(&table)?;
    println!("oscillation amplitude {:.2e} -> {:.2e}", osc.amplitude_raw, osc.amplitude_damped);
    Ok(())
}
