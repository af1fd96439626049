//! Bound and continuum Dirac-Coulomb states, closed form against the ODE
//! evaluator.

use diracsea::dirac::{bound_radial_ode, continuum_radial_ode, DiracState, EnergySign};
use diracsea::ALPHA;

fn main() -> diracsea::Result<()> {
    let rs = [0.01, 0.1, 1.0, 10.0, 100.0, 300.0];

    let s = DiracState::bound(2, 1, ALPHA)?;
    println!("2p1/2: E - 1 = {:.12e}", s.energy_parts().em1);
    let ode = bound_radial_ode(&s, &rs)?;
    for (r, o) in rs.iter().zip(&ode) {
        let c = s.radial(*r)?;
        println!("  r = {r:7.2}  g = {:+.10e} (ode {:+.10e})  f = {:+.10e}", c.g, o.g, c.f);
    }

    let s = DiracState::continuum(1.5, -2, EnergySign::Negative, ALPHA)?;
    println!("continuum p = 1.5, κ = -2, E < 0");
    let rs = [0.05, 0.5, 2.0, 8.0];
    let ode = continuum_radial_ode(&s, &rs)?;
    for (r, o) in rs.iter().zip(&ode) {
        let c = s.radial(*r)?;
        println!("  r = {r:5.2}  g = {:+.12e} (ode {:+.12e})", c.g, o.g);
    }
    Ok(())
}
