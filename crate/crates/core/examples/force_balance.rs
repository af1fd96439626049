//! Confinement and electrostatic force densities of filled shells cancel.

use diracsea::dirac::{DiracState, EnergySign};
use diracsea::forces::{balance_residual, shell_stress};
use diracsea::ALPHA;

fn main() -> diracsea::Result<()> {
    let states = [
        ("1s1/2", DiracState::bound(1, -1, ALPHA)?),
        ("3d5/2", DiracState::bound(3, -3, ALPHA)?),
        ("p=0.7 κ=2 E>0", DiracState::continuum(0.7, 2, EnergySign::Positive, ALPHA)?),
        ("p=3 κ=-1 E<0", DiracState::continuum(3.0, -1, EnergySign::Negative, ALPHA)?),
    ];
    for (name, s) in &states {
        for r in [0.05, 1.0, 20.0] {
            let b = balance_residual(s, r)?;
            let t = shell_stress(s, r)?;
            println!(
                "{name:<14} r = {r:5.2}  f_conf = {:+.6e}  f_elec = {:+.6e}  rel = {:.1e}  T_rr = {:+.3e}",
                b.f_conf_r, b.f_elec_r, b.rel_residual, t.t_rr
            );
        }
    }
    Ok(())
}
