//! Summed confinement and electrostatic force densities of the sea.

use diracsea::seasum::{force_density_sums, VPConfig};

fn main() -> diracsea::Result<()> {
    let mut cfg = VPConfig::desk();
    cfg.r_list = vec![0.1, 0.3, 1.0];
    for row in force_density_sums(&cfg)? {
        println!(
            "r = {:4.2}  f_conf = {:+.10e}  f_elec = {:+.10e}  rel = {:.1e}  α v/(4πr⁴) = {:+.10e}",
            row.r, row.f_conf, row.f_elec, row.rel_residual, row.f_elec_from_density
        );
    }
    Ok(())
}
