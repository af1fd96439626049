//! Uehling vacuum-polarization density and its two asymptotes.

use diracsea::uehling::{uehling_asymptotic, uehling_density, uehling_oracle, Regime};
use diracsea::ALPHA;

fn main() -> diracsea::Result<()> {
    println!("{:>6} {:>14} {:>14} {:>10} {:>10}", "r", "rho", "4πr²rho", "small", "large");
    for r in [0.01, 0.03, 0.1, 0.3, 1.0, 3.0, 4.0] {
        let u = uehling_density(r, ALPHA)?;
        let check = uehling_oracle(r, ALPHA)?;
        assert!((u.rho / check - 1.0).abs() < 1e-10);
        println!(
            "{r:6.2} {:14.6e} {:14.6e} {:10.4} {:10.4}",
            u.rho,
            u.v_reduced,
            u.rho / uehling_asymptotic(r, ALPHA, Regime::Small)?,
            u.rho / uehling_asymptotic(r, ALPHA, Regime::Large)?
        );
    }
    Ok(())
}
