use super::{DiracState, RadialValues, StateKind};
use crate::specfun::bessel_j_halfint;
use crate::{Error, Result};

/// Free spherical waves:
/// r·g = -√((E+1)/2E) √(pr) J_{|κ+½|}(pr) sign(κ),
/// r·f = -√((E-1)/2E) √(pr) J_{|κ-½|}(pr) sign(E).
pub fn free_radial(state: &DiracState, r: f64) -> Result<RadialValues> {
    let StateKind::Free { p, sign } = state.kind() else {
        return Err(Error::domain("free_radial called on a non-free state"));
    };
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::domain(format!("free_radial: r = {r} must be positive")));
    }
    let k = state.kappa() as f64;
    let en = state.energy_parts();
    let x = p * r;
    let up = (en.ep1 / (2.0 * en.e)).sqrt();
    let lo = (en.em1 / (2.0 * en.e)).sqrt();
    let rg = -up * x.sqrt() * bessel_j_halfint((k + 0.5).abs(), x)? * k.signum();
    let rf = -lo * x.sqrt() * bessel_j_halfint((k - 0.5).abs(), x)? * sign.value();
    Ok(state.derivatives(r, rg / r, rf / r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirac::EnergySign;

    #[test]
    fn kappa_minus_one_is_spherical_j0() {
        let p = 0.8;
        let s = DiracState::free(p, -1, EnergySign::Positive).unwrap();
        let e = (1.0 + p * p).sqrt();
        let c = ((e + 1.0) / (2.0 * e)).sqrt() * (2.0 / std::f64::consts::PI).sqrt();
        for r in [0.1, 1.0, 5.0, 40.0] {
            let v = s.radial(r).unwrap();
            let want = c * (p * r).sin() / r;
            assert!((v.g - want).abs() < 1e-14 * c.max(want.abs()), "r={r}");
        }
    }

    #[test]
    fn energy_sign_flips_f_only() {
        for kappa in [-3, -1, 1, 4] {
            let a = DiracState::free(2.1, kappa, EnergySign::Positive).unwrap().radial(1.7).unwrap();
            let b = DiracState::free(2.1, kappa, EnergySign::Negative).unwrap().radial(1.7).unwrap();
            let e = (1.0 + 2.1f64 * 2.1).sqrt();
            // |E| ± 1 swap between the components under E → -E
            let up = ((e + 1.0) / (e - 1.0)).sqrt();
            assert!((b.g - a.g / up).abs() < 1e-14 * a.g.abs().max(1e-300));
            assert!((b.f + a.f * up).abs() < 1e-14 * a.f.abs().max(1e-300));
        }
    }

    #[test]
    fn satisfies_radial_equation() {
        let h = 1e-5;
        for kappa in [-2, -1, 1, 3] {
            for sign in [EnergySign::Positive, EnergySign::Negative] {
                let s = DiracState::free(1.3, kappa, sign).unwrap();
                for r in [0.3, 2.0, 11.0] {
                    let v = s.radial(r).unwrap();
                    let up = s.radial(r + h).unwrap();
                    let dn = s.radial(r - h).unwrap();
                    let gp = (up.g - dn.g) / (2.0 * h);
                    let fp = (up.f - dn.f) / (2.0 * h);
                    let scale = v.g.abs() + v.f.abs() / r + v.gp.abs() + v.fp.abs();
                    assert!((gp - v.gp).abs() < 1e-8 * scale, "κ={kappa} r={r}");
                    assert!((fp - v.fp).abs() < 1e-8 * scale, "κ={kappa} r={r}");
                }
            }
        }
    }

    #[test]
    fn mean_density_is_one_over_pi() {
        let p = 1.0;
        let s = DiracState::free(p, 2, EnergySign::Positive).unwrap();
        let n = 4000;
        let (a, b) = (200.0, 200.0 + 40.0 * std::f64::consts::PI);
        let mut acc = 0.0;
        for i in 0..n {
            let r = a + (b - a) * (i as f64 + 0.5) / n as f64;
            let v = s.radial(r).unwrap();
            acc += r * r * (v.g * v.g + v.f * v.f);
        }
        let mean = acc / n as f64;
        assert!((mean * std::f64::consts::PI - 1.0).abs() < 1e-3, "{mean}");
    }
}
