use super::{DiracState, Energy, QuantumNumbers, RadialValues, StateKind};
use crate::specfun::{laguerre_gen, ln_gamma};
use crate::{Error, Result};

/// E_{n,κ} = [1 + α²/(n - ε)²]^{-1/2}, ε = |κ| - γ.
pub fn bound_energy(n: u32, kappa: i32, alpha: f64) -> Result<f64> {
    Ok(bound_energy_parts(n, kappa, alpha)?.e)
}

/// Bound energy with E - 1 formed without cancellation.
pub(super) fn bound_energy_parts(n: u32, kappa: i32, alpha: f64) -> Result<Energy> {
    let qn = QuantumNumbers::new(kappa)?;
    let ak = kappa.unsigned_abs();
    if n < 1 || n < ak {
        return Err(Error::domain(format!("bound state needs n ≥ |κ| ≥ 1, got n = {n}, κ = {kappa}")));
    }
    if n == ak && kappa > 0 {
        return Err(Error::domain(format!("no bound state with n = κ = {kappa} > 0")));
    }
    let gamma = qn.gamma(alpha)?;
    let eps = ak as f64 - gamma;
    let d = n as f64 - eps;
    let x = (alpha / d).powi(2);
    let s = (1.0 + x).sqrt();
    let e = 1.0 / s;
    Ok(Energy {
        e,
        ep1: 1.0 + e,
        em1: -x / ((1.0 + s) * s),
    })
}

/// Unnormalised r·g and r·f from the Laguerre closed form.
fn closed_form(n: u32, kappa: i32, alpha: f64, e: f64, r: f64) -> Result<(f64, f64)> {
    let k = kappa as f64;
    let ak = k.abs();
    let gamma = (k * k - alpha * alpha).sqrt();
    let d = n as f64 - (ak - gamma);
    let p = (1.0 - e * e).sqrt();
    let m = n - kappa.unsigned_abs();
    let big_n = (alpha * alpha + d * d).sqrt();
    let gk = gamma / k;
    let x = 2.0 * p * r;
    let decay = -p * r;
    let f_plus = if m >= 1 {
        let ln_a = 0.5 * (ln_gamma(m as f64)? - ln_gamma(m as f64 + 2.0 * gamma + 1.0)?);
        let amp = ((d + gk * big_n) / (gk * gk * big_n * big_n)).sqrt();
        let lag = laguerre_gen(m as usize - 1, 2.0 * gamma + 1.0, x);
        -amp * lag * (ln_a + (gamma + 1.0) * x.ln() + decay).exp()
    } else {
        0.0
    };
    let ln_a = 0.5 * (ln_gamma(m as f64 + 1.0)? - ln_gamma(m as f64 + 2.0 * gamma)?);
    let amp = ((d - gk * big_n) / (gk * gk * big_n * big_n)).max(0.0).sqrt();
    let lag = laguerre_gen(m as usize, 2.0 * gamma - 1.0, x);
    let f_minus = -amp * lag * (ln_a + gamma * x.ln() + decay).exp();
    let c1 = alpha / (k * (k - gamma)).sqrt();
    let c2 = ((k - gamma) / k).sqrt();
    let sk = k.signum();
    let rg = 0.5 * p.sqrt() * (c1 * f_plus + c2 * f_minus) * sk;
    let rf = 0.5 * p.sqrt() * (c2 * f_plus + c1 * f_minus);
    Ok((rg, rf))
}

/// Factor that makes ∫(f² + g²) r² dr = 1 for the closed form.
pub(super) fn renormalisation(state: &DiracState) -> Result<f64> {
    let StateKind::Bound { n } = state.kind else {
        return Err(Error::domain("renormalisation needs a bound state"));
    };
    let (kappa, alpha, e) = (state.kappa(), state.alpha(), state.energy());
    let p = state.momentum();
    let r_max = (60.0 + 6.0 * n as f64) / p;
    let density_err = std::cell::RefCell::new(None);
    let mut total = 0.0;
    let segments = 12;
    for i in 0..segments {
        let a = r_max * i as f64 / segments as f64;
        let b = r_max * (i + 1) as f64 / segments as f64;
        let out = quadrature::double_exponential::integrate(
            |r| match closed_form(n, kappa, alpha, e, r) {
                Ok((rg, rf)) => rg * rg + rf * rf,
                Err(err) => {
                    density_err.borrow_mut().get_or_insert(err);
                    0.0
                }
            },
            a,
            b,
            1e-15,
        );
        total += out.integral;
    }
    if let Some(err) = density_err.into_inner() {
        return Err(err);
    }
    if !(total > 0.0) || !total.is_finite() {
        return Err(Error::numerical(format!("bound state norm integral = {total}")));
    }
    Ok(1.0 / total.sqrt())
}

/// Bound radial functions with derivatives, renormalised to unit norm.
pub fn bound_radial(state: &DiracState, r: f64) -> Result<RadialValues> {
    let StateKind::Bound { n } = state.kind else {
        return Err(Error::domain("bound_radial called on a non-bound state"));
    };
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::domain(format!("bound_radial: r = {r} must be positive")));
    }
    let (rg, rf) = closed_form(n, state.kappa(), state.alpha(), state.energy(), r)?;
    let c = state.bound_norm() / r;
    Ok(state.derivatives(r, rg * c, rf * c))
}
