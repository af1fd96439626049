use std::f64::consts::{FRAC_PI_2, PI};

use super::{struve_l, StruveOrder};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BesselKOrder {
    Zero,
    One,
}

impl BesselKOrder {
    fn nu(self) -> f64 {
        match self {
            BesselKOrder::Zero => 0.0,
            BesselKOrder::One => 1.0,
        }
    }
}

/// Trapezoid rule for ∫₀^∞ e^{-x (cosh t - 1)} w(t) dt.
///
/// The integrand is analytic in the strip |Im t| < π/2, so the trapezoid rule
/// converges exponentially in 1/h. The step shrinks like 1/√x to resolve the
/// Gaussian-like peak at t = 0 for large x.
fn scaled_cosh_integral(x: f64, weight: impl Fn(f64) -> f64) -> f64 {
    let h = (0.35 / x.sqrt()).min(0.1);
    // cutoff where the exponent has fallen below e^-44 of the t = 0 value
    let mut sum = 0.5 * weight(0.0);
    let mut t = h;
    loop {
        let s = (0.5 * t).sinh();
        let expo = -2.0 * x * s * s;
        let w = weight(t);
        let term = expo.exp() * w;
        sum += term;
        if expo + w.abs().ln() < -44.0 && t > 1.0 {
            break;
        }
        t += h;
        if t > 60.0 {
            break;
        }
    }
    sum * h
}

fn check_k_domain(x: f64) -> Result<()> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("bessel_k: x = {x} must be positive and finite")));
    }
    Ok(())
}

/// e^x K_ν(x) for ν ∈ {0, 1}.
pub fn bessel_k_scaled(order: BesselKOrder, x: f64) -> Result<f64> {
    check_k_domain(x)?;
    let nu = order.nu();
    Ok(scaled_cosh_integral(x, |t| (nu * t).cosh()))
}

/// Modified Bessel function of the second kind K₀ or K₁.
///
/// Underflows to exactly zero once e^{-x} leaves the double range.
pub fn bessel_k(order: BesselKOrder, x: f64) -> Result<f64> {
    let scaled = bessel_k_scaled(order, x)?;
    Ok(scaled * (-x).exp())
}

/// Bickley function Ki₁(z) = ∫_z^∞ K₀(y) dy.
///
/// Uses π/2·{1 - z[K₀L₋₁ - K₁L₀]} while the bracket is well conditioned
/// (z ≤ 2) and the representation Ki₁(z) = ∫₀^∞ e^{-z cosh t}/cosh t dt beyond,
/// where the closed form loses roughly z/ln 10 digits to cancellation.
/// Above this argument the Struve closed form cancels too much and the
/// integral representation is used.
const BICKLEY_SWITCH: f64 = 2.0;

pub fn bickley_ki1(z: f64) -> Result<f64> {
    if !(z >= 0.0) || !z.is_finite() {
        return Err(Error::domain(format!("bickley_ki1: z = {z} must be non-negative")));
    }
    if z == 0.0 {
        return Ok(FRAC_PI_2);
    }
    if z <= BICKLEY_SWITCH {
        let k0 = bessel_k(BesselKOrder::Zero, z)?;
        let k1 = bessel_k(BesselKOrder::One, z)?;
        let lm1 = struve_l(StruveOrder::MinusOne, z)?;
        let l0 = struve_l(StruveOrder::Zero, z)?;
        return Ok(FRAC_PI_2 * (1.0 - z * (k0 * lm1 + k1 * l0)));
    }
    let scaled = scaled_cosh_integral(z, |t| 1.0 / t.cosh());
    Ok(scaled * (-z).exp())
}

/// J_{l+½}(x) for half-integer order l + ½ > 0.
///
/// Upward recurrence from the trigonometric closed forms when x ≥ l, Miller
/// downward recurrence below, power series for tiny x.
pub fn bessel_j_halfint(order: f64, x: f64) -> Result<f64> {
    let l2 = order - 0.5;
    if !(l2 >= 0.0) || l2.fract() != 0.0 {
        return Err(Error::domain(format!(
            "bessel_j_halfint: order {order} is not a positive half-integer"
        )));
    }
    if !(x >= 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("bessel_j_halfint: x = {x} must be non-negative")));
    }
    let l = l2 as usize;
    if x == 0.0 {
        return Ok(0.0);
    }
    let jl = spherical_j(l, x);
    Ok((2.0 * x / PI).sqrt() * jl)
}

/// Spherical Bessel j_l(x) for x > 0.
pub(crate) fn spherical_j(l: usize, x: f64) -> f64 {
    let lf = l as f64;
    if x < 1e-3 * (lf + 1.0).sqrt() || x * x < 0.1 * (2.0 * lf + 3.0) {
        return spherical_j_series(l, x);
    }
    let (s, c) = x.sin_cos();
    let j0 = s / x;
    if l == 0 {
        return j0;
    }
    let j1 = s / (x * x) - c / x;
    if x >= lf {
        let (mut jm, mut j) = (j0, j1);
        for k in 1..l {
            let next = (2.0 * k as f64 + 1.0) / x * j - jm;
            jm = j;
            j = next;
        }
        return j;
    }
    // Miller: start well above l and recur downward.
    let start = l + 20 + (x as usize) + ((40.0 * (lf + 1.0)).sqrt() as usize);
    let (mut jp, mut j) = (0.0_f64, 1e-300_f64);
    let mut target = 0.0;
    let mut at1 = 0.0;
    for k in (1..=start).rev() {
        let prev = (2.0 * k as f64 + 1.0) / x * j - jp;
        jp = j;
        j = prev;
        if k - 1 == l {
            target = j;
        }
        if k - 1 == 1 {
            at1 = j;
        }
        if j.abs() > 1e250 {
            j *= 1e-250;
            jp *= 1e-250;
            target *= 1e-250;
            at1 *= 1e-250;
        }
    }
    // j now holds the unnormalised j_0
    if j0.abs() >= j1.abs() {
        target * j0 / j
    } else {
        target * j1 / at1
    }
}

fn spherical_j_series(l: usize, x: f64) -> f64 {
    // j_l(x) = x^l/(2l+1)!! Σ_k (-x²/2)^k / (k! (2l+3)(2l+5)...(2l+2k+1))
    let mut lead = 1.0;
    for k in 0..=l {
        lead *= x / (2.0 * k as f64 + 1.0);
    }
    lead /= x;
    let mut term = 1.0;
    let mut sum = 1.0;
    let y = -0.5 * x * x;
    for k in 1..200 {
        term *= y / (k as f64 * (2.0 * (l + k) as f64 + 1.0));
        sum += term;
        if term.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    lead * sum
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    // (x, K0, K1) from mpmath at 50 digits
    const K_TABLE: [(f64, f64, f64); 8] = [
        (1e-6, 13.931_442_073_626_42, 999_999.999_992_784_3),
        (0.1, 2.427_069_024_702_016_6, 9.853_844_780_870_606),
        (1.0, 0.421_024_438_240_708_3, 0.601_907_230_197_234_6),
        (2.0, 0.113_893_872_749_533_44, 0.139_865_881_816_522_43),
        (5.0, 3.691_098_334_042_594e-3, 4.044_613_445_452_164e-3),
        (20.0, 5.741_237_815_336_524e-10, 5.883_057_969_557_038e-10),
        (100.0, 4.656_628_229_175_902e-45, 4.679_853_735_636_909e-45),
        (700.0, 4.669_776_431_685_377e-306, 4.673_110_796_707_966e-306),
    ];

    #[test]
    fn k_matches_reference_table() {
        for (x, k0, k1) in K_TABLE {
            let a = bessel_k(BesselKOrder::Zero, x).unwrap();
            let b = bessel_k(BesselKOrder::One, x).unwrap();
            assert!(rel(a, k0) < 1e-12, "K0({x}) = {a} vs {k0}");
            assert!(rel(b, k1) < 1e-12, "K1({x}) = {b} vs {k1}");
        }
    }

    #[test]
    fn k_large_argument_asymptote_and_underflow() {
        for x in [200.0, 400.0, 650.0] {
            let k0 = bessel_k(BesselKOrder::Zero, x).unwrap();
            let asym = (PI / (2.0 * x)).sqrt() * (-x).exp();
            assert!((k0 / asym - 1.0).abs() < 1.0 / x);
        }
        assert_eq!(bessel_k(BesselKOrder::One, 800.0).unwrap(), 0.0);
    }

    #[test]
    fn k_domain() {
        assert!(bessel_k(BesselKOrder::Zero, 0.0).is_err());
        assert!(bessel_k(BesselKOrder::One, -1.0).is_err());
    }

    #[test]
    fn k0_derivative_is_minus_k1() {
        let mut x = 0.1;
        while x <= 20.0 {
            let h = 1e-5 * x;
            let d = (bessel_k(BesselKOrder::Zero, x + h).unwrap()
                - bessel_k(BesselKOrder::Zero, x - h).unwrap())
                / (2.0 * h);
            let k1 = bessel_k(BesselKOrder::One, x).unwrap();
            assert!(rel(-d, k1) < 1e-6, "x={x}");
            x *= 1.2;
        }
    }

    #[test]
    fn bickley_reference_values() {
        let table = [
            (0.5, 0.643_693_805_863_747_5),
            (1.0, 0.328_286_478_171_118_35),
            (3.0, 3.084_823_672_701_536e-2),
            (8.0, 1.388_415_054_529_972e-4),
            (15.0, 9.524_797_739_457_035e-8),
            (30.0, 2.098_841_748_283_691e-14),
        ];
        assert_eq!(bickley_ki1(0.0).unwrap(), FRAC_PI_2);
        for (z, want) in table {
            let got = bickley_ki1(z).unwrap();
            assert!(rel(got, want) < 1e-11, "Ki1({z}) = {got} vs {want}");
        }
    }

    #[test]
    fn bickley_switch_is_continuous() {
        let z = BICKLEY_SWITCH;
        let below = bickley_ki1(z).unwrap();
        let above = scaled_cosh_integral(z, |t| 1.0 / t.cosh()) * (-z).exp();
        assert!(rel(below, above) < 1e-11);
    }

    #[test]
    fn half_integer_closed_forms() {
        let j = bessel_j_halfint(0.5, FRAC_PI_2).unwrap();
        assert!((j - 2.0 / PI).abs() < 1e-15);
        let x: f64 = 2.0;
        let closed = (2.0 / (PI * x)).sqrt() * (x.sin() / x - x.cos());
        let j = bessel_j_halfint(1.5, x).unwrap();
        assert!(rel(j, closed) < 1e-14);
        assert!(rel(j, 0.491_293_778_687_162_35) < 1e-14);
        assert_eq!(bessel_j_halfint(2.5, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn half_integer_reference_values() {
        let cases = [
            (10.5, 3.3, 1.271_287_868_563_038_6e-5),
            (20.5, 55.1, 7.472_122_732_205_06e-2),
            (0.5, 1e-3, 2.523_132_101_498_094e-2),
        ];
        for (nu, x, want) in cases {
            let got = bessel_j_halfint(nu, x).unwrap();
            assert!(rel(got, want) < 1e-12, "J_{nu}({x}) = {got} vs {want}");
        }
        assert!(bessel_j_halfint(1.0, 1.0).is_err());
    }

    #[test]
    fn spherical_recurrence_consistency() {
        // j_{l-1} + j_{l+1} = (2l+1)/x j_l across the series/Miller/upward switch points
        for &x in &[0.05, 0.7, 3.0, 9.5, 31.0] {
            for l in 1..40 {
                let lhs = spherical_j(l - 1, x) + spherical_j(l + 1, x);
                let rhs = (2 * l + 1) as f64 / x * spherical_j(l, x);
                assert!((lhs - rhs).abs() <= 1e-12 * (lhs.abs() + rhs.abs()) + 1e-300, "l={l} x={x}");
            }
        }
    }
}
