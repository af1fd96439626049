use std::f64::consts::PI;

use super::Complex;
use crate::{Error, Result};

/// B_{2k} / (2k (2k-1)) for k = 1..=12.
const STIRLING: [f64; 12] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
    77683.0 / 5796.0,
    -236364091.0 / 1506960.0,
];

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;
const STIRLING_MIN_ABS: f64 = 16.0;

fn stirling(w: Complex) -> Complex {
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = Complex::new(0.0, 0.0);
    let mut pow = inv;
    for c in STIRLING {
        series += pow * c;
        pow *= inv2;
    }
    (w - 0.5) * w.ln() - w + HALF_LN_2PI + series
}

/// ln sin(πz) without overflow for large |Im z|.
fn ln_sin_pi(z: Complex) -> Complex {
    if z.im.abs() < 1.0 {
        return (z * PI).sin().ln();
    }
    // sin(πz) = e^{∓iπz}(e^{±2iπz} - 1)/(±2i), picking the decaying exponential.
    let i = Complex::i();
    if z.im > 0.0 {
        let small = (i * 2.0 * PI * z).exp();
        -i * PI * z + ((small - 1.0) / (-2.0 * i)).ln()
    } else {
        let small = (-i * 2.0 * PI * z).exp();
        i * PI * z + ((small - 1.0) / (2.0 * i)).ln()
    }
}

fn is_nonpositive_integer(z: Complex) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0
}

/// Principal-branch log Γ(z).
///
/// For Re z ≥ ½ the imaginary part is the continuous branch obtained by
/// summing logarithms (the same convention as `scipy.special.loggamma`); in
/// the reflected half-plane only `exp` of the result is guaranteed.
pub fn ln_gamma_complex(z: Complex) -> Result<Complex> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::domain(format!("ln_gamma_complex: non-finite argument {z}")));
    }
    if is_nonpositive_integer(z) {
        return Err(Error::domain(format!("ln_gamma_complex: pole at z = {}", z.re)));
    }
    if z.re < 0.5 {
        let reflected = ln_gamma_complex(Complex::new(1.0, 0.0) - z)?;
        return Ok(Complex::new(PI.ln(), 0.0) - ln_sin_pi(z) - reflected);
    }
    let mut w = z;
    let mut shift = Complex::new(0.0, 0.0);
    while w.norm() < STIRLING_MIN_ABS {
        shift += w.ln();
        w += 1.0;
    }
    Ok(stirling(w) - shift)
}

/// Real log |Γ(x)|.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::domain(format!("ln_gamma: non-finite argument {x}")));
    }
    if x <= 0.0 && x.fract() == 0.0 {
        return Err(Error::domain(format!("ln_gamma: pole at x = {x}")));
    }
    if x < 0.5 {
        let s = (PI * x).sin().abs();
        return Ok(PI.ln() - s.ln() - ln_gamma(1.0 - x)?);
    }
    let mut w = x;
    let mut prod = 1.0;
    while w < STIRLING_MIN_ABS {
        prod *= w;
        w += 1.0;
    }
    let inv = 1.0 / w;
    let inv2 = inv * inv;
    let mut series = 0.0;
    let mut pow = inv;
    for c in STIRLING {
        series += c * pow;
        pow *= inv2;
    }
    Ok((w - 0.5) * w.ln() - w + HALF_LN_2PI + series - prod.ln())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn gamma_one_is_zero() {
        let v = ln_gamma_complex(Complex::new(1.0, 0.0)).unwrap();
        assert!(v.norm() < 1e-15);
    }

    #[test]
    fn factorial_values() {
        let v = ln_gamma_complex(Complex::new(5.0, 0.0)).unwrap();
        assert!((v.re - 24f64.ln()).abs() < 1e-14);
        assert!(v.im.abs() < 1e-15);
        assert!((ln_gamma(171.0).unwrap() - 706.573_062_245_787_4).abs() < 1e-11);
    }

    #[test]
    fn modulus_on_unit_shifted_imaginary_line() {
        // |Γ(1+i)|² = π / sinh π
        let v = ln_gamma_complex(Complex::new(1.0, 1.0)).unwrap();
        let expected = (PI / PI.sinh()).sqrt();
        assert!(rel(v.re.exp(), expected) < 1e-14);
        assert!(rel(v.re.exp(), 0.521_564_0).abs() < 1e-7);
    }

    #[test]
    fn reflected_half_plane() {
        // Γ(-0.5) = -2√π
        let v = ln_gamma_complex(Complex::new(-0.5, 0.0)).unwrap();
        let g = v.exp();
        assert!(rel(g.re, -2.0 * PI.sqrt()) < 1e-14, "{g}");
        assert!((ln_gamma(-0.5).unwrap() - (2.0 * PI.sqrt()).ln()).abs() < 1e-14);
        // |Γ(-2.5+3i)| from mpmath
        let v = ln_gamma_complex(Complex::new(-2.5, 3.0)).unwrap();
        assert!(rel(v.re.exp(), 5.652_536_202_998_547e-4) < 1e-12);
    }

    #[test]
    fn large_imaginary_part() {
        // Re lnΓ(0.5 + 60i) from mpmath
        let v = ln_gamma_complex(Complex::new(0.5, 60.0)).unwrap();
        assert!(rel(v.re, -93.328_841_074_489_12) < 1e-14, "{}", v.re);
        let v = ln_gamma_complex(Complex::new(0.25, -200.0)).unwrap();
        assert!(v.re.is_finite());
    }

    #[test]
    fn poles_are_rejected() {
        assert!(ln_gamma_complex(Complex::new(0.0, 0.0)).is_err());
        assert!(ln_gamma_complex(Complex::new(-3.0, 0.0)).is_err());
        assert!(ln_gamma(-2.0).is_err());
    }
}
