use std::f64::consts::PI;

use super::{ln_gamma_complex, Complex};
use crate::dd::{KahanSum, DD};
use crate::{Error, Result};

/// |z| up to which the Taylor series is used.
pub const KUMMER_TAYLOR_RADIUS: f64 = 30.0;

const TAYLOR_BUDGET: f64 = 1e-10;
const ASYMPTOTIC_BUDGET: f64 = 1e-8;
const MAX_TERMS: usize = 20_000;

/// A ₁F₁ value together with its estimated relative error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Kummer {
    pub value: Complex,
    pub rel_err: f64,
}

/// Complex number in double-double arithmetic.
#[derive(Clone, Copy)]
struct Cdd {
    re: DD,
    im: DD,
}

impl Cdd {
    fn from(z: Complex) -> Self {
        Cdd { re: DD::new(z.re), im: DD::new(z.im) }
    }

    fn to_complex(self) -> Complex {
        Complex::new(self.re.to_f64(), self.im.to_f64())
    }

    fn norm(self) -> f64 {
        self.re.to_f64().hypot(self.im.to_f64())
    }

    fn add(self, o: Cdd) -> Cdd {
        Cdd { re: self.re + o.re, im: self.im + o.im }
    }

    fn mul(self, o: Cdd) -> Cdd {
        Cdd {
            re: self.re * o.re - self.im * o.im,
            im: self.re * o.im + self.im * o.re,
        }
    }

    fn div(self, o: Cdd) -> Cdd {
        let d = o.re.sqr() + o.im.sqr();
        Cdd {
            re: (self.re * o.re + self.im * o.im) / d,
            im: (self.im * o.re - self.re * o.im) / d,
        }
    }
}

/// Complex Neumaier accumulator.
#[derive(Default, Clone, Copy)]
struct CSum {
    re: KahanSum,
    im: KahanSum,
}

impl CSum {
    fn add(&mut self, z: Complex) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    fn value(&self) -> Complex {
        Complex::new(self.re.value(), self.im.value())
    }
}

fn is_nonpositive_integer(z: Complex) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0
}

/// Confluent hypergeometric ₁F₁(a; b; z).
///
/// Taylor series with compensated summation for |z| ≤ 30. Beyond that the
/// large-|z| expansion is attempted; if its smallest term is still above
/// 1e-8 of the result the call fails with [`Error::Precision`].
pub fn kummer_1f1(a: Complex, b: Complex, z: Complex) -> Result<Kummer> {
    if is_nonpositive_integer(b) {
        return Err(Error::domain(format!("kummer_1f1: b = {b} is a pole")));
    }
    if ![a.re, a.im, b.re, b.im, z.re, z.im].iter().all(|x| x.is_finite()) {
        return Err(Error::domain("kummer_1f1: non-finite argument"));
    }
    if z.norm() <= KUMMER_TAYLOR_RADIUS {
        let k = taylor(a, b, z)?;
        if k.rel_err > TAYLOR_BUDGET {
            return Err(Error::Precision {
                context: "kummer_1f1 Taylor series".into(),
                achieved: k.rel_err,
                budget: TAYLOR_BUDGET,
            });
        }
        return Ok(k);
    }
    let k = asymptotic(a, b, z)?;
    if k.rel_err > ASYMPTOTIC_BUDGET {
        return Err(Error::Precision {
            context: "kummer_1f1 asymptotic expansion".into(),
            achieved: k.rel_err,
            budget: ASYMPTOTIC_BUDGET,
        });
    }
    Ok(k)
}

fn taylor(a: Complex, b: Complex, z: Complex) -> Result<Kummer> {
    // terms and sum carried in double-double so that cancellation between
    // terms of size e^|z| costs nothing down to 2^-104 of the largest term
    const DD_EPS: f64 = 4.93e-32;
    let (a_dd, b_dd, z_dd) = (Cdd::from(a), Cdd::from(b), Cdd::from(z));
    let mut sum = Cdd::from(Complex::new(0.0, 0.0));
    let mut term = Cdd::from(Complex::new(1.0, 0.0));
    let mut max_term: f64 = 0.0;
    let mut small_run = 0;
    let terminating = is_nonpositive_integer(a);
    let finish = |sum: Cdd, max_term: f64, n: usize| {
        let value = sum.to_complex();
        let growth = max_term / value.norm().max(f64::MIN_POSITIVE);
        let rel_err = DD_EPS * growth * (2.0 + (n as f64).sqrt()) + 0.5 * f64::EPSILON;
        Kummer { value, rel_err }
    };
    for k in 0..MAX_TERMS {
        sum = sum.add(term);
        max_term = max_term.max(term.norm());
        let kf = DD::new(k as f64);
        let num = Cdd { re: a_dd.re + kf, im: a_dd.im };
        let den = Cdd { re: (b_dd.re + kf) * (k as f64 + 1.0), im: b_dd.im * (k as f64 + 1.0) };
        term = term.mul(num).mul(z_dd).div(den);
        let tn = term.norm();
        if tn == 0.0 && terminating {
            return Ok(finish(sum, max_term, k + 1));
        }
        if !tn.is_finite() {
            return Err(Error::Overflow("kummer_1f1 Taylor series".into()));
        }
        if tn <= 1e-34 * sum.norm() {
            small_run += 1;
            if small_run >= 3 && (k as f64 + 1.0) > (a.norm() - b.norm()).max(0.0) {
                return Ok(finish(sum, max_term, k + 1));
            }
        } else {
            small_run = 0;
        }
    }
    Err(Error::Precision {
        context: "kummer_1f1 Taylor series did not converge".into(),
        achieved: f64::INFINITY,
        budget: TAYLOR_BUDGET,
    })
}

/// Sum of an asymptotic series Σ (p)_s (q)_s / s! · w^s up to its smallest term.
fn divergent_sum(p: Complex, q: Complex, w: Complex) -> (Complex, f64) {
    let mut sum = CSum::default();
    let mut term = Complex::new(1.0, 0.0);
    let mut last = f64::INFINITY;
    for s in 0..200 {
        let mag = term.norm();
        if mag > last {
            break;
        }
        sum.add(term);
        last = mag;
        if mag < 1e-18 {
            break;
        }
        let sf = s as f64;
        term = term * (p + sf) * (q + sf) / (sf + 1.0) * w;
    }
    (sum.value(), last)
}

fn inv_gamma(z: Complex) -> Result<Complex> {
    if is_nonpositive_integer(z) {
        return Ok(Complex::new(0.0, 0.0));
    }
    Ok((-ln_gamma_complex(z)?).exp())
}

fn asymptotic(a: Complex, b: Complex, z: Complex) -> Result<Kummer> {
    // ₁F₁/Γ(b) ~ e^z z^{a-b}/Γ(a) Σ (1-a)_s (b-a)_s/s! z^{-s}
    //          + e^{±iπa} z^{-a}/Γ(b-a) Σ (a)_s (a-b+1)_s/s! (-z)^{-s}
    let zi = z.inv();
    let (s1, e1) = divergent_sum(Complex::new(1.0, 0.0) - a, b - a, zi);
    let (s2, e2) = divergent_sum(a, a - b + 1.0, -zi);
    let lnz = z.ln();
    let ln_gb = ln_gamma_complex(b)?;
    let sign = if z.im >= 0.0 { 1.0 } else { -1.0 };
    let phase = Complex::new(0.0, sign * PI) * a;
    let c1 = (z + (a - b) * lnz + ln_gb).exp() * inv_gamma(a)?;
    let c2 = (phase - a * lnz + ln_gb).exp() * inv_gamma(b - a)?;
    let value = c1 * s1 + c2 * s2;
    let err = (c1.norm() * e1 + c2.norm() * e2) / value.norm().max(f64::MIN_POSITIVE);
    if !value.re.is_finite() || !value.im.is_finite() {
        return Err(Error::Overflow("kummer_1f1 asymptotic expansion".into()));
    }
    Ok(Kummer {
        value,
        rel_err: err.max(f64::EPSILON),
    })
}

/// Regular Whittaker function M_{λ,μ}(z) = e^{-z/2} z^{μ+½} ₁F₁(μ-λ+½; 1+2μ; z)
/// on the principal branch of z^{μ+½}.
pub fn whittaker_m(lambda: Complex, mu: f64, z: Complex) -> Result<Kummer> {
    let b = Complex::new(1.0 + 2.0 * mu, 0.0);
    if is_nonpositive_integer(b) {
        return Err(Error::domain(format!("whittaker_m: 1+2μ = {} is a pole", b.re)));
    }
    let a = mu - lambda + 0.5;
    let k = kummer_1f1(a, b, z)?;
    let prefactor = (-z * 0.5 + (mu + 0.5) * z.ln()).exp();
    Ok(Kummer {
        value: prefactor * k.value,
        rel_err: k.rel_err,
    })
}
