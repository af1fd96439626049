//! Piecewise degree-7 interpolation with exact integration.
//!
//! On [x_i, x_{i+1}] the interpolant is the polynomial through the eight
//! nodes x_{i-3} … x_{i+4} (shifted inward at the ends). Integrals use
//! 4-point Gauss–Legendre, exact for degree 7.

use crate::{Error, Result};

const ORDER: usize = 8;

const GL_X: [f64; 4] = [
    -0.861_136_311_594_052_6,
    -0.339_981_043_584_856_3,
    0.339_981_043_584_856_3,
    0.861_136_311_594_052_6,
];
const GL_W: [f64; 4] = [
    0.347_854_845_137_453_85,
    0.652_145_154_862_546_1,
    0.652_145_154_862_546_1,
    0.347_854_845_137_453_85,
];

#[derive(Debug, Clone)]
pub struct Interpolant {
    x: Vec<f64>,
    /// Newton divided differences per interval, nodes in `start`
    coef: Vec<[f64; ORDER]>,
    start: Vec<usize>,
    /// running integral at each node, cum[0] = 0
    cum: Vec<f64>,
}

impl Interpolant {
    pub fn new(x: &[f64], y: &[f64]) -> Result<Self> {
        let n = x.len();
        if n != y.len() {
            return Err(Error::domain("interpolant: abscissae and values differ in length"));
        }
        if n < ORDER {
            return Err(Error::domain(format!("interpolant needs ≥ {ORDER} samples, got {n}")));
        }
        if !x.windows(2).all(|w| w[1] > w[0]) {
            return Err(Error::domain("interpolant: abscissae must be strictly ascending"));
        }
        let mut coef = Vec::with_capacity(n - 1);
        let mut start = Vec::with_capacity(n - 1);
        for i in 0..n - 1 {
            let s = i.saturating_sub(3).min(n - ORDER);
            let mut d = [0.0; ORDER];
            d.copy_from_slice(&y[s..s + ORDER]);
            for level in 1..ORDER {
                for j in (level..ORDER).rev() {
                    d[j] = (d[j] - d[j - 1]) / (x[s + j] - x[s + j - level]);
                }
            }
            coef.push(d);
            start.push(s);
        }
        let mut it = Interpolant {
            x: x.to_vec(),
            coef,
            start,
            cum: vec![0.0; n],
        };
        for i in 0..n - 1 {
            it.cum[i + 1] = it.cum[i] + it.partial(i, x[i + 1]);
        }
        Ok(it)
    }

    pub fn nodes(&self) -> &[f64] {
        &self.x
    }

    fn interval(&self, t: f64) -> usize {
        match self.x.partition_point(|&v| v <= t) {
            0 => 0,
            k => (k - 1).min(self.x.len() - 2),
        }
    }

    /// value and first derivative of interval i's polynomial at t
    fn eval_in(&self, i: usize, t: f64) -> (f64, f64) {
        let (v, dv, _) = self.eval2_in(i, t);
        (v, dv)
    }

    fn eval2_in(&self, i: usize, t: f64) -> (f64, f64, f64) {
        let d = &self.coef[i];
        let s = self.start[i];
        let mut v = d[ORDER - 1];
        let mut dv = 0.0;
        let mut ddv = 0.0;
        for j in (0..ORDER - 1).rev() {
            let u = t - self.x[s + j];
            ddv = ddv * u + 2.0 * dv;
            dv = dv * u + v;
            v = v * u + d[j];
        }
        (v, dv, ddv)
    }

    pub fn value(&self, t: f64) -> f64 {
        self.eval_in(self.interval(t), t).0
    }

    pub fn derivative(&self, t: f64) -> f64 {
        self.eval_in(self.interval(t), t).1
    }

    pub fn second_derivative(&self, t: f64) -> f64 {
        self.eval2_in(self.interval(t), t).2
    }

    /// ∫_{x_i}^t of interval i's polynomial
    fn partial(&self, i: usize, t: f64) -> f64 {
        let a = self.x[i];
        let (c, h) = (0.5 * (t + a), 0.5 * (t - a));
        GL_X.iter()
            .zip(GL_W)
            .map(|(u, w)| w * self.eval_in(i, c + h * u).0)
            .sum::<f64>()
            * h
    }

    /// ∫_{x_0}^t of the piecewise interpolant.
    pub fn integral_to(&self, t: f64) -> f64 {
        let i = self.interval(t);
        self.cum[i] + self.partial(i, t)
    }

    /// Running integral at every node.
    pub fn cumulative(&self) -> &[f64] {
        &self.cum
    }
}

/// Running integral of the samples, starting from 0 at x[0].
pub fn integrate_samples(x: &[f64], y: &[f64]) -> Result<Vec<f64>> {
    Ok(Interpolant::new(x, y)?.cumulative().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sine_on_uniform_grid() {
        let n = 1200;
        let x: Vec<f64> = (0..n).map(|i| i as f64 / (n - 1) as f64).collect();
        let y: Vec<f64> = x.iter().map(|t| (40.0 * t).sin()).collect();
        let it = Interpolant::new(&x, &y).unwrap();
        let want = (1.0 - 40f64.cos()) / 40.0;
        assert!((it.integral_to(1.0) - want).abs() < 1e-10);
        assert!((it.derivative(0.3) - 40.0 * (12.0f64).cos()).abs() < 1e-8);
        assert!((it.second_derivative(0.3) + 1600.0 * (12.0f64).sin()).abs() < 1e-5);
    }

    #[test]
    fn duplicate_abscissae_rejected() {
        let x = [0.0, 1.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0];
        assert!(Interpolant::new(&x, &[0.0; 9]).is_err());
        assert!(Interpolant::new(&x[..5], &[0.0; 5]).is_err());
    }

    #[test]
    fn monotone_integrand_gives_monotone_integral() {
        let x: Vec<f64> = (0..50).map(|i| (i as f64 * 0.1).powf(1.3)).collect();
        let y: Vec<f64> = x.iter().map(|t| 1.0 + t * t).collect();
        let c = integrate_samples(&x, &y).unwrap();
        assert!(c.windows(2).all(|w| w[1] > w[0]));
    }

    proptest! {
        #[test]
        fn degree_seven_polynomials_are_exact(
            coef in proptest::collection::vec(-3.0f64..3.0, 8),
            gaps in proptest::collection::vec(0.05f64..1.0, 11),
        ) {
            let mut x = vec![0.0];
            for g in &gaps {
                x.push(x.last().unwrap() + g);
            }
            let poly = |t: f64| coef.iter().rev().fold(0.0, |acc, c| acc * t + c);
            let anti = |t: f64| coef.iter().enumerate().rev()
                .fold(0.0, |acc, (k, c)| acc * t + c / (k as f64 + 1.0)) * t;
            let y: Vec<f64> = x.iter().map(|&t| poly(t)).collect();
            let it = Interpolant::new(&x, &y).unwrap();
            let b = *x.last().unwrap();
            let want = anti(b);
            let scale = coef.iter().enumerate().map(|(k, c)| c.abs() * b.powi(k as i32 + 1)).sum::<f64>();
            prop_assert!((it.integral_to(b) - want).abs() <= 1e-12 * scale.max(1.0));
            let mid = 0.37 * b;
            prop_assert!((it.integral_to(mid) - anti(mid)).abs() <= 1e-12 * scale.max(1.0));
        }
    }
}
