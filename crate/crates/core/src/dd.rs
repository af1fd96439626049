//! Minimal double-double arithmetic (an unevaluated sum `hi + lo`).
//!
//! Used where a handful of extra digits decide whether an analytic
//! cancellation survives rounding: the confinement force bracket and the
//! κ-sum accumulators.

use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct DD {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl DD {
    pub const ZERO: DD = DD { hi: 0.0, lo: 0.0 };

    #[inline]
    pub const fn new(x: f64) -> Self {
        DD { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn abs(self) -> Self {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    #[inline]
    pub fn sqr(self) -> Self {
        self * self
    }
}

impl From<f64> for DD {
    fn from(x: f64) -> Self {
        DD::new(x)
    }
}

impl Neg for DD {
    type Output = DD;
    #[inline]
    fn neg(self) -> DD {
        DD {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Add for DD {
    type Output = DD;
    #[inline]
    fn add(self, o: DD) -> DD {
        let (s, e) = two_sum(self.hi, o.hi);
        let (t, f) = two_sum(self.lo, o.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        DD { hi, lo }
    }
}

impl Sub for DD {
    type Output = DD;
    #[inline]
    fn sub(self, o: DD) -> DD {
        self + (-o)
    }
}

impl Mul for DD {
    type Output = DD;
    #[inline]
    fn mul(self, o: DD) -> DD {
        let (p, e) = two_prod(self.hi, o.hi);
        let e = e + (self.hi * o.lo + self.lo * o.hi);
        let (hi, lo) = quick_two_sum(p, e);
        DD { hi, lo }
    }
}

impl Div for DD {
    type Output = DD;
    #[inline]
    fn div(self, o: DD) -> DD {
        let q1 = self.hi / o.hi;
        let r = self - o * DD::new(q1);
        let q2 = r.hi / o.hi;
        let r = r - o * DD::new(q2);
        let q3 = r.hi / o.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        DD { hi, lo } + DD::new(q3)
    }
}

impl Add<f64> for DD {
    type Output = DD;
    #[inline]
    fn add(self, o: f64) -> DD {
        let (s, e) = two_sum(self.hi, o);
        let (hi, lo) = quick_two_sum(s, e + self.lo);
        DD { hi, lo }
    }
}

impl Sub<f64> for DD {
    type Output = DD;
    #[inline]
    fn sub(self, o: f64) -> DD {
        self + (-o)
    }
}

impl Mul<f64> for DD {
    type Output = DD;
    #[inline]
    fn mul(self, o: f64) -> DD {
        let (p, e) = two_prod(self.hi, o);
        let (hi, lo) = quick_two_sum(p, e + self.lo * o);
        DD { hi, lo }
    }
}

impl Div<f64> for DD {
    type Output = DD;
    #[inline]
    fn div(self, o: f64) -> DD {
        self / DD::new(o)
    }
}

impl std::iter::Sum for DD {
    fn sum<I: Iterator<Item = DD>>(iter: I) -> DD {
        iter.fold(DD::ZERO, |a, b| a + b)
    }
}

/// Neumaier-compensated running sum for plain f64 terms.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    comp: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}
