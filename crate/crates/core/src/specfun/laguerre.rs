/// Generalized Laguerre polynomial L_n^a(x) by the three-term recurrence
/// (k+1) L_{k+1} = (2k+1+a-x) L_k - (k+a) L_{k-1}.
pub fn laguerre_gen(n: usize, a: f64, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 1.0 + a - x;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + a - x) * cur - (kf + a) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn binom(top: f64, k: u32) -> f64 {
        (0..k).fold(1.0, |acc, i| acc * (top - i as f64) / (i as f64 + 1.0))
    }

    /// Explicit coefficients: L_n^a(x) = Σ_j (-1)^j C(n+a, n-j) x^j / j!
    fn explicit(n: u32, a: f64, x: f64) -> f64 {
        let mut fact = 1.0;
        let mut sum = 0.0;
        for j in 0..=n {
            if j > 0 {
                fact *= j as f64;
            }
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            sum += sign * binom(n as f64 + a, n - j) * x.powi(j as i32) / fact;
        }
        sum
    }

    #[test]
    fn low_orders() {
        assert_eq!(laguerre_gen(0, 3.7, 11.0), 1.0);
        assert_eq!(laguerre_gen(1, 2.5, 1.7), 1.0 + 2.5 - 1.7);
    }

    #[test]
    fn third_order_against_coefficients() {
        let want = explicit(3, 2.5, 1.7);
        assert!((laguerre_gen(3, 2.5, 1.7) - want).abs() < 1e-14);
        assert!((want - 0.528_666_666_666_666_9).abs() < 1e-14);
    }

    #[test]
    fn high_order_reference() {
        // mpmath laguerre(50, 7.5, 80)
        let v = laguerre_gen(50, 7.5, 80.0);
        assert!((v / -3_006_548_766_722_227.6 - 1.0).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn recurrence_residual(n in 1usize..50, a in 0.0f64..10.0, x in 0.0f64..100.0) {
            let lm = laguerre_gen(n - 1, a, x);
            let l0 = laguerre_gen(n, a, x);
            let lp = laguerre_gen(n + 1, a, x);
            let nf = n as f64;
            let lhs = (nf + 1.0) * lp;
            let rhs = (2.0 * nf + 1.0 + a - x) * l0 - (nf + a) * lm;
            let scale = lhs.abs().max((2.0 * nf + 1.0 + a + x) * l0.abs()).max((nf + a) * lm.abs());
            prop_assert!((lhs - rhs).abs() <= 1e-12 * scale);
        }
    }
}
