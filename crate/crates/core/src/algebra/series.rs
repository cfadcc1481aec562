//! Truncated formal power series `sum_k c_k u^k` stored as coefficient
//! vectors.

use num_traits::{One, Zero};

use super::rational::Rational;
use super::tpoly::Ring;

/// Coefficients of `exp(f)` up to `u^order`. Requires `f[0] == 0`.
///
/// Uses `n g_n = sum_{k=1}^n k f_k g_{n-k}`, from `g' = f' g`.
pub fn exp_series<R: Ring>(f: &[R], order: usize) -> Vec<R> {
    assert!(f.first().is_none_or(Zero::is_zero), "exp needs zero constant term");
    let mut g = Vec::with_capacity(order + 1);
    g.push(R::one());
    for n in 1..=order {
        let mut acc = R::zero();
        for k in 1..=n {
            if let Some(fk) = f.get(k) {
                acc = acc + R::from_rational(&Rational::from_integer(k.into())) * fk.clone() * g[n - k].clone();
            }
        }
        g.push(acc * R::from_rational(&Rational::new(1.into(), n.into())));
    }
    g
}

/// Coefficients of `1/f` up to `u^order`. Requires `f[0] == 1`.
pub fn reciprocal_series<R: Ring>(f: &[R], order: usize) -> Vec<R> {
    assert!(f.first().is_some_and(One::is_one), "reciprocal needs unit constant term");
    let mut d = Vec::with_capacity(order + 1);
    d.push(R::one());
    for n in 1..=order {
        let mut acc = R::zero();
        for i in 1..=n {
            if let Some(fi) = f.get(i) {
                acc = acc - fi.clone() * d[n - i].clone();
            }
        }
        d.push(acc);
    }
    d
}

/// Truncated product of two series.
pub fn mul_series<R: Ring>(a: &[R], b: &[R], order: usize) -> Vec<R> {
    (0..=order)
        .map(|n| {
            (0..=n).fold(R::zero(), |acc, i| match (a.get(i), b.get(n - i)) {
                (Some(x), Some(y)) => acc + x.clone() * y.clone(),
                _ => acc,
            })
        })
        .collect()
}
