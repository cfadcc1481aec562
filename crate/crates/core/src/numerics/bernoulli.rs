use std::sync::OnceLock;

use num_traits::Zero;

use crate::algebra::{int, Rational};

/// Bernoulli numbers with `B1 = +1/2`, from
/// `sum_{k=0}^{m} C(m+1, k) B_k = m + 1`.
pub fn bernoulli_plus(n: usize) -> Rational {
    let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        // C(m+1, k) for k = 0..=m, built incrementally
        let mut binom = int(1);
        let mut acc = Rational::zero();
        for (k, bk) in b.iter().enumerate() {
            acc += &binom * bk;
            binom = binom * int((m + 1 - k) as i64) / int(k as i64 + 1);
        }
        // binom is now C(m+1, m) = m+1
        b.push((int(m as i64 + 1) - acc) / binom);
    }
    b.pop().unwrap()
}

/// `ζ(-i) = -B_{i+1} / (i + 1)`, exact.
pub fn zeta_nonpos(i: u32) -> Rational {
    -bernoulli_plus(i as usize + 1) / int(i as i64 + 1)
}

/// `B_{2j}` as floats for `j = 0..=20`.
pub(crate) fn even_bernoulli_f64() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| (0..=20).map(|j| crate::algebra::to_f64(&bernoulli_plus(2 * j))).collect())
}
