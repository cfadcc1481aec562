use num_traits::{One, Signed, Zero};

use super::bernoulli::zeta_nonpos;
use super::context::PrecisionContext;
use super::laurent::LaurentPoly;
use super::nested::li_eval;
use crate::algebra::{int, Rational};
use crate::compositions::{i_op, Composition};
use crate::error::{Error, Result};

/// Laurent expansion of `e^ε / (1 - e^ε)` through `ε^order`, by exact
/// power-series division.
pub fn gen0_laurent(order: u32) -> LaurentPoly {
    // e^ε/(1-e^ε) = -(1/ε) * q(ε), q = (sum ε^n/n!) / (sum ε^n/(n+1)!)
    let len = order as usize + 2;
    let mut fact = vec![Rational::one()];
    for n in 1..=len {
        fact.push(&fact[n - 1] * int(n as i64));
    }
    let num: Vec<Rational> = (0..len).map(|n| fact[n].recip()).collect();
    let den: Vec<Rational> = (0..len).map(|n| fact[n + 1].recip()).collect();
    let mut q: Vec<Rational> = Vec::with_capacity(len);
    for n in 0..len {
        let mut c = num[n].clone();
        for i in 1..=n {
            c -= &den[i] * &q[n - i];
        }
        q.push(c);
    }
    LaurentPoly::from_terms(q.into_iter().enumerate().map(|(n, c)| (n as i32 - 1, -c)))
}

/// Largest coefficient gap between the expansion of `e^ε/(1-e^ε)` and
/// `-1/ε + sum_i ζ(-i) ε^i / i!` up to `ε^order`. Exact; zero when the
/// identity holds.
pub fn gen0_series_check(order: u32) -> Rational {
    let lhs = gen0_laurent(order);
    let mut rhs = LaurentPoly::monomial(-1, int(-1));
    let mut fact = Rational::one();
    for i in 0..=order {
        if i > 0 {
            fact *= int(i as i64);
        }
        rhs.add_term(i as i32, zeta_nonpos(i) / &fact);
    }
    (-1..=order as i32)
        .map(|e| (lhs.coeff(e) - rhs.coeff(e)).abs())
        .fold(Rational::zero(), |a, b| if b > a { b } else { a })
}

/// Central difference of `ε -> Li_{I(s)}(e^ε)` against `Li_s(e^ε)`.
pub fn fd_derivative_check(s: &Composition, eps: f64, h: f64, ctx: &PrecisionContext) -> Result<f64> {
    if !(h > 0.0 && eps < 0.0 && eps + h < 0.0) {
        return Err(Error::domain(format!("need eps < 0 and 0 < h < -eps, got eps={eps}, h={h}")));
    }
    let inner = ctx.with_tolerance((ctx.tolerance() * h).max(1e-14))?;
    let raised = i_op(s);
    let plus = li_eval(&raised, (eps + h).exp(), &inner)?.value;
    let minus = li_eval(&raised, (eps - h).exp(), &inner)?.value;
    let target = li_eval(s, eps.exp(), &inner)?.value;
    Ok(((plus - minus) / (2.0 * h) - target).abs())
}
