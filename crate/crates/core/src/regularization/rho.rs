use num_traits::Zero;

use super::reduce::zst_reduce;
use crate::algebra::series::{exp_series, reciprocal_series};
use crate::algebra::TPoly;
use crate::compositions::Composition;
use crate::error::{Error, Result};
use crate::numerics::{regpoly_eval, zeta_pos, MzvCache, PrecisionContext};

/// Numeric coefficients of `A(u) = exp(sum_{n>=2} (-1)^n ζ(n) u^n / n)`
/// (`gamma`) and of `1/A(u)` (`delta`), through `u^N`.
#[derive(Clone, Debug, PartialEq)]
pub struct RhoMap {
    pub gamma: Vec<f64>,
    pub delta: Vec<f64>,
}

impl RhoMap {
    pub fn order(&self) -> usize {
        self.gamma.len() - 1
    }
}

pub fn build_rho(order: usize, ctx: &PrecisionContext) -> Result<RhoMap> {
    let mut f = vec![0.0; order + 1];
    for (n, slot) in f.iter_mut().enumerate().skip(2) {
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        *slot = sign * zeta_pos(n as u32, ctx)?.value / n as f64;
    }
    let gamma = exp_series(&f, order);
    let delta = reciprocal_series(&gamma, order);
    Ok(RhoMap { gamma, delta })
}

fn apply(p: &TPoly<f64>, coeffs: &[f64]) -> Result<TPoly<f64>> {
    let order = coeffs.len() - 1;
    let mut out = TPoly::zero();
    for (n, c) in p.iter() {
        if n as usize > order {
            return Err(Error::DegreeOverflow { degree: n, order });
        }
        // falling factorial n!/(n-k)!
        let mut falling = 1.0;
        for (k, g) in coeffs.iter().enumerate().take(n as usize + 1) {
            out.add_term(n - k as u32, c * g * falling);
            falling *= (n - k as u32) as f64;
        }
    }
    Ok(out)
}

/// `ρ(T^n) = sum_k γ_k n!/(n-k)! T^{n-k}`.
pub fn rho_apply(p: &TPoly<f64>, rho: &RhoMap) -> Result<TPoly<f64>> {
    apply(p, &rho.gamma)
}

/// Same shape as [`rho_apply`] with the coefficients of `1/A(u)`.
pub fn beta_apply(p: &TPoly<f64>, rho: &RhoMap) -> Result<TPoly<f64>> {
    apply(p, &rho.delta)
}

/// Compares `exp(sum_{n>=1} (-1)^{n-1} Z(n) u^n / n)` with
/// `1 + sum_n Z([1^n]) u^n` up to `u^N`, where `Z` is the numeric stuffle
/// regularization. Returns the largest coefficient gap.
pub fn corollary_check(order: usize, ctx: &PrecisionContext) -> Result<f64> {
    let mut cache = MzvCache::new(*ctx);
    let mut f: Vec<TPoly<f64>> = vec![TPoly::zero(); order + 1];
    if order >= 1 {
        f[1] = TPoly::t();
    }
    for (n, slot) in f.iter_mut().enumerate().skip(2) {
        let sign = if n % 2 == 0 { -1.0 } else { 1.0 };
        *slot = TPoly::constant(sign * zeta_pos(n as u32, ctx)?.value / n as f64);
    }
    let lhs = exp_series(&f, order);
    let mut worst: f64 = 0.0;
    for (n, left) in lhs.iter().enumerate() {
        let right = if n == 0 {
            TPoly::constant(1.0)
        } else {
            regpoly_eval(&zst_reduce(&Composition::from_vec_unchecked(vec![1; n]))?, &mut cache)?
        };
        let gap = left.clone() - right;
        for (_, c) in gap.iter() {
            worst = worst.max(c.abs());
        }
    }
    Ok(worst)
}
