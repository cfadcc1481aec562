//! One streaming engine for nested sums
//! `sum_{n1 > n2 > ... > nk >= 1} prod_i q_i^{n_i} / n_i^{s_i}` with
//! `0 <= |q_i| <= 1`.
//!
//! Partial sums `A_j(n)` of the tail from level `j` are updated in place,
//! so memory is O(depth). Two stopping regimes:
//! * `|q_1| < 1`: the tail is bounded by a geometric majorant and the loop
//!   runs until that bound drops below tolerance.
//! * `q_1 = 1`: the tail after `N` is bracketed between
//!   `A_2(N) * sum_{n>N} n^{-s_1}` and an integral-comparison majorant; the
//!   guaranteed majorant. The reported value adds the next-order terms
//!   `A_{j+1}(N) * int_{x_1 > ... > x_j > N} prod x_i^{-s_i}` and is
//!   clamped into the bracket, whose far end sets the error. The value is
//!   returned at the first checkpoint whose error fits the tolerance, or
//!   at the budget.

use super::context::{Estimate, PrecisionContext};
use super::zeta::power_tail;
use crate::algebra::{to_f64, Rational};
use crate::compositions::{BiComposition, Composition};
use crate::error::{Error, Result};
use num_traits::Zero;

#[derive(Clone, Copy, Debug)]
struct Level {
    s: i64,
    q: f64,
}

struct Stream<'a> {
    levels: &'a [Level],
    /// `acc[j] + comp[j]` is the running nested sum from level `j`
    /// (Neumaier-compensated); `acc[k] = 1`.
    acc: Vec<f64>,
    comp: Vec<f64>,
    n: u64,
    abs_sum: f64,
}

impl<'a> Stream<'a> {
    fn new(levels: &'a [Level]) -> Self {
        let mut acc = vec![0.0; levels.len() + 1];
        acc[levels.len()] = 1.0;
        Stream { levels, acc, comp: vec![0.0; levels.len() + 1], n: 0, abs_sum: 0.0 }
    }

    fn value(&self, j: usize) -> f64 {
        self.acc[j] + self.comp[j]
    }

    fn step(&mut self) {
        self.n += 1;
        let nf = self.n as f64;
        let n_exp = self.n.min(i32::MAX as u64) as i32;
        for (j, level) in self.levels.iter().enumerate() {
            let q_pow = if level.q == 1.0 { 1.0 } else { level.q.powi(n_exp) };
            let t = q_pow * nf.powi(-(level.s as i32)) * self.value(j + 1);
            if j == 0 {
                self.abs_sum += t.abs();
            }
            let sum = self.acc[j] + t;
            self.comp[j] += if self.acc[j].abs() >= t.abs() {
                (self.acc[j] - sum) + t
            } else {
                (t - sum) + self.acc[j]
            };
            self.acc[j] = sum;
        }
    }

    fn advance_to(&mut self, n: u64) {
        while self.n < n {
            self.step();
        }
    }

    /// Each term carries a few ulps from `powi` and the level products;
    /// compensated summation adds only O(ε) on top.
    fn rounding(&self) -> f64 {
        let log_n = (self.n.max(2) as f64).log2();
        (8.0 + 4.0 * self.levels.len() as f64 + 2.0 * log_n) * f64::EPSILON * self.abs_sum
    }
}

/// Majorant for the inner partial sums: `A(n) <= k * n^d * (1 + ln n)^a`.
struct InnerBound {
    k: f64,
    d: f64,
    a: u32,
}

fn inner_bound(levels: &[Level]) -> InnerBound {
    let mut b = InnerBound { k: 1.0, d: 0.0, a: 0 };
    for level in levels {
        match level.s {
            s if s >= 2 => b.k *= 1.0 + 1.0 / (s - 1) as f64,
            1 => b.a += 1,
            s => b.d += (1 - s) as f64,
        }
    }
    b
}

fn geometric(levels: &[Level], ctx: &PrecisionContext) -> Result<Estimate> {
    let q = levels[0].q.abs();
    if q == 0.0 {
        return Ok(Estimate::exact(0.0));
    }
    let inner = inner_bound(&levels[1..]);
    let exponent = inner.d - levels[0].s as f64;
    let a = inner.a as f64;
    let ln_q = q.ln();
    let ln_g = |m: f64| inner.k.ln() + m * ln_q + exponent * m.ln() + a * (1.0 + m.ln()).ln();
    let mut stream = Stream::new(levels);
    loop {
        stream.step();
        let m = (stream.n + 1) as f64;
        let growth = if exponent > 0.0 { ((m + 1.0) / m).powf(exponent) } else { 1.0 };
        let ratio = q * growth * ((1.0 + (m + 1.0).ln()) / (1.0 + m.ln())).powf(a);
        if ratio < 1.0 {
            let tail = ln_g(m).exp() / (1.0 - ratio);
            let error = tail + stream.rounding();
            if error <= ctx.tolerance() {
                return Ok(Estimate { value: stream.value(0), error });
            }
        }
        if stream.n >= ctx.budget() {
            return Err(Error::PrecisionUnreachable(format!(
                "geometric tail with |q| = {q} not below tolerance {:.1e} within {} terms",
                ctx.tolerance(),
                ctx.budget()
            )));
        }
    }
}

/// `sum_{n>N} n^{-sigma} (1 + ln n)^a`, bounded by the integral from `N`.
fn log_power_tail(sigma: f64, a: u32, big_n: u64) -> Option<f64> {
    let nf = big_n as f64;
    let l = 1.0 + nf.ln();
    if a == 0 {
        let t = power_tail(sigma, big_n + 1);
        return Some(t.value + t.error);
    }
    if sigma * l <= a as f64 {
        // integrand not yet decreasing at N
        return None;
    }
    let base = nf.powf(1.0 - sigma);
    let mut total = 0.0;
    let mut falling = 1.0;
    for j in 0..=a {
        total += falling * l.powi((a - j) as i32) * base / (sigma - 1.0).powi(j as i32 + 1);
        falling *= (a - j) as f64;
    }
    Some(total)
}

/// `int_{x_1 > ... > x_j > N} prod x_i^{-s_i} dx` in closed form. With
/// `x = N e^t` the integrand becomes `prod e^{(1 - s_i) t_i}`, integrated
/// level by level as a sum of `t^a e^{bt}` terms. `None` when some term
/// does not decay.
fn iterated_tail(levels: &[Level], big_n: u64) -> Option<f64> {
    use std::collections::BTreeMap;
    // (a, b) -> coefficient of t^a e^{bt}
    let mut terms: BTreeMap<(u32, i64), f64> = BTreeMap::from([((0, 0), 1.0)]);
    for level in levels[1..].iter().rev() {
        let c = 1 - level.s;
        let mut next: BTreeMap<(u32, i64), f64> = BTreeMap::new();
        for (&(a, b), &v) in &terms {
            let b = b + c;
            if b == 0 {
                *next.entry((a + 1, 0)).or_default() += v / (a + 1) as f64;
                continue;
            }
            // int_0^t τ^a e^{bτ} dτ
            let bf = b as f64;
            let mut falling = 1.0;
            for k in 0..=a {
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                *next.entry((a - k, b)).or_default() += v * sign * falling / bf.powi(k as i32 + 1);
                falling *= (a - k) as f64;
            }
            let sign = if a % 2 == 0 { 1.0 } else { -1.0 };
            *next.entry((0, 0)).or_default() -= v * sign * falling / bf.powi(a as i32 + 1);
        }
        terms = next;
    }
    let c1 = 1 - levels[0].s;
    let mut total = 0.0;
    for (&(a, b), &v) in &terms {
        let decay = -(b + c1);
        if decay <= 0 {
            return None;
        }
        let fact: f64 = (1..=a).map(f64::from).product();
        total += v * fact / (decay as f64).powi(a as i32 + 1);
    }
    let exponent = levels.len() as i64 - levels.iter().map(|l| l.s).sum::<i64>();
    Some((big_n as f64).powi(exponent as i32) * total)
}

fn polynomial(levels: &[Level], ctx: &PrecisionContext, cutoff: Option<u64>) -> Result<Estimate> {
    let s1 = levels[0].s;
    let p = levels.iter().skip(1).position(|l| l.q < 1.0).map_or(levels.len(), |i| i + 1);
    let inner = inner_bound(&levels[1..p]);
    let sigma = s1 as f64 - inner.d;
    if sigma <= 1.0 {
        return Err(Error::Divergent(format!(
            "outer exponent {s1} does not dominate the growth of the inner sums"
        )));
    }
    let sub = if p < levels.len() {
        let e = geometric(&levels[p..], ctx)?;
        e.value.abs() + e.error
    } else {
        1.0
    };
    let checkpoints: Vec<u64> = match cutoff {
        Some(n) => vec![n],
        None => {
            let mut v = Vec::new();
            let mut n = 1000u64;
            while n < ctx.budget() {
                v.push(n);
                n *= 2;
            }
            v.push(ctx.budget());
            v
        }
    };
    let mut stream = Stream::new(levels);
    let mut last = None;
    for &n in &checkpoints {
        stream.advance_to(n);
        let Some(majorant) = log_power_tail(sigma, inner.a, n) else { continue };
        let tail = power_tail(s1 as f64, n + 1);
        let lower = stream.value(1) * tail.value;
        let upper = sub * inner.k * majorant;
        let upper = upper.max(lower);
        let (lo, hi) = (stream.value(0) + lower, stream.value(0) + upper);
        let mut center = lower;
        for j in 2..=p {
            if let Some(weight) = iterated_tail(&levels[..j], n) {
                center += stream.value(j) * weight;
            }
        }
        let value = (stream.value(0) + center).clamp(lo, hi);
        let est = Estimate {
            value,
            error: (value - lo).max(hi - value) + stream.value(1) * tail.error + stream.rounding(),
        };
        if est.error <= ctx.tolerance() {
            return Ok(est);
        }
        last = Some(est);
    }
    last.ok_or_else(|| {
        Error::PrecisionUnreachable(format!("no usable tail bound up to cutoff {}", stream.n))
    })
}

fn nested(levels: &[Level], ctx: &PrecisionContext, cutoff: Option<u64>) -> Result<Estimate> {
    ctx.check_representable()?;
    if levels[0].q < 1.0 {
        geometric(levels, ctx)
    } else {
        polynomial(levels, ctx, cutoff)
    }
}

/// Multiple polylogarithm `Li_s(z)` for `|z| < 1`.
pub fn li_eval(s: &Composition, z: f64, ctx: &PrecisionContext) -> Result<Estimate> {
    if !(z.abs() < 1.0) {
        return Err(Error::domain(format!("li_eval needs |z| < 1, got {z}")));
    }
    let levels: Vec<Level> = s
        .entries()
        .iter()
        .enumerate()
        .map(|(i, &e)| Level { s: e as i64, q: if i == 0 { z } else { 1.0 } })
        .collect();
    nested(&levels, ctx, None)
}

fn mzv_levels(s: &Composition) -> Result<Vec<Level>> {
    if !s.is_convergent() {
        return Err(Error::domain(format!("{s} is not a convergent composition")));
    }
    Ok(s.entries().iter().map(|&e| Level { s: e as i64, q: 1.0 }).collect())
}

/// Convergent multiple zeta value. The error is a guaranteed bound; if the
/// tolerance cannot be met within the budget the best bracket is returned.
pub fn mzv_eval(s: &Composition, ctx: &PrecisionContext) -> Result<Estimate> {
    nested(&mzv_levels(s)?, ctx, None)
}

/// [`mzv_eval`] with the outer sum truncated at exactly `cutoff` terms.
pub fn mzv_eval_with_cutoff(s: &Composition, cutoff: u64, ctx: &PrecisionContext) -> Result<Estimate> {
    if cutoff == 0 {
        return Err(Error::domain("cutoff must be positive"));
    }
    nested(&mzv_levels(s)?, ctx, Some(cutoff))
}

/// Directional regularized value
/// `sum_{n1 > ... > nk} prod_i e^{n_i r_i eps} / n_i^{s_i}` for `eps < 0`.
pub fn z_directional(b: &BiComposition, eps: f64, ctx: &PrecisionContext) -> Result<Estimate> {
    if !(eps < 0.0 && eps.is_finite()) {
        return Err(Error::domain(format!("eps must be negative, got {eps}")));
    }
    let mut levels = Vec::with_capacity(b.depth());
    for (s, r) in b.pairs() {
        if r < &Rational::zero() {
            return Err(Error::domain(format!("direction entries must be non-negative, got {r}")));
        }
        let q = if r.is_zero() { 1.0 } else { (to_f64(r) * eps).exp() };
        levels.push(Level { s: *s, q });
    }
    nested(&levels, ctx, None)
}
