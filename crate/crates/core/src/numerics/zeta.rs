use super::bernoulli::even_bernoulli_f64;
use super::context::{Estimate, PrecisionContext};
use crate::error::{Error, Result};

/// `sum_{n >= m} n^{-s}` for real `s > 1`, `m >= 1`, by Euler-Maclaurin at
/// the lower end (summing directly up to 10 first). The error is the first
/// omitted correction.
pub fn power_tail(s: f64, m: u64) -> Estimate {
    assert!(s > 1.0 && m >= 1);
    let mut direct = 0.0;
    let mut m = m;
    while m < 10 {
        direct += (m as f64).powf(-s);
        m += 1;
    }
    let a = m as f64;
    let mut total = a.powf(1.0 - s) / (s - 1.0) + 0.5 * a.powf(-s);
    let bern = even_bernoulli_f64();
    // derivative factor s(s+1)...(s+2j-2) / (2j)!, times a^{-s-2j+1}
    let mut rising = s;
    let mut fact = 2.0;
    let mut power = a.powf(-s - 1.0);
    let mut last = f64::INFINITY;
    for j in 1..bern.len() {
        let term = bern[j] / fact * rising * power;
        if term.abs() >= last.abs() {
            // asymptotic series started to diverge; stop before it does
            break;
        }
        total += term;
        last = term;
        if term.abs() < 1e-18 * total.abs() {
            break;
        }
        rising *= (s + 2.0 * j as f64 - 1.0) * (s + 2.0 * j as f64);
        fact *= (2 * j + 1) as f64 * (2 * j + 2) as f64;
        power /= a * a;
    }
    Estimate { value: direct + total, error: last.abs() + 4.0 * f64::EPSILON * (direct + total) }
}

/// `ζ(n)` for `n >= 2`: a direct head sum plus an Euler-Maclaurin tail.
pub fn zeta_pos(n: u32, ctx: &PrecisionContext) -> Result<Estimate> {
    if n < 2 {
        return Err(Error::domain(format!("zeta_pos needs n >= 2, got {n}")));
    }
    ctx.check_representable()?;
    let s = n as f64;
    let mut cut = 10u64;
    loop {
        let head: f64 = (1..cut).rev().map(|k| (k as f64).powf(-s)).sum();
        let tail = power_tail(s, cut);
        let est = Estimate {
            value: head + tail.value,
            error: tail.error + cut as f64 * f64::EPSILON * head,
        };
        if est.error <= ctx.tolerance() {
            return Ok(est);
        }
        if cut * 2 > ctx.budget() {
            return Err(Error::PrecisionUnreachable(format!(
                "zeta({n}): error {:.1e} above tolerance {:.1e} at cutoff {cut}",
                est.error,
                ctx.tolerance()
            )));
        }
        cut *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn closed_forms() {
        let ctx = PrecisionContext::default();
        let z2 = zeta_pos(2, &ctx).unwrap();
        assert!((z2.value - PI * PI / 6.0).abs() < 1e-14, "{z2:?}");
        let z4 = zeta_pos(4, &ctx).unwrap();
        assert!((z4.value - PI.powi(4) / 90.0).abs() < 1e-14);
        assert!((z4.value - 1.0823232337).abs() < 1e-10);
        let z20 = zeta_pos(20, &ctx).unwrap();
        assert!(z20.value - 1.0 < 1e-6 && z20.value > 1.0);
        assert!(zeta_pos(1, &ctx).is_err());
    }

    #[test]
    fn tail_against_direct_sum() {
        // sum_{n>=3} n^{-3} = ζ(3) - 1 - 1/8
        let t = power_tail(3.0, 3);
        assert!((t.value - (1.2020569031595942 - 1.125)).abs() < 1e-15);
        let big = power_tail(2.0, 100_001);
        assert!((big.value - 1.0 / 100_000.5).abs() < 1e-14);
    }

    #[test]
    fn unreachable_tolerance() {
        let ctx = PrecisionContext::new(16, 1000, 1e-30).unwrap();
        assert!(matches!(zeta_pos(2, &ctx), Err(Error::PrecisionUnreachable(_))));
    }
}
