//! Coefficients of ρ and β = ρ^-1, and the generating-series identity for
//! stuffle-regularized ζ(1,...,1).
//!
//!     cargo run --release --example rho_beta

use rota_mzv::algebra::TPoly;
use rota_mzv::compositions::Composition;
use rota_mzv::numerics::{regpoly_eval, MzvCache, PrecisionContext};
use rota_mzv::regularization::{beta_apply, build_rho, corollary_check, rho_apply, zst_reduce};
use rota_mzv::Result;

fn main() -> Result<()> {
    let ctx = PrecisionContext::default();
    let rho = build_rho(5, &ctx)?;
    for k in 0..=5 {
        println!("γ_{k} = {:>14.10}   δ_{k} = {:>14.10}", rho.gamma[k], rho.delta[k]);
    }

    let p = TPoly::from_coeffs([(3, 1.0), (1, -2.0)]);
    let round_trip = beta_apply(&rho_apply(&p, &rho)?, &rho)?;
    println!("β(ρ(T^3 - 2T)) = {round_trip}");

    let mut cache = MzvCache::new(ctx);
    let mut fact = 1.0;
    for ell in 1..=4u32 {
        fact *= f64::from(ell);
        let beta = beta_apply(&TPoly::monomial(ell, 1.0 / fact), &rho)?;
        let ones = Composition::new(vec![1; ell as usize])?;
        let direct = regpoly_eval(&zst_reduce(&ones)?, &mut cache)?;
        let gap: f64 = (beta - direct).iter().map(|(_, c)| c.abs()).fold(0.0, f64::max);
        println!("β(T^{ell}/{ell}!) vs stuffle-regularized ζ(1^{ell}): gap {gap:.1e}");
    }
    println!("generating series identity to order 4: gap {:.1e}", corollary_check(4, &ctx)?);
    Ok(())
}
