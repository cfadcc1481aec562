//! Divergent multiple zeta values as polynomials in T under the shuffle
//! and stuffle regularizations, and the map ρ relating them.
//!
//!     cargo run --example regularization

use rota_mzv::algebra::TPoly;
use rota_mzv::compositions::{positive_compositions, Composition};
use rota_mzv::numerics::{regpoly_eval, MzvCache, PrecisionContext};
use rota_mzv::regularization::{
    build_rho, reduce_leading_ones, regpoly_json, rho_apply, zsh_reduce, zst_reduce, RegPolyDisplay,
};
use rota_mzv::Result;

fn main() -> Result<()> {
    for s in [[1].as_slice(), &[1, 1], &[1, 2], &[1, 1, 2]] {
        let s = Composition::new(s.to_vec())?;
        println!("{s}");
        println!("  shuffle: {}", RegPolyDisplay(&zsh_reduce(&s)?));
        println!("  stuffle: {}", RegPolyDisplay(&zst_reduce(&s)?));
    }
    println!("json: {}", regpoly_json(&zsh_reduce(&Composition::from([1, 2]))?));

    println!("[1,1,2] as stuffle products of ones and convergent tails:");
    for (c, i, tail) in reduce_leading_ones(2, &Composition::from([2]))? {
        println!("  {c} * [1^{i}] * {tail}");
    }

    // Numerically, the shuffle version is ρ applied to the stuffle version.
    let ctx = PrecisionContext::default();
    let rho = build_rho(4, &ctx)?;
    let mut cache = MzvCache::new(ctx);
    for s in positive_compositions(3) {
        let sh = regpoly_eval(&zsh_reduce(&s)?, &mut cache)?;
        let st = regpoly_eval(&zst_reduce(&s)?, &mut cache)?;
        let gap: f64 = (sh - rho_apply(&st, &rho)?).iter().map(|(_, c)| c.abs()).fold(0.0, f64::max);
        println!("{s}: |Z_sh - ρ(Z_st)| = {gap:.1e}");
    }
    let half_t2 = TPoly::monomial(2, 0.5);
    println!("ρ(T^2/2) = {}", rho_apply(&half_t2, &rho)?);
    Ok(())
}
