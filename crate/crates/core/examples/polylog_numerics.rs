//! Zeta values, multiple polylogarithms, directional regularized sums and
//! the Laurent expansion of e^ε/(1 - e^ε).
//!
//!     cargo run --release --example polylog_numerics

use rota_mzv::algebra::int;
use rota_mzv::compositions::{BiComposition, Composition};
use rota_mzv::numerics::{
    fd_derivative_check, gen0_laurent, gen0_series_check, li_eval, mzv_eval, pole_project, z_directional,
    zeta_nonpos, zeta_pos, LaurentPoly, PrecisionContext,
};
use rota_mzv::Result;

fn main() -> Result<()> {
    let ctx = PrecisionContext::default();
    for n in 2..=5 {
        println!("ζ({n}) = {}", zeta_pos(n, &ctx)?);
    }
    println!("ζ(0) = {}", zeta_nonpos(0));
    for i in 1..=4 {
        println!("ζ(-{i}) = {}", zeta_nonpos(i));
    }
    println!("ζ(2,1) = {}", mzv_eval(&Composition::from([2, 1]), &ctx)?);
    println!("ζ(3,1) = {}", mzv_eval(&Composition::from([3, 1]), &ctx)?);

    let z = 0.4;
    let li1 = li_eval(&Composition::from([1]), z, &ctx)?;
    let li11 = li_eval(&Composition::from([1, 1]), z, &ctx)?;
    println!("Li_1(0.4) = {li1}, Li_1,1(0.4) = {li11}, Li_1^2/2 = {:.10}", li1.value * li1.value / 2.0);

    let b = BiComposition::from_ints(&[0], &[1])?;
    println!("Z([0 | 1]; -1) = {}  (1/(e-1) = {:.10})", z_directional(&b, -1.0, &ctx)?, 1.0 / (1f64.exp() - 1.0));
    let u = BiComposition::from_ints(&[1], &[1])?;
    let v = BiComposition::from_ints(&[2], &[0])?;
    let mut product = 0.0;
    for (w, c) in rota_mzv::bistuffle(&u, &v).iter() {
        product += rota_mzv::algebra::to_f64(c) * z_directional(w, -0.5, &ctx)?.value;
    }
    let separate = z_directional(&u, -0.5, &ctx)?.value * z_directional(&v, -0.5, &ctx)?.value;
    println!("Z(u*v) = {product:.10}, Z(u)Z(v) = {separate:.10}");

    for h in [1e-2, 1e-3, 1e-4] {
        let d = fd_derivative_check(&Composition::from([1]), -0.7, h, &ctx)?;
        println!("d/dε Li_2(e^ε) vs Li_1(e^ε), h = {h:e}: {d:.2e}");
    }

    println!("e^ε/(1-e^ε) = {} + ...", gen0_laurent(4));
    println!("gap to -1/ε + Σ ζ(-i) ε^i/i!: {}", gen0_series_check(12));
    let f = LaurentPoly::from_terms([(-2, int(1)), (0, int(3)), (1, int(1))]);
    println!("pole part of {f}: {}", pole_project(&f));
    Ok(())
}
