//! The free commutative Rota-Baxter algebra on one generator, its graded
//! basis, and homomorphisms out of it.
//!
//!     cargo run --example free_rota_baxter

use rota_mzv::algebra::{linalg::lincomb_rank, LinComb};
use rota_mzv::free_rba::{
    f_hom, graded_basis, p_x, phi_hom, rba_product, universal_eval, CompositionTarget, FnTarget, TensorWord,
    WordTarget,
};
use rota_mzv::words::h1_words_of_degree;
use rota_mzv::Result;

fn main() -> Result<()> {
    let a = TensorWord::from([1]);
    let b = TensorWord::from([0, 1]);
    println!("{a} · {b} = {}", rba_product(&a, &b));
    println!("P_x{a} = {}", p_x(&a));

    for m in 1..=6 {
        let basis = graded_basis(m);
        let images: Vec<LinComb<_>> = basis.iter().map(f_hom).collect();
        let rank = lincomb_rank(&images, &h1_words_of_degree(m as usize));
        println!("degree {m}: {} basis tensors, rank of f = {rank}", basis.len());
    }

    let t = TensorWord::from([1, 2]);
    println!("f{t} = {}", f_hom(&t));
    println!("phi{t} = {}", phi_hom(&t));
    let x1 = LinComb::basis("x1".parse()?);
    println!("universal, words:        {}", universal_eval(&WordTarget, &x1, &t)?);
    let one = LinComb::basis(rota_mzv::Composition::from([0]));
    println!("universal, compositions: {}", universal_eval(&CompositionTarget, &one, &t)?);

    // Polynomials in one variable with the integration operator
    // J(p)(x) = int_0^x p, a weight-0 Rota-Baxter algebra. Coefficients
    // are exact; index k holds x^k.
    let integrate = |p: &Vec<rota_mzv::Rational>| -> Result<Vec<rota_mzv::Rational>> {
        let mut out = vec![rota_mzv::algebra::int(0)];
        for (k, c) in p.iter().enumerate() {
            out.push(c / rota_mzv::algebra::int(k as i64 + 1));
        }
        Ok(out)
    };
    let multiply = |p: &Vec<rota_mzv::Rational>, q: &Vec<rota_mzv::Rational>| -> Result<Vec<rota_mzv::Rational>> {
        let mut out = vec![rota_mzv::algebra::int(0); p.len() + q.len() - 1];
        for (i, a) in p.iter().enumerate() {
            for (j, b) in q.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(out)
    };
    let target = FnTarget::new(multiply, integrate);
    let x = vec![rota_mzv::algebra::int(0), rota_mzv::algebra::int(1)];
    let image = universal_eval(&target, &x, &TensorWord::from([1, 1]))?;
    let shown: Vec<String> = image.iter().map(ToString::to_string).collect();
    println!("x·J(x) as coefficients: [{}]", shown.join(", "));
    Ok(())
}
