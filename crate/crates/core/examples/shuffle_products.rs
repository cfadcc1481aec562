//! Shuffle, stuffle and mixable shuffle products on words and compositions.
//!
//!     cargo run --example shuffle_products

use rota_mzv::algebra::{mixable_shuffle, rat, LinComb};
use rota_mzv::compositions::{comp_shuffle, i_op, stuffle, BiComposition, Composition};
use rota_mzv::words::{eta, eta_inv, word_shuffle, Word};
use rota_mzv::Result;

fn main() -> Result<()> {
    let a: Word = "x0x1".parse()?;
    let b: Word = "x1".parse()?;
    println!("{a} ⧢ {b} = {}", word_shuffle(&a, &b));

    // The same product on compositions, through eta.
    let s = Composition::from([2]);
    let t = Composition::from([1]);
    println!("{s} ⧢ {t} = {}", comp_shuffle(&s, &t));
    let transported = word_shuffle(&eta_inv(&s)?, &eta_inv(&t)?).try_map_linear(|w| eta(w).map(LinComb::basis))?;
    println!("  via words:  {transported}");

    // Entries may be zero; I raises the first entry.
    let zero = Composition::from([0]);
    println!("{zero} ⧢ [3,1] = {}", comp_shuffle(&zero, &Composition::from([3, 1])));
    println!("I([0,2]) = {}", i_op(&Composition::from([0, 2])));

    println!("[2] * [2] = {}", stuffle(&s, &s)?);
    println!("[2] ⧢ [2] - [2] * [2] = {}", &comp_shuffle(&s, &s) - &stuffle(&s, &s)?);

    // Weight-λ family on plain sequences, merging by addition.
    for lambda in [rat(0, 1), rat(1, 2), rat(1, 1)] {
        let p = mixable_shuffle(&[1u32], &[2u32], &lambda, |x, y| Some(x + y))?;
        let p: rota_mzv::LinComb<Composition> = p.map_basis(|seq| Composition::new(seq.clone()).unwrap());
        println!("weight {lambda}: {p}");
    }

    let u = BiComposition::from_ints(&[1], &[1])?;
    let v = BiComposition::from_ints(&[2], &[0])?;
    println!("{u} * {v} = {}", rota_mzv::bistuffle(&u, &v));
    Ok(())
}
