//! Self-check suites run by `rota-mzv verify`. Each suite is exhaustive
//! over a range controlled by `max_weight` and reports pass or fail with
//! a one-line detail.

use std::fmt;

use crate::algebra::{linalg::lincomb_rank, LinComb, TPoly};
use crate::compositions::{
    comp_shuffle, comp_shuffle_lin, compositions_of_degree, i_op, i_op_lin, positive_compositions,
    stuffle, Composition,
};
use crate::error::{Error, Result};
use crate::free_rba::{f_hom, graded_basis, p_x, p_x_lin, rba_product, rba_product_lin, TensorWord};
use crate::numerics::{
    fd_derivative_check, gen0_series_check, li_eval, regpoly_eval, MzvCache, PrecisionContext,
};
use crate::regularization::{
    beta_apply, build_rho, corollary_check, dsh_relations, eds_relations, relation_rank, rho_apply,
    zsh_reduce, zst_reduce,
};
use crate::words::{eta, eta_inv, h1_words_of_degree, i0, i0_lin, word_shuffle, word_shuffle_lin, Word};

pub const SUITES: [&str; 9] =
    ["euler", "freeness", "structure", "transport", "polylog", "gen0", "ikz", "corollary", "ranks"];

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

fn report(name: &'static str, passed: bool, detail: impl Into<String>) -> SuiteReport {
    SuiteReport { name, passed, detail: detail.into() }
}

/// Runs one suite by name, or all of them for `"all"`.
pub fn run_suite(name: &str, max_weight: u32, ctx: &PrecisionContext) -> Result<Vec<SuiteReport>> {
    if max_weight < 2 {
        return Err(Error::domain("max weight must be at least 2"));
    }
    let names: Vec<&str> = if name == "all" { SUITES.to_vec() } else { vec![name] };
    names.into_iter().map(|n| run_one(n, max_weight, ctx)).collect()
}

fn run_one(name: &str, w: u32, ctx: &PrecisionContext) -> Result<SuiteReport> {
    match name {
        "euler" => Ok(euler()),
        "freeness" => Ok(freeness(w)),
        "structure" => Ok(structure(w)),
        "transport" => Ok(transport(w)),
        "polylog" => polylog(w, ctx),
        "gen0" => Ok(gen0()),
        "ikz" => ikz(w, ctx),
        "corollary" => {
            let n = w.min(5) as usize;
            let gap = corollary_check(n, ctx)?;
            Ok(report("corollary", gap < 1e-3, format!("order {n}, largest gap {gap:.1e}")))
        }
        "ranks" => ranks(w),
        other => Err(Error::domain(format!("unknown suite `{other}`; expected one of all, {}", SUITES.join(", ")))),
    }
}

fn euler() -> SuiteReport {
    let show = |rs: Vec<crate::regularization::Relation>| -> Vec<String> {
        rs.into_iter().map(|r| r.combination.to_string()).collect()
    };
    let w3 = show(eds_relations(3)).contains(&"[2,1] - [3]".to_string());
    let w4 = show(dsh_relations(4)).contains(&"4*[3,1] - [4]".to_string());
    report("euler", w3 && w4, "ζ(2,1) = ζ(3) and 4ζ(3,1) = ζ(4) among generated relations")
}

fn freeness(w: u32) -> SuiteReport {
    let top = (w + 2).min(8);
    for m in 1..=top {
        let basis = graded_basis(m);
        if basis.len() != 1 << (m - 1) {
            return report("freeness", false, format!("degree {m}: {} basis tensors", basis.len()));
        }
        let images: Vec<LinComb<Word>> = basis.iter().map(f_hom).collect();
        let words = h1_words_of_degree(m as usize);
        if lincomb_rank(&images, &words) != words.len() {
            return report("freeness", false, format!("degree {m}: f is not invertible"));
        }
    }
    report("freeness", true, format!("degrees 1..={top}: 2^(m-1) tensors, f invertible"))
}

fn structure(w: u32) -> SuiteReport {
    let comps: Vec<Composition> = (1..=w.min(4)).flat_map(compositions_of_degree).collect();
    let positive: Vec<Composition> = (1..=w.min(4)).flat_map(positive_compositions).collect();
    let tensors: Vec<TensorWord> = (1..=w.min(4)).flat_map(graded_basis).collect();
    let words: Vec<Word> = (1..=w.min(4) as usize).flat_map(h1_words_of_degree).collect();
    let mut cases = 0usize;
    let fail = |what: &str, a: &dyn fmt::Display, b: &dyn fmt::Display| {
        report("structure", false, format!("{what} fails on {a}, {b}"))
    };
    for a in &comps {
        for b in &comps {
            cases += 1;
            let lhs = comp_shuffle(a, b);
            if lhs != comp_shuffle(b, a) {
                return fail("shuffle commutativity", a, b);
            }
            let ia = LinComb::basis(i_op(a));
            let ib = LinComb::basis(i_op(b));
            let rb = &i_op_lin(&comp_shuffle_lin(&LinComb::basis(a.clone()), &ib))
                + &i_op_lin(&comp_shuffle_lin(&ia, &LinComb::basis(b.clone())));
            if comp_shuffle_lin(&ia, &ib) != rb {
                return fail("Rota-Baxter identity for I", a, b);
            }
            for c in comps.iter().take(6) {
                let left = comp_shuffle_lin(&lhs, &LinComb::basis(c.clone()));
                let right = comp_shuffle_lin(&LinComb::basis(a.clone()), &comp_shuffle(b, c));
                if left != right {
                    return fail("shuffle associativity", a, b);
                }
            }
        }
    }
    for a in &positive {
        for b in &positive {
            cases += 1;
            let ab = stuffle(a, b).unwrap();
            if ab != stuffle(b, a).unwrap() {
                return fail("stuffle commutativity", a, b);
            }
        }
    }
    for a in &tensors {
        for b in &tensors {
            cases += 1;
            if rba_product(a, b) != rba_product(b, a) {
                return fail("free product commutativity", a, b);
            }
            let pa = LinComb::basis(p_x(a));
            let pb = LinComb::basis(p_x(b));
            let rb = &p_x_lin(&rba_product_lin(&LinComb::basis(a.clone()), &pb))
                + &p_x_lin(&rba_product_lin(&pa, &LinComb::basis(b.clone())));
            if rba_product_lin(&pa, &pb) != rb {
                return fail("Rota-Baxter identity for P_x", a, b);
            }
        }
    }
    for a in &words {
        for b in &words {
            cases += 1;
            let ia = LinComb::basis(i0(a).unwrap());
            let ib = LinComb::basis(i0(b).unwrap());
            let rb = &i0_lin(&word_shuffle_lin(&LinComb::basis(a.clone()), &ib)).unwrap()
                + &i0_lin(&word_shuffle_lin(&ia, &LinComb::basis(b.clone()))).unwrap();
            if word_shuffle_lin(&ia, &ib) != rb {
                return fail("Rota-Baxter identity for I0", a, b);
            }
        }
    }
    report("structure", true, format!("{cases} pairs: commutativity, associativity, Rota-Baxter identities"))
}

fn transport(w: u32) -> SuiteReport {
    let top = w + 2;
    let mut cases = 0;
    for wa in 1..top {
        for wb in 1..=top - wa {
            for a in positive_compositions(wa) {
                for b in positive_compositions(wb) {
                    cases += 1;
                    let via_words = word_shuffle(&eta_inv(&a).unwrap(), &eta_inv(&b).unwrap())
                        .try_map_linear(|x| eta(x).map(LinComb::basis))
                        .unwrap();
                    if via_words != comp_shuffle(&a, &b) {
                        return report("transport", false, format!("mismatch on {a}, {b}"));
                    }
                }
            }
        }
    }
    report("transport", true, format!("{cases} pairs up to total weight {top}"))
}

fn li_of(x: &LinComb<Composition>, z: f64, ctx: &PrecisionContext) -> Result<f64> {
    let mut total = 0.0;
    for (c, q) in x.iter() {
        total += crate::algebra::to_f64(q) * li_eval(c, z, ctx)?.value;
    }
    Ok(total)
}

fn polylog(w: u32, ctx: &PrecisionContext) -> Result<SuiteReport> {
    let z = (-0.7f64).exp();
    let top = w + 2;
    let mut worst: f64 = 0.0;
    let mut cases = 0;
    for da in 1..top {
        for db in 1..=top - da {
            for a in compositions_of_degree(da) {
                for b in compositions_of_degree(db) {
                    cases += 1;
                    let lhs = li_of(&comp_shuffle(&a, &b), z, ctx)?;
                    let rhs = li_eval(&a, z, ctx)?.value * li_eval(&b, z, ctx)?.value;
                    worst = worst.max((lhs - rhs).abs());
                }
            }
        }
    }
    let mut fd: f64 = 0.0;
    for s in [Composition::from([0]), Composition::from([1]), Composition::from([2, 1])] {
        fd = fd.max(fd_derivative_check(&s, -0.7, 1e-4, ctx)?);
    }
    Ok(report(
        "polylog",
        worst < 1e-8 && fd < 1e-6,
        format!("{cases} pairs, largest product gap {worst:.1e}; derivative gap {fd:.1e}"),
    ))
}

fn gen0() -> SuiteReport {
    let gap = gen0_series_check(12);
    report("gen0", num_traits::Zero::is_zero(&gap), format!("order 12, exact gap {gap}"))
}

fn poly_gap(a: &TPoly<f64>, b: &TPoly<f64>) -> f64 {
    (a.clone() - b.clone()).iter().map(|(_, c)| c.abs()).fold(0.0, f64::max)
}

fn ikz(w: u32, ctx: &PrecisionContext) -> Result<SuiteReport> {
    let mut cache = MzvCache::new(*ctx);
    let rho = build_rho(w as usize, ctx)?;
    let mut worst: f64 = 0.0;
    let mut cases = 0;
    for weight in 1..=w {
        for s in positive_compositions(weight) {
            cases += 1;
            let sh = regpoly_eval(&zsh_reduce(&s)?, &mut cache)?;
            let st = regpoly_eval(&zst_reduce(&s)?, &mut cache)?;
            worst = worst.max(poly_gap(&sh, &rho_apply(&st, &rho)?));
        }
    }
    let mut fact = 1.0;
    for ell in 1..=w as usize {
        fact *= ell as f64;
        let lhs = beta_apply(&TPoly::monomial(ell as u32, 1.0 / fact), &rho)?;
        let ones = Composition::new(vec![1; ell])?;
        worst = worst.max(poly_gap(&lhs, &regpoly_eval(&zst_reduce(&ones)?, &mut cache)?));
    }
    Ok(report("ikz", worst < 1e-3, format!("{cases} compositions and β(T^l/l!), largest gap {worst:.1e}")))
}

fn ranks(w: u32) -> Result<SuiteReport> {
    let mut parts = Vec::new();
    let mut ok = true;
    for weight in 2..=w.min(8) {
        let (rank, bound) = relation_rank(weight)?;
        let expected = match weight {
            4 => Some(1),
            5 => Some(2),
            _ => None,
        };
        ok &= expected.is_none_or(|e| e == bound);
        parts.push(format!("w{weight}: rank {rank}, bound {bound}"));
    }
    Ok(report("ranks", ok, parts.join("; ")))
}
