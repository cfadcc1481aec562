//! Peeling leading `1` entries: a positive composition `[1^a, u]` with
//! `u` convergent is rewritten through `[1] ⋆ [1^{a-1}, u]`, in which
//! `[1^a, u]` appears `a` times and every other term has fewer leading
//! ones.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use super::zeta_expr::{MzvSymbol, RegPoly, ZetaExpr};
use crate::algebra::{int, LinComb, Rational};
use crate::compositions::{comp_shuffle, stuffle, Composition};
use crate::error::{Error, Result};

fn ones(n: usize) -> Vec<u32> {
    vec![1; n]
}

fn check_positive(s: &Composition) -> Result<()> {
    if !s.is_positive() {
        return Err(Error::domain(format!("{s} has a zero entry")));
    }
    Ok(())
}

struct Reducer<F> {
    product: F,
    memo: HashMap<Composition, RegPoly>,
}

impl<F: Fn(&Composition, &Composition) -> LinComb<Composition>> Reducer<F> {
    fn reduce(&mut self, s: &Composition) -> RegPoly {
        if let Some(p) = self.memo.get(s) {
            return p.clone();
        }
        let out = if s.is_convergent() {
            RegPoly::constant(ZetaExpr::symbol(MzvSymbol::new(s.clone()).expect("convergent")))
        } else if s.entries() == [1] {
            RegPoly::t()
        } else {
            let a = s.leading_ones();
            let rest = Composition::from_vec_unchecked(s.entries()[1..].to_vec());
            let prod = (self.product)(&Composition::from([1]), &rest);
            debug_assert_eq!(prod.coeff(s), int(a as i64));
            let mut acc = RegPoly::t() * self.reduce(&rest);
            for (r, c) in prod.iter() {
                if r != s {
                    acc = acc - self.reduce(r).scale(&ZetaExpr::rational(c.clone()));
                }
            }
            acc.scale(&ZetaExpr::rational(Rational::one() / int(a as i64)))
        };
        self.memo.insert(s.clone(), out.clone());
        out
    }
}

/// Shuffle-regularized value of a positive composition as a polynomial in
/// `T`, with `[1] -> T` and convergent compositions sent to their symbol.
pub fn zsh_reduce(s: &Composition) -> Result<RegPoly> {
    check_positive(s)?;
    let mut r = Reducer { product: comp_shuffle, memo: HashMap::new() };
    Ok(r.reduce(s))
}

/// Stuffle-regularized value; same contract as [`zsh_reduce`].
pub fn zst_reduce(s: &Composition) -> Result<RegPoly> {
    check_positive(s)?;
    let mut r = Reducer {
        product: |a: &Composition, b: &Composition| stuffle(a, b).expect("positive arguments"),
        memo: HashMap::new(),
    };
    Ok(r.reduce(s))
}

/// Writes `[1^ell, s]` as `sum a * ([1^i] * [t])` (stuffle, `[1^0]` the
/// unit) with every `t` convergent. Returned sorted by `(i, t)`, zero
/// coefficients dropped.
pub fn reduce_leading_ones(ell: usize, s: &Composition) -> Result<Vec<(Rational, usize, Composition)>> {
    if !s.is_convergent() {
        return Err(Error::domain(format!("{s} is not convergent")));
    }
    let mut memo = HashMap::new();
    let map = decompose(ell, s, &mut memo);
    Ok(map.into_iter().filter(|(_, c)| !c.is_zero()).map(|((i, t), c)| (c, i, t)).collect())
}

type Decomposition = BTreeMap<(usize, Composition), Rational>;

fn decompose(ell: usize, s: &Composition, memo: &mut HashMap<(usize, Composition), Decomposition>) -> Decomposition {
    let key = (ell, s.clone());
    if let Some(d) = memo.get(&key) {
        return d.clone();
    }
    let mut out = Decomposition::new();
    out.insert((ell, s.clone()), Rational::one());
    if ell > 0 {
        let whole = [ones(ell), s.entries().to_vec()].concat();
        let whole = Composition::from_vec_unchecked(whole);
        let prod = stuffle(&Composition::from_vec_unchecked(ones(ell)), s).expect("positive arguments");
        for (term, c) in prod.iter() {
            if term == &whole {
                continue;
            }
            let i = term.leading_ones();
            let tail = Composition::from_vec_unchecked(term.entries()[i..].to_vec());
            for (k, v) in decompose(i, &tail, memo) {
                *out.entry(k).or_insert_with(Rational::zero) -= c * v;
            }
        }
    }
    memo.insert(key, out.clone());
    out
}
