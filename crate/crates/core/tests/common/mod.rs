//! Brute-force oracles shared by the integration tests. They enumerate
//! interleavings directly instead of using any recursion from the
//! library.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rota_mzv::algebra::{int, LinComb, Rational};
use rota_mzv::compositions::Composition;
use rota_mzv::words::{Letter, Word};

/// All pairs of strictly increasing maps `[m] -> [k]`, `[n] -> [k]` whose
/// images cover `[k]`, for `max(m, n) <= k <= m + n`. Each yields the
/// sequence where a slot hit twice holds a merged pair. Coefficient of a
/// term is `lambda^(m + n - k)`.
pub fn quasi_shuffle_terms<A: Clone>(a: &[A], b: &[A]) -> Vec<(Vec<(Option<A>, Option<A>)>, usize)> {
    let (m, n) = (a.len(), b.len());
    let mut out = Vec::new();
    for k in m.max(n)..=m + n {
        for sa in subsets(k, m) {
            for sb in subsets(k, n) {
                let mut slots: Vec<(Option<A>, Option<A>)> = vec![(None, None); k];
                for (i, &p) in sa.iter().enumerate() {
                    slots[p].0 = Some(a[i].clone());
                }
                for (i, &p) in sb.iter().enumerate() {
                    slots[p].1 = Some(b[i].clone());
                }
                if slots.iter().all(|s| s.0.is_some() || s.1.is_some()) {
                    out.push((slots, m + n - k));
                }
            }
        }
    }
    out
}

/// Increasing `r`-subsets of `0..k`.
pub fn subsets(k: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, k: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..k {
            cur.push(i);
            go(i + 1, k, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, k, r, &mut Vec::new(), &mut out);
    out
}

/// Mixable shuffle of weight `lambda` by enumeration; `merge` combines a
/// pair that shares a slot.
pub fn brute_mixable<A: Clone + Ord>(a: &[A], b: &[A], lambda: &Rational, merge: impl Fn(&A, &A) -> A) -> BTreeMap<Vec<A>, Rational> {
    let mut out: BTreeMap<Vec<A>, Rational> = BTreeMap::new();
    for (slots, merges) in quasi_shuffle_terms(a, b) {
        let mut coeff = Rational::one();
        for _ in 0..merges {
            coeff *= lambda;
        }
        if coeff.is_zero() {
            continue;
        }
        let seq: Vec<A> = slots
            .into_iter()
            .map(|s| match s {
                (Some(x), Some(y)) => merge(&x, &y),
                (Some(x), None) | (None, Some(x)) => x,
                (None, None) => unreachable!(),
            })
            .collect();
        *out.entry(seq).or_insert_with(Rational::zero) += coeff;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn brute_word_shuffle(a: &Word, b: &Word) -> LinComb<Word> {
    // no merges, so only full-length interleavings: pick the slots of `a`
    let (m, n) = (a.len(), b.len());
    let mut out = LinComb::zero();
    for slots in subsets(m + n, m) {
        let (mut i, mut j) = (0, 0);
        let letters = (0..m + n)
            .map(|p| {
                if i < m && slots[i] == p {
                    i += 1;
                    a.letters()[i - 1]
                } else {
                    j += 1;
                    b.letters()[j - 1]
                }
            })
            .collect();
        out.add_term(Word::new(letters), int(1));
    }
    out
}

pub fn brute_stuffle(a: &Composition, b: &Composition) -> LinComb<Composition> {
    brute_mixable(a.entries(), b.entries(), &int(1), |x, y| x + y)
        .into_iter()
        .map(|(seq, c)| (Composition::new(seq).unwrap(), c))
        .collect()
}

/// `[s1,...,sk] -> x0^{s1-1} x1 ... x0^{sk-1} x1`, written out directly.
pub fn word_of(s: &Composition) -> Word {
    let mut letters = Vec::new();
    for &e in s.entries() {
        letters.extend(std::iter::repeat_n(Letter::X0, e as usize - 1));
        letters.push(Letter::X1);
    }
    Word::new(letters)
}

pub fn composition_of(w: &Word) -> Composition {
    let mut entries = Vec::new();
    let mut run = 1;
    for l in w.letters() {
        match l {
            Letter::X0 => run += 1,
            Letter::X1 => {
                entries.push(run);
                run = 1;
            }
        }
    }
    Composition::new(entries).unwrap()
}

/// Shuffle of positive compositions through words, by enumeration.
pub fn brute_comp_shuffle(a: &Composition, b: &Composition) -> LinComb<Composition> {
    brute_word_shuffle(&word_of(a), &word_of(b)).map_basis(composition_of)
}

/// Rank over the rationals by fraction-exact row reduction.
pub fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &pivot;
                for j in c..cols {
                    let d = &f * &rows[r][j];
                    rows[i][j] -= d;
                }
            }
        }
        r += 1;
    }
    r
}

/// Coordinates of linear combinations in the given basis order.
pub fn matrix<B: Ord + Clone>(vectors: &[LinComb<B>], basis: &[B]) -> Vec<Vec<Rational>> {
    vectors.iter().map(|v| basis.iter().map(|b| v.coeff(b)).collect()).collect()
}

/// All compositions (entries >= 1) of exactly `weight`.
pub fn positive_of_weight(weight: u32) -> Vec<Composition> {
    if weight == 0 {
        return Vec::new();
    }
    (0u32..1 << (weight - 1))
        .map(|mask| {
            let mut entries = vec![1u32];
            for i in 0..weight - 1 {
                if mask >> i & 1 == 1 {
                    entries.push(1);
                } else {
                    *entries.last_mut().unwrap() += 1;
                }
            }
            Composition::new(entries).unwrap()
        })
        .collect()
}

/// Compositions with entries `>= 0` whose weight is at most `max_weight`
/// and depth at most `max_depth`.
pub fn nonneg_compositions(max_weight: u32, max_depth: usize) -> Vec<Composition> {
    fn go(depth_left: usize, weight_left: u32, cur: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if !cur.is_empty() {
            out.push(Composition::new(cur.clone()).unwrap());
        }
        if depth_left == 0 {
            return;
        }
        for e in 0..=weight_left {
            cur.push(e);
            go(depth_left - 1, weight_left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(max_depth, max_weight, &mut Vec::new(), &mut out);
    out
}
