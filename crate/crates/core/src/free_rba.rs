//! The free commutative nonunitary Rota-Baxter algebra of weight 0 on one
//! generator `x`.
//!
//! Basis: tensors `x^{n1} (x) ... (x) x^{nk}` with `k >= 1`, `ni >= 0` and
//! `nk >= 1`, written `(n1,...,nk)`. The product multiplies the first
//! factors and shuffles the remaining slots; `P_x` prepends `x^0 = 1`.
//! Every basis element factors as `x^{n1} · P_x(x^{n2} · P_x(... P_x(x^{nk})))`,
//! which is what [`universal_eval`] evaluates in an arbitrary target.

use std::fmt;

use num_traits::One;

use crate::algebra::{bilinear_extend, int, shuffle, LinComb, Rational};
use crate::compositions::{comp_shuffle_lin, i_op_lin, Composition};
use crate::error::{Error, Result};
use crate::words::{i0, i0_lin, word_shuffle, word_shuffle_lin, Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorWord(Vec<u32>);

impl TensorWord {
    pub fn new(exponents: Vec<u32>) -> Result<Self> {
        match exponents.last() {
            None => Err(Error::domain("a tensor needs at least one slot")),
            Some(0) => Err(Error::domain(format!(
                "last tensor exponent must be >= 1 in {:?}",
                exponents
            ))),
            Some(_) => Ok(TensorWord(exponents)),
        }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `n1 + ... + nk + k - 1`: one per `x` and one per `P_x`.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum::<u32>() + self.0.len() as u32 - 1
    }
}

/// Canonical order: fewer slots first, then larger exponents first. This
/// lists `x^m` first in each degree.
impl Ord for TensorWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for TensorWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl<const N: usize> From<[u32; N]> for TensorWord {
    fn from(a: [u32; N]) -> Self {
        TensorWord::new(a.to_vec()).expect("valid tensor literal")
    }
}

impl fmt::Display for TensorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `(a1, a') · (b1, b') = sum over shuffles σ of a', b' of (a1 + b1, σ)`.
pub fn rba_product(a: &TensorWord, b: &TensorWord) -> LinComb<TensorWord> {
    let head = a.0[0] + b.0[0];
    shuffle(&a.0[1..], &b.0[1..]).map_basis(|tail| {
        let mut v = Vec::with_capacity(tail.len() + 1);
        v.push(head);
        v.extend_from_slice(tail);
        TensorWord(v)
    })
}

pub fn rba_product_lin(a: &LinComb<TensorWord>, b: &LinComb<TensorWord>) -> LinComb<TensorWord> {
    bilinear_extend(a, b, rba_product)
}

/// `P_x(t) = 1 (x) t`.
pub fn p_x(t: &TensorWord) -> TensorWord {
    let mut v = Vec::with_capacity(t.0.len() + 1);
    v.push(0);
    v.extend_from_slice(&t.0);
    TensorWord(v)
}

pub fn p_x_lin(t: &LinComb<TensorWord>) -> LinComb<TensorWord> {
    t.map_basis(p_x)
}

/// The isomorphism onto `H^ш x1` sending `x` to `x1`:
/// `f(x^{n1} (x) rest) = x1^{⧢ n1} ⧢ x0 f(rest)` with
/// `x1^{⧢ n} = n! x1^n`.
pub fn f_hom(t: &TensorWord) -> LinComb<Word> {
    let exps = &t.0;
    let mut acc = shuffle_power_x1(exps[exps.len() - 1]);
    for &n in exps[..exps.len() - 1].iter().rev() {
        let lifted = i0_lin(&acc).expect("image lies in H1");
        acc = if n == 0 {
            lifted
        } else {
            let power = shuffle_power_x1(n);
            bilinear_extend(&power, &lifted, word_shuffle)
        };
    }
    acc
}

pub fn f_hom_lin(t: &LinComb<TensorWord>) -> LinComb<Word> {
    t.map_linear(f_hom)
}

fn shuffle_power_x1(n: u32) -> LinComb<Word> {
    let factorial = (1..=n as i64).fold(Rational::one(), |acc, k| acc * int(k));
    LinComb::term(Word::new(vec![Letter::X1; n as usize]), factorial)
}

/// The isomorphism onto compositions with entries `>= 0` sending `x` to
/// `[0]`. A single basis element maps to a single composition:
/// `x^{n0} (x) x^{n1} (x) ... (x) x^{nl}` goes to
/// `[0^{n0}, 1, 0^{n1-1}, 1, ..., 1, 0^{nl-1}]`, where a slot with
/// exponent 0 folds its `1` into the following slot's leading entry.
pub fn phi_hom(t: &TensorWord) -> Composition {
    let exps = &t.0;
    let mut acc = vec![0u32; exps[exps.len() - 1] as usize];
    for &n in exps[..exps.len() - 1].iter().rev() {
        acc[0] += 1;
        let mut next = vec![0u32; n as usize];
        next.extend_from_slice(&acc);
        acc = next;
    }
    Composition::from_vec_unchecked(acc)
}

pub fn phi_hom_lin(t: &LinComb<TensorWord>) -> LinComb<Composition> {
    t.map_basis(phi_hom)
}

/// A commutative nonunitary algebra with a weight-0 Rota-Baxter operator.
/// Whether the axioms hold is the implementor's contract.
pub trait RbTarget {
    type Value: Clone;
    type Error;

    fn mul(&self, a: &Self::Value, b: &Self::Value) -> std::result::Result<Self::Value, Self::Error>;
    fn rb(&self, a: &Self::Value) -> std::result::Result<Self::Value, Self::Error>;
}

/// Image of a basis tensor under the unique Rota-Baxter homomorphism with
/// `x -> generator`.
pub fn universal_eval<T: RbTarget>(
    target: &T,
    generator: &T::Value,
    t: &TensorWord,
) -> std::result::Result<T::Value, T::Error> {
    let power = |n: u32| -> std::result::Result<T::Value, T::Error> {
        let mut acc = generator.clone();
        for _ in 1..n {
            acc = target.mul(&acc, generator)?;
        }
        Ok(acc)
    };
    let exps = &t.0;
    let mut acc = power(exps[exps.len() - 1])?;
    for &n in exps[..exps.len() - 1].iter().rev() {
        let lifted = target.rb(&acc)?;
        acc = if n == 0 { lifted } else { target.mul(&power(n)?, &lifted)? };
    }
    Ok(acc)
}

/// `(H^ш x1, ⧢, I0)`.
pub struct WordTarget;

impl RbTarget for WordTarget {
    type Value = LinComb<Word>;
    type Error = Error;

    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value> {
        Ok(word_shuffle_lin(a, b))
    }

    fn rb(&self, a: &Self::Value) -> Result<Self::Value> {
        a.try_map_linear(|w| i0(w).map(LinComb::basis))
    }
}

/// Compositions with entries `>= 0`, the extended shuffle and `I`.
pub struct CompositionTarget;

impl RbTarget for CompositionTarget {
    type Value = LinComb<Composition>;
    type Error = Error;

    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value> {
        Ok(comp_shuffle_lin(a, b))
    }

    fn rb(&self, a: &Self::Value) -> Result<Self::Value> {
        Ok(i_op_lin(a))
    }
}

/// The free algebra itself; `universal_eval` with generator `(1)` is the
/// identity.
pub struct TensorTarget;

impl RbTarget for TensorTarget {
    type Value = LinComb<TensorWord>;
    type Error = Error;

    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value> {
        Ok(rba_product_lin(a, b))
    }

    fn rb(&self, a: &Self::Value) -> Result<Self::Value> {
        Ok(p_x_lin(a))
    }
}

/// A target given by two closures.
pub struct FnTarget<V, E, M, P>
where
    M: Fn(&V, &V) -> std::result::Result<V, E>,
    P: Fn(&V) -> std::result::Result<V, E>,
{
    mul: M,
    rb: P,
    _marker: std::marker::PhantomData<fn(V) -> E>,
}

impl<V, E, M, P> FnTarget<V, E, M, P>
where
    M: Fn(&V, &V) -> std::result::Result<V, E>,
    P: Fn(&V) -> std::result::Result<V, E>,
{
    pub fn new(mul: M, rb: P) -> Self {
        FnTarget { mul, rb, _marker: std::marker::PhantomData }
    }
}

impl<V: Clone, E, M, P> RbTarget for FnTarget<V, E, M, P>
where
    M: Fn(&V, &V) -> std::result::Result<V, E>,
    P: Fn(&V) -> std::result::Result<V, E>,
{
    type Value = V;
    type Error = E;

    fn mul(&self, a: &V, b: &V) -> std::result::Result<V, E> {
        (self.mul)(a, b)
    }

    fn rb(&self, a: &V) -> std::result::Result<V, E> {
        (self.rb)(a)
    }
}

/// Basis tensors of degree `m` in canonical order; `2^{m-1}` of them.
///
/// Each corresponds to a string of `m - 1` symbols, each either `x` or a
/// tensor sign, followed by a final `x`.
pub fn graded_basis(m: u32) -> Vec<TensorWord> {
    if m == 0 {
        return Vec::new();
    }
    let gaps = m - 1;
    let mut out: Vec<TensorWord> = (0u64..(1u64 << gaps))
        .map(|mask| {
            let mut exps = vec![0u32];
            for i in 0..gaps {
                if mask >> i & 1 == 1 {
                    exps.push(0);
                } else {
                    *exps.last_mut().unwrap() += 1;
                }
            }
            *exps.last_mut().unwrap() += 1;
            TensorWord(exps)
        })
        .collect();
    out.sort();
    out
}
