//! Compositions `[s1, ..., sk]` and the products defined on them.
//!
//! Entries are non-negative. On positive compositions the shuffle product
//! agrees with the word shuffle transported through `eta`; the extension
//! to entries `>= 0` is fixed by `[0] ⧢ [s] = [0, s]` together with `I`
//! being a weight-0 Rota-Baxter operator.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Signed};

use crate::algebra::{format_short, int, mixable_shuffle, LinComb, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::domain("a composition needs at least one entry"));
        }
        Ok(Composition(entries))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    /// Entry sum.
    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Grading under which `[0]` has degree 1 and `I` raises degree by 1.
    pub fn degree(&self) -> u32 {
        self.weight() + self.0.len() as u32
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&e| e >= 1)
    }

    /// Positive with first entry at least 2.
    pub fn is_convergent(&self) -> bool {
        self.is_positive() && self.0[0] >= 2
    }

    /// Number of leading entries equal to 1.
    pub fn leading_ones(&self) -> usize {
        self.0.iter().take_while(|&&e| e == 1).count()
    }

    pub(crate) fn from_vec_unchecked(v: Vec<u32>) -> Self {
        debug_assert!(!v.is_empty());
        Composition(v)
    }
}

impl<const N: usize> From<[u32; N]> for Composition {
    fn from(a: [u32; N]) -> Self {
        Composition::new(a.to_vec()).expect("nonempty literal")
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

/// `I([s]) = [s + e1]`.
pub fn i_op(s: &Composition) -> Composition {
    let mut v = s.0.clone();
    v[0] += 1;
    Composition(v)
}

pub fn i_op_lin(s: &LinComb<Composition>) -> LinComb<Composition> {
    s.map_basis(i_op)
}

/// Shuffle product on compositions with entries `>= 0`, by the recursion
///
/// ```text
/// [0, s'] ⧢ t = [0, s' ⧢ t]
/// s ⧢ [0, t'] = [0, s ⧢ t']
/// s ⧢ t      = I((s - e1) ⧢ t) + I(s ⧢ (t - e1))   otherwise
/// ```
///
/// where an exhausted tail is the unit.
pub fn comp_shuffle(s: &Composition, t: &Composition) -> LinComb<Composition> {
    let mut memo = HashMap::new();
    shuffle_rec(&s.0, &t.0, &mut memo).map_basis(|v| Composition(v.clone()))
}

pub fn comp_shuffle_lin(a: &LinComb<Composition>, b: &LinComb<Composition>) -> LinComb<Composition> {
    let mut memo = HashMap::new();
    crate::algebra::bilinear_extend(a, b, |s, t| {
        shuffle_rec(&s.0, &t.0, &mut memo).map_basis(|v| Composition(v.clone()))
    })
}

type ShuffleMemo = HashMap<(Vec<u32>, Vec<u32>), LinComb<Vec<u32>>>;

fn shuffle_rec(s: &[u32], t: &[u32], memo: &mut ShuffleMemo) -> LinComb<Vec<u32>> {
    if s.is_empty() {
        return LinComb::basis(t.to_vec());
    }
    if t.is_empty() {
        return LinComb::basis(s.to_vec());
    }
    // commutative, so cache on the ordered pair
    let key = if s <= t { (s.to_vec(), t.to_vec()) } else { (t.to_vec(), s.to_vec()) };
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let out = if s[0] == 0 {
        prepend_zero(&shuffle_rec(&s[1..], t, memo))
    } else if t[0] == 0 {
        prepend_zero(&shuffle_rec(s, &t[1..], memo))
    } else {
        let mut lowered = s.to_vec();
        lowered[0] -= 1;
        let mut acc = raise(&shuffle_rec(&lowered, t, memo));
        let mut lowered = t.to_vec();
        lowered[0] -= 1;
        acc.add_scaled(&raise(&shuffle_rec(s, &lowered, memo)), &Rational::one());
        acc
    };
    memo.insert(key, out.clone());
    out
}

fn prepend_zero(x: &LinComb<Vec<u32>>) -> LinComb<Vec<u32>> {
    x.map_basis(|v| {
        let mut w = Vec::with_capacity(v.len() + 1);
        w.push(0);
        w.extend_from_slice(v);
        w
    })
}

fn raise(x: &LinComb<Vec<u32>>) -> LinComb<Vec<u32>> {
    x.map_basis(|v| {
        let mut w = v.clone();
        w[0] += 1;
        w
    })
}

/// Quasi-shuffle (stuffle) of positive compositions: weight-1 mixable
/// shuffle with entries merged by addition.
pub fn stuffle(s: &Composition, t: &Composition) -> Result<LinComb<Composition>> {
    for c in [s, t] {
        if !c.is_positive() {
            return Err(Error::domain(format!("stuffle: {c} is not a positive composition")));
        }
    }
    Ok(mixable_shuffle(&s.0, &t.0, &Rational::one(), |a, b| Some(a + b))?.map_basis(|v| Composition(v.clone())))
}

pub fn stuffle_lin(a: &LinComb<Composition>, b: &LinComb<Composition>) -> Result<LinComb<Composition>> {
    crate::algebra::try_bilinear_extend(a, b, stuffle)
}

/// Element `(s; r)` of the two-row semigroup algebra: `s` integer, `r` a
/// non-negative rational, multiplied componentwise.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BiComposition {
    pairs: Vec<(i64, Rational)>,
}

impl BiComposition {
    pub fn new(s_row: Vec<i64>, r_row: Vec<Rational>) -> Result<Self> {
        if s_row.is_empty() || s_row.len() != r_row.len() {
            return Err(Error::domain(format!(
                "bicomposition rows must be nonempty and of equal length (got {} and {})",
                s_row.len(),
                r_row.len()
            )));
        }
        if let Some(r) = r_row.iter().find(|r| r.is_negative()) {
            return Err(Error::domain(format!("bicomposition r-entry {r} is negative")));
        }
        Ok(BiComposition { pairs: s_row.into_iter().zip(r_row).collect() })
    }

    /// Integer r-row convenience constructor.
    pub fn from_ints(s_row: &[i64], r_row: &[i64]) -> Result<Self> {
        Self::new(s_row.to_vec(), r_row.iter().map(|&r| int(r)).collect())
    }

    pub fn depth(&self) -> usize {
        self.pairs.len()
    }

    pub fn s_row(&self) -> Vec<i64> {
        self.pairs.iter().map(|p| p.0).collect()
    }

    pub fn r_row(&self) -> Vec<Rational> {
        self.pairs.iter().map(|p| p.1.clone()).collect()
    }

    pub fn pairs(&self) -> &[(i64, Rational)] {
        &self.pairs
    }
}

impl fmt::Display for BiComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.pairs.iter().map(|p| p.0.to_string()).collect();
        let r: Vec<String> = self.pairs.iter().map(|p| format_short(&p.1)).collect();
        write!(f, "[{} | {}]", s.join(","), r.join(","))
    }
}

/// Quasi-shuffle on bicompositions, merging `(s;r)·(s';r') = (s+s';r+r')`.
pub fn bistuffle(u: &BiComposition, v: &BiComposition) -> LinComb<BiComposition> {
    mixable_shuffle(&u.pairs, &v.pairs, &Rational::one(), |a, b| Some((a.0 + b.0, &a.1 + &b.1)))
        .expect("pair merge is total")
        .map_basis(|p| BiComposition { pairs: p.clone() })
}

pub fn bistuffle_lin(a: &LinComb<BiComposition>, b: &LinComb<BiComposition>) -> LinComb<BiComposition> {
    crate::algebra::bilinear_extend(a, b, bistuffle)
}

/// Drops the r-row; intertwines [`bistuffle`] with the stuffle on integer
/// sequences.
pub fn project_s_row(x: &LinComb<BiComposition>) -> LinComb<Vec<i64>> {
    x.map_basis(BiComposition::s_row)
}

/// All compositions of `weight` with positive entries, lexicographic.
pub fn positive_compositions(weight: u32) -> Vec<Composition> {
    fn go(rest: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition(prefix.clone()));
            return;
        }
        for first in 1..=rest {
            prefix.push(first);
            go(rest - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if weight > 0 {
        go(weight, &mut Vec::new(), &mut out);
    }
    out.sort();
    out
}

/// Convergent compositions of `weight`; there are `2^{weight-2}` for
/// `weight >= 2`.
pub fn convergent_compositions(weight: u32) -> Vec<Composition> {
    positive_compositions(weight).into_iter().filter(Composition::is_convergent).collect()
}

/// Compositions with entries `>= 0` and `degree() == degree`.
pub fn compositions_of_degree(degree: u32) -> Vec<Composition> {
    // entries shifted by one are the positive compositions of `degree`
    positive_compositions(degree)
        .into_iter()
        .map(|c| Composition(c.0.iter().map(|e| e - 1).collect()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn c<const N: usize>(a: [u32; N]) -> Composition {
        Composition::from(a)
    }

    fn lc(terms: Vec<(Composition, i64)>) -> LinComb<Composition> {
        terms.into_iter().map(|(b, k)| (b, int(k))).collect()
    }

    #[test]
    fn shuffle_examples() {
        assert_eq!(comp_shuffle(&c([0]), &c([0])), lc(vec![(c([0, 0]), 1)]));
        assert_eq!(comp_shuffle(&c([0]), &c([3, 1])), lc(vec![(c([0, 3, 1]), 1)]));
        assert_eq!(comp_shuffle(&c([1]), &c([1])), lc(vec![(c([1, 1]), 2)]));
        assert_eq!(comp_shuffle(&c([1]), &c([2])), lc(vec![(c([1, 2]), 1), (c([2, 1]), 2)]));
    }

    #[test]
    fn i_examples() {
        assert_eq!(i_op(&c([1, 2])), c([2, 2]));
        assert_eq!(i_op(&c([0])), c([1]));
        // I(a) ⧢ I(b) = I(a ⧢ I(b)) + I(I(a) ⧢ b) at a=[0], b=[1]
        let (a, b) = (c([0]), c([1]));
        let lhs = comp_shuffle(&i_op(&a), &i_op(&b));
        let rhs = i_op_lin(&comp_shuffle(&a, &i_op(&b))) + i_op_lin(&comp_shuffle(&i_op(&a), &b));
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, lc(vec![(c([1, 2]), 1), (c([2, 1]), 2)]));
    }

    #[test]
    fn stuffle_examples() {
        assert_eq!(
            stuffle(&c([1]), &c([2])).unwrap(),
            lc(vec![(c([1, 2]), 1), (c([2, 1]), 1), (c([3]), 1)])
        );
        assert_eq!(stuffle(&c([2]), &c([2])).unwrap(), lc(vec![(c([2, 2]), 2), (c([4]), 1)]));
        assert_eq!(stuffle(&c([1]), &c([1])).unwrap(), lc(vec![(c([1, 1]), 2), (c([2]), 1)]));
        assert!(stuffle(&c([0]), &c([1])).is_err());
    }

    #[test]
    fn bistuffle_examples() {
        let u = BiComposition::from_ints(&[1], &[1]).unwrap();
        let v = BiComposition::from_ints(&[2], &[0]).unwrap();
        let expected: LinComb<BiComposition> = [
            (BiComposition::from_ints(&[1, 2], &[1, 0]).unwrap(), int(1)),
            (BiComposition::from_ints(&[2, 1], &[0, 1]).unwrap(), int(1)),
            (BiComposition::from_ints(&[3], &[1]).unwrap(), int(1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(bistuffle(&u, &v), expected);

        let uu = bistuffle(&u, &u);
        let projected = project_s_row(&uu);
        let st = stuffle(&c([1]), &c([1])).unwrap().map_basis(|x| x.entries().iter().map(|&e| e as i64).collect());
        assert_eq!(projected, st);
    }

    #[test]
    fn bicomposition_validation() {
        assert!(BiComposition::from_ints(&[1, 2], &[1]).is_err());
        assert!(BiComposition::from_ints(&[], &[]).is_err());
        assert!(BiComposition::from_ints(&[1], &[-1]).is_err());
        assert!(BiComposition::from_ints(&[-3], &[0]).is_ok());
        assert_eq!(BiComposition::from_ints(&[1, 2], &[1, 0]).unwrap().to_string(), "[1,2 | 1,0]");
    }

    #[test]
    fn enumerations() {
        assert_eq!(positive_compositions(3).len(), 4);
        for w in 2..=8 {
            assert_eq!(convergent_compositions(w).len(), 1 << (w - 2));
        }
        assert_eq!(compositions_of_degree(2), vec![c([0, 0]), c([1])]);
        assert!(Composition::new(vec![]).is_err());
        assert_eq!(c([1, 1, 2, 1]).leading_ones(), 2);
    }
}
