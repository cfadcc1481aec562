use std::fmt::Debug;

use num_traits::{One, Zero};

use super::lincomb::LinComb;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Mixable shuffle product of weight `weight` on pure tensors.
///
/// Computes
/// `a ⧢ b = a1 (a' ⧢ b) + b1 (a ⧢ b') + weight * (a1·b1)(a' ⧢ b')`
/// with the empty tail acting as the unit. Empty inputs are accepted and
/// behave as the unit; the public algebras never hand one in except
/// through that convention.
///
/// `merge` is only consulted when `weight != 0`; returning `None` there
/// aborts with [`Error::MergeUndefined`].
pub fn mixable_shuffle<A, M>(a: &[A], b: &[A], weight: &Rational, merge: M) -> Result<LinComb<Vec<A>>>
where
    A: Clone + Ord + Debug,
    M: Fn(&A, &A) -> Option<A>,
{
    let (k, l) = (a.len(), b.len());
    let mixing = !weight.is_zero();
    // next[j] holds a[i+1..] ⧢ b[j..]; row i is built from it right to left.
    let mut next: Vec<LinComb<Vec<A>>> = (0..=l).map(|j| LinComb::basis(b[j..].to_vec())).collect();
    for i in (0..k).rev() {
        let mut row: Vec<LinComb<Vec<A>>> = vec![LinComb::zero(); l + 1];
        row[l] = LinComb::basis(a[i..].to_vec());
        for j in (0..l).rev() {
            let mut acc = prepend(&a[i], &next[j]);
            acc.add_scaled(&prepend(&b[j], &row[j + 1]), &Rational::one());
            if mixing {
                let merged = merge(&a[i], &b[j]).ok_or_else(|| Error::MergeUndefined {
                    left: format!("{:?}", a[i]),
                    right: format!("{:?}", b[j]),
                })?;
                acc.add_scaled(&prepend(&merged, &next[j + 1]), weight);
            }
            row[j] = acc;
        }
        next = row;
    }
    Ok(next.swap_remove(0))
}

/// Weight-zero shuffle; never merges.
pub fn shuffle<A: Clone + Ord + Debug>(a: &[A], b: &[A]) -> LinComb<Vec<A>> {
    mixable_shuffle(a, b, &Rational::zero(), |_, _| None).expect("weight 0 never merges")
}

fn prepend<A: Clone + Ord>(head: &A, tails: &LinComb<Vec<A>>) -> LinComb<Vec<A>> {
    tails.map_basis(|t| {
        let mut v = Vec::with_capacity(t.len() + 1);
        v.push(head.clone());
        v.extend_from_slice(t);
        v
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn add(a: &u32, b: &u32) -> Option<u32> {
        Some(a + b)
    }

    #[test]
    fn weight_zero_interleavings() {
        // x1 ⧢ x0x1 over letters 0/1
        let out = shuffle(&[1u8], &[0, 1]);
        let expected: LinComb<Vec<u8>> = [(vec![1, 0, 1], int(1)), (vec![0, 1, 1], int(2))].into_iter().collect();
        assert_eq!(out, expected);

        let out = shuffle(&[0u8, 1], &[0, 1]);
        let expected: LinComb<Vec<u8>> = [(vec![0, 1, 0, 1], int(2)), (vec![0, 0, 1, 1], int(4))].into_iter().collect();
        assert_eq!(out, expected);
    }

    #[test]
    fn weight_one_single_letters() {
        let out = mixable_shuffle(&[1u32], &[1], &int(1), add).unwrap();
        let expected: LinComb<Vec<u32>> = [(vec![1, 1], int(2)), (vec![2], int(1))].into_iter().collect();
        assert_eq!(out, expected);
    }

    #[test]
    fn empty_is_unit() {
        let out = mixable_shuffle::<u32, _>(&[], &[3, 4], &int(1), add).unwrap();
        assert_eq!(out, LinComb::basis(vec![3, 4]));
        let out = mixable_shuffle::<u32, _>(&[], &[], &int(1), add).unwrap();
        assert_eq!(out, LinComb::basis(vec![]));
    }

    #[test]
    fn partial_merge_reports_error() {
        let err = mixable_shuffle(&[1u32], &[2], &int(1), |_, _| None).unwrap_err();
        assert!(matches!(err, Error::MergeUndefined { .. }));
        // never consulted at weight zero
        assert!(mixable_shuffle(&[1u32], &[2], &int(0), |_, _| None).is_ok());
    }
}
