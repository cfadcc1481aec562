//! Exact Gaussian elimination.

use num_traits::Zero;

use super::lincomb::LinComb;
use super::rational::Rational;

/// Rank over the rationals of a dense row set.
pub fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| col < rows[r].len() && !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank].clone();
        let inv = Rational::from_integer(1.into()) / &pivot_row[col];
        for r in (rank + 1)..rows.len() {
            if col >= rows[r].len() || rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] * &inv;
            for c in col..pivot_row.len() {
                let delta = &factor * &pivot_row[c];
                rows[r][c] -= delta;
            }
        }
        rank += 1;
    }
    rank
}

/// Rank of a family of linear combinations, expressed in the coordinates
/// given by `basis`. Terms outside `basis` are ignored.
pub fn lincomb_rank<B: Ord + Clone>(vectors: &[LinComb<B>], basis: &[B]) -> usize {
    let rows = vectors
        .iter()
        .map(|v| basis.iter().map(|b| v.coeff(b)).collect())
        .collect();
    rank(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    #[test]
    fn small_ranks() {
        let rows = vec![
            vec![int(1), int(2), int(3)],
            vec![int(2), int(4), int(6)],
            vec![int(0), int(1), int(1)],
        ];
        assert_eq!(rank(rows), 2);
        assert_eq!(rank(vec![]), 0);
        assert_eq!(rank(vec![vec![int(0), int(0)]]), 0);
        let id: Vec<Vec<Rational>> = (0..4)
            .map(|i| (0..4).map(|j| int((i == j) as i64)).collect())
            .collect();
        assert_eq!(rank(id), 4);
    }
}
