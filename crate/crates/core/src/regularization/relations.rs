use std::fmt;

use crate::algebra::{format_ratio, linalg::lincomb_rank, LinComb};
use crate::compositions::{comp_shuffle, convergent_compositions, stuffle, Composition};
use crate::error::{Error, Result};

/// `ζ(w1 ⧢ w2) - ζ(w1 * w2)` for one source pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub weight: u32,
    pub source: (Composition, Composition),
    pub combination: LinComb<Composition>,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} from ({}, {})", self.combination, self.source.0, self.source.1)
    }
}

fn difference(weight: u32, a: &Composition, b: &Composition) -> Option<Relation> {
    let st = stuffle(a, b).expect("positive compositions");
    let combination = &comp_shuffle(a, b) - &st;
    if combination.is_zero() {
        return None;
    }
    Some(Relation { weight, source: (a.clone(), b.clone()), combination })
}

/// Double shuffle relations of the given weight: one per unordered pair of
/// convergent compositions, zero differences omitted, sorted by pair.
pub fn dsh_relations(weight: u32) -> Vec<Relation> {
    let mut out = Vec::new();
    for w1 in 2..=weight / 2 {
        let left = convergent_compositions(w1);
        let right = convergent_compositions(weight - w1);
        for a in &left {
            for b in &right {
                if w1 * 2 == weight && b < a {
                    continue;
                }
                let (x, y) = if a <= b { (a, b) } else { (b, a) };
                out.extend(difference(weight, x, y));
            }
        }
    }
    out.sort_by(|p, q| p.source.cmp(&q.source));
    out
}

/// [`dsh_relations`] together with `[1] ⧢ w - [1] * w` for convergent `w`
/// of weight `weight - 1`.
pub fn eds_relations(weight: u32) -> Vec<Relation> {
    let mut out = dsh_relations(weight);
    if weight >= 3 {
        let one = Composition::from([1]);
        for w in convergent_compositions(weight - 1) {
            if let Some(r) = difference(weight, &one, &w) {
                debug_assert!(r.combination.basis_elements().all(Composition::is_convergent));
                out.push(r);
            }
        }
    }
    out.sort_by(|p, q| p.source.cmp(&q.source));
    out
}

/// Exact rank of the extended double shuffle relations among the
/// convergent compositions of `weight`, and the resulting upper bound
/// `#convergent - rank` on the dimension of the weight-graded MZV span.
pub fn relation_rank(weight: u32) -> Result<(usize, usize)> {
    if !(2..=8).contains(&weight) {
        return Err(Error::domain(format!("relation_rank supports weights 2..=8, got {weight}")));
    }
    let basis = convergent_compositions(weight);
    let vectors: Vec<LinComb<Composition>> = eds_relations(weight).into_iter().map(|r| r.combination).collect();
    let rank = lincomb_rank(&vectors, &basis);
    Ok((rank, basis.len() - rank))
}

/// CSV table with columns `weight,source_pair,term_composition,coefficient`.
pub fn relations_csv(relations: &[Relation]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::domain(format!("csv: {e}"));
    w.write_record(["weight", "source_pair", "term_composition", "coefficient"]).map_err(io)?;
    for r in relations {
        let pair = format!("({}, {})", r.source.0, r.source.1);
        for (term, c) in r.combination.iter() {
            w.write_record([r.weight.to_string(), pair.clone(), term.to_string(), format_ratio(c)])
                .map_err(io)?;
        }
    }
    let bytes = w.into_inner().map_err(|e| Error::domain(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
