//! Words over `{x0, x1}` with the shuffle product.
//!
//! `H^ш x1` (nonempty words ending in `x1`) is a nonunitary subalgebra
//! and, with `I0(w) = x0 w`, a Rota-Baxter algebra of weight 0. Words
//! that also start with `x0` are the convergent ones.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{shuffle, LinComb};
use crate::compositions::Composition;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    X0,
    X1,
}

/// A finite word; the empty word is representable but rejected by every
/// operation of the nonunitary algebra.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    /// Builds a word from bits, `0 -> x0`, `1 -> x1`.
    pub fn from_bits(bits: &[u8]) -> Self {
        Word(bits.iter().map(|&b| if b == 0 { Letter::X0 } else { Letter::X1 }).collect())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Nonempty and ending in `x1`.
    pub fn in_h1(&self) -> bool {
        self.0.last() == Some(&Letter::X1)
    }

    /// In `H1` and starting with `x0`.
    pub fn in_h0(&self) -> bool {
        self.in_h1() && self.0[0] == Letter::X0
    }

    fn require_h1(&self, op: &str) -> Result<()> {
        if self.in_h1() {
            Ok(())
        } else {
            Err(Error::domain(format!("{op}: word '{self}' does not end in x1")))
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for l in &self.0 {
            f.write_str(match l {
                Letter::X0 => "x0",
                Letter::X1 => "x1",
            })?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bytes = s.as_bytes();
        if bytes.is_empty() || !bytes.len().is_multiple_of(2) {
            return Err(Error::domain(format!("malformed word '{s}'")));
        }
        bytes
            .chunks(2)
            .map(|c| match c {
                b"x0" => Ok(Letter::X0),
                b"x1" => Ok(Letter::X1),
                _ => Err(Error::domain(format!("malformed word '{s}'"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

/// Sum of all interleavings. The empty word acts as the unit.
pub fn word_shuffle(a: &Word, b: &Word) -> LinComb<Word> {
    shuffle(&a.0, &b.0).map_basis(|v| Word(v.clone()))
}

pub fn word_shuffle_lin(a: &LinComb<Word>, b: &LinComb<Word>) -> LinComb<Word> {
    crate::algebra::bilinear_extend(a, b, word_shuffle)
}

/// `I0(w) = x0 w`, defined on `H1`.
pub fn i0(w: &Word) -> Result<Word> {
    w.require_h1("I0")?;
    let mut letters = Vec::with_capacity(w.len() + 1);
    letters.push(Letter::X0);
    letters.extend_from_slice(&w.0);
    Ok(Word(letters))
}

pub fn i0_lin(w: &LinComb<Word>) -> Result<LinComb<Word>> {
    w.try_map_linear(|b| i0(b).map(LinComb::basis))
}

/// Grading of `H1`: for `x0^{u1} x1 ... x0^{uk} x1` this is
/// `u1 + ... + uk + k`, the letter count.
pub fn word_degree(w: &Word) -> Result<usize> {
    w.require_h1("degree")?;
    Ok(w.len())
}

/// `x0^{s1-1} x1 ... x0^{sk-1} x1 -> [s1, ..., sk]`.
pub fn eta(w: &Word) -> Result<Composition> {
    w.require_h1("eta")?;
    let mut entries = Vec::new();
    let mut run = 1u32;
    for l in &w.0 {
        match l {
            Letter::X0 => run += 1,
            Letter::X1 => {
                entries.push(run);
                run = 1;
            }
        }
    }
    Composition::new(entries)
}

/// Inverse of [`eta`]; needs every entry `>= 1`.
pub fn eta_inv(s: &Composition) -> Result<Word> {
    if !s.is_positive() {
        return Err(Error::domain(format!("eta_inv: composition {s} has a zero entry")));
    }
    let mut letters = Vec::with_capacity(s.weight() as usize);
    for &e in s.entries() {
        letters.extend(std::iter::repeat_n(Letter::X0, e as usize - 1));
        letters.push(Letter::X1);
    }
    Ok(Word(letters))
}

/// All words of `H1` of degree `m`, in word order. There are `2^{m-1}`.
pub fn h1_words_of_degree(m: usize) -> Vec<Word> {
    if m == 0 {
        return Vec::new();
    }
    let mut out: Vec<Word> = (0u64..(1u64 << (m - 1)))
        .map(|mask| {
            let mut letters: Vec<Letter> = (0..m - 1)
                .map(|i| if mask >> (m - 2 - i) & 1 == 1 { Letter::X1 } else { Letter::X0 })
                .collect();
            letters.push(Letter::X1);
            Word(letters)
        })
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn lc(terms: &[(&str, i64)]) -> LinComb<Word> {
        terms.iter().map(|(s, c)| (w(s), int(*c))).collect()
    }

    #[test]
    fn shuffle_examples() {
        assert_eq!(word_shuffle(&w("x1"), &w("x0x1")), lc(&[("x1x0x1", 1), ("x0x1x1", 2)]));
        assert_eq!(word_shuffle(&w("x0x1"), &w("x0x1")), lc(&[("x0x1x0x1", 2), ("x0x0x1x1", 4)]));
        assert_eq!(word_shuffle(&Word::empty(), &w("x0x1x1")), lc(&[("x0x1x1", 1)]));
    }

    #[test]
    fn i0_examples() {
        assert_eq!(i0(&w("x1")).unwrap(), w("x0x1"));
        assert_eq!(i0(&w("x0x1x1")).unwrap(), w("x0x0x1x1"));
        assert!(i0(&w("x1x0")).is_err());
        assert!(i0(&Word::empty()).is_err());
        // I0(x1) ⧢ I0(x1) = 2 I0(x1 ⧢ I0(x1))
        let x1 = LinComb::basis(w("x1"));
        let lhs = word_shuffle_lin(&i0_lin(&x1).unwrap(), &i0_lin(&x1).unwrap());
        let rhs = i0_lin(&word_shuffle_lin(&x1, &i0_lin(&x1).unwrap())).unwrap().scale(&int(2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn degree_examples() {
        assert_eq!(word_degree(&w("x1")).unwrap(), 1);
        assert_eq!(word_degree(&w("x0x1")).unwrap(), 2);
        assert_eq!(word_degree(&w("x1x0x1")).unwrap(), 3);
        assert!(word_degree(&w("x0")).is_err());
    }

    #[test]
    fn eta_examples() {
        assert_eq!(eta(&w("x0x1")).unwrap(), Composition::from([2]));
        assert_eq!(eta(&w("x1x1")).unwrap(), Composition::from([1, 1]));
        let v = w("x1x0x1");
        assert_eq!(eta(&i0(&v).unwrap()).unwrap(), crate::compositions::i_op(&eta(&v).unwrap()));
        assert_eq!(eta(&i0(&v).unwrap()).unwrap(), Composition::from([2, 2]));
        assert!(eta(&w("x1x0")).is_err());
        assert!(eta_inv(&Composition::from([0, 1])).is_err());
    }

    #[test]
    fn predicates_and_parsing() {
        assert!(w("x0x1").in_h0());
        assert!(!w("x1x1").in_h0());
        assert!(w("x1x1").in_h1());
        assert!(!Word::empty().in_h1());
        assert!("x0x".parse::<Word>().is_err());
        assert!("x2".parse::<Word>().is_err());
        assert_eq!(w("x0x1x1").to_string(), "x0x1x1");
    }

    #[test]
    fn graded_word_count() {
        for m in 1..=6 {
            let ws = h1_words_of_degree(m);
            assert_eq!(ws.len(), 1 << (m - 1));
            assert!(ws.iter().all(|x| x.in_h1() && x.len() == m));
        }
    }
}
