use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::algebra::{format_short, Rational};

/// Finite Laurent polynomial in `ε` with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(exponent: i32, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(exponent, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, Rational)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exponent: i32, c: Rational) {
        let entry = self.terms.entry(exponent).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn coeff(&self, exponent: i32) -> Rational {
        self.terms.get(&exponent).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i32, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }
}

/// Pole part: keeps exactly the terms with negative exponent.
pub fn pole_project(f: &LaurentPoly) -> LaurentPoly {
    LaurentPoly { terms: f.terms.range(..0).map(|(e, c)| (*e, c.clone())).collect() }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.iter() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.iter() {
            for (e2, c2) in rhs.iter() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

/// `ε^-2 + 3 - 1/2*ε`
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.iter().enumerate() {
            let (neg, mag) = if c < &Rational::zero() { (true, -c) } else { (false, c.clone()) };
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let var = match e {
                0 => String::new(),
                1 => "ε".to_string(),
                e => format!("ε^{e}"),
            };
            if var.is_empty() {
                write!(f, "{}", format_short(&mag))?;
            } else if mag.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{}*{var}", format_short(&mag))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn lp(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, int(c))))
    }

    #[test]
    fn projection() {
        assert_eq!(pole_project(&lp(&[(-2, 1), (0, 3), (1, 1)])), lp(&[(-2, 1)]));
        assert!(pole_project(&lp(&[(0, 5)])).is_zero());
        assert_eq!(lp(&[(-2, 1), (0, 3), (1, -1)]).to_string(), "ε^-2 + 3 - ε");
    }

    #[test]
    fn weight_minus_one_identity() {
        let f = lp(&[(-1, 1), (0, 1)]);
        let g = lp(&[(-1, 1), (1, 1)]);
        let p = pole_project;
        let lhs = &p(&f) * &p(&g);
        let rhs = &(&p(&(&f * &p(&g))) + &p(&(&p(&f) * &g))) - &p(&(&f * &g));
        assert_eq!(lhs, rhs);
    }
}
