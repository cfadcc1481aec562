use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{to_f64, Rational};

/// Commutative coefficient ring for [`TPoly`].
pub trait Ring:
    Clone + PartialEq + Zero + One + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    /// Embeds an exact rational (used for the `n!/(n-k)!` factors and
    /// division by integers in series recurrences).
    fn from_rational(q: &Rational) -> Self;
}

impl Ring for Rational {
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}

impl Ring for f64 {
    fn from_rational(q: &Rational) -> Self {
        to_f64(q)
    }
}

/// Polynomial in the single indeterminate `T`.
#[derive(Clone, Debug, PartialEq)]
pub struct TPoly<R> {
    coeffs: BTreeMap<u32, R>,
}

impl<R: Ring> Default for TPoly<R> {
    fn default() -> Self {
        TPoly { coeffs: BTreeMap::new() }
    }
}

impl<R: Ring> TPoly<R> {
    pub fn monomial(degree: u32, c: R) -> Self {
        let mut p = Self::default();
        p.add_term(degree, c);
        p
    }

    pub fn constant(c: R) -> Self {
        Self::monomial(0, c)
    }

    /// The indeterminate itself.
    pub fn t() -> Self {
        Self::monomial(1, R::one())
    }

    pub fn from_coeffs(coeffs: impl IntoIterator<Item = (u32, R)>) -> Self {
        let mut p = Self::default();
        for (k, c) in coeffs {
            p.add_term(k, c);
        }
        p
    }

    pub fn add_term(&mut self, degree: u32, c: R) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(degree).or_insert_with(R::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.coeffs.remove(&degree);
        }
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, degree: u32) -> R {
        self.coeffs.get(&degree).cloned().unwrap_or_else(R::zero)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (u32, &R)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|(k, a)| (*k, a.clone() * c.clone())))
    }

    pub fn map_coeffs<S: Ring>(&self, mut f: impl FnMut(&R) -> S) -> TPoly<S> {
        TPoly::from_coeffs(self.coeffs.iter().map(|(k, c)| (*k, f(c))))
    }

    pub fn try_map_coeffs<S: Ring, E>(&self, mut f: impl FnMut(&R) -> Result<S, E>) -> Result<TPoly<S>, E> {
        let mut out = TPoly::default();
        for (k, c) in &self.coeffs {
            out.add_term(*k, f(c)?);
        }
        Ok(out)
    }

    /// Horner evaluation at `T = at`.
    pub fn eval(&self, at: &R) -> R {
        let Some(top) = self.degree() else { return R::zero() };
        let mut acc = R::zero();
        for k in (0..=top).rev() {
            acc = acc * at.clone() + self.coeff(k);
        }
        acc
    }
}

impl<R: Ring> Zero for TPoly<R> {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Ring> One for TPoly<R> {
    fn one() -> Self {
        Self::constant(R::one())
    }
}

impl<R: Ring> Add for TPoly<R> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (k, c) in rhs.coeffs {
            self.add_term(k, c);
        }
        self
    }
}

impl<R: Ring> Sub for TPoly<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<R: Ring> Neg for TPoly<R> {
    type Output = Self;
    fn neg(self) -> Self {
        self.map_coeffs(|c| -c.clone())
    }
}

impl<R: Ring> Mul for TPoly<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::default();
        for (i, a) in &self.coeffs {
            for (j, b) in &rhs.coeffs {
                out.add_term(i + j, a.clone() * b.clone());
            }
        }
        out
    }
}

impl<R: Ring> Ring for TPoly<R> {
    fn from_rational(q: &Rational) -> Self {
        Self::constant(R::from_rational(q))
    }
}

/// Fixed-point with at most ten decimals, trailing zeros dropped.
fn short_decimal(x: f64) -> String {
    let s = format!("{x:.10}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

/// `0.5*T^2 + 0.8224670334`, highest power first.
impl fmt::Display for TPoly<f64> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.iter().rev() {
            let mag = short_decimal(c.abs());
            let term = match (k, mag.as_str()) {
                (0, _) => mag,
                (1, "1") => "T".to_string(),
                (1, _) => format!("{mag}*T"),
                (k, "1") => format!("T^{k}"),
                (k, _) => format!("{mag}*T^{k}"),
            };
            match (first, *c < 0.0) {
                (true, true) => write!(f, "-{term}")?,
                (true, false) => f.write_str(&term)?,
                (false, true) => write!(f, " - {term}")?,
                (false, false) => write!(f, " + {term}")?,
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
