use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde_json::{json, Map, Value};

use crate::algebra::{format_ratio, format_short, Rational, Ring, TPoly};
use crate::compositions::Composition;
use crate::error::{Error, Result};

/// Formal symbol `ζ(s)` for a convergent composition `s`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MzvSymbol(Composition);

impl MzvSymbol {
    pub fn new(index: Composition) -> Result<Self> {
        if !index.is_convergent() {
            return Err(Error::domain(format!("ζ{index} needs a convergent index")));
        }
        Ok(MzvSymbol(index))
    }

    pub fn index(&self) -> &Composition {
        &self.0
    }
}

/// `ζ(2,1)`
impl fmt::Display for MzvSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.entries().iter().map(u32::to_string).collect();
        write!(f, "ζ({})", parts.join(","))
    }
}

/// Rational polynomial in commuting MZV symbols. Monomials are sorted
/// multisets of symbols; the empty monomial is `1`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ZetaExpr {
    terms: BTreeMap<Vec<MzvSymbol>, Rational>,
}

impl ZetaExpr {
    pub fn symbol(s: MzvSymbol) -> Self {
        Self::monomial(vec![s], Rational::one())
    }

    pub fn rational(c: Rational) -> Self {
        Self::monomial(Vec::new(), c)
    }

    pub fn monomial(mut symbols: Vec<MzvSymbol>, c: Rational) -> Self {
        symbols.sort();
        let mut e = Self::default();
        e.add_term(symbols, c);
        e
    }

    fn add_term(&mut self, symbols: Vec<MzvSymbol>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(symbols) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[MzvSymbol], &Rational)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl Zero for ZetaExpr {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for ZetaExpr {
    fn one() -> Self {
        Self::rational(Rational::one())
    }
}

impl Add for ZetaExpr {
    type Output = ZetaExpr;
    fn add(mut self, rhs: ZetaExpr) -> ZetaExpr {
        for (k, v) in rhs.terms {
            self.add_term(k, v);
        }
        self
    }
}

impl Neg for ZetaExpr {
    type Output = ZetaExpr;
    fn neg(self) -> ZetaExpr {
        ZetaExpr { terms: self.terms.into_iter().map(|(k, v)| (k, -v)).collect() }
    }
}

impl Sub for ZetaExpr {
    type Output = ZetaExpr;
    fn sub(self, rhs: ZetaExpr) -> ZetaExpr {
        self + (-rhs)
    }
}

impl Mul for ZetaExpr {
    type Output = ZetaExpr;
    fn mul(self, rhs: ZetaExpr) -> ZetaExpr {
        let mut out = ZetaExpr::zero();
        for (k1, v1) in &self.terms {
            for (k2, v2) in &rhs.terms {
                let mut k: Vec<MzvSymbol> = k1.iter().chain(k2).cloned().collect();
                k.sort();
                out.add_term(k, v1 * v2);
            }
        }
        out
    }
}

impl Ring for ZetaExpr {
    fn from_rational(q: &Rational) -> Self {
        ZetaExpr::rational(q.clone())
    }
}

/// Writes `c * m * var` as a signed term; returns the text without the
/// leading sign and whether it is negative.
fn signed_term(c: &Rational, symbols: &[MzvSymbol], var: &str) -> (bool, String) {
    let negative = c < &Rational::zero();
    let mag = if negative { -c } else { c.clone() };
    let mut factors: Vec<String> = symbols.iter().map(ToString::to_string).collect();
    if !var.is_empty() {
        factors.push(var.to_string());
    }
    let text = if factors.is_empty() {
        format_short(&mag)
    } else if mag.is_one() {
        factors.join("*")
    } else {
        format!("{}*{}", format_short(&mag), factors.join("*"))
    };
    (negative, text)
}

fn join_signed(terms: impl IntoIterator<Item = (bool, String)>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut first = true;
    for (negative, text) in terms {
        match (first, negative) {
            (true, true) => write!(f, "-{text}")?,
            (true, false) => f.write_str(&text)?,
            (false, true) => write!(f, " - {text}")?,
            (false, false) => write!(f, " + {text}")?,
        }
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// `ζ(2)*ζ(3) - 1/2*ζ(5)`
impl fmt::Display for ZetaExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        join_signed(self.iter().map(|(k, c)| signed_term(c, k, "")), f)
    }
}

/// Polynomial in `T` over MZV symbols.
pub type RegPoly = TPoly<ZetaExpr>;

/// Fully expanded text, highest power of `T` first:
/// `ζ(2)*T - 2*ζ(2,1)`.
pub struct RegPolyDisplay<'a>(pub &'a RegPoly);

impl fmt::Display for RegPolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, expr) in self.0.iter().rev() {
            let var = match k {
                0 => String::new(),
                1 => "T".to_string(),
                k => format!("T^{k}"),
            };
            for (symbols, c) in expr.iter() {
                terms.push(signed_term(c, symbols, &var));
            }
        }
        join_signed(terms, f)
    }
}

/// `{"T^1": {"monomials": [{"symbols": [[2]], "coeff": "1/1"}]}, ...}`
pub fn regpoly_json(p: &RegPoly) -> Value {
    let mut out = Map::new();
    for (k, expr) in p.iter() {
        let monomials: Vec<Value> = expr
            .iter()
            .map(|(symbols, c)| {
                let idx: Vec<&[u32]> = symbols.iter().map(|s| s.index().entries()).collect();
                json!({ "symbols": idx, "coeff": format_ratio(c) })
            })
            .collect();
        out.insert(format!("T^{k}"), json!({ "monomials": monomials }));
    }
    Value::Object(out)
}
