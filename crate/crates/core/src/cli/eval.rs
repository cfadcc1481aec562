use std::fmt;

use serde_json::{json, Value as Json};

use super::ast::{Expr, Kind, Node, Op};
use crate::algebra::{format_ratio, mixable_shuffle, LinComb, Rational};
use crate::compositions::{
    bistuffle_lin, comp_shuffle_lin, i_op_lin, stuffle_lin, BiComposition, Composition,
};
use crate::error::{Error, Result};
use crate::free_rba::{f_hom_lin, p_x_lin, phi_hom_lin, rba_product_lin, TensorWord};
use crate::words::{eta, eta_inv, i0_lin, word_shuffle_lin, Word};

/// A linear combination tagged with its basis kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Word(LinComb<Word>),
    Composition(LinComb<Composition>),
    BiComposition(LinComb<BiComposition>),
    Tensor(LinComb<TensorWord>),
}

impl Value {
    pub fn kind(&self) -> Kind {
        match self {
            Value::Word(_) => Kind::Word,
            Value::Composition(_) => Kind::Composition,
            Value::BiComposition(_) => Kind::BiComposition,
            Value::Tensor(_) => Kind::Tensor,
        }
    }

    fn map(self, f: impl Fn(&Rational) -> Rational) -> Value {
        fn go<B: Ord + Clone>(x: LinComb<B>, f: impl Fn(&Rational) -> Rational) -> LinComb<B> {
            x.iter().map(|(b, c)| (b.clone(), f(c))).collect()
        }
        match self {
            Value::Word(x) => Value::Word(go(x, f)),
            Value::Composition(x) => Value::Composition(go(x, f)),
            Value::BiComposition(x) => Value::BiComposition(go(x, f)),
            Value::Tensor(x) => Value::Tensor(go(x, f)),
        }
    }

    /// Basis text and exact coefficient of every term, in canonical order.
    pub fn terms(&self) -> Vec<(String, Rational)> {
        fn go<B: Ord + Clone + ToString>(x: &LinComb<B>) -> Vec<(String, Rational)> {
            x.iter().map(|(b, c)| (b.to_string(), c.clone())).collect()
        }
        match self {
            Value::Word(x) => go(x),
            Value::Composition(x) => go(x),
            Value::BiComposition(x) => go(x),
            Value::Tensor(x) => go(x),
        }
    }

    pub fn to_json(&self) -> Json {
        let terms: Vec<Json> = self
            .terms()
            .into_iter()
            .map(|(b, c)| json!({ "basis": b, "coeff": format_ratio(&c) }))
            .collect();
        json!({ "kind": self.kind().to_string(), "terms": terms })
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Word(x) => write!(f, "{x}"),
            Value::Composition(x) => write!(f, "{x}"),
            Value::BiComposition(x) => write!(f, "{x}"),
            Value::Tensor(x) => write!(f, "{x}"),
        }
    }
}

fn combine(a: Value, b: Value, sign: i64) -> Value {
    let s = Rational::from_integer(sign.into());
    match (a, b) {
        (Value::Word(x), Value::Word(y)) => Value::Word(crate::algebra::lincomb_combine(&x, &y, &s)),
        (Value::Composition(x), Value::Composition(y)) => {
            Value::Composition(crate::algebra::lincomb_combine(&x, &y, &s))
        }
        (Value::BiComposition(x), Value::BiComposition(y)) => {
            Value::BiComposition(crate::algebra::lincomb_combine(&x, &y, &s))
        }
        (Value::Tensor(x), Value::Tensor(y)) => Value::Tensor(crate::algebra::lincomb_combine(&x, &y, &s)),
        _ => unreachable!("kinds checked at parse time"),
    }
}

/// Weight-λ mixable shuffle of the underlying letter sequences, extended
/// bilinearly.
fn mixable_lin<B, A, M>(
    x: &LinComb<B>,
    y: &LinComb<B>,
    lambda: &Rational,
    atoms: impl Fn(&B) -> Vec<A>,
    build: impl Fn(Vec<A>) -> Result<B>,
    merge: M,
) -> Result<LinComb<B>>
where
    B: Ord + Clone,
    A: Clone + Ord + fmt::Debug,
    M: Fn(&A, &A) -> Option<A> + Copy,
{
    let mut out = LinComb::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            let prod = mixable_shuffle(&atoms(a), &atoms(b), lambda, merge)?;
            for (seq, c) in prod.iter() {
                out.add_term(build(seq.clone())?, ca * cb * c);
            }
        }
    }
    Ok(out)
}

fn apply(op: Op, lambda: Option<&Rational>, args: Vec<Value>) -> Result<Value> {
    let mut it = args.into_iter();
    let a = it.next().expect("arity checked");
    let b = it.next();
    Ok(match (op, a, b) {
        (Op::Shuffle, Value::Word(x), Some(Value::Word(y))) => Value::Word(word_shuffle_lin(&x, &y)),
        (Op::Shuffle, Value::Composition(x), Some(Value::Composition(y))) => {
            Value::Composition(comp_shuffle_lin(&x, &y))
        }
        (Op::Shuffle, Value::Tensor(x), Some(Value::Tensor(y))) => Value::Tensor(rba_product_lin(&x, &y)),
        (Op::Stuffle, Value::Composition(x), Some(Value::Composition(y))) => {
            Value::Composition(stuffle_lin(&x, &y)?)
        }
        (Op::Stuffle, Value::BiComposition(x), Some(Value::BiComposition(y))) => {
            Value::BiComposition(bistuffle_lin(&x, &y))
        }
        (Op::Mixable, a, Some(b)) => {
            let l = lambda.expect("msh carries a weight");
            match (a, b) {
                (Value::Word(x), Value::Word(y)) => Value::Word(mixable_lin(
                    &x,
                    &y,
                    l,
                    |w| w.letters().to_vec(),
                    |v| Ok(Word::new(v)),
                    |_, _| None,
                )?),
                (Value::Composition(x), Value::Composition(y)) => Value::Composition(mixable_lin(
                    &x,
                    &y,
                    l,
                    |c| c.entries().to_vec(),
                    Composition::new,
                    |p: &u32, q: &u32| Some(p + q),
                )?),
                (Value::BiComposition(x), Value::BiComposition(y)) => Value::BiComposition(mixable_lin(
                    &x,
                    &y,
                    l,
                    |c| c.pairs().to_vec(),
                    |v: Vec<(i64, Rational)>| {
                        let (s, r) = v.into_iter().unzip();
                        BiComposition::new(s, r)
                    },
                    |p: &(i64, Rational), q: &(i64, Rational)| Some((p.0 + q.0, &p.1 + &q.1)),
                )?),
                _ => unreachable!("kinds checked at parse time"),
            }
        }
        (Op::I, Value::Composition(x), None) => Value::Composition(i_op_lin(&x)),
        (Op::I0, Value::Word(x), None) => Value::Word(i0_lin(&x)?),
        (Op::Px, Value::Tensor(x), None) => Value::Tensor(p_x_lin(&x)),
        (Op::Eta, Value::Word(x), None) => Value::Composition(x.try_map_linear(|w| Ok::<_, Error>(LinComb::basis(eta(w)?)))?),
        (Op::EtaInv, Value::Composition(x), None) => {
            Value::Word(x.try_map_linear(|c| Ok::<_, Error>(LinComb::basis(eta_inv(c)?)))?)
        }
        (Op::F, Value::Tensor(x), None) => Value::Word(f_hom_lin(&x)),
        (Op::Phi, Value::Tensor(x), None) => Value::Composition(phi_hom_lin(&x)),
        _ => unreachable!("kinds checked at parse time"),
    })
}

/// Evaluates a parsed expression to a canonical linear combination.
pub fn evaluate(e: &Expr) -> Result<Value> {
    Ok(match &e.node {
        Node::Word(w) => Value::Word(LinComb::basis(w.clone())),
        Node::Composition(c) => Value::Composition(LinComb::basis(c.clone())),
        Node::BiComposition(b) => Value::BiComposition(LinComb::basis(b.clone())),
        Node::Tensor(t) => Value::Tensor(LinComb::basis(t.clone())),
        Node::Call { op, lambda, args } => {
            let vals = args.iter().map(evaluate).collect::<Result<Vec<_>>>()?;
            apply(*op, lambda.as_ref(), vals)?
        }
        Node::Scale(q, inner) => evaluate(inner)?.map(|c| c * q),
        Node::Neg(inner) => evaluate(inner)?.map(|c| -c),
        Node::Add(a, b) => combine(evaluate(a)?, evaluate(b)?, 1),
        Node::Sub(a, b) => combine(evaluate(a)?, evaluate(b)?, -1),
    })
}
