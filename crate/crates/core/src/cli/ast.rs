use std::fmt;

use crate::algebra::{format_short, Rational};
use crate::compositions::{BiComposition, Composition};
use crate::free_rba::TensorWord;
use crate::words::Word;

/// Byte range in the source text.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

/// The basis an expression lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Word,
    Composition,
    BiComposition,
    Tensor,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Word => "word",
            Kind::Composition => "composition",
            Kind::BiComposition => "bicomposition",
            Kind::Tensor => "tensor",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    /// `sh(a, b)`
    Shuffle,
    /// `st(a, b)`
    Stuffle,
    /// `msh(λ; a, b)`
    Mixable,
    I,
    I0,
    Px,
    Eta,
    EtaInv,
    F,
    Phi,
}

impl Op {
    pub fn name(self) -> &'static str {
        match self {
            Op::Shuffle => "sh",
            Op::Stuffle => "st",
            Op::Mixable => "msh",
            Op::I => "I",
            Op::I0 => "I0",
            Op::Px => "Px",
            Op::Eta => "eta",
            Op::EtaInv => "eta_inv",
            Op::F => "f",
            Op::Phi => "phi",
        }
    }

    pub fn from_name(name: &str) -> Option<Op> {
        const ALL: [Op; 10] =
            [Op::Shuffle, Op::Stuffle, Op::Mixable, Op::I, Op::I0, Op::Px, Op::Eta, Op::EtaInv, Op::F, Op::Phi];
        ALL.into_iter().find(|op| op.name() == name)
    }

    pub fn arity(self) -> usize {
        match self {
            Op::Shuffle | Op::Stuffle | Op::Mixable => 2,
            _ => 1,
        }
    }

    /// Result kind for the given argument kinds, if the call is well typed.
    pub fn result_kind(self, args: &[Kind]) -> Option<Kind> {
        use Kind::*;
        match (self, args) {
            (Op::Shuffle, [a, b]) if a == b && *a != BiComposition => Some(*a),
            (Op::Stuffle, [a, b]) if a == b && matches!(a, Composition | BiComposition) => Some(*a),
            (Op::Mixable, [a, b]) if a == b && *a != Tensor => Some(*a),
            (Op::I, [Composition]) => Some(Composition),
            (Op::I0, [Word]) => Some(Word),
            (Op::Px, [Tensor]) => Some(Tensor),
            (Op::Eta, [Word]) => Some(Composition),
            (Op::EtaInv, [Composition]) => Some(Word),
            (Op::F, [Tensor]) => Some(Word),
            (Op::Phi, [Tensor]) => Some(Composition),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub enum Node {
    Word(Word),
    Composition(Composition),
    BiComposition(BiComposition),
    Tensor(TensorWord),
    Call { op: Op, lambda: Option<Rational>, args: Vec<Expr> },
    Scale(Rational, Box<Expr>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
}

/// Typed expression tree. Equality ignores spans.
#[derive(Clone, Debug)]
pub struct Expr {
    pub node: Node,
    pub kind: Kind,
    pub span: Span,
}

impl PartialEq for Node {
    fn eq(&self, other: &Self) -> bool {
        use Node::*;
        match (self, other) {
            (Word(a), Word(b)) => a == b,
            (Composition(a), Composition(b)) => a == b,
            (BiComposition(a), BiComposition(b)) => a == b,
            (Tensor(a), Tensor(b)) => a == b,
            (Call { op: o1, lambda: l1, args: a1 }, Call { op: o2, lambda: l2, args: a2 }) => {
                o1 == o2 && l1 == l2 && a1 == a2
            }
            (Scale(q1, e1), Scale(q2, e2)) => q1 == q2 && e1 == e2,
            (Neg(a), Neg(b)) => a == b,
            (Add(a1, b1), Add(a2, b2)) | (Sub(a1, b1), Sub(a2, b2)) => a1 == a2 && b1 == b2,
            _ => false,
        }
    }
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind && self.node == other.node
    }
}

fn is_sum(e: &Expr) -> bool {
    matches!(e.node, Node::Add(..) | Node::Sub(..))
}

/// Canonical text; parsing it gives back an equal tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.node {
            Node::Word(w) => write!(f, "{w}"),
            Node::Composition(c) => write!(f, "{c}"),
            Node::BiComposition(b) => write!(f, "{b}"),
            Node::Tensor(t) => write!(f, "{t}"),
            Node::Call { op, lambda, args } => {
                write!(f, "{}(", op.name())?;
                if let Some(l) = lambda {
                    write!(f, "{}; ", format_short(l))?;
                }
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
            Node::Scale(q, e) => {
                if is_sum(e) {
                    write!(f, "{}*({e})", format_short(q))
                } else {
                    write!(f, "{}*{e}", format_short(q))
                }
            }
            Node::Neg(e) => {
                if is_sum(e) || matches!(e.node, Node::Scale(..)) {
                    write!(f, "-({e})")
                } else {
                    write!(f, "-{e}")
                }
            }
            Node::Add(a, b) | Node::Sub(a, b) => {
                let sign = if matches!(self.node, Node::Add(..)) { "+" } else { "-" };
                if is_sum(b) {
                    write!(f, "{a} {sign} ({b})")
                } else {
                    write!(f, "{a} {sign} {b}")
                }
            }
        }
    }
}
