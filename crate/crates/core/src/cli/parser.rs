//! Recursive-descent parser for the expression language.
//!
//! ```text
//! expr    := unary (("+" | "-") unary)*
//! unary   := "-" unary | scalar "*" unary | primary
//! scalar  := ["-"] int ["/" int]
//! primary := "[" ints "]" | "[" ints "|" scalars "]" | word
//!          | "(" ints ")" | "(" expr ")" | name "(" args ")"
//! args    := expr ("," expr)*  |  scalar ";" expr "," expr   (msh only)
//! ```

use std::fmt;

use num_bigint::BigInt;

use super::ast::{Expr, Kind, Node, Op, Span};
use crate::algebra::Rational;
use crate::compositions::{BiComposition, Composition};
use crate::free_rba::TensorWord;
use crate::words::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    KindMismatch,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            ParseErrorKind::Syntax => "syntax error",
            ParseErrorKind::KindMismatch => "kind mismatch",
        };
        write!(f, "{what} at offset {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn lex(input: &str) -> Result<Vec<(Tok, Span)>, ParseError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = input[start..i].parse().expect("digits");
            out.push((Tok::Int(n), Span { start, end: i }));
        } else if c.is_ascii_alphabetic() || c == b'_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(input[start..i].to_string()), Span { start, end: i }));
        } else if b"[]()|,;+-*/".contains(&c) {
            i += 1;
            out.push((Tok::Sym(c as char), Span { start, end: i }));
        } else {
            let ch = input[start..].chars().next().unwrap();
            return Err(ParseError {
                kind: ParseErrorKind::Syntax,
                offset: start,
                message: format!("unexpected character `{ch}`"),
            });
        }
    }
    out.push((Tok::End, Span { start: input.len(), end: input.len() }));
    Ok(out)
}

fn is_word(s: &str) -> bool {
    let b = s.as_bytes();
    !b.is_empty() && b.len().is_multiple_of(2) && b.chunks(2).all(|p| p[0] == b'x' && (p[1] == b'0' || p[1] == b'1'))
}

struct Parser {
    toks: Vec<(Tok, Span)>,
    pos: usize,
}

type PResult<T> = Result<T, ParseError>;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].0
    }

    fn span(&self) -> Span {
        self.toks[self.pos].1
    }

    fn prev_end(&self) -> usize {
        if self.pos == 0 {
            0
        } else {
            self.toks[self.pos - 1].1.end
        }
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> PResult<T> {
        Err(ParseError { kind: ParseErrorKind::Syntax, offset: self.span().start, message: message.into() })
    }

    fn unexpected<T>(&self, wanted: &str) -> PResult<T> {
        self.error(format!("expected {wanted}, found {}", self.peek()))
    }

    fn is_sym(&self, c: char) -> bool {
        self.peek() == &Tok::Sym(c)
    }

    fn expect_sym(&mut self, c: char) -> PResult<()> {
        if self.is_sym(c) {
            self.bump();
            Ok(())
        } else {
            self.unexpected(&format!("`{c}`"))
        }
    }

    fn int(&mut self) -> PResult<BigInt> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(n)
            }
            _ => self.unexpected("an integer"),
        }
    }

    fn signed_int(&mut self) -> PResult<BigInt> {
        if self.is_sym('-') {
            self.bump();
            Ok(-self.int()?)
        } else {
            self.int()
        }
    }

    fn small<T: TryFrom<BigInt>>(&self, n: BigInt, start: usize) -> PResult<T> {
        T::try_from(n.clone()).map_err(|_| ParseError {
            kind: ParseErrorKind::Syntax,
            offset: start,
            message: format!("integer {n} out of range"),
        })
    }

    fn scalar(&mut self) -> PResult<Rational> {
        let num = self.signed_int()?;
        if self.is_sym('/') {
            self.bump();
            let at = self.span().start;
            let den = self.int()?;
            if den == BigInt::from(0) {
                return Err(ParseError { kind: ParseErrorKind::Syntax, offset: at, message: "zero denominator".into() });
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    fn starts_scalar(&self) -> bool {
        match self.peek() {
            Tok::Int(_) => true,
            Tok::Sym('-') => matches!(self.peek_at(1), Tok::Int(_)),
            _ => false,
        }
    }

    fn expr(&mut self) -> PResult<Expr> {
        let start = self.span().start;
        let mut lhs = self.unary()?;
        while self.is_sym('+') || self.is_sym('-') {
            let op_at = self.span().start;
            let plus = self.is_sym('+');
            self.bump();
            let rhs = self.unary()?;
            if rhs.kind != lhs.kind {
                return Err(ParseError {
                    kind: ParseErrorKind::KindMismatch,
                    offset: op_at,
                    message: format!("cannot combine {} with {}", lhs.kind, rhs.kind),
                });
            }
            let kind = lhs.kind;
            let node = if plus { Node::Add(Box::new(lhs), Box::new(rhs)) } else { Node::Sub(Box::new(lhs), Box::new(rhs)) };
            lhs = Expr { node, kind, span: Span { start, end: self.prev_end() } };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> PResult<Expr> {
        let start = self.span().start;
        if self.starts_scalar() {
            let q = self.scalar()?;
            self.expect_sym('*')?;
            let inner = self.unary()?;
            let kind = inner.kind;
            return Ok(Expr { node: Node::Scale(q, Box::new(inner)), kind, span: Span { start, end: self.prev_end() } });
        }
        if self.is_sym('-') {
            self.bump();
            let inner = self.unary()?;
            let kind = inner.kind;
            return Ok(Expr { node: Node::Neg(Box::new(inner)), kind, span: Span { start, end: self.prev_end() } });
        }
        self.primary()
    }

    fn leaf(&self, node: Node, kind: Kind, start: usize) -> Expr {
        Expr { node, kind, span: Span { start, end: self.prev_end() } }
    }

    fn primary(&mut self) -> PResult<Expr> {
        let start = self.span().start;
        match self.peek().clone() {
            Tok::Sym('[') => self.bracket(),
            Tok::Sym('(') => {
                if self.is_tensor_literal() {
                    self.bump();
                    let mut exps = vec![];
                    loop {
                        let at = self.span().start;
                        let n = self.int()?;
                        exps.push(self.small::<u32>(n, at)?);
                        if self.is_sym(',') {
                            self.bump();
                        } else {
                            break;
                        }
                    }
                    self.expect_sym(')')?;
                    let t = TensorWord::new(exps).map_err(|e| ParseError {
                        kind: ParseErrorKind::Syntax,
                        offset: start,
                        message: e.to_string(),
                    })?;
                    Ok(self.leaf(Node::Tensor(t), Kind::Tensor, start))
                } else {
                    self.bump();
                    let inner = self.expr()?;
                    self.expect_sym(')')?;
                    Ok(inner)
                }
            }
            Tok::Ident(name) if is_word(&name) => {
                self.bump();
                let w: Word = name.parse().expect("checked word");
                Ok(self.leaf(Node::Word(w), Kind::Word, start))
            }
            Tok::Ident(name) => {
                let Some(op) = Op::from_name(&name) else {
                    return self.error(format!("unknown function `{name}`"));
                };
                self.bump();
                self.call(op, start)
            }
            _ => self.unexpected("an expression"),
        }
    }

    fn is_tensor_literal(&self) -> bool {
        let mut k = 1;
        loop {
            if !matches!(self.peek_at(k), Tok::Int(_)) {
                return false;
            }
            match self.peek_at(k + 1) {
                Tok::Sym(',') => k += 2,
                Tok::Sym(')') => return true,
                _ => return false,
            }
        }
    }

    fn bracket(&mut self) -> PResult<Expr> {
        let start = self.span().start;
        self.bump();
        let mut top: Vec<BigInt> = vec![self.signed_int()?];
        while self.is_sym(',') {
            self.bump();
            top.push(self.signed_int()?);
        }
        if self.is_sym('|') {
            self.bump();
            let mut bottom = vec![self.scalar()?];
            while self.is_sym(',') {
                self.bump();
                bottom.push(self.scalar()?);
            }
            self.expect_sym(']')?;
            let s: Vec<i64> = top.into_iter().map(|n| self.small(n, start)).collect::<PResult<_>>()?;
            let b = BiComposition::new(s, bottom).map_err(|e| ParseError {
                kind: ParseErrorKind::Syntax,
                offset: start,
                message: e.to_string(),
            })?;
            return Ok(self.leaf(Node::BiComposition(b), Kind::BiComposition, start));
        }
        self.expect_sym(']')?;
        let entries: Vec<u32> = top.into_iter().map(|n| self.small(n, start)).collect::<PResult<_>>()?;
        let c = Composition::new(entries).map_err(|e| ParseError {
            kind: ParseErrorKind::Syntax,
            offset: start,
            message: e.to_string(),
        })?;
        Ok(self.leaf(Node::Composition(c), Kind::Composition, start))
    }

    fn call(&mut self, op: Op, start: usize) -> PResult<Expr> {
        self.expect_sym('(')?;
        let lambda = if op == Op::Mixable {
            let l = self.scalar()?;
            self.expect_sym(';')?;
            Some(l)
        } else {
            None
        };
        let mut args = vec![self.expr()?];
        while self.is_sym(',') {
            self.bump();
            args.push(self.expr()?);
        }
        self.expect_sym(')')?;
        if args.len() != op.arity() {
            return Err(ParseError {
                kind: ParseErrorKind::Syntax,
                offset: start,
                message: format!("{} takes {} argument(s), got {}", op.name(), op.arity(), args.len()),
            });
        }
        let kinds: Vec<Kind> = args.iter().map(|a| a.kind).collect();
        let Some(kind) = op.result_kind(&kinds) else {
            let listed: Vec<String> = kinds.iter().map(ToString::to_string).collect();
            return Err(ParseError {
                kind: ParseErrorKind::KindMismatch,
                offset: start,
                message: format!("{} is not defined on ({})", op.name(), listed.join(", ")),
            });
        };
        Ok(Expr { node: Node::Call { op, lambda, args }, kind, span: Span { start, end: self.prev_end() } })
    }
}

/// Parses and kind-checks an expression.
pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(input)?, pos: 0 };
    let e = p.expr()?;
    if p.peek() != &Tok::End {
        return p.error(format!("unexpected {}", p.peek()));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals_and_calls() {
        let e = parse("sh([1],[2])").unwrap();
        assert_eq!(e.kind, Kind::Composition);
        assert_eq!(e.to_string(), "sh([1], [2])");
        assert_eq!(parse("(0,1)").unwrap().kind, Kind::Tensor);
        assert_eq!(parse("phi((1,2))").unwrap().kind, Kind::Composition);
        assert_eq!(parse("[1,2 | 1,0]").unwrap().kind, Kind::BiComposition);
        assert_eq!(parse("2*(x0x1 + x1)").unwrap().to_string(), "2*(x0x1 + x1)");
        assert_eq!(parse("-1/2*[2]").unwrap().to_string(), "-1/2*[2]");
    }

    #[test]
    fn errors() {
        let e = parse("x0x1]").unwrap_err();
        assert_eq!((e.kind, e.offset), (ParseErrorKind::Syntax, 4));
        assert_eq!(parse("st(x0x1, x1)").unwrap_err().kind, ParseErrorKind::KindMismatch);
        assert_eq!(parse("[1] + x1").unwrap_err().kind, ParseErrorKind::KindMismatch);
        assert_eq!(parse("foo([1])").unwrap_err().offset, 0);
        assert_eq!(parse("sh([1])").unwrap_err().kind, ParseErrorKind::Syntax);
        assert_eq!(parse("[1,").unwrap_err().offset, 3);
    }
}
