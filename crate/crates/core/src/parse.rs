//! Text syntax for Lie and tensor expressions, derivations, and Schur element
//! references.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := ['-'] [int '*'] factor ('.' factor)*
//! factor := 'x' int | '[' expr ',' expr ']' | '(' expr ')'
//! ```
//!
//! `.` is the tensor product. Columns in syntax errors are 1-based.

use std::fs;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::derivation::Derivation;
use crate::error::{arg_err, dim_err, Error, Result};
use crate::free_group::GroupWord;
use crate::lie::{LieElement, LieMonomial};
use crate::permutation::Permutation;
use crate::schur::SchurElement;
use crate::tensor::TensorElement;
use crate::word::Word;

/// Parsed expression tree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Expr {
    Gen(usize),
    Bracket(Box<Expr>, Box<Expr>),
    Tensor(Vec<Expr>),
    Scale(BigInt, Box<Expr>),
    Sum(Vec<Expr>),
}

/// Any of the input kinds accepted on the command line.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Expression {
    Algebra(Expr),
    GroupWord(GroupWord),
    Permutation(Permutation),
    Schur(SchurElement),
}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { text: text.as_bytes(), pos: 0 }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { column: self.pos + 1, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += 1;
                Ok(())
            }
            Some(x) => self.error(format!("expected '{}', found '{}'", c as char, x as char)),
            None => self.error(format!("expected '{}', found end of input", c as char)),
        }
    }

    fn integer(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        std::str::from_utf8(&self.text[start..self.pos]).ok()?.parse().ok()
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut terms = vec![self.term()?];
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    terms.push(self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    terms.push(Expr::Scale(-BigInt::one(), Box::new(self.term()?)));
                }
                _ => break,
            }
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { Expr::Sum(terms) })
    }

    fn term(&mut self) -> Result<Expr> {
        let mut sign = BigInt::one();
        if self.peek() == Some(b'-') {
            self.pos += 1;
            sign = -sign;
        }
        let mut scale = None;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let c = self.integer().expect("digit present");
            self.expect(b'*')?;
            scale = Some(c);
        }
        let mut factors = vec![self.factor()?];
        while self.peek() == Some(b'.') {
            self.pos += 1;
            factors.push(self.factor()?);
        }
        let mut e = if factors.len() == 1 { factors.pop().unwrap() } else { Expr::Tensor(factors) };
        let c = scale.unwrap_or_else(BigInt::one) * sign;
        if !c.is_one() {
            e = Expr::Scale(c, Box::new(e));
        }
        Ok(e)
    }

    fn factor(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                match self.integer() {
                    Some(k) if k > BigInt::zero() && k <= BigInt::from(u8::MAX) => {
                        Ok(Expr::Gen(k.try_into().expect("bounded")))
                    }
                    Some(_) => self.error("generator index out of range"),
                    None => self.error("expected a generator index after 'x'"),
                }
            }
            Some(b'[') => {
                self.pos += 1;
                let a = self.expr()?;
                self.expect(b',')?;
                let b = self.expr()?;
                self.expect(b']')?;
                Ok(Expr::Bracket(Box::new(a), Box::new(b)))
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) => self.error(format!("unexpected '{}'", c as char)),
            None => self.error("unexpected end of input"),
        }
    }

    fn finish(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.error(format!("unexpected '{}' after expression", c as char)),
        }
    }
}

pub fn parse_expr(text: &str) -> Result<Expr> {
    let mut p = Parser::new(text);
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

impl Expr {
    pub fn max_generator(&self) -> usize {
        match self {
            Expr::Gen(k) => *k,
            Expr::Bracket(a, b) => a.max_generator().max(b.max_generator()),
            Expr::Tensor(v) | Expr::Sum(v) => v.iter().map(Expr::max_generator).max().unwrap_or(0),
            Expr::Scale(_, e) => e.max_generator(),
        }
    }

    /// The expression as an element of `V_n^{⊗q}`; every summand must have the same degree.
    pub fn to_tensor(&self, n: usize) -> Result<TensorElement> {
        let m = self.max_generator();
        if m > n {
            return Err(Error::Range { index: m, n });
        }
        self.eval()
    }

    fn eval(&self) -> Result<TensorElement> {
        match self {
            Expr::Gen(k) => Ok(TensorElement::from_word(Word::letter(*k as u8))),
            Expr::Bracket(a, b) => Ok(a.eval()?.commutator(&b.eval()?)),
            Expr::Tensor(v) => {
                v.iter().try_fold(TensorElement::from_word(Word::empty()), |acc, e| Ok(acc.tensor(&e.eval()?)))
            }
            Expr::Scale(c, e) => Ok(e.eval()?.scale(c)),
            Expr::Sum(v) => {
                let parts = v.iter().map(Expr::eval).collect::<Result<Vec<_>>>()?;
                let degree = parts[0].degree();
                let mut out = TensorElement::zero(degree);
                for p in &parts {
                    if p.degree() != degree {
                        return dim_err(format!("sum of terms of degrees {degree} and {}", p.degree()));
                    }
                    out.add_scaled(p, &BigInt::one());
                }
                Ok(out)
            }
        }
    }

    /// The expression as a Lie element of rank `n`. Tensor products are
    /// allowed as long as the total is a Lie polynomial.
    pub fn to_lie(&self, n: usize) -> Result<LieElement> {
        let t = self.to_tensor(n)?;
        if t.degree() == 0 {
            return arg_err("Lie elements have positive degree");
        }
        LieElement::from_tensor(n, &t).map_err(|e| match e {
            Error::InvariantViolation(m) => Error::Argument(format!("expression is not a Lie element: {m}")),
            other => other,
        })
    }

    /// The expression as a single bracket monomial, if it is one.
    pub fn as_monomial(&self) -> Option<LieMonomial> {
        match self {
            Expr::Gen(k) => Some(LieMonomial::gen(*k as u8)),
            Expr::Bracket(a, b) => Some(LieMonomial::bracket(a.as_monomial()?, b.as_monomial()?)),
            _ => None,
        }
    }
}

pub fn parse_lie(text: &str, n: usize) -> Result<LieElement> {
    parse_expr(text)?.to_lie(n)
}

pub fn parse_tensor(text: &str, n: usize) -> Result<TensorElement> {
    parse_expr(text)?.to_tensor(n)
}

/// Parses a comma-separated list of positive integers starting at column `offset + 1`.
fn index_list(text: &str, offset: usize) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    let mut col = offset;
    for part in text.split(',') {
        let v = part.trim().parse::<usize>().map_err(|_| Error::Syntax {
            column: col + 1,
            message: format!("expected an index, found {part:?}"),
        })?;
        out.push(v);
        col += part.len() + 1;
    }
    Ok(out)
}

/// `chi:i,j`, `theta:i,s,t`, or generator images `x1=[x1,x2]; x3=[x2,x3]`
/// with omitted generators sent to 0.
pub fn parse_derivation(text: &str, n: usize) -> Result<Derivation> {
    let t = text.trim();
    if let Some(rest) = t.strip_prefix("chi:") {
        let idx = index_list(rest, 4)?;
        if idx.len() != 2 {
            return arg_err("chi takes two indices");
        }
        return Derivation::chi_tilde(n, idx[0], idx[1]);
    }
    if let Some(rest) = t.strip_prefix("theta:") {
        let idx = index_list(rest, 6)?;
        if idx.len() != 3 {
            return arg_err("theta takes three indices");
        }
        return Derivation::theta_tilde(n, idx[0], idx[1], idx[2]);
    }
    let mut images: Vec<Option<LieElement>> = vec![None; n];
    for part in t.split(';').filter(|p| !p.trim().is_empty()) {
        let (lhs, rhs) = part
            .split_once('=')
            .ok_or_else(|| Error::Argument(format!("expected x<k>=<expr>, found {:?}", part.trim())))?;
        let k: usize = lhs
            .trim()
            .strip_prefix('x')
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Argument(format!("bad generator {:?}", lhs.trim())))?;
        if k == 0 || k > n {
            return Err(Error::Range { index: k, n });
        }
        images[k - 1] = if rhs.trim() == "0" { None } else { Some(parse_lie(rhs, n)?) };
    }
    let degree = images
        .iter()
        .flatten()
        .map(LieElement::degree)
        .next()
        .ok_or_else(|| Error::Argument("derivation needs at least one generator image".into()))?;
    let images = images.into_iter().map(|a| a.unwrap_or_else(|| LieElement::zero(n, degree))).collect();
    Derivation::new(n, degree, images)
}

/// Inline JSON when the argument starts with `{`, otherwise a file path.
pub fn parse_schur_ref(arg: &str) -> Result<SchurElement> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') {
        SchurElement::from_json(trimmed)
    } else {
        let text = fs::read_to_string(arg).map_err(|e| Error::Argument(format!("reading {arg}: {e}")))?;
        SchurElement::from_json(&text)
    }
}

/// Parses `text` as the given kind: `lie`/`tensor`, `group`, `perm`, or `schur`.
pub fn parse_expression(kind: &str, text: &str) -> Result<Expression> {
    match kind {
        "lie" | "tensor" => Ok(Expression::Algebra(parse_expr(text)?)),
        "group" => Ok(Expression::GroupWord(text.parse()?)),
        "perm" => Ok(Expression::Permutation(Permutation::parse(text, None)?)),
        "schur" => Ok(Expression::Schur(parse_schur_ref(text)?)),
        other => arg_err(format!("unknown expression kind {other:?}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_examples() {
        let e = parse_expr("[x1,[x1,x2]]").unwrap();
        assert_eq!(e.as_monomial().unwrap().degree(), 3);
        assert_eq!(parse_tensor("x1.x2.x1", 2).unwrap(), TensorElement::from_word("1.2.1".parse().unwrap()));
        assert_eq!(parse_expr("[x1,x2").unwrap_err(), Error::Syntax { column: 7, message: "expected ']', found end of input".into() });
    }

    #[test]
    fn sums_and_scalars() {
        let a = parse_lie("3*[x1,x2] - [x2,x1]", 2).unwrap();
        assert_eq!(a.to_string(), "4*[x1,x2]");
        assert!(parse_lie("[[x1,x2],x1] + [[x2,x1],x1]", 2).unwrap().is_zero());
        assert_eq!(parse_lie("x1.x2 - x2.x1", 2).unwrap().to_string(), "[x1,x2]");
        assert!(matches!(parse_lie("x1.x2", 2), Err(Error::Argument(_))));
        assert!(matches!(parse_lie("[x1,x3]", 2), Err(Error::Range { index: 3, n: 2 })));
        assert!(matches!(parse_tensor("x1 + x1.x2", 2), Err(Error::Dimension(_))));
    }

    #[test]
    fn derivations() {
        assert_eq!(parse_derivation("chi:1,2", 3).unwrap(), Derivation::chi_tilde(3, 1, 2).unwrap());
        assert_eq!(parse_derivation("theta:3,1,2", 3).unwrap(), Derivation::theta_tilde(3, 3, 1, 2).unwrap());
        assert_eq!(parse_derivation("x1=[x1,x2]", 3).unwrap(), Derivation::chi_tilde(3, 1, 2).unwrap());
        let d = Derivation::chi_tilde(3, 2, 1).unwrap();
        assert_eq!(parse_derivation(&d.to_string(), 3).unwrap(), d);
        assert!(parse_derivation("x4=[x1,x2]", 3).is_err());
        assert!(parse_derivation("x1=[x1,x2]; x2=x1", 3).is_err());
    }
}
