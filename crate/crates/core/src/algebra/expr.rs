use num_bigint::BigInt;

use super::element::AlgebraElement;
use super::evaluate::{evaluate, transitive_evaluate};
use super::symmetric::{Basis, Polynomial};
use crate::error::{parse_error, Error, Result};
use crate::perm::{check_degree, Partition};

/// A parsed algebra expression. Grammar, loosest binding first:
///
/// ```text
/// expr  := term (("+" | "-") term)*
/// term  := unary ("*" unary)*
/// unary := "-" unary | power
/// power := atom ("^" integer)?
/// atom  := integer | "J[" k "]" | ("e" | "h" | "p") "[" partition "]"
///        | "T(" expr ")" | "(" expr ")"
/// ```
///
/// `T(...)` may not contain another `T(...)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Jm(usize),
    Basis(Basis, Partition),
    Transitive(Box<Expr>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

enum Value {
    Poly(Polynomial),
    Elem(AlgebraElement),
}

impl Value {
    fn into_element(self) -> Result<AlgebraElement> {
        match self {
            Value::Poly(p) => evaluate(&p),
            Value::Elem(x) => Ok(x),
        }
    }
}

impl Expr {
    pub fn parse(input: &str) -> Result<Expr> {
        let mut p = Parser { input, pos: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos < input.len() {
            return Err(parse_error(input, p.pos, "unexpected trailing input"));
        }
        Ok(e)
    }

    pub fn contains_transitive(&self) -> bool {
        match self {
            Expr::Transitive(_) => true,
            Expr::Int(_) | Expr::Jm(_) | Expr::Basis(..) => false,
            Expr::Neg(a) | Expr::Pow(a, _) => a.contains_transitive(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => a.contains_transitive() || b.contains_transitive(),
        }
    }

    /// The value in the group algebra of `S_n`. Sub-expressions without `T`
    /// stay polynomials in the slots until they have to be combined with an
    /// algebra element.
    pub fn evaluate(&self, n: usize) -> Result<AlgebraElement> {
        check_degree(n)?;
        self.value(n)?.into_element()
    }

    /// The slot polynomial of a `T`-free expression.
    pub fn to_polynomial(&self, n: usize) -> Result<Polynomial> {
        check_degree(n)?;
        match self.value(n)? {
            Value::Poly(p) => Ok(p),
            Value::Elem(_) => Err(Error::Condition {
                condition: "expression",
                detail: "T(...) has no polynomial form".into(),
            }),
        }
    }

    fn value(&self, n: usize) -> Result<Value> {
        Ok(match self {
            Expr::Int(c) => Value::Poly(Polynomial::constant(n, c.clone())),
            Expr::Jm(k) => Value::Poly(Polynomial::variable(n, *k)?),
            Expr::Basis(b, lambda) => Value::Poly(b.polynomial(n, lambda)),
            Expr::Transitive(inner) => match inner.value(n)? {
                Value::Poly(p) => Value::Elem(transitive_evaluate(&p)?),
                Value::Elem(_) => unreachable!("the parser rejects nested T"),
            },
            Expr::Neg(a) => match a.value(n)? {
                Value::Poly(p) => Value::Poly(p.scale(&BigInt::from(-1))),
                Value::Elem(x) => Value::Elem(x.scale(&BigInt::from(-1))),
            },
            Expr::Pow(a, k) => match a.value(n)? {
                Value::Poly(p) => Value::Poly(p.pow(*k)),
                Value::Elem(x) => Value::Elem(x.pow(*k)),
            },
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                let (l, r) = (a.value(n)?, b.value(n)?);
                match (l, r) {
                    (Value::Poly(p), Value::Poly(q)) => Value::Poly(match self {
                        Expr::Add(..) => p.add(&q),
                        Expr::Sub(..) => p.sub(&q),
                        _ => p.multiply(&q),
                    }),
                    (l, r) => {
                        let (x, y) = (l.into_element()?, r.into_element()?);
                        Value::Elem(match self {
                            Expr::Add(..) => x.add(&y)?,
                            Expr::Sub(..) => x.sub(&y)?,
                            _ => x.multiply(&y)?,
                        })
                    }
                }
            }
        })
    }
}

struct Parser<'a> {
    input: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.input[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(parse_error(self.input, self.pos, format!("expected {c:?}")))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut left = self.term()?;
        loop {
            if self.eat('+') {
                left = Expr::Add(Box::new(left), Box::new(self.term()?));
            } else if self.eat('-') {
                left = Expr::Sub(Box::new(left), Box::new(self.term()?));
            } else {
                return Ok(left);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut left = self.unary()?;
        while self.eat('*') {
            left = Expr::Mul(Box::new(left), Box::new(self.unary()?));
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.atom()?;
        if self.eat('^') {
            self.skip_ws();
            let at = self.pos;
            let k = self.integer()?;
            let k = u32::try_from(k).map_err(|_| parse_error(self.input, at, "exponent too large"))?;
            return Ok(Expr::Pow(Box::new(base), k));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.input[start..self.pos]
            .parse()
            .map_err(|_| parse_error(self.input, start, "expected a nonnegative integer"))
    }

    fn bracketed(&mut self) -> Result<(usize, &str)> {
        self.expect('[')?;
        let start = self.pos;
        let end = self.input[start..]
            .find(']')
            .map(|k| start + k)
            .ok_or_else(|| parse_error(self.input, start, "missing ']'"))?;
        self.pos = end + 1;
        Ok((start, &self.input[start..end]))
    }

    fn atom(&mut self) -> Result<Expr> {
        self.skip_ws();
        let at = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(Expr::Int(BigInt::from(self.integer()?))),
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some('J') => {
                self.pos += 1;
                let (start, inner) = self.bracketed()?;
                let k = inner
                    .trim()
                    .parse()
                    .map_err(|_| parse_error(self.input, start, "expected an index"))?;
                Ok(Expr::Jm(k))
            }
            Some(c @ ('e' | 'h' | 'p')) => {
                self.pos += 1;
                let basis = match c {
                    'e' => Basis::Elementary,
                    'h' => Basis::Complete,
                    _ => Basis::PowerSum,
                };
                let (start, inner) = self.bracketed()?;
                let lambda: Partition = inner.parse().map_err(|e| match e {
                    Error::Parse { position, message, .. } => parse_error(self.input, start + position, message),
                    other => other,
                })?;
                Ok(Expr::Basis(basis, lambda))
            }
            Some('T') => {
                self.pos += 1;
                self.expect('(')?;
                let inner_at = self.pos;
                let inner = self.expr()?;
                if inner.contains_transitive() {
                    return Err(parse_error(self.input, inner_at, "T(...) cannot be nested"));
                }
                self.expect(')')?;
                Ok(Expr::Transitive(Box::new(inner)))
            }
            Some(c) => Err(parse_error(self.input, at, format!("unexpected {c:?}"))),
            None => Err(parse_error(self.input, at, "unexpected end of input")),
        }
    }
}
