//! Text syntax for monomials, polynomials and linear differential polynomials.
//!
//! Polynomials accept `+ - * / ^` and parentheses, e.g. `4*x5*x6 - 1/2*x1`
//! or `(x + y)^2`. Division is only allowed by an integer literal. In
//! differential mode identifiers name unknowns, optionally followed by a
//! bracketed derivative list: `y1[x1,x1,x2]` is `d^3 y1 / dx1^2 dx2`.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, VarContext};
use crate::poly::{Polynomial, Ring};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
}

struct Lexer;

impl Lexer {
    fn run(src: &str, line: usize) -> Result<Vec<(Tok, usize)>> {
        let mut out = Vec::new();
        let chars: Vec<char> = src.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = i + 1;
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            let tok = match c {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                ',' => Tok::Comma,
                d if d.is_ascii_digit() => {
                    let start = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let s: String = chars[start..i].iter().collect();
                    out.push((Tok::Num(s.parse().expect("digits")), col));
                    continue;
                }
                a if a.is_alphabetic() || a == '_' => {
                    let start = i;
                    while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                        i += 1;
                    }
                    out.push((Tok::Ident(chars[start..i].iter().collect()), col));
                    continue;
                }
                other => {
                    return Err(Error::parse(line, col, format!("unexpected character `{other}`")))
                }
            };
            out.push((tok, col));
            i += 1;
        }
        Ok(out)
    }
}

/// Either a field constant or a genuine polynomial (module element in differential mode).
#[derive(Clone)]
enum Value {
    Scalar(Coeff),
    Poly(Polynomial),
}

struct Parser<'a> {
    ring: &'a Arc<Ring>,
    /// Unknown names in differential mode.
    unknowns: Option<&'a [String]>,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    end_col: usize,
}

impl<'a> Parser<'a> {
    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |t| t.1)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::parse(self.line, self.col(), msg))
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.0.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected {what}"))
        }
    }

    fn field(&self) -> crate::coeff::Field {
        self.ring.field()
    }

    fn to_poly(&self, v: Value) -> Polynomial {
        match v {
            Value::Scalar(c) => Polynomial::constant(self.ring, c),
            Value::Poly(p) => p,
        }
    }

    fn add(&self, a: Value, b: Value, negate: bool, col: usize) -> Result<Value> {
        let f = self.field();
        match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(if negate {
                f.sub(&x, &y)
            } else {
                f.add(&x, &y)
            })),
            (a, b) => {
                if self.unknowns.is_some() {
                    let is_nonzero_scalar =
                        |v: &Value| matches!(v, Value::Scalar(c) if !f.is_zero(c));
                    if is_nonzero_scalar(&a) || is_nonzero_scalar(&b) {
                        return Err(Error::parse(
                            self.line,
                            col,
                            "inhomogeneous constant term in a linear differential polynomial",
                        ));
                    }
                }
                let a = self.to_poly(a);
                let b = self.to_poly(b);
                let r = if negate { a.sub(&b)? } else { a.add(&b)? };
                Ok(Value::Poly(r))
            }
        }
    }

    fn mul(&self, a: Value, b: Value, col: usize) -> Result<Value> {
        let f = self.field();
        match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(f.mul(&x, &y))),
            (Value::Scalar(c), Value::Poly(p)) | (Value::Poly(p), Value::Scalar(c)) => {
                Ok(Value::Poly(p.scale(&c)))
            }
            (Value::Poly(a), Value::Poly(b)) => {
                if self.unknowns.is_some() {
                    return Err(Error::parse(
                        self.line,
                        col,
                        "product of derivatives: only linear differential polynomials are supported",
                    ));
                }
                Ok(Value::Poly(a.mul(&b)?))
            }
        }
    }

    fn expr(&mut self) -> Result<Value> {
        let mut neg = false;
        match self.peek() {
            Some(Tok::Minus) => {
                neg = true;
                self.pos += 1;
            }
            Some(Tok::Plus) => self.pos += 1,
            _ => {}
        }
        let col = self.col();
        let mut acc = self.term()?;
        if neg {
            acc = self.add(Value::Scalar(self.field().zero()), acc, true, col)?;
        }
        loop {
            let negate = match self.peek() {
                Some(Tok::Plus) => false,
                Some(Tok::Minus) => true,
                _ => break,
            };
            self.pos += 1;
            let col = self.col();
            let rhs = self.term()?;
            acc = self.add(acc, rhs, negate, col)?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Value> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let col = self.col();
                    let rhs = self.factor()?;
                    acc = self.mul(acc, rhs, col)?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let col = self.col();
                    let den = match self.bump() {
                        Some(Tok::Num(n)) => n,
                        _ => return Err(Error::parse(self.line, col, "expected integer denominator")),
                    };
                    let inv = self
                        .field()
                        .from_ratio(&BigInt::from(1), &den)
                        .map_err(|e| Error::parse(self.line, col, e.to_string()))?;
                    acc = self.mul(acc, Value::Scalar(inv), col)?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Value> {
        let base = self.primary()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let col = self.col();
        let e: u32 = match self.bump() {
            Some(Tok::Num(n)) => n
                .try_into()
                .map_err(|_| Error::parse(self.line, col, "exponent too large"))?,
            _ => return Err(Error::parse(self.line, col, "expected integer exponent")),
        };
        match base {
            Value::Scalar(c) => {
                let f = self.field();
                let mut acc = f.one();
                for _ in 0..e {
                    acc = f.mul(&acc, &c);
                }
                Ok(Value::Scalar(acc))
            }
            Value::Poly(p) => {
                if self.unknowns.is_some() && e != 1 {
                    return Err(Error::parse(
                        self.line,
                        col,
                        "power of a derivative: only linear differential polynomials are supported",
                    ));
                }
                Ok(Value::Poly(p.pow(e)?))
            }
        }
    }

    fn primary(&mut self) -> Result<Value> {
        let col = self.col();
        match self.bump() {
            Some(Tok::Num(n)) => Ok(Value::Scalar(self.field().from_bigint(&n))),
            Some(Tok::LParen) => {
                let v = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(v)
            }
            Some(Tok::Ident(name)) => match self.unknowns {
                None => match self.ring.vars().index_of(&name) {
                    Some(i) => Ok(Value::Poly(Polynomial::monomial(
                        self.ring,
                        Monomial::var(self.ring.nvars(), i),
                    ))),
                    None => Err(Error::parse(self.line, col, format!("unknown variable `{name}`"))),
                },
                Some(unknowns) => {
                    let Some(j) = unknowns.iter().position(|u| *u == name) else {
                        if self.ring.vars().index_of(&name).is_some() {
                            return Err(Error::parse(
                                self.line,
                                col,
                                format!("variable `{name}` used as a coefficient; only constant coefficients are supported"),
                            ));
                        }
                        return Err(Error::parse(self.line, col, format!("unknown function `{name}`")));
                    };
                    let mut exps = vec![0u32; self.ring.nvars()];
                    if self.peek() == Some(&Tok::LBracket) {
                        self.pos += 1;
                        if self.peek() != Some(&Tok::RBracket) {
                            loop {
                                let vcol = self.col();
                                match self.bump() {
                                    Some(Tok::Ident(v)) => match self.ring.vars().index_of(&v) {
                                        Some(i) => exps[i] += 1,
                                        None => {
                                            return Err(Error::parse(
                                                self.line,
                                                vcol,
                                                format!("unknown variable `{v}`"),
                                            ))
                                        }
                                    },
                                    _ => return Err(Error::parse(self.line, vcol, "expected variable")),
                                }
                                if self.peek() == Some(&Tok::Comma) {
                                    self.pos += 1;
                                } else {
                                    break;
                                }
                            }
                        }
                        self.expect(Tok::RBracket, "`]`")?;
                    }
                    let m = Monomial::new(exps).with_position(j as u32);
                    Ok(Value::Poly(Polynomial::monomial(self.ring, m)))
                }
            },
            Some(_) => Err(Error::parse(self.line, col, "unexpected token")),
            None => Err(Error::parse(self.line, col, "unexpected end of input")),
        }
    }
}

fn run(ring: &Arc<Ring>, unknowns: Option<&[String]>, src: &str, line: usize) -> Result<Polynomial> {
    let toks = Lexer::run(src, line)?;
    if toks.is_empty() {
        return Err(Error::parse(line, 1, "empty expression"));
    }
    let mut p = Parser {
        ring,
        unknowns,
        toks,
        pos: 0,
        line,
        end_col: src.chars().count() + 1,
    };
    let v = p.expr()?;
    if p.pos < p.toks.len() {
        return p.err("unexpected trailing input");
    }
    if unknowns.is_some() {
        if let Value::Scalar(c) = &v {
            if !ring.field().is_zero(c) {
                return Err(Error::parse(line, 1, "constant is not a linear differential polynomial"));
            }
        }
    }
    Ok(p.to_poly(v))
}

pub fn parse_poly(ring: &Arc<Ring>, src: &str) -> Result<Polynomial> {
    run(ring, None, src, 1)
}

/// As [`parse_poly`], reporting errors against the given 1-based source line.
pub fn parse_poly_at(ring: &Arc<Ring>, src: &str, line: usize) -> Result<Polynomial> {
    run(ring, None, src, line)
}

/// Parses a linear differential polynomial into a module element whose
/// positions index `unknowns`.
pub fn parse_diff_at(ring: &Arc<Ring>, unknowns: &[String], src: &str, line: usize) -> Result<Polynomial> {
    run(ring, Some(unknowns), src, line)
}

/// Parses the monomial syntax `x^2*y*z^3` (or `1`).
pub fn parse_monomial(ctx: &VarContext, src: &str) -> Result<Monomial> {
    let s = src.trim();
    if s == "1" {
        return Ok(Monomial::one(ctx.len()));
    }
    let mut exps = vec![0u32; ctx.len()];
    let mut col = src.len() - src.trim_start().len() + 1;
    for factor in s.split('*') {
        let f = factor.trim();
        let (name, e) = match f.split_once('^') {
            Some((n, e)) => {
                let e: u32 = e
                    .trim()
                    .parse()
                    .map_err(|_| Error::parse(1, col, format!("bad exponent in `{f}`")))?;
                (n.trim(), e)
            }
            None => (f, 1),
        };
        let i = ctx
            .index_of(name)
            .ok_or_else(|| Error::parse(1, col, format!("unknown variable `{name}`")))?;
        exps[i] = exps[i]
            .checked_add(e)
            .ok_or_else(|| Error::parse(1, col, "exponent overflow"))?;
        col += factor.len() + 1;
    }
    Ok(Monomial::new(exps))
}
