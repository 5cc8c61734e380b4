//! Recursive-descent parser for polynomial text.
//!
//! Grammar (whitespace ignored between tokens):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*      -- '/' only by a nonzero constant
//! unary  := '-' unary | '+' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | identifier | '(' expr ')'
//! ```
//!
//! `^` binds tighter than unary minus, so `-x^2` is `-(x^2)`. Multiplication
//! is always explicit.

use super::MPoly;
use crate::error::{Error, Result};
use crate::exactalg::{AlgNum, FieldTower, Rat};
use num_bigint::BigInt;

/// Parses `text` as a polynomial in the variables `vars` (the last one is `z`).
///
/// ```
/// use qozeta::mpoly::parse;
/// let f = parse("(z^2-x^3)^2+x^7", &["x", "z"]).unwrap();
/// assert_eq!(f.len(), 4);
/// ```
pub fn parse<S: AsRef<str>>(text: &str, vars: &[S]) -> Result<MPoly> {
    if vars.is_empty() {
        return Err(Error::InvalidInput("variable list is empty (the last variable is z)".into()));
    }
    let names: Vec<String> = vars.iter().map(|v| v.as_ref().trim().to_string()).collect();
    for (i, n) in names.iter().enumerate() {
        if n.is_empty() || !is_ident(n) {
            return Err(Error::InvalidInput(format!("invalid variable name `{n}`")));
        }
        if names[..i].contains(n) {
            return Err(Error::InvalidInput(format!("duplicate variable name `{n}`")));
        }
    }
    let mut p = Parser { src: text.as_bytes(), pos: 0, names, nx: vars.len() - 1 };
    p.skip_ws();
    if p.pos == p.src.len() {
        return Err(Error::Syntax { pos: 0, msg: "empty polynomial".into() });
    }
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(Error::Syntax { pos: p.pos, msg: format!("unexpected `{}`", p.src[p.pos] as char) });
    }
    Ok(e)
}

fn is_ident(s: &str) -> bool {
    let mut ch = s.chars();
    matches!(ch.next(), Some(c) if c.is_ascii_alphabetic() || c == '_') && ch.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    names: Vec<String>,
    nx: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn q() -> FieldTower {
        FieldTower::rationals()
    }

    fn expr(&mut self) -> Result<MPoly> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                b'-' => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MPoly> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                b'*' => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                b'/' => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.unary()?;
                    let c = constant_value(&d).ok_or_else(|| Error::Syntax { pos: at, msg: "division only by a nonzero constant".into() })?;
                    acc = acc.scale(&c.inv());
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MPoly> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MPoly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let at = {
                self.skip_ws();
                self.pos
            };
            if self.peek() == Some(b'-') {
                return Err(Error::NegativeExponent { pos: at });
            }
            let k = self.integer()?;
            let k: u32 = k.try_into().map_err(|_| Error::Syntax { pos: at, msg: "exponent too large".into() })?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Syntax { pos: start, msg: "expected an integer".into() });
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn atom(&mut self) -> Result<MPoly> {
        let c = self.peek().ok_or(Error::Syntax { pos: self.pos, msg: "unexpected end of input".into() })?;
        if c.is_ascii_digit() {
            let n = self.integer()?;
            let nxt = self.src.get(self.pos).copied();
            if nxt.is_some_and(|b| b.is_ascii_alphabetic() || b == b'_' || b == b'(') {
                return Err(Error::Syntax { pos: self.pos, msg: "implicit multiplication is not allowed; use `*`".into() });
            }
            return Ok(MPoly::constant(self.nx, &AlgNum::from_rat(&Self::q(), Rat::from_integer(n))));
        }
        if c == b'(' {
            self.pos += 1;
            let e = self.expr()?;
            if self.peek() != Some(b')') {
                return Err(Error::Syntax { pos: self.pos, msg: "expected `)`".into() });
            }
            self.pos += 1;
            return Ok(e);
        }
        if c.is_ascii_alphabetic() || c == b'_' {
            let start = self.pos;
            while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                self.pos += 1;
            }
            let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
            return match self.names.iter().position(|n| n == name) {
                Some(i) => Ok(MPoly::var(self.nx, i)),
                None => Err(Error::UnknownVariable { name: name.to_string(), pos: start }),
            };
        }
        Err(Error::Syntax { pos: self.pos, msg: format!("unexpected `{}`", c as char) })
    }
}

fn constant_value(p: &MPoly) -> Option<AlgNum> {
    if p.is_zero() {
        return None;
    }
    if p.len() == 1 {
        let (e, c) = p.terms().next()?;
        if e.iter().all(|&a| a == 0) {
            return Some(c.clone());
        }
    }
    None
}
