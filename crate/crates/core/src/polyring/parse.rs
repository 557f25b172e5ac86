//! Recursive-descent parser for the polynomial language.
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := int | var ('^' nat)? | '(' expr ')' ('^' nat)?
//! ```
//!
//! Division is accepted only by a nonzero constant, so `3/2*x` is a rational
//! coefficient. Juxtaposition is rejected.

use std::str::FromStr;

use malachite_nz::integer::Integer;
use malachite_nz::natural::Natural;

use super::poly::Polynomial;
use super::ring::GradedRing;
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a GradedRing,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse { offset: self.pos, message: message.into() }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate_first = false;
        match self.peek() {
            Some(b'-') => {
                negate_first = true;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        let mut acc = self.term()?;
        if negate_first {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let start = self.pos;
                    let d = self.factor()?;
                    if d.is_zero() {
                        self.pos = start;
                        return Err(self.err("division by zero"));
                    }
                    if !d.is_unit() {
                        return Err(Error::NonConstantDivision);
                    }
                    acc = acc.scale(&d.leading_coefficient().expect("unit").inv());
                }
                Some(c) if c.is_ascii_alphanumeric() || c == b'_' || c == b'(' => {
                    return Err(self.err("expected an operator; juxtaposition is not allowed"));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        match self.peek() {
            None => Err(self.err("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                match self.exponent()? {
                    Some(e) => Ok(inner.pow(e)),
                    None => Ok(inner),
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.natural()?;
                let c = self.ring.field().from_ratio(&Integer::from(n), &Natural::from(1u32))?;
                if self.peek() == Some(b'^') {
                    return Err(self.err("exponents on constants are not supported"));
                }
                Ok(Polynomial::constant(self.ring, c))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                let i = self
                    .ring
                    .var_index(name)
                    .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
                let v = Polynomial::var(self.ring, i);
                match self.exponent()? {
                    Some(e) => Ok(v.pow(e)),
                    None => Ok(v),
                }
            }
            Some(c) => Err(self.err(format!("unexpected character `{}`", c as char))),
        }
    }

    fn exponent(&mut self) -> Result<Option<u32>> {
        if self.peek() != Some(b'^') {
            return Ok(None);
        }
        self.pos += 1;
        let start = {
            self.skip_ws();
            self.pos
        };
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        if text.is_empty() {
            let rest: String = self.src[start..].iter().take(8).map(|&b| b as char).collect();
            return Err(Error::MalformedExponent(format!("expected a natural number at `{rest}`")));
        }
        let e: u32 = text
            .parse()
            .ok()
            .filter(|&e| e <= u16::MAX as u32)
            .ok_or_else(|| Error::MalformedExponent(text.to_string()))?;
        Ok(Some(e))
    }

    fn natural(&mut self) -> Result<Natural> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        Natural::from_str(text).map_err(|_| self.err("bad integer"))
    }
}

/// Parse one polynomial in `ring`.
pub fn parse_polynomial(text: &str, ring: &GradedRing) -> Result<Polynomial> {
    if text.trim().is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut p = Parser { src: text.as_bytes(), pos: 0, ring };
    let f = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(f)
}

/// Parse a comma-separated generator list, optionally wrapped in parentheses
/// as a whole: `(f, g)` or `f, g`.
pub fn parse_generators(text: &str, ring: &GradedRing) -> Result<Vec<Polynomial>> {
    let t = text.trim();
    if t.is_empty() {
        return Err(Error::EmptyInput);
    }
    let inner = if t.starts_with('(') && t.ends_with(')') && wraps_whole(t) {
        &t[1..t.len() - 1]
    } else {
        t
    };
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in inner.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(parse_polynomial(&inner[start..i], ring)?);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(parse_polynomial(&inner[start..], ring)?);
    Ok(out)
}

fn wraps_whole(t: &str) -> bool {
    let mut depth = 0i32;
    for (i, ch) in t.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 && i + 1 != t.len() {
                    return false;
                }
            }
            _ => {}
        }
    }
    // A single parenthesized polynomial like `(x+y)` is also accepted as a list
    // of one; only a top-level comma makes the distinction matter.
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::CoefficientField;

    fn ring() -> GradedRing {
        GradedRing::standard(&["x0", "x1", "x2"], CoefficientField::Rational).unwrap()
    }

    #[test]
    fn two_term_example() {
        let r = ring();
        let f = parse_polynomial("x0^2 - 2*x1*x2", &r).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.terms()[0].0.to_i64(), Some(1));
        assert_eq!(f.terms()[1].0.to_i64(), Some(-2));
        assert_eq!(f.to_string(), "x0^2 - 2*x1*x2");
    }

    #[test]
    fn cancellation_and_rationals() {
        let r = ring();
        assert!(parse_polynomial("x0 - x0", &r).unwrap().is_zero());
        let f = parse_polynomial("3/2*x0 - x1/4", &r).unwrap();
        assert_eq!(f.to_string(), "3/2*x0 - 1/4*x1");
        assert_eq!(parse_polynomial(&f.to_string(), &r).unwrap(), f);
        assert_eq!(
            parse_polynomial("-(x0+x1)^2", &r).unwrap().to_string(),
            "-x0^2 - 2*x0*x1 - x1^2"
        );
    }

    #[test]
    fn fermat_generator_shape() {
        let r = GradedRing::standard(&["x", "y", "z"], CoefficientField::Rational).unwrap();
        let f = parse_polynomial("x*(y^3-z^3)", &r).unwrap();
        assert_eq!(f.to_string(), "x*y^3 - x*z^3");
    }

    #[test]
    fn errors() {
        let r = ring();
        assert!(matches!(parse_polynomial("x9", &r), Err(Error::UnknownVariable(_))));
        assert!(matches!(parse_polynomial("x0^", &r), Err(Error::MalformedExponent(_))));
        assert!(matches!(parse_polynomial("x0^-1", &r), Err(Error::MalformedExponent(_))));
        assert!(matches!(parse_polynomial("x0/x1", &r), Err(Error::NonConstantDivision)));
        assert!(matches!(parse_polynomial("   ", &r), Err(Error::EmptyInput)));
        assert!(matches!(parse_polynomial("x0 x1", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial("x0/0", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial("(x0", &r), Err(Error::Parse { .. })));
    }

    #[test]
    fn generator_lists() {
        let r = ring();
        let g = parse_generators("(x0^2, x0*(x1+x2), x2)", &r).unwrap();
        assert_eq!(g.len(), 3);
        let h = parse_generators("(x0+x1)*x2, x1", &r).unwrap();
        assert_eq!(h.len(), 2);
        assert_eq!(parse_generators("(x0+x1)", &r).unwrap().len(), 1);
    }
}
