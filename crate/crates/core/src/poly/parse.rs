//! Text syntax for polynomials: integers (or `a/b` rationals), declared
//! variable names, `+ - * ^` and parentheses. `*` may be omitted between
//! factors, so `2x y^2` reads as `2*x*y^2`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::polynomial::Polynomial;
use super::ring::PolyRing;
use crate::error::{Error, Result};

pub fn parse_polynomial(text: &str, ring: &Arc<PolyRing>) -> Result<Polynomial> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, ring };
    let f = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(f)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Arc<PolyRing>,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse { offset: self.pos, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.ring);
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { acc.sub(&t) } else { acc.add(&t) };
            match self.peek() {
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
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
                Some(c) if c == b'(' || c.is_ascii_alphanumeric() || c == b'_' => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(self.error("exponent must be a non-negative integer"));
            }
            if self.pos < self.src.len() && (self.src[self.pos] == b'.' || self.src[self.pos].is_ascii_alphabetic()) {
                return Err(self.error("exponent must be a non-negative integer"));
            }
            let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
            let k: u32 = digits.parse().map_err(|_| Error::Parse { offset: start, message: "exponent too large".into() })?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer();
                let value = if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    if !self.src.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                        return Err(self.error("expected denominator"));
                    }
                    let den = self.integer();
                    if den == BigInt::from(0) {
                        return Err(self.error("zero denominator"));
                    }
                    BigRational::new(num, den)
                } else {
                    BigRational::from_integer(num)
                };
                let field = self.ring.field();
                if field.characteristic() != 0 && (value.denom() % field.characteristic()) == BigInt::from(0) {
                    return Err(self.error("denominator vanishes in the coefficient field"));
                }
                Ok(Polynomial::constant(self.ring, value))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match self.ring.variable_index(name) {
                    Some(i) => Ok(Polynomial::variable(self.ring, i)),
                    None => Err(Error::UnknownVariable { name: name.to_string(), offset: start }),
                }
            }
            Some(_) => Err(self.error("expected a number, variable or `(`")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> BigInt {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap().parse().unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Monomial, MonomialOrder};

    #[test]
    fn leading_monomial_under_grevlex() {
        let r = PolyRing::rational(&["x", "y", "z"]);
        let f = parse_polynomial("x^2*y - 3*z", &r).unwrap();
        assert_eq!(f.terms().len(), 2);
        assert_eq!(f.leading_monomial(), Some(&Monomial::from_exponents(&[2, 1, 0])));
        assert_eq!(r.order(), MonomialOrder::GREVLEX);
    }

    #[test]
    fn cancellation_and_expansion() {
        let r = PolyRing::rational(&["x", "y"]);
        assert!(parse_polynomial("x - x", &r).unwrap().is_zero());
        assert_eq!(parse_polynomial("(x+y)^2", &r).unwrap().to_string(), "x^2 + 2*x*y + y^2");
        assert_eq!(parse_polynomial("-2x y + 1/2", &r).unwrap().to_string(), "-2*x*y + 1/2");
    }

    #[test]
    fn errors() {
        let r = PolyRing::rational(&["x", "y"]);
        assert!(matches!(parse_polynomial("x + w", &r), Err(Error::UnknownVariable { .. })));
        assert!(matches!(parse_polynomial("x +", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial("x^-1", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial("x^1.5", &r), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial("(x", &r), Err(Error::Parse { .. })));
    }
}
