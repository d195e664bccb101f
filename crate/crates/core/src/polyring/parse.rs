//! Infix polynomial syntax: `3/2*x^2*y - (x+1)^3`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::{Polynomial, Rational, RingRef};
use crate::error::{Error, Result};

pub fn parse_polynomial(ring: &RingRef, src: &str) -> Result<Polynomial> {
    let (p, end) = parse_polynomial_at(ring, src, 0)?;
    let mut parser = Parser { ring, src: src.as_bytes(), pos: end };
    parser.skip_ws();
    if parser.pos != src.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(p)
}

/// Parses one expression starting at byte `start`; stops before the first
/// character that cannot continue it (`,`, `;`, `]`, ...). Returns the value
/// and the end offset.
pub fn parse_polynomial_at(ring: &RingRef, src: &str, start: usize) -> Result<(Polynomial, usize)> {
    let mut parser = Parser {
        ring,
        src: src.as_bytes(),
        pos: start,
    };
    let p = parser.expr()?;
    Ok((p, parser.pos))
}

struct Parser<'a> {
    ring: &'a RingRef,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            offset: self.pos,
            message: message.into(),
        }
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
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -&self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
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
                    let rhs = self.factor()?;
                    acc = acc.checked_mul(&rhs)?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let rhs = self.factor()?;
                    match rhs.constant_value() {
                        Some(c) if !c.is_zero() => acc = acc.scale(&c.recip()),
                        Some(_) => {
                            self.pos = at;
                            return Err(self.error("division by zero"));
                        }
                        None => {
                            self.pos = at;
                            return Err(self.error("division by a non-constant polynomial"));
                        }
                    }
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-&self.factor()?);
        }
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| self.error("exponent too large"))?;
            return base.pow(e);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let p = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(p)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Polynomial::constant(self.ring, Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                match self.ring.var_index(name) {
                    Some(i) => Ok(Polynomial::var(self.ring, i)),
                    None => {
                        self.pos = start;
                        Err(self.error(format!("unknown variable '{name}'")))
                    }
                }
            }
            Some(c) => Err(self.error(format!("unexpected character '{}'", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        Ok(digits.parse().expect("digits"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::Ring;

    #[test]
    fn parses_and_round_trips() {
        let r = Ring::degrevlex(&["x", "y", "z"]);
        for s in ["x^2*y-3/2*x+1", "-x*z^3+y", "5/6*x", "0", "-7/3"] {
            let p = parse_polynomial(&r, s).unwrap();
            assert_eq!(p.to_string(), s);
            assert_eq!(parse_polynomial(&r, &p.to_string()).unwrap(), p);
        }
        let p = parse_polynomial(&r, "(x+y)*(x-y)").unwrap();
        assert_eq!(p.to_string(), "x^2-y^2");
        let p = parse_polynomial(&r, "1/2*x + x/3").unwrap();
        assert_eq!(p.to_string(), "5/6*x");
    }

    #[test]
    fn reports_positions() {
        let r = Ring::degrevlex(&["x", "y"]);
        match parse_polynomial(&r, "x + w") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("{other:?}"),
        }
        assert!(parse_polynomial(&r, "x/y").is_err());
        assert!(parse_polynomial(&r, "(x+y").is_err());
        let (p, end) = parse_polynomial_at(&r, "x*y, y", 0).unwrap();
        assert_eq!((p.to_string().as_str(), end), ("x*y", 3));
    }
}
