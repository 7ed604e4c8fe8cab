//! Text input for scalars: `+ - * / ^`, parentheses, integers, `x1..x13`, `h`, `hp`.

use super::mono::{Var, MAX_X};
use super::scalar::Scalar;
use crate::prelude::*;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl core::fmt::Display for ParseError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "parse error at {}: {}", self.pos, self.msg)
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos,
            msg: msg.to_string(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Scalar, ParseError> {
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

    fn term(&mut self) -> Result<Scalar, ParseError> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                b'*' => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                b'/' => {
                    self.pos += 1;
                    let d = self.unary()?;
                    acc = match acc.checked_div(&d) {
                        Ok(v) => v,
                        Err(_) => return self.err("division by zero"),
                    };
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Scalar, ParseError> {
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

    fn power(&mut self) -> Result<Scalar, ParseError> {
        let base = self.primary()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = if self.peek() == Some(b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let e = self.integer()?;
            let e = i32::try_from(e).or_else(|_| self.err("exponent too large"))?;
            let e = if neg { -e } else { e };
            if e < 0 && base.is_zero() {
                return self.err("negative power of zero");
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        let text = core::str::from_utf8(&self.s[start..self.pos]).unwrap();
        text.parse::<i64>()
            .or_else(|_| self.err("integer out of range"))
    }

    fn primary(&mut self) -> Result<Scalar, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => Ok(Scalar::from_int(self.integer()?)),
            Some(b'x') => {
                self.pos += 1;
                let i = self.integer()?;
                if i < 1 || i as usize > MAX_X {
                    return self.err("variable index out of range");
                }
                Ok(Scalar::var(Var::X(i as u8)))
            }
            Some(b'h') => {
                self.pos += 1;
                if self.s.get(self.pos) == Some(&b'p') {
                    self.pos += 1;
                    Ok(Scalar::var(Var::Hp))
                } else {
                    Ok(Scalar::var(Var::H))
                }
            }
            Some(_) => self.err("unexpected character"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses the canonical text form (and any expression in the same grammar).
pub fn parse_scalar(text: &str) -> Result<Scalar, ParseError> {
    let mut p = Parser {
        s: text.as_bytes(),
        pos: 0,
    };
    let v = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_display() {
        for text in [
            "(x1 - x2 + h) / h",
            "-1 / h",
            "x1^2*hp - 3/2*h",
            "0",
            "(x1 + x2) / (x3 - hp)^2",
        ] {
            let v = parse_scalar(text).unwrap();
            let again = parse_scalar(&v.to_string()).unwrap();
            assert_eq!(v, again, "{}", text);
        }
        assert_eq!(
            parse_scalar("(x1^2 - x2^2)/(x1 - x2)").unwrap().to_string(),
            "x1 + x2"
        );
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_scalar("x0").is_err());
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("(x1").is_err());
        assert!(parse_scalar("x1 x2").is_err());
    }
}
