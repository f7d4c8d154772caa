//! Recursive-descent parser for the polynomial grammar:
//!
//! ```text
//! list    = poly { "," poly }
//! poly    = [sign] term { sign term }
//! term    = factor { "*" factor }
//! factor  = primary [ "^" integer ]
//! primary = number | variable | "(" poly ")"
//! number  = integer [ "/" integer ]
//! ```

use mckay_exact::{parse_rational, Q};

use crate::mono::Mono;
use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("unexpected character {found:?} at offset {at}")]
    Unexpected { at: usize, found: char },
    #[error("unexpected end of input")]
    Eof,
    #[error("unknown variable {name:?} (expected one of {allowed})")]
    UnknownVariable { name: String, allowed: String },
    #[error("bad number {0:?}")]
    BadNumber(String),
    #[error("empty polynomial list")]
    Empty,
}

struct Parser<'a> {
    src: Vec<char>,
    pos: usize,
    names: &'a [&'a str],
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn fail(&mut self) -> ParseError {
        match self.peek() {
            Some(c) => ParseError::Unexpected { at: self.pos, found: c },
            None => ParseError::Eof,
        }
    }

    fn nvars(&self) -> usize {
        self.names.len()
    }

    fn poly(&mut self) -> Result<Poly, ParseError> {
        let mut acc = Poly::zero(self.nvars());
        let mut sign = 1i32;
        if self.eat('-') {
            sign = -1;
        } else {
            self.eat('+');
        }
        loop {
            let t = self.term()?;
            acc = if sign < 0 { acc.sub(&t) } else { acc.add(&t) };
            if self.eat('+') {
                sign = 1;
            } else if self.eat('-') {
                sign = -1;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly, ParseError> {
        let base = self.primary()?;
        if self.eat('^') {
            let e = self.integer()?;
            let e: u32 = e.parse().map_err(|_| ParseError::BadNumber(e))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<String, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.fail());
        }
        Ok(self.src[start..self.pos].iter().collect())
    }

    fn primary(&mut self) -> Result<Poly, ParseError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let p = self.poly()?;
                if !self.eat(')') {
                    return Err(self.fail());
                }
                Ok(p)
            }
            Some(c) if c.is_ascii_digit() => {
                let mut text = self.integer()?;
                if self.eat('/') {
                    text.push('/');
                    text.push_str(&self.integer()?);
                }
                let value: Q = parse_rational(&text).ok_or(ParseError::BadNumber(text))?;
                Ok(Poly::constant(self.nvars(), value))
            }
            Some(c) if c.is_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_alphanumeric() {
                    self.pos += 1;
                }
                let name: String = self.src[start..self.pos].iter().collect();
                match self.names.iter().position(|n| *n == name) {
                    Some(i) => Ok(Poly::term(Mono::var(self.nvars(), i), Q::from_integer(1.into()))),
                    None => Err(ParseError::UnknownVariable { name, allowed: self.names.join(",") }),
                }
            }
            _ => Err(self.fail()),
        }
    }
}

/// Parse one polynomial over the variables `names`.
pub fn parse_poly(s: &str, names: &[&str]) -> Result<Poly, ParseError> {
    let mut p = Parser { src: s.chars().collect(), pos: 0, names };
    let out = p.poly()?;
    if p.peek().is_some() {
        return Err(p.fail());
    }
    Ok(out)
}

/// Parse a comma-separated list of polynomials.
pub fn parse_poly_list(s: &str, names: &[&str]) -> Result<Vec<Poly>, ParseError> {
    let mut p = Parser { src: s.chars().collect(), pos: 0, names };
    if p.peek().is_none() {
        return Err(ParseError::Empty);
    }
    let mut out = vec![p.poly()?];
    while p.eat(',') {
        out.push(p.poly()?);
    }
    if p.peek().is_some() {
        return Err(p.fail());
    }
    Ok(out)
}
