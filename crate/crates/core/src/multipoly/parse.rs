//! Text form of polynomials.
//!
//! Grammar (whitespace is ignored):
//!
//! ```text
//! poly   := sign? term (sign term)*
//! term   := factor ('*' factor)*
//! factor := int ('/' int)? | name ('^' int)?
//! ```
//!
//! Printing lists terms in descending grevlex order and always re-parses to
//! the same polynomial.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::monomial::Monomial;
use super::poly::Polynomial;
use crate::error::{Error, Result};
use crate::exactalg::{FieldMode, Scalar};

pub fn parse_polynomial(text: &str, names: &[String], mode: FieldMode) -> Result<Polynomial> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, names, mode };
    let poly = p.poly()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    names: &'a [String],
    mode: FieldMode,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { position: self.pos, message: msg.to_string() }
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

    fn poly(&mut self) -> Result<Polynomial> {
        let n = self.names.len();
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    1
                }
                Some(b'-') => {
                    self.pos += 1;
                    -1
                }
                None if first => return Err(self.err("empty polynomial")),
                None => break,
                _ if first => 1,
                _ => return Err(self.err("expected `+` or `-`")),
            };
            first = false;
            let (m, c) = self.term()?;
            terms.push((m, if sign < 0 { -&c } else { c }));
        }
        Ok(Polynomial::from_terms(n, terms))
    }

    fn term(&mut self) -> Result<(Monomial, Scalar)> {
        let mut mono = Monomial::ONE;
        let mut coeff = self.mode.one();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let r = self.rational()?;
                    coeff = &coeff * &self.mode.from_rational(&r).map_err(|_| self.err("denominator vanishes in this field"))?;
                }
                Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                    let start = self.pos;
                    while self.pos < self.src.len()
                        && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                    {
                        self.pos += 1;
                    }
                    let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                    let idx = self
                        .names
                        .iter()
                        .position(|n| n == name)
                        .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
                    let mut e = 1u64;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.skip_ws();
                        e = self.integer()?.try_into().map_err(|_| self.err("exponent too large"))?;
                    }
                    let total = mono.exp(idx) as u64 + e;
                    if total > u16::MAX as u64 {
                        return Err(self.err("exponent too large"));
                    }
                    mono.set_exp(idx, total as u16);
                }
                _ => return Err(self.err("expected a coefficient or a variable")),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok((mono, coeff));
            }
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap().parse().unwrap())
    }

    fn rational(&mut self) -> Result<BigRational> {
        let num = self.integer()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let den = self.integer()?;
            if den.is_zero() {
                return Err(self.err("zero denominator"));
            }
            return Ok(BigRational::new(num, den));
        }
        Ok(BigRational::from_integer(num))
    }
}

pub fn format_monomial(m: &Monomial, names: &[String]) -> String {
    let parts: Vec<String> = names
        .iter()
        .enumerate()
        .filter(|(i, _)| m.exp(*i) > 0)
        .map(|(i, n)| if m.exp(i) == 1 { n.clone() } else { format!("{n}^{}", m.exp(i)) })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

pub fn format_polynomial(f: &Polynomial, names: &[String]) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (m, c) in f.terms() {
        let neg = c.is_negative();
        let abs = if neg { -c } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if m.is_one() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&format_monomial(m, names));
        } else {
            out.push_str(&format!("{abs}*{}", format_monomial(m, names)));
        }
    }
    out
}
