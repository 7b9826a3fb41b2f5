//! Polynomial expressions such as `x + y + x^-1 + y^-1 - 2` or
//! `(x+y)*(1+x*y)`.
//!
//! Precedence from tightest: `^`, unary `-`, `*`, binary `+`/`-`. Exponents
//! are integer literals, optionally negative or parenthesized, and apply only
//! to monomials.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::poly2::{Exponent, LaurentPoly};
use crate::{Error, LaurentPoly2, Result};

/// Parses an expression into a Laurent polynomial.
pub fn parse_poly(text: &str) -> Result<LaurentPoly2> {
    let mut p = Parser { chars: text.chars().collect(), pos: 0 };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error(format!("unexpected '{}'", p.chars[p.pos])));
    }
    Ok(value)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse { column: self.pos + 1, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<LaurentPoly2> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly2> {
        let mut acc = self.unary()?;
        while self.eat('*') {
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<LaurentPoly2> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<LaurentPoly2> {
        self.skip_ws();
        let start = self.pos;
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        self.skip_ws();
        let at = self.pos;
        let k = self.exponent()?;
        if k != 0 && !base.is_monomial() {
            return Err(Error::Parse { column: start + 1, message: "exponent applied to non-monomial".into() });
        }
        raise(&base, k).map_err(|message| Error::Parse { column: at + 1, message })
    }

    fn exponent(&mut self) -> Result<i64> {
        if self.eat('(') {
            let k = self.signed_int()?;
            if !self.eat(')') {
                return Err(self.error("exponent must be an integer"));
            }
            return Ok(k);
        }
        self.signed_int()
    }

    fn signed_int(&mut self) -> Result<i64> {
        let negative = self.eat('-');
        self.skip_ws();
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.error("exponent must be an integer"));
        }
        let value: i64 = digits.parse().map_err(|_| self.error("exponent out of range"))?;
        Ok(if negative { -value } else { value })
    }

    fn digits(&mut self) -> String {
        let begin = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.chars[begin..self.pos].iter().collect()
    }

    fn atom(&mut self) -> Result<LaurentPoly2> {
        match self.peek() {
            Some('x') => {
                self.pos += 1;
                Ok(LaurentPoly::x_pow(1, 0))
            }
            Some('y') => {
                self.pos += 1;
                Ok(LaurentPoly::x_pow(0, 1))
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits();
                Ok(LaurentPoly::constant(digits.parse::<BigInt>().expect("ascii digits")))
            }
            Some(c) => Err(self.error(format!("unexpected '{c}'"))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

fn raise(base: &LaurentPoly2, k: i64) -> std::result::Result<LaurentPoly2, String> {
    if k == 0 {
        return Ok(LaurentPoly::one());
    }
    let (e, c) = base.terms().next().map(|(e, c)| (e, c.clone())).expect("monomial");
    if k < 0 && !c.abs().is_one() {
        return Err("negative power of a non-unit coefficient".into());
    }
    let power = u32::try_from(k.unsigned_abs()).map_err(|_| "exponent out of range".to_string())?;
    let coeff = num_traits::pow(c, power as usize);
    let scaled = e.i.checked_mul(k).zip(e.j.checked_mul(k)).ok_or_else(|| "exponent out of range".to_string())?;
    Ok(LaurentPoly::monomial(coeff, Exponent::new(scaled.0, scaled.1)))
}
