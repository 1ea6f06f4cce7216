//! A small reader for rational expressions in q, with integer parameters.
//!
//! Accepts `+ - * / ^`, parentheses and implicit multiplication, so strings
//! such as `q^(5g-8)(q^2-1)(q^3-1)/(q-1)` or `q^7 + q^6 + 3q^5` parse as written.
//! Exponents are integer expressions in the parameters.

use std::ops::{Add, Mul, Neg, Sub};

use super::ratfunc::RationalFunction;
use crate::error::{Error, Result};

/// Values an expression can be read into.
pub(crate) trait ParseValue: Sized + Clone + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self> {
    fn from_int(n: i64) -> Self;
    /// The value of a variable name, or None if the name is a parameter.
    fn variable(&self, name: &str) -> Option<Self>;
    fn recip(&self) -> Result<Self>;
    fn pow(&self, e: i64) -> Result<Self>;
}

impl ParseValue for RationalFunction {
    fn from_int(n: i64) -> Self {
        RationalFunction::from_int(n)
    }

    fn variable(&self, name: &str) -> Option<Self> {
        (name == "q").then(RationalFunction::q)
    }

    fn recip(&self) -> Result<Self> {
        RationalFunction::recip(self)
    }

    fn pow(&self, e: i64) -> Result<Self> {
        RationalFunction::pow(self, e)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let t: String = cs[st..i].iter().collect();
            out.push(Tok::Num(t.parse().map_err(|_| Error::Parse(format!("number {t}")))?));
        } else if c.is_alphabetic() {
            // Identifiers are single letters so that `2g` and `qg` split naturally.
            out.push(Tok::Ident(c.to_string()));
            i += 1;
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else if c == '\u{2212}' {
            out.push(Tok::Op('-'));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a, V> {
    toks: Vec<Tok>,
    pos: usize,
    params: &'a [(&'a str, i64)],
    /// Any value; used to resolve variable names.
    proto: V,
}

impl<'a, V: ParseValue> Parser<'a, V> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn param(&self, name: &str) -> Result<i64> {
        self.params
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, v)| *v)
            .ok_or_else(|| Error::Parse(format!("unknown symbol {name}")))
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::Op('(')))
    }

    fn expr(&mut self) -> Result<V> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc + self.term()?;
            } else if self.eat('-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<V> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc * self.unary()?;
            } else if self.eat('/') {
                let d = self.unary()?;
                acc = acc * d.recip()?;
            } else if self.starts_factor() {
                acc = acc * self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<V> {
        if self.eat('-') {
            Ok(-self.unary()?)
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<V> {
        let base = self.atom()?;
        if self.eat('^') {
            let e = self.int_exponent()?;
            base.pow(e)
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<V> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(V::from_int(n))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match self.proto.variable(&name) {
                    Some(v) => Ok(v),
                    None => Ok(V::from_int(self.param(&name)?)),
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing )".into()));
                }
                Ok(v)
            }
            t => Err(Error::Parse(format!("unexpected token {t:?}"))),
        }
    }

    fn int_exponent(&mut self) -> Result<i64> {
        if self.eat('-') {
            return Ok(-self.int_exponent()?);
        }
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(n)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                self.param(&name)
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.int_expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing ) in exponent".into()));
                }
                Ok(v)
            }
            t => Err(Error::Parse(format!("bad exponent {t:?}"))),
        }
    }

    fn int_expr(&mut self) -> Result<i64> {
        let mut acc = self.int_term()?;
        loop {
            if self.eat('+') {
                acc += self.int_term()?;
            } else if self.eat('-') {
                acc -= self.int_term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn int_term(&mut self) -> Result<i64> {
        let mut acc = self.int_factor()?;
        loop {
            if self.eat('*') || self.starts_factor() {
                acc *= self.int_factor()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn int_factor(&mut self) -> Result<i64> {
        if self.eat('-') {
            return Ok(-self.int_factor()?);
        }
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(n)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                self.param(&name)
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.int_expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing ) in exponent".into()));
                }
                Ok(v)
            }
            t => Err(Error::Parse(format!("bad exponent term {t:?}"))),
        }
    }
}

/// Parses a rational expression in q with integer parameters (single-letter names).
pub fn parse_rf_with(s: &str, params: &[(&str, i64)]) -> Result<RationalFunction> {
    parse_value(s, params, RationalFunction::zero())
}

pub(crate) fn parse_value<V: ParseValue>(s: &str, params: &[(&str, i64)], proto: V) -> Result<V> {
    let mut p = Parser {
        toks: lex(s)?,
        pos: 0,
        params,
        proto,
    };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in {s:?}")));
    }
    Ok(v)
}

/// Parses a rational expression in q.
pub fn parse_rf(s: &str) -> Result<RationalFunction> {
    parse_rf_with(s, &[])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_printed_polynomials() {
        let f = parse_rf("q^7 + q^6 + 3q^5 + 2q^4 + 2q^3").unwrap();
        assert_eq!(f.to_string(), "q^7 + q^6 + 3q^5 + 2q^4 + 2q^3");
        let g = parse_rf("(1/2)q^2 - q^-1").unwrap();
        assert_eq!(g, parse_rf("(q^3 - 2)/(2q)").unwrap());
    }

    #[test]
    fn parameters_in_exponents() {
        let f = parse_rf_with("q^(5g-8)(q^2-1)(q^3-1)/(q-1)", &[("g", 2)]).unwrap();
        assert_eq!(f, parse_rf("q^2(q^2-1)(q^2+q+1)").unwrap());
        assert!(parse_rf("q^(g)").is_err());
    }
}
