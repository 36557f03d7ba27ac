//! Canonical text form and a small expression parser.

use std::fmt::Write;

use num::{BigInt, BigRational, One, Signed};

use super::poly::{LaurentPoly, Monomial};
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

pub fn default_var_names(nvars: usize) -> Vec<String> {
    (1..=nvars).map(|i| format!("t{i}")).collect()
}

fn format_monomial(out: &mut String, m: &Monomial, names: &[String]) {
    let mut first = true;
    for (i, &e) in m.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(&names[i]);
        if e != 1 {
            let _ = write!(out, "^{e}");
        }
    }
}

pub fn format_poly(p: &LaurentPoly, names: &[String]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().iter().enumerate() {
        let neg = c.is_negative();
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let a = c.abs();
        if m.is_one() {
            let _ = write!(out, "{a}");
        } else {
            if !a.is_one() {
                let _ = write!(out, "{a}*");
            }
            format_monomial(&mut out, m, names);
        }
    }
    out
}

pub fn format_ratfunc(r: &RatFunc, names: &[String]) -> String {
    if r.den().is_one() {
        format_poly(r.num(), names)
    } else {
        format!("({})/({})", format_poly(r.num(), names), format_poly(r.den(), names))
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push((Tok::Num(text.parse().expect("digits")), start + 1));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), start + 1));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Op(c), i + 1));
            i += 1;
        } else {
            return Err(Error::parse(1, i + 1, format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    names: &'a [String],
    end_col: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.1).unwrap_or(self.end_col)
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::parse(1, self.col(), msg))
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RatFunc> {
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

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let col = self.col();
                let d = self.unary()?;
                acc = acc.checked_div(&d).ok_or_else(|| Error::parse(1, col, "division by zero"))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RatFunc> {
        if self.eat('-') {
            Ok(-self.unary()?)
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn exponent(&mut self) -> Result<i32> {
        let paren = self.eat('(');
        let neg = self.eat('-');
        let v = match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                i32::try_from(n).or_else(|_| self.err("exponent too large"))?
            }
            _ => return self.err("expected integer exponent"),
        };
        if paren && !self.eat(')') {
            return self.err("expected ')'");
        }
        Ok(if neg { -v } else { v })
    }

    fn power(&mut self) -> Result<RatFunc> {
        let base = self.atom()?;
        if self.eat('^') {
            let col = self.col();
            let e = self.exponent()?;
            return base.powi(e).ok_or_else(|| Error::parse(1, col, "negative power of zero"));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RatFunc> {
        let nvars = self.names.len();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(RatFunc::from_poly(LaurentPoly::constant(nvars, BigRational::from_integer(n))))
            }
            Some(Tok::Ident(id)) => match self.names.iter().position(|s| *s == id) {
                Some(i) => {
                    self.pos += 1;
                    Ok(RatFunc::from_poly(LaurentPoly::var(nvars, i)))
                }
                None => self.err(&format!("unknown variable '{id}'")),
            },
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(v)
            }
            _ => self.err("expected a number, variable or '('"),
        }
    }
}

/// Parses an arithmetic expression in the given variables. Accepts the
/// canonical output form and general `+ - * / ^` expressions.
pub fn parse_ratfunc(s: &str, names: &[String]) -> Result<RatFunc> {
    let toks = tokenize(s)?;
    let mut p = Parser { toks, pos: 0, names, end_col: s.chars().count() + 1 };
    if p.peek().is_none() {
        return p.err("empty expression");
    }
    let v = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(v)
}

pub fn parse_poly(s: &str, names: &[String]) -> Result<LaurentPoly> {
    let r = parse_ratfunc(s, names)?;
    r.to_poly().ok_or_else(|| Error::parse(1, 1, "not a Laurent polynomial"))
}
