//! Small parser for polynomial expressions, grids and variable assignments
//! given on the command line.
//!
//! Expressions use integers, variables, `+ - * / ^` and parentheses, e.g.
//! `a+2*b`, `(x-z_0)^2`, `3/4*w2`. Division is only by nonzero constants.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::goncarov::Grid;
use crate::poly::{big_rat, MultiPoly, Rational, VarId};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(num_bigint::BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
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
            let digits: String = chars[start..i].iter().collect();
            out.push(Token::Num(digits.parse().expect("digits")));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?} in {s:?}")));
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MultiPoly> {
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

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc * self.unary()?;
            } else if self.eat('/') {
                let d = self.unary()?;
                let d: Rational = d
                    .as_constant()
                    .filter(|c| *c != Rational::from_integer(0.into()))
                    .ok_or_else(|| Error::Parse("division only by nonzero constants".into()))?;
                acc = acc.scale(&(Rational::from_integer(1.into()) / d));
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<MultiPoly> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        let base = self.atom()?;
        if self.eat('^') {
            match self.tokens.get(self.pos).cloned() {
                Some(Token::Num(e)) => {
                    self.pos += 1;
                    let e: u32 = e.try_into().map_err(|_| Error::Parse("exponent too large".into()))?;
                    return Ok(base.pow(e));
                }
                _ => return Err(Error::Parse("exponent must be a nonnegative integer".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.tokens.get(self.pos).cloned() {
            Some(Token::Num(n)) => {
                self.pos += 1;
                Ok(MultiPoly::constant(big_rat(n)))
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                Ok(MultiPoly::var(name.parse()?))
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing `)`".into()));
                }
                Ok(inner)
            }
            Some(t) => Err(Error::Parse(format!("unexpected token {t:?}"))),
            None => Err(Error::Parse("unexpected end of expression".into())),
        }
    }
}

/// Parses a polynomial expression.
pub fn parse_poly(s: &str) -> Result<MultiPoly> {
    let mut parser = Parser { tokens: tokenize(s)?, pos: 0 };
    let out = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Parse(format!("trailing input in {s:?}")));
    }
    Ok(out)
}

/// Parses a grid: `z` (symbolic `z_0..z_{len-1}`), comma-separated
/// expressions, or a JSON list of numbers and expression strings.
pub fn parse_grid(s: &str, len: usize) -> Result<Grid> {
    let s = s.trim();
    if s == "z" || s == "symbolic" {
        return Ok(Grid::symbolic(len));
    }
    if s.starts_with('[') {
        let items: Vec<serde_json::Value> = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let nodes = items
            .iter()
            .map(|v| match v {
                serde_json::Value::Number(n) => parse_poly(&n.to_string()),
                serde_json::Value::String(t) => parse_poly(t),
                _ => Err(Error::Parse(format!("bad grid node {v}"))),
            })
            .collect::<Result<_>>()?;
        return Ok(Grid::new(nodes));
    }
    Ok(Grid::new(s.split(',').map(parse_poly).collect::<Result<_>>()?))
}

/// Parses `name=expr,name=expr`.
pub fn parse_substitution(s: &str) -> Result<HashMap<VarId, MultiPoly>> {
    let mut out = HashMap::new();
    for item in s.split(',').filter(|t| !t.trim().is_empty()) {
        let (name, value) =
            item.split_once('=').ok_or_else(|| Error::Parse(format!("expected name=value, got {item:?}")))?;
        out.insert(name.trim().parse()?, parse_poly(value)?);
    }
    Ok(out)
}

/// Values for an indexed family of variables (`y_i` or `w_i`), given as
/// `all=1`, `3=2` or `y3=2`; specific entries override `all`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct IndexedAssignment {
    pub all: Option<MultiPoly>,
    pub specific: HashMap<u32, MultiPoly>,
}

impl IndexedAssignment {
    pub fn parse(s: &str, prefix: char) -> Result<Self> {
        let mut out = IndexedAssignment::default();
        for item in s.split(',').filter(|t| !t.trim().is_empty()) {
            let (name, value) =
                item.split_once('=').ok_or_else(|| Error::Parse(format!("expected index=value, got {item:?}")))?;
            let name = name.trim();
            let value = parse_poly(value)?;
            if name == "all" {
                out.all = Some(value);
                continue;
            }
            let index =
                if name.bytes().all(|b| b.is_ascii_digit()) { format!("{prefix}{name}") } else { name.to_string() };
            let i = match index.parse::<VarId>()? {
                VarId::Y(i) if prefix == 'y' => i,
                VarId::W(i) if prefix == 'w' => i,
                _ => return Err(Error::Parse(format!("expected a {prefix} variable, got {name:?}"))),
            };
            out.specific.insert(i, value);
        }
        Ok(out)
    }

    /// Substitution for indices `first..=last`.
    pub fn resolve(&self, prefix: char, first: u32, last: u32) -> HashMap<VarId, MultiPoly> {
        let var = |i| if prefix == 'y' { VarId::Y(i) } else { VarId::W(i) };
        let mut out = HashMap::new();
        if let Some(all) = &self.all {
            for i in first..=last {
                out.insert(var(i), all.clone());
            }
        }
        for (&i, v) in &self.specific {
            out.insert(var(i), v.clone());
        }
        out
    }
}
