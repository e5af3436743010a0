use std::fmt;
use std::str::FromStr;

use crate::LabError;

/// Propositional formulas over single-letter variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Var(char),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn var(c: char) -> Self {
        Formula::Var(c)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(a: Formula) -> Self {
        Formula::Not(Box::new(a))
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn imp(a: Formula, b: Formula) -> Self {
        Formula::Imp(Box::new(a), Box::new(b))
    }

    /// The weak excluded middle `~~A | ~A`.
    pub fn jankov() -> Self {
        let a = Formula::var('A');
        Formula::or(Formula::not(Formula::not(a.clone())), Formula::not(a))
    }

    /// Distinct variables in order of first appearance.
    pub fn vars(&self) -> Vec<char> {
        fn go(f: &Formula, out: &mut Vec<char>) {
            match f {
                Formula::Var(c) => {
                    if !out.contains(c) {
                        out.push(*c)
                    }
                }
                Formula::Not(a) => go(a, out),
                Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                    go(a, out);
                    go(b, out);
                }
            }
        }
        let mut v = Vec::new();
        go(self, &mut v);
        v
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sub = |f: &mut fmt::Formatter<'_>, a: &Formula| match a {
            Formula::Var(_) | Formula::Not(_) => write!(f, "{a}"),
            _ => write!(f, "({a})"),
        };
        match self {
            Formula::Var(c) => write!(f, "{c}"),
            Formula::Not(a) => {
                write!(f, "~")?;
                sub(f, a)
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                let op = match self {
                    Formula::And(..) => "&",
                    Formula::Or(..) => "|",
                    _ => "->",
                };
                sub(f, a)?;
                write!(f, " {op} ")?;
                sub(f, b)
            }
        }
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip();
        if self.s[self.pos..].starts_with(tok.as_bytes()) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn err(&self, msg: &str) -> LabError {
        LabError::Formula { pos: self.pos, msg: msg.to_string() }
    }

    // imp := or ("->" imp)?
    fn imp(&mut self) -> Result<Formula, LabError> {
        let a = self.or()?;
        if self.eat("->") {
            Ok(Formula::imp(a, self.imp()?))
        } else {
            Ok(a)
        }
    }

    fn or(&mut self) -> Result<Formula, LabError> {
        let mut a = self.and()?;
        while self.eat("|") {
            a = Formula::or(a, self.and()?);
        }
        Ok(a)
    }

    fn and(&mut self) -> Result<Formula, LabError> {
        let mut a = self.unary()?;
        while self.eat("&") {
            a = Formula::and(a, self.unary()?);
        }
        Ok(a)
    }

    fn unary(&mut self) -> Result<Formula, LabError> {
        if self.eat("~") {
            return Ok(Formula::not(self.unary()?));
        }
        if self.eat("(") {
            let a = self.imp()?;
            if !self.eat(")") {
                return Err(self.err("expected ')'"));
            }
            return Ok(a);
        }
        self.skip();
        match self.s.get(self.pos) {
            Some(c) if c.is_ascii_uppercase() => {
                self.pos += 1;
                Ok(Formula::Var(*c as char))
            }
            Some(_) => Err(self.err("expected a variable A-Z")),
            None => Err(self.err("unexpected end")),
        }
    }
}

impl FromStr for Formula {
    type Err = LabError;

    fn from_str(s: &str) -> Result<Self, LabError> {
        let mut p = Parser { s: s.as_bytes(), pos: 0 };
        let f = p.imp()?;
        p.skip();
        if p.pos != s.len() {
            return Err(p.err("trailing input"));
        }
        Ok(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_precedence() {
        let f: Formula = "~~A | ~A".parse().unwrap();
        assert_eq!(f, Formula::jankov());
        let g: Formula = "A & B -> A | C -> B".parse().unwrap();
        assert_eq!(g.to_string(), "(A & B) -> ((A | C) -> B)");
        assert_eq!(g.vars(), ['A', 'B', 'C']);
        assert!("A &".parse::<Formula>().is_err());
        assert!("a".parse::<Formula>().is_err());
        assert!("(A".parse::<Formula>().is_err());
    }
}
