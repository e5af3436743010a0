use crate::term::{BinOp, MOp, Term, UnOp};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("unexpected end of input at {pos}")]
    UnexpectedEnd { pos: usize },
    #[error("unexpected `{found}` at {pos}, expected {expected}")]
    Unexpected { pos: usize, found: String, expected: &'static str },
    #[error("`{op}` takes {expected} argument(s), got {found} at {pos}")]
    Arity { pos: usize, op: String, expected: usize, found: usize },
    #[error("`{name}` is reserved and cannot name an atom at {pos}")]
    Reserved { pos: usize, name: String },
    #[error("trailing input `{found}` at {pos}")]
    Trailing { pos: usize, found: String },
}

impl ParseError {
    pub fn pos(&self) -> usize {
        match self {
            ParseError::UnexpectedEnd { pos }
            | ParseError::Unexpected { pos, .. }
            | ParseError::Arity { pos, .. }
            | ParseError::Reserved { pos, .. }
            | ParseError::Trailing { pos, .. } => *pos,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Word(String),
    LParen,
    RParen,
    Comma,
}

/// True for names usable as atoms or mass-problem symbols.
///
/// Letters, digits and `_`, at least one letter, then optional primes
/// (`LPO'`, `1GEN`), and not a keyword.
pub fn is_identifier(s: &str) -> bool {
    let core = s.trim_end_matches('\'');
    !core.is_empty()
        && core.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
        && core.chars().any(|c| c.is_ascii_alphabetic())
        && !is_keyword(s)
}

fn is_keyword(s: &str) -> bool {
    s == "INF"
        || s == "medv"
        || UnOp::ALL.iter().any(|o| o.name() == s)
        || BinOp::ALL.iter().any(|o| o.name() == s)
        || MOp::ALL.iter().any(|o| o.name() == s)
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b'#' => {
                while i < bytes.len() && bytes[i] != b'\n' {
                    i += 1;
                }
            }
            b'(' => {
                out.push((i, Tok::LParen));
                i += 1;
            }
            b')' => {
                out.push((i, Tok::RParen));
                i += 1;
            }
            b',' => {
                out.push((i, Tok::Comma));
                i += 1;
            }
            c if c.is_ascii_whitespace() => i += 1,
            c if c.is_ascii_alphanumeric() || c == b'_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                while i < bytes.len() && bytes[i] == b'\'' {
                    i += 1;
                }
                out.push((start, Tok::Word(src[start..i].to_string())));
            }
            _ => {
                let ch = src[i..].chars().next().unwrap_or('?');
                return Err(ParseError::Unexpected {
                    pos: i,
                    found: ch.to_string(),
                    expected: "a term",
                });
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&(usize, Tok)> {
        self.toks.get(self.at)
    }

    fn next(&mut self, expected: &'static str) -> Result<(usize, Tok), ParseError> {
        match self.toks.get(self.at) {
            Some(t) => {
                self.at += 1;
                Ok(t.clone())
            }
            None => {
                let _ = expected;
                Err(ParseError::UnexpectedEnd { pos: self.end })
            }
        }
    }

    fn expect(&mut self, want: Tok, expected: &'static str) -> Result<usize, ParseError> {
        let (pos, tok) = self.next(expected)?;
        if tok == want {
            Ok(pos)
        } else {
            Err(ParseError::Unexpected { pos, found: show(&tok), expected })
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let (pos, tok) = self.next("a term")?;
        let word = match tok {
            Tok::Word(w) => w,
            other => {
                return Err(ParseError::Unexpected { pos, found: show(&other), expected: "a term" })
            }
        };
        match word.as_str() {
            "0" => return Ok(Term::Zero),
            "1" => return Ok(Term::One),
            "INF" => return Ok(Term::Inf),
            "medv" => {
                self.expect(Tok::LParen, "`(`")?;
                let (p, t) = self.next("a mass-problem symbol")?;
                let name = match t {
                    Tok::Word(w) if is_identifier(&w) => w,
                    Tok::Word(w) => return Err(ParseError::Reserved { pos: p, name: w }),
                    other => {
                        return Err(ParseError::Unexpected {
                            pos: p,
                            found: show(&other),
                            expected: "a mass-problem symbol",
                        })
                    }
                };
                self.close_args("medv", pos, 1)?;
                return Ok(Term::Medv(name));
            }
            _ => {}
        }
        if let Some(op) = UnOp::ALL.into_iter().find(|o| o.name() == word) {
            let mut args = self.args(&word, pos, 1)?;
            return Ok(Term::unary(op, args.remove(0)));
        }
        if let Some(op) = BinOp::ALL.into_iter().find(|o| o.name() == word) {
            let mut args = self.args(&word, pos, 2)?;
            let r = args.remove(1);
            return Ok(Term::binary(op, args.remove(0), r));
        }
        if let Some(op) = MOp::ALL.into_iter().find(|o| o.name() == word) {
            let mut args = self.args(&word, pos, 2)?;
            let r = args.remove(1);
            return Ok(Term::medv_op(op, args.remove(0), r));
        }
        if !is_identifier(&word) {
            return Err(ParseError::Unexpected { pos, found: word, expected: "a term" });
        }
        Ok(Term::Atom(word))
    }

    fn args(&mut self, op: &str, pos: usize, arity: usize) -> Result<Vec<Term>, ParseError> {
        self.expect(Tok::LParen, "`(`")?;
        let mut args = vec![self.term()?];
        loop {
            let (p, t) = self.next("`,` or `)`")?;
            match t {
                Tok::Comma => args.push(self.term()?),
                Tok::RParen => break,
                other => {
                    return Err(ParseError::Unexpected {
                        pos: p,
                        found: show(&other),
                        expected: "`,` or `)`",
                    })
                }
            }
        }
        if args.len() != arity {
            return Err(ParseError::Arity {
                pos,
                op: op.to_string(),
                expected: arity,
                found: args.len(),
            });
        }
        Ok(args)
    }

    fn close_args(&mut self, op: &str, pos: usize, arity: usize) -> Result<(), ParseError> {
        let (p, t) = self.next("`)`")?;
        match t {
            Tok::RParen => Ok(()),
            Tok::Comma => {
                Err(ParseError::Arity { pos, op: op.to_string(), expected: arity, found: arity + 1 })
            }
            other => Err(ParseError::Unexpected { pos: p, found: show(&other), expected: "`)`" }),
        }
    }
}

fn show(t: &Tok) -> String {
    match t {
        Tok::Word(w) => w.clone(),
        Tok::LParen => "(".into(),
        Tok::RParen => ")".into(),
        Tok::Comma => ",".into(),
    }
}

/// Parse a single term. Whitespace and `#` comments are ignored.
pub fn parse_term(src: &str) -> Result<Term, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser { toks, at: 0, end: src.len() };
    let t = p.term()?;
    if let Some((pos, tok)) = p.peek() {
        return Err(ParseError::Trailing { pos: *pos, found: show(tok) });
    }
    Ok(t)
}

impl std::str::FromStr for Term {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_term(s)
    }
}
