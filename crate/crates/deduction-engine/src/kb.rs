use std::collections::{BTreeMap, HashMap};

use rewrite_engine::Facts;
use term_core::{parse_term, AtomDecl, Flag, Kind, ParseError, Term, Tri};

/// A relational statement with terms kept as written.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Statement {
    Le(Kind, Term, Term),
    Prop(Flag, Term),
    /// Medvedev reducibility between mass problems
    LeM(String, String),
}

impl Statement {
    pub fn terms(&self) -> Vec<Term> {
        match self {
            Statement::Le(_, a, b) => vec![a.clone(), b.clone()],
            Statement::Prop(_, t) => vec![t.clone()],
            Statement::LeM(a, b) => vec![Term::medv(a.clone()), Term::medv(b.clone())],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    /// A seed fact with the law it records.
    Seed(String),
    User,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Input {
    pub stmt: Statement,
    pub positive: bool,
    pub source: Source,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KbError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: bad term: {err}")]
    Term { line: usize, err: ParseError },
    #[error("line {line}: undeclared atom `{name}`")]
    Undeclared { line: usize, name: String },
    #[error("line {line}: atom `{name}` declared twice")]
    Duplicate { line: usize, name: String },
}

/// Declared atoms plus the facts given as input.
#[derive(Debug, Clone, Default)]
pub struct KnowledgeBase {
    pub atoms: BTreeMap<String, AtomDecl>,
    pub inputs: Vec<Input>,
}

const SEED: &str = include_str!("../data/seed.kb");

/// The bundled knowledge base of named problems.
pub fn seed_text() -> &'static str {
    SEED
}

impl KnowledgeBase {
    pub fn seed() -> KnowledgeBase {
        let mut kb = KnowledgeBase::default();
        kb.load_with(SEED, true).expect("the seed file is well formed");
        kb
    }

    pub fn parse(text: &str) -> Result<KnowledgeBase, KbError> {
        let mut kb = KnowledgeBase::default();
        kb.load(text)?;
        Ok(kb)
    }

    /// Add the statements of `text` as user facts.
    pub fn load(&mut self, text: &str) -> Result<(), KbError> {
        self.load_with(text, false)
    }

    fn load_with(&mut self, text: &str, seed: bool) -> Result<(), KbError> {
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let (body, comment) = match raw.split_once('#') {
                Some((b, c)) => (b, c.trim()),
                None => (raw, ""),
            };
            let words: Vec<&str> = body.split_whitespace().collect();
            if words.is_empty() {
                continue;
            }
            let source = if seed { Source::Seed(comment.to_string()) } else { Source::User };
            let syntax = |msg: &str| KbError::Syntax { line, msg: msg.to_string() };
            match words[0] {
                "atom" => {
                    let [_, name] = words[..] else { return Err(syntax("expected `atom <name>`")) };
                    if !term_core::is_identifier(name) {
                        return Err(syntax("bad atom name"));
                    }
                    if self.atoms.contains_key(name) {
                        return Err(KbError::Duplicate { line, name: name.to_string() });
                    }
                    self.atoms.insert(name.to_string(), AtomDecl::new(name));
                }
                "prop" | "notprop" => {
                    if words.len() < 3 {
                        return Err(syntax("expected `prop <flag> <term>`"));
                    }
                    let flag: Flag = words[1].parse().map_err(|e: term_core::UnknownFlag| syntax(&e.to_string()))?;
                    let t = self.term(&words[2..].join(" "), line)?;
                    let positive = words[0] == "prop";
                    if let Term::Atom(a) = &t {
                        if let Some(d) = self.atoms.get_mut(a) {
                            d.set_flag(flag, Tri::from(positive));
                        }
                    }
                    self.push(Statement::Prop(flag, t), positive, source);
                }
                "fact" => {
                    if words.len() < 3 {
                        return Err(syntax("expected `fact <rel> ...`"));
                    }
                    let rest = &words[2..];
                    match words[1] {
                        rel @ ("le" | "nle") => {
                            let kind: Kind = rest[0].parse().map_err(|e: term_core::UnknownKind| syntax(&e.to_string()))?;
                            let (a, b) = split_pair(&rest[1..].join(" ")).ok_or_else(|| syntax("expected two terms"))?;
                            let a = self.term(&a, line)?;
                            let b = self.term(&b, line)?;
                            self.push(Statement::Le(kind, a, b), rel == "le", source);
                        }
                        rel @ ("leM" | "nleM") => {
                            let [a, b] = rest else { return Err(syntax("expected two mass problems")) };
                            if !term_core::is_identifier(a) || !term_core::is_identifier(b) {
                                return Err(syntax("bad mass problem name"));
                            }
                            self.push(Statement::LeM(a.to_string(), b.to_string()), rel == "leM", source);
                        }
                        other => return Err(syntax(&format!("unknown relation `{other}`"))),
                    }
                }
                other => return Err(syntax(&format!("unknown statement `{other}`"))),
            }
        }
        Ok(())
    }

    fn term(&self, src: &str, line: usize) -> Result<Term, KbError> {
        let t = parse_term(src).map_err(|err| KbError::Term { line, err })?;
        self.check_declared(&t).map_err(|name| KbError::Undeclared { line, name })?;
        Ok(t)
    }

    /// The first undeclared atom of `t`, if any.
    pub fn check_declared(&self, t: &Term) -> Result<(), String> {
        match t.atoms().into_iter().find(|a| !self.atoms.contains_key(*a)) {
            Some(a) => Err(a.to_string()),
            None => Ok(()),
        }
    }

    fn push(&mut self, stmt: Statement, positive: bool, source: Source) {
        if !self.inputs.iter().any(|i| i.stmt == stmt && i.positive == positive) {
            self.inputs.push(Input { stmt, positive, source });
        }
    }

    pub fn declare(&mut self, name: &str) {
        self.atoms.entry(name.to_string()).or_insert_with(|| AtomDecl::new(name));
    }

    pub fn assert_le(&mut self, kind: Kind, a: Term, b: Term, positive: bool) {
        self.push(Statement::Le(kind, a, b), positive, Source::User);
    }

    pub fn assert_prop(&mut self, flag: Flag, t: Term, positive: bool) {
        self.push(Statement::Prop(flag, t), positive, Source::User);
    }

    pub fn fact_count(&self) -> usize {
        self.inputs.len()
    }

    /// The input facts as a side-condition oracle for normalization.
    pub fn input_facts(&self) -> InputFacts {
        let mut f = InputFacts::default();
        for i in &self.inputs {
            match &i.stmt {
                Statement::Prop(flag, t) => {
                    f.flags.insert((*flag, t.clone()), Tri::from(i.positive));
                }
                Statement::Le(k, a, b) => {
                    f.le.insert((*k, a.clone(), b.clone()), Tri::from(i.positive));
                }
                Statement::LeM(..) => {}
            }
        }
        f
    }
}

/// Split "t1 t2" or "t1,t2" at the top-level separator between two terms.
fn split_pair(s: &str) -> Option<(String, String)> {
    let mut depth = 0i32;
    let chars: Vec<char> = s.chars().collect();
    for (i, c) in chars.iter().enumerate() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' | ' ' if depth == 0 => {
                let (a, b) = (chars[..i].iter().collect::<String>(), chars[i + 1..].iter().collect::<String>());
                if !a.trim().is_empty() && !b.trim().is_empty() {
                    return Some((a.trim().to_string(), b.trim().to_string()));
                }
            }
            _ => {}
        }
    }
    None
}

/// Snapshot of the input facts, consulted by rewrite guards.
#[derive(Debug, Clone, Default)]
pub struct InputFacts {
    flags: HashMap<(Flag, Term), Tri>,
    le: HashMap<(Kind, Term, Term), Tri>,
}

impl Facts for InputFacts {
    fn flag(&self, flag: Flag, t: &Term) -> Tri {
        let direct = self.flags.get(&(flag, t.clone())).copied().unwrap_or_default();
        if direct == Tri::Unknown && flag == Flag::Complete
            && self.flag(Flag::StronglyComplete, t).is_true() {
                return Tri::True;
            }
        direct
    }

    fn le(&self, kind: Kind, a: &Term, b: &Term) -> Tri {
        for k in Kind::ALL {
            let key = (k, a.clone(), b.clone());
            match self.le.get(&key) {
                Some(Tri::True) if k.implies(kind) => return Tri::True,
                Some(Tri::False) if kind.implies(k) => return Tri::False,
                _ => {}
            }
        }
        Tri::Unknown
    }
}
