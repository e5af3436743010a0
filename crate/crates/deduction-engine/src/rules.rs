use std::fmt;
use std::sync::OnceLock;

use term_core::{parse_term, BinOp, Flag, Kind, MOp, Term, UnOp};

/// A term pattern. Atoms of the source template are variables, and so are
/// the names inside `medv(..)`, which match any mass problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Pat {
    Var(usize),
    MedvVar(usize),
    Const(Term),
    Un(UnOp, Box<Pat>),
    Bin(BinOp, Box<Pat>, Box<Pat>),
    MBin(MOp, Box<Pat>, Box<Pat>),
}

impl Pat {
    fn compile(t: &Term, vars: &mut Vec<String>) -> Pat {
        let mut var = |v: &str| match vars.iter().position(|x| x == v) {
            Some(i) => i,
            None => {
                vars.push(v.to_string());
                vars.len() - 1
            }
        };
        match t {
            Term::Atom(v) => Pat::Var(var(v)),
            Term::Medv(v) => Pat::MedvVar(var(v)),
            Term::Zero | Term::One | Term::Inf => Pat::Const(t.clone()),
            Term::Unary(op, c) => Pat::Un(*op, Box::new(Pat::compile(c, vars))),
            Term::Binary(op, l, r) => {
                Pat::Bin(*op, Box::new(Pat::compile(l, vars)), Box::new(Pat::compile(r, vars)))
            }
            Term::MedvOp(op, l, r) => {
                Pat::MBin(*op, Box::new(Pat::compile(l, vars)), Box::new(Pat::compile(r, vars)))
            }
        }
    }

    pub fn vars(&self, out: &mut Vec<usize>) {
        match self {
            Pat::Var(v) | Pat::MedvVar(v) => out.push(*v),
            Pat::Const(_) => {}
            Pat::Un(_, c) => c.vars(out),
            Pat::Bin(_, l, r) | Pat::MBin(_, l, r) => {
                l.vars(out);
                r.vars(out);
            }
        }
    }

    fn show(&self, names: &[String], f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pat::Var(v) => f.write_str(&names[*v]),
            Pat::MedvVar(v) => write!(f, "medv({})", names[*v]),
            Pat::Const(t) => write!(f, "{t}"),
            Pat::Un(op, c) => {
                write!(f, "{}(", op.name())?;
                c.show(names, f)?;
                f.write_str(")")
            }
            Pat::Bin(op, l, r) => {
                write!(f, "{}(", op.name())?;
                l.show(names, f)?;
                f.write_str(",")?;
                r.show(names, f)?;
                f.write_str(")")
            }
            Pat::MBin(op, l, r) => {
                write!(f, "{}(", op.name())?;
                l.show(names, f)?;
                f.write_str(",")?;
                r.show(names, f)?;
                f.write_str(")")
            }
        }
    }
}

/// A literal of a Horn rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Lit {
    Le(Kind, Pat, Pat),
    Prop(Flag, Pat),
    LeM(Pat, Pat),
}

impl Lit {
    /// The kind at which the literal's terms are normalized.
    pub fn kind(&self) -> Kind {
        match self {
            Lit::Le(k, ..) => *k,
            Lit::Prop(..) | Lit::LeM(..) => Kind::SW,
        }
    }

    pub fn pats(&self) -> Vec<&Pat> {
        match self {
            Lit::Le(_, a, b) | Lit::LeM(a, b) => vec![a, b],
            Lit::Prop(_, t) => vec![t],
        }
    }

    pub fn vars(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for p in self.pats() {
            p.vars(&mut out);
        }
        out
    }

    fn parse(src: &str, vars: &mut Vec<String>) -> Lit {
        let w: Vec<&str> = src.split_whitespace().collect();
        let pat = |s: &str, vars: &mut Vec<String>| Pat::compile(&parse_term(s).expect("rule template"), vars);
        match w[..] {
            ["le", k, a, b] => {
                let k: Kind = k.parse().expect("rule kind");
                let a = pat(a, vars);
                Lit::Le(k, a, pat(b, vars))
            }
            ["prop", f, t] => Lit::Prop(f.parse().expect("rule flag"), pat(t, vars)),
            ["leM", a, b] => {
                let a = pat(a, vars);
                Lit::LeM(a, pat(b, vars))
            }
            _ => panic!("bad rule literal `{src}`"),
        }
    }
}

/// A Horn rule `premises ⟹ conclusion`, universally quantified over its variables.
#[derive(Debug, Clone)]
pub struct Rule {
    pub name: String,
    pub family: &'static str,
    pub law: &'static str,
    pub premises: Vec<Lit>,
    pub conclusion: Lit,
    pub vars: Vec<String>,
}

impl Rule {
    fn new(name: String, family: &'static str, law: &'static str, premises: &[&str], conclusion: &str) -> Rule {
        let mut vars = Vec::new();
        let premises: Vec<Lit> = premises.iter().map(|p| Lit::parse(p, &mut vars)).collect();
        let conclusion = Lit::parse(conclusion, &mut vars);
        Rule { name, family, law, premises, conclusion, vars }
    }

    pub fn is_axiom(&self) -> bool {
        self.premises.is_empty()
    }
}

struct ShowLit<'a>(&'a Lit, &'a [String]);

impl fmt::Display for ShowLit<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.1;
        match self.0 {
            Lit::Le(k, a, b) => {
                write!(f, "le {k} ")?;
                a.show(names, f)?;
                f.write_str(" ")?;
                b.show(names, f)
            }
            Lit::Prop(flag, t) => {
                write!(f, "prop {flag} ")?;
                t.show(names, f)
            }
            Lit::LeM(a, b) => {
                f.write_str("leM ")?;
                a.show(names, f)?;
                f.write_str(" ")?;
                b.show(names, f)
            }
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<6} ", self.name)?;
        let ps: Vec<String> = self.premises.iter().map(|p| ShowLit(p, &self.vars).to_string()).collect();
        if !ps.is_empty() {
            write!(f, "{} => ", ps.join(" & "))?;
        }
        write!(f, "{}  -- {}", ShowLit(&self.conclusion, &self.vars), self.law)
    }
}

/// Name of the contrapositive pseudo-rule.
pub const CONTRA: &str = "D19";
pub const CONTRA_LAW: &str = "a Horn rule read backwards: a false conclusion refutes the one unproved premise";

const LIFTED: [BinOp; 5] = [BinOp::Prod, BinOp::Coprod, BinOp::Meet, BinOp::Boxsum, BinOp::Sum];
const CLOSED_UNDER: [BinOp; 6] = [BinOp::Prod, BinOp::Coprod, BinOp::Boxsum, BinOp::Meet, BinOp::Sum, BinOp::Star];

fn catalog() -> Vec<Rule> {
    let mut rules = Vec::new();
    let mut fam = |family: &'static str, law: &'static str, premises: &[&str], conclusion: &str| {
        let n = rules.iter().filter(|r: &&Rule| r.family == family).count() + 1;
        rules.push(Rule::new(format!("{family}.{n}"), family, law, premises, conclusion));
    };

    for k in Kind::ALL {
        fam("D1", "each reducibility is a preorder", &[], &format!("le {k} x x"));
        fam("D1", "each reducibility is a preorder", &[&format!("le {k} x y"), &format!("le {k} y z")], &format!("le {k} x z"));
    }
    for (a, b) in term_core::KIND_EDGES {
        fam("D2", "a stronger reducibility implies a weaker one", &[&format!("le {a} x y")], &format!("le {b} x y"));
    }
    for (t, s) in [(Kind::TW, Kind::W), (Kind::STW, Kind::SW)] {
        let law = "total reducibility is reducibility to the completion";
        fam("D3", law, &[&format!("le {t} x y")], &format!("le {s} x comp(y)"));
        fam("D3", law, &[&format!("le {s} x comp(y)")], &format!("le {t} x y"));
    }
    let law = "parallelized reducibility is reducibility to the parallelization";
    fam("D4", law, &["le PW x y"], "le W x par(y)");
    fam("D4", law, &["le W x par(y)"], "le PW x y");
    fam("D4", law, &["le PTW x y"], "le W x par(comp(y))");
    fam("D4", law, &["le W x par(comp(y))"], "le PTW x y");
    for k in [Kind::W, Kind::SW] {
        fam("D5", "completion is monotone", &[&format!("le {k} x y")], &format!("le {k} comp(x) comp(y)"));
    }
    for k in [Kind::W, Kind::SW] {
        let law = "the algebraic operations are monotone";
        for op in LIFTED {
            let op = op.name();
            fam("D6", law, &[&format!("le {k} x y")], &format!("le {k} {op}(x,h) {op}(y,h)"));
            fam("D6", law, &[&format!("le {k} x y")], &format!("le {k} {op}(h,x) {op}(h,y)"));
        }
        for op in ["par", "fpar"] {
            fam("D6", law, &[&format!("le {k} x y")], &format!("le {k} {op}(x) {op}(y)"));
        }
    }
    fam("D6", "the compositional product is monotone", &["le W x y"], "le W star(x,h) star(y,h)");
    fam("D6", "the compositional product is monotone", &["le W x y"], "le W star(h,x) star(h,y)");

    let up = "coproduct is an upper bound";
    fam("D7", up, &[], "le SW x coprod(x,y)");
    fam("D7", up, &[], "le SW y coprod(x,y)");
    fam("D7", "coproduct is the supremum", &["le W x h", "le W y h"], "le W coprod(x,y) h");
    let low = "meet is a lower bound";
    fam("D7", low, &[], "le SW meet(x,y) x");
    fam("D7", low, &[], "le SW meet(x,y) y");
    fam("D7", "meet is the infimum", &["le W h x", "le W h y"], "le W h meet(x,y)");
    fam("D7", "box sum is an upper bound", &[], "le SW x boxsum(x,y)");
    fam("D7", "box sum is an upper bound", &[], "le SW y boxsum(x,y)");
    for k in [Kind::SW, Kind::STW] {
        fam("D7", "box sum is the strong supremum", &[&format!("le {k} x h"), &format!("le {k} y h")], &format!("le {k} boxsum(x,y) h"));
    }
    for k in [Kind::TW, Kind::STW] {
        fam("D7", "the meet of completions is the total infimum", &[&format!("le {k} h x"), &format!("le {k} h y")], &format!("le {k} h meet(comp(x),comp(y))"));
    }
    fam("D7", "infinity is the top element", &[], "le SW x INF");

    fam("D8", "total reductions to a complete problem are reductions", &["prop complete y", "le TW x y"], "le W x y");
    fam("D8", "total reductions to a complete problem are reductions", &["prop stronglyComplete y", "le STW x y"], "le SW x y");
    fam("D9", "reductions to a cylinder can be made strong", &["prop cylinder y", "le W x y"], "le SW x y");
    fam("D9", "reductions to a cylinder can be made strong", &["prop cylinder y", "le TW x y"], "le STW x y");

    for flag in ["complete", "stronglyComplete"] {
        let law = "completeness is preserved by the operations";
        for op in CLOSED_UNDER {
            let op = op.name();
            fam("D10", law, &[&format!("prop {flag} x"), &format!("prop {flag} y")], &format!("prop {flag} {op}(x,y)"));
        }
        fam("D10", law, &[&format!("prop {flag} x")], &format!("prop {flag} par(x)"));
        fam("D10", law, &[&format!("prop {flag} x")], &format!("prop {flag} fpar(x)"));
    }
    fam("D10", "strongly complete problems are complete", &["prop stronglyComplete x"], "prop complete x");
    fam("D10", "completions are strongly complete", &[], "prop stronglyComplete comp(x)");

    for flag in ["computable", "continuous", "limitComputable", "borel", "nonUniformlyComputable"] {
        fam("D11", "the class is closed downwards under total reducibility", &["le TW x y", &format!("prop {flag} y")], &format!("prop {flag} x"));
    }

    fam("D12", "the nowhere defined problem is the bottom degree", &[], "le SW 0 x");
    fam("D12", "the unit is total equivalent to the bottom", &[], "le TW 1 0");
    fam("D12", "totally below the unit means computable", &["prop computable x"], "le TW x 1");
    fam("D12", "totally below the unit means computable", &["le TW x 1"], "prop computable x");
    fam("D12", "the unit is below exactly the pointed problems", &["prop pointed x"], "le W 1 x");
    fam("D12", "the unit is below exactly the pointed problems", &["le W 1 x"], "prop pointed x");
    fam("D12", "completions are pointed", &[], "prop pointed comp(x)");

    let law = "order of the operations on complete problems";
    let sc = ["prop stronglyComplete x", "prop stronglyComplete y"];
    fam("D13", law, &sc, "le SW sum(x,y) meet(x,y)");
    fam("D13", law, &sc, "le SW meet(x,y) boxsum(x,y)");
    fam("D13", law, &sc, "le SW boxsum(x,y) coprod(x,y)");
    fam("D13", law, &sc, "le SW boxsum(x,y) prod(x,y)");
    fam("D13", law, &["prop complete x", "prop complete y"], "le W coprod(x,y) prod(x,y)");
    fam("D13", law, &["prop complete x"], "le W fpar(x) par(x)");

    fam("D14", "compositional implication is residual to the compositional product", &["le W cimp(g,f) h"], "le W f star(g,h)");
    fam("D14", "compositional implication is residual to the compositional product", &["le W f star(g,h)"], "le W cimp(g,f) h");
    fam("D14", "multiplicative implication is below any co-residual of the product", &["le W f prod(g,h)"], "le W mimp(g,f) h");
    fam("D14", "for pointed hypotheses multiplicative implication bounds the product", &["prop pointed g", "le W mimp(g,f) h"], "le W f star(g,h)");
    fam("D14", "for pointed hypotheses the implications are ordered", &["prop pointed g"], "le W cimp(g,f) mimp(g,f)");
    fam("D14", "multiplicative deduction", &["prop pointed g", "le W mimp(g,f) h"], "le W f prod(par(comp(g)),h)");
    fam("D14", "multiplicative deduction for parallelizable complete hypotheses", &["prop parallelizable g", "prop complete g", "le W mimp(g,f) h"], "le W f prod(g,h)");

    fam("D15", "completion of a compositional product", &[], "le SW comp(star(f,g)) star(comp(f),comp(g))");
    fam("D15", "implication between completions", &[], "le W cimp(comp(g),comp(f)) comp(cimp(g,f))");

    fam("D16", "completion of a strongly complete cylinder is a cylinder", &["prop stronglyComplete x", "prop cylinder x"], "prop cylinder comp(x)");
    fam("D16", "a cylindric completion comes from a strongly complete cylinder", &["prop cylinder comp(x)"], "prop stronglyComplete x");
    fam("D16", "a cylindric completion comes from a strongly complete cylinder", &["prop cylinder comp(x)"], "prop cylinder x");
    fam("D16", "multiplying by the unit keeps completeness", &["prop complete prod(1,x)"], "prop complete x");
    fam("D16", "multiplying by the unit keeps completeness", &["prop complete x"], "prop complete prod(1,x)");

    fam("D17", "constant problems embed Medvedev reducibility", &["leM medv(a) medv(b)"], "le W medv(a) medv(b)");
    fam("D17", "constant problems embed Medvedev reducibility", &["le W medv(a) medv(b)"], "leM medv(a) medv(b)");
    fam("D17", "constant problems are complete", &[], "prop complete medv(a)");
    fam("D17", "constant problems are parallelizable", &[], "prop parallelizable medv(a)");

    let law = "parallelized total degrees form a Brouwer algebra";
    fam("D18", law, &["le PTW mimp(par(comp(g)),par(comp(f))) h"], "le PTW f coprod(g,h)");
    fam("D18", law, &["le PTW f coprod(g,h)"], "le PTW mimp(par(comp(g)),par(comp(f))) h");

    fam("D20", "completion and parallelization are extensive", &[], "le SW x comp(x)");
    fam("D20", "completion and parallelization are extensive", &[], "le SW x par(x)");
    fam("D20", "completion and parallelization are extensive", &[], "le SW x fpar(x)");
    fam("D20", "finite parallelization is below parallelization", &[], "le SW fpar(x) par(x)");

    fam("D21", "with natural number output the compositional product is bounded by a product", &["prop natOutput h"], "le W star(g,h) prod(par(comp(g)),h)");

    rules
}

/// The inference rules in firing order.
pub fn inference_rules() -> &'static [Rule] {
    static RULES: OnceLock<Vec<Rule>> = OnceLock::new();
    RULES.get_or_init(|| {
        let rules = catalog();
        for r in &rules {
            assert!(r.vars.len() <= MAX_VARS, "rule {} has too many variables", r.name);
        }
        rules
    })
}

pub const MAX_VARS: usize = 6;

/// Rules of a family (`"D3"`) or a single rule (`"D3.2"`).
pub fn lookup(name: &str) -> Vec<&'static Rule> {
    inference_rules().iter().filter(|r| r.family == name || r.name == name).collect()
}

pub fn families() -> Vec<&'static str> {
    let mut f: Vec<&str> = inference_rules().iter().map(|r| r.family).collect();
    f.push(CONTRA);
    f.sort_by_key(|s| s[1..].parse::<u32>().unwrap_or(0));
    f.dedup();
    f
}
