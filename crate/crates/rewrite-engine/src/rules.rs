use std::collections::BTreeSet;
use std::sync::OnceLock;

use term_core::{parse_term, BinOp, Kind, Term};

/// Side conditions on pattern variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Guard {
    Pointed(&'static str),
    Complete(&'static str),
    StronglyComplete(&'static str),
    Parallelizable(&'static str),
    /// `f ≢W 0`
    NotZero(&'static str),
    /// `f ≢W ∞`
    NotInf(&'static str),
    /// a complete term that is not itself a coproduct
    Closed(&'static str),
    /// the variable is bound to a constant problem `c_A`
    MedvImage(&'static str),
}

impl Guard {
    pub fn var(self) -> &'static str {
        match self {
            Guard::Pointed(v)
            | Guard::Complete(v)
            | Guard::StronglyComplete(v)
            | Guard::Parallelizable(v)
            | Guard::NotZero(v)
            | Guard::NotInf(v)
            | Guard::Closed(v)
            | Guard::MedvImage(v) => v,
        }
    }

    fn describe(self) -> String {
        match self {
            Guard::Pointed(v) => format!("pointed({v})"),
            Guard::Complete(v) => format!("complete({v})"),
            Guard::StronglyComplete(v) => format!("stronglyComplete({v})"),
            Guard::Parallelizable(v) => format!("parallelizable({v})"),
            Guard::NotZero(v) => format!("{v} ≢W 0"),
            Guard::NotInf(v) => format!("{v} ≢W INF"),
            Guard::Closed(v) => format!("complete non-coproduct {v}"),
            Guard::MedvImage(v) => format!("{v} = c_A"),
        }
    }
}

/// An oriented equivalence `lhs ≡ rhs` valid at `kind`.
///
/// Pattern variables are the atoms of `lhs`; `0`, `1` and `INF` match literally.
#[derive(Debug, Clone)]
pub struct Rule {
    pub name: &'static str,
    pub family: &'static str,
    pub kind: Kind,
    pub lhs: Term,
    pub rhs: Term,
    pub guards: Vec<Guard>,
    pub law: &'static str,
}

impl Rule {
    pub fn variables(t: &Term) -> BTreeSet<&str> {
        t.atoms()
    }

    /// Every variable of the right side and of the guards is bound by the left side.
    pub fn is_well_formed(&self) -> bool {
        let l = Rule::variables(&self.lhs);
        Rule::variables(&self.rhs).is_subset(&l) && self.guards.iter().all(|g| l.contains(g.var()))
    }

    /// Tags other than SW and W only hold under contexts that respect them.
    pub fn context_sensitive(&self) -> bool {
        !matches!(self.kind, Kind::SW | Kind::W)
    }

    pub fn describe(&self) -> String {
        let mut s = format!("{:<5} [{}] {} => {}", self.name, self.kind, self.lhs, self.rhs);
        if !self.guards.is_empty() {
            let g: Vec<String> = self.guards.iter().map(|g| g.describe()).collect();
            s.push_str(&format!("  if {}", g.join(", ")));
        }
        s.push_str(&format!("  -- {}", self.law));
        s
    }
}

struct RuleDef {
    name: &'static str,
    family: &'static str,
    kind: Kind,
    lhs: &'static str,
    rhs: &'static str,
    guards: &'static [Guard],
    law: &'static str,
}

use Guard::*;
use Kind::{STW, SW, TW, W};

const INF_LAW: &str = "∞ is attached as a top element: f⊓∞=f, f⊔∞=f×∞=∞, f+∞=f";

#[rustfmt::skip]
const RULE_DEFS: &[RuleDef] = &[
    RuleDef { name: "R1", family: "R1", kind: SW, lhs: "comp(comp(f))", rhs: "comp(f)", guards: &[],
        law: "completion is a closure operator" },
    RuleDef { name: "R2", family: "R2", kind: SW, lhs: "par(par(f))", rhs: "par(f)", guards: &[],
        law: "parallelization is a closure operator" },
    RuleDef { name: "R2p", family: "R2", kind: W, lhs: "par(f)", rhs: "f", guards: &[Parallelizable("f")],
        law: "a parallelizable f satisfies f ≡W par(f)" },
    RuleDef { name: "R3", family: "R3", kind: W, lhs: "par(comp(par(comp(f))))", rhs: "par(comp(f))", guards: &[],
        law: "parallelized completion is a closure operator" },
    RuleDef { name: "R4", family: "R4", kind: SW, lhs: "fpar(fpar(f))", rhs: "fpar(f)", guards: &[Pointed("f")],
        law: "f** ≡SW f* for pointed f" },
    RuleDef { name: "R5", family: "R5", kind: W, lhs: "comp(coprod(f,g))", rhs: "coprod(comp(f),comp(g))", guards: &[],
        law: "completion commutes with ⊔ up to ≡W" },
    RuleDef { name: "R6", family: "R6", kind: SW, lhs: "comp(boxsum(f,g))", rhs: "boxsum(comp(f),comp(g))", guards: &[],
        law: "completion commutes with ⊞ up to ≡SW" },
    RuleDef { name: "R7", family: "R7", kind: SW, lhs: "comp(sum(f,g))", rhs: "sum(comp(f),comp(g))", guards: &[],
        law: "completion commutes with + up to ≡SW" },
    RuleDef { name: "R8", family: "R8", kind: SW, lhs: "par(prod(f,g))", rhs: "prod(par(f),par(g))", guards: &[],
        law: "parallelization commutes with × up to ≡SW" },
    RuleDef { name: "R9", family: "R9", kind: W, lhs: "prod(par(comp(f)),par(comp(g)))", rhs: "par(comp(coprod(f,g)))", guards: &[],
        law: "on parallelized completions × and ⊔ agree up to ≡W" },
    RuleDef { name: "R10a", family: "R10", kind: SW, lhs: "meet(f,INF)", rhs: "f", guards: &[], law: INF_LAW },
    RuleDef { name: "R10b", family: "R10", kind: SW, lhs: "meet(INF,f)", rhs: "f", guards: &[], law: INF_LAW },
    RuleDef { name: "R10c", family: "R10", kind: SW, lhs: "coprod(f,INF)", rhs: "INF", guards: &[], law: INF_LAW },
    RuleDef { name: "R10d", family: "R10", kind: SW, lhs: "coprod(INF,f)", rhs: "INF", guards: &[], law: INF_LAW },
    RuleDef { name: "R10e", family: "R10", kind: SW, lhs: "prod(f,INF)", rhs: "INF", guards: &[], law: INF_LAW },
    RuleDef { name: "R10f", family: "R10", kind: SW, lhs: "prod(INF,f)", rhs: "INF", guards: &[], law: INF_LAW },
    RuleDef { name: "R10g", family: "R10", kind: SW, lhs: "sum(f,INF)", rhs: "f", guards: &[], law: INF_LAW },
    RuleDef { name: "R10h", family: "R10", kind: SW, lhs: "sum(INF,f)", rhs: "f", guards: &[], law: INF_LAW },
    RuleDef { name: "R11a", family: "R11", kind: SW, lhs: "comp(INF)", rhs: "INF", guards: &[],
        law: "closures of ∞ are ∞" },
    RuleDef { name: "R11b", family: "R11", kind: SW, lhs: "par(INF)", rhs: "INF", guards: &[],
        law: "closures of ∞ are ∞" },
    RuleDef { name: "R11c", family: "R11", kind: SW, lhs: "fpar(INF)", rhs: "INF", guards: &[],
        law: "closures of ∞ are ∞" },
    RuleDef { name: "R12a", family: "R12", kind: SW, lhs: "star(f,INF)", rhs: "INF", guards: &[],
        law: "f⋆∞ = ∞⋆f = ∞" },
    RuleDef { name: "R12b", family: "R12", kind: SW, lhs: "star(INF,f)", rhs: "INF", guards: &[],
        law: "f⋆∞ = ∞⋆f = ∞" },
    RuleDef { name: "R13a", family: "R13", kind: W, lhs: "cimp(g,0)", rhs: "0", guards: &[],
        law: "(g→0) = 0" },
    RuleDef { name: "R13b", family: "R13", kind: W, lhs: "mimp(g,0)", rhs: "0", guards: &[],
        law: "(g↠0) = 0" },
    RuleDef { name: "R13c", family: "R13", kind: W, lhs: "cimp(0,f)", rhs: "INF", guards: &[NotZero("f")],
        law: "(0→f) = ∞ for f ≢W 0" },
    RuleDef { name: "R13d", family: "R13", kind: W, lhs: "mimp(0,f)", rhs: "INF", guards: &[NotZero("f")],
        law: "(0↠f) = ∞ for f ≢W 0" },
    RuleDef { name: "R13e", family: "R13", kind: W, lhs: "cimp(INF,f)", rhs: "0", guards: &[],
        law: "(∞→f) = 0" },
    RuleDef { name: "R13f", family: "R13", kind: W, lhs: "mimp(INF,f)", rhs: "0", guards: &[],
        law: "(∞↠f) = 0" },
    RuleDef { name: "R13g", family: "R13", kind: W, lhs: "cimp(g,INF)", rhs: "INF", guards: &[NotInf("g")],
        law: "(g→∞) = ∞ for g ≠ ∞" },
    RuleDef { name: "R13h", family: "R13", kind: W, lhs: "mimp(g,INF)", rhs: "INF", guards: &[NotInf("g")],
        law: "(g↠∞) = ∞ for g ≠ ∞" },
    RuleDef { name: "R14a", family: "R14", kind: W, lhs: "neg(f)", rhs: "INF", guards: &[NotInf("f")],
        law: "¬f = ∞ for f ≢W ∞" },
    RuleDef { name: "R14b", family: "R14", kind: W, lhs: "neg(INF)", rhs: "0", guards: &[],
        law: "¬∞ = 0" },
    RuleDef { name: "R15a", family: "R15", kind: W, lhs: "comp(f)", rhs: "f", guards: &[Complete("f")],
        law: "f complete means f ≡W comp(f)" },
    RuleDef { name: "R15b", family: "R15", kind: SW, lhs: "comp(f)", rhs: "f", guards: &[StronglyComplete("f")],
        law: "f strongly complete means f ≡SW comp(f)" },
    RuleDef { name: "R16a", family: "R16", kind: SW, lhs: "otimes(x,y)", rhs: "meet(x,y)", guards: &[MedvImage("x"), MedvImage("y")],
        law: "c_(A⊗B) ≡SW c_A ⊓ c_B" },
    RuleDef { name: "R16b", family: "R16", kind: SW, lhs: "oplus(x,y)", rhs: "prod(x,y)", guards: &[MedvImage("x"), MedvImage("y")],
        law: "c_(A⊕B) ≡SW c_A × c_B" },
    RuleDef { name: "R16c", family: "R16", kind: W, lhs: "star(x,y)", rhs: "prod(x,y)", guards: &[MedvImage("x"), MedvImage("y")],
        law: "c_A ⋆ c_B ≡W c_A × c_B" },
    RuleDef { name: "R16d", family: "R16", kind: W, lhs: "mimpM(x,y)", rhs: "mimp(x,y)", guards: &[MedvImage("x"), MedvImage("y")],
        law: "c_(B→A) ≡W (c_B ↠ c_A)" },
    RuleDef { name: "R16e", family: "R16", kind: W, lhs: "mimp(x,y)", rhs: "cimp(x,y)", guards: &[MedvImage("x"), MedvImage("y")],
        law: "(c_B ↠ c_A) ≡W (c_B → c_A)" },
    RuleDef { name: "R17a", family: "R17", kind: TW, lhs: "meet(F,coprod(G,H))", rhs: "coprod(meet(F,G),meet(F,H))",
        guards: &[Closed("F"), Closed("G"), Closed("H")],
        law: "the total Weihrauch lattice is distributive" },
    RuleDef { name: "R17b", family: "R17", kind: TW, lhs: "meet(coprod(F,G),coprod(F,H))", rhs: "coprod(F,meet(G,H))",
        guards: &[Closed("F"), Closed("G"), Closed("H")],
        law: "the total Weihrauch lattice is distributive" },
    RuleDef { name: "R18", family: "R18", kind: STW, lhs: "comp(f)", rhs: "f", guards: &[],
        law: "f ≡STW comp(f)" },
];

/// The full rule catalog in application priority order.
pub fn rule_set() -> &'static [Rule] {
    static RULES: OnceLock<Vec<Rule>> = OnceLock::new();
    RULES.get_or_init(|| {
        RULE_DEFS
            .iter()
            .map(|s| {
                let r = Rule {
                    name: s.name,
                    family: s.family,
                    kind: s.kind,
                    lhs: parse_term(s.lhs).expect("rule lhs parses"),
                    rhs: parse_term(s.rhs).expect("rule rhs parses"),
                    guards: s.guards.to_vec(),
                    law: s.law,
                };
                assert!(r.is_well_formed(), "rule {} binds too few variables", r.name);
                r
            })
            .collect()
    })
}

pub fn lookup(name: &str) -> Option<&'static Rule> {
    rule_set().iter().find(|r| r.name == name || r.family == name)
}

/// Operations whose result depends only on the `kind`-class of the argument.
///
/// Rules tagged above SW/W may only fire below such operations.
pub fn respects(kind: Kind, op: &Term) -> bool {
    use term_core::UnOp::*;
    match kind {
        Kind::SW | Kind::W => true,
        Kind::STW => matches!(
            op,
            Term::Unary(Comp | Neg, _) | Term::Binary(BinOp::Boxsum | BinOp::Sum, _, _)
        ),
        // parallelization and × also respect ≡PTW, but admitting them breaks
        // confluence with R9, so the parallel kinds use the total set
        Kind::TW | Kind::PW | Kind::PTW => matches!(
            op,
            Term::Unary(Comp | Neg, _) | Term::Binary(BinOp::Coprod | BinOp::Boxsum | BinOp::Sum, _, _)
        ),
    }
}
