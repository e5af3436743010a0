use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum UnOp {
    /// completion
    Comp,
    /// parallelization
    Par,
    /// finite parallelization
    Fpar,
    /// negation `g → ∞`
    Neg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BinOp {
    Prod,
    Coprod,
    Meet,
    Boxsum,
    Sum,
    Star,
    /// compositional implication, hypothesis first
    Cimp,
    /// multiplicative implication, hypothesis first
    Mimp,
}

/// Operations on Medvedev mass problems; mapped into problems by `medv`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MOp {
    Otimes,
    Oplus,
    MimpM,
}

impl UnOp {
    pub const ALL: [UnOp; 4] = [UnOp::Comp, UnOp::Par, UnOp::Fpar, UnOp::Neg];

    pub fn name(self) -> &'static str {
        match self {
            UnOp::Comp => "comp",
            UnOp::Par => "par",
            UnOp::Fpar => "fpar",
            UnOp::Neg => "neg",
        }
    }
}

impl BinOp {
    pub const ALL: [BinOp; 8] = [
        BinOp::Prod,
        BinOp::Coprod,
        BinOp::Meet,
        BinOp::Boxsum,
        BinOp::Sum,
        BinOp::Star,
        BinOp::Cimp,
        BinOp::Mimp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BinOp::Prod => "prod",
            BinOp::Coprod => "coprod",
            BinOp::Meet => "meet",
            BinOp::Boxsum => "boxsum",
            BinOp::Sum => "sum",
            BinOp::Star => "star",
            BinOp::Cimp => "cimp",
            BinOp::Mimp => "mimp",
        }
    }
}

impl MOp {
    pub const ALL: [MOp; 3] = [MOp::Otimes, MOp::Oplus, MOp::MimpM];

    pub fn name(self) -> &'static str {
        match self {
            MOp::Otimes => "otimes",
            MOp::Oplus => "oplus",
            MOp::MimpM => "mimpM",
        }
    }
}

/// A degree expression.
///
/// The derived `Ord` is the fixed total term order: constructor rank in the
/// order the variants are declared, then names, then children left to right.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Zero,
    One,
    Inf,
    Atom(String),
    Medv(String),
    Unary(UnOp, Box<Term>),
    Binary(BinOp, Box<Term>, Box<Term>),
    MedvOp(MOp, Box<Term>, Box<Term>),
}

impl Term {
    pub fn atom(name: impl Into<String>) -> Term {
        Term::Atom(name.into())
    }

    pub fn medv(name: impl Into<String>) -> Term {
        Term::Medv(name.into())
    }

    pub fn unary(op: UnOp, t: Term) -> Term {
        Term::Unary(op, Box::new(t))
    }

    pub fn binary(op: BinOp, l: Term, r: Term) -> Term {
        Term::Binary(op, Box::new(l), Box::new(r))
    }

    pub fn medv_op(op: MOp, l: Term, r: Term) -> Term {
        Term::MedvOp(op, Box::new(l), Box::new(r))
    }

    pub fn comp(t: Term) -> Term {
        Term::unary(UnOp::Comp, t)
    }

    pub fn par(t: Term) -> Term {
        Term::unary(UnOp::Par, t)
    }

    pub fn fpar(t: Term) -> Term {
        Term::unary(UnOp::Fpar, t)
    }

    pub fn neg(t: Term) -> Term {
        Term::unary(UnOp::Neg, t)
    }

    pub fn prod(l: Term, r: Term) -> Term {
        Term::binary(BinOp::Prod, l, r)
    }

    pub fn coprod(l: Term, r: Term) -> Term {
        Term::binary(BinOp::Coprod, l, r)
    }

    pub fn meet(l: Term, r: Term) -> Term {
        Term::binary(BinOp::Meet, l, r)
    }

    pub fn boxsum(l: Term, r: Term) -> Term {
        Term::binary(BinOp::Boxsum, l, r)
    }

    pub fn sum(l: Term, r: Term) -> Term {
        Term::binary(BinOp::Sum, l, r)
    }

    pub fn star(l: Term, r: Term) -> Term {
        Term::binary(BinOp::Star, l, r)
    }

    pub fn cimp(hyp: Term, concl: Term) -> Term {
        Term::binary(BinOp::Cimp, hyp, concl)
    }

    pub fn mimp(hyp: Term, concl: Term) -> Term {
        Term::binary(BinOp::Mimp, hyp, concl)
    }

    pub fn is_inf(&self) -> bool {
        matches!(self, Term::Inf)
    }

    pub fn is_unary(&self, op: UnOp) -> bool {
        matches!(self, Term::Unary(o, _) if *o == op)
    }

    pub fn children(&self) -> Vec<&Term> {
        match self {
            Term::Unary(_, c) => vec![c],
            Term::Binary(_, l, r) | Term::MedvOp(_, l, r) => vec![l, r],
            _ => vec![],
        }
    }

    pub fn size(&self) -> usize {
        1 + self.children().iter().map(|c| c.size()).sum::<usize>()
    }

    pub fn depth(&self) -> usize {
        1 + self.children().iter().map(|c| c.depth()).max().unwrap_or(0)
    }

    /// Names of all `Atom` leaves.
    pub fn atoms(&self) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        if let Term::Atom(n) = self {
            out.insert(n.as_str());
        }
        for c in self.children() {
            c.collect_atoms(out);
        }
    }

    /// Every subterm, including `self`, children before parents.
    pub fn subterms(&self) -> Vec<&Term> {
        let mut out = Vec::new();
        self.collect_subterms(&mut out);
        out
    }

    fn collect_subterms<'a>(&'a self, out: &mut Vec<&'a Term>) {
        for c in self.children() {
            c.collect_subterms(out);
        }
        out.push(self);
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Zero => f.write_str("0"),
            Term::One => f.write_str("1"),
            Term::Inf => f.write_str("INF"),
            Term::Atom(n) => f.write_str(n),
            Term::Medv(n) => write!(f, "medv({n})"),
            Term::Unary(op, c) => write!(f, "{}({c})", op.name()),
            Term::Binary(op, l, r) => write!(f, "{}({l},{r})", op.name()),
            Term::MedvOp(op, l, r) => write!(f, "{}({l},{r})", op.name()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printing() {
        assert_eq!(Term::neg(Term::Inf).to_string(), "neg(INF)");
        assert_eq!(Term::coprod(Term::atom("f"), Term::atom("g")).to_string(), "coprod(f,g)");
        assert_eq!(Term::medv("A").to_string(), "medv(A)");
    }

    #[test]
    fn order_by_rank_then_name() {
        assert!(Term::Zero < Term::atom("a"));
        assert!(Term::atom("a") < Term::atom("b"));
        assert!(Term::atom("z") < Term::comp(Term::Zero));
        assert!(Term::comp(Term::atom("a")) < Term::par(Term::atom("a")));
    }

    #[test]
    fn subterms_children_first() {
        let t = Term::prod(Term::atom("a"), Term::comp(Term::atom("b")));
        let s: Vec<String> = t.subterms().iter().map(|x| x.to_string()).collect();
        assert_eq!(s, ["a", "b", "comp(b)", "prod(a,comp(b))"]);
    }
}
