use term_core::{BinOp, Flag, Kind, Term, Tri, UnOp};

/// Read access to established facts, used to discharge side conditions.
///
/// Implementations answer from stored facts only; `Unknown` blocks a rule.
pub trait Facts {
    fn flag(&self, flag: Flag, t: &Term) -> Tri;
    fn le(&self, kind: Kind, lhs: &Term, rhs: &Term) -> Tri;
}

/// A fact base that knows nothing.
#[derive(Debug, Clone, Copy, Default)]
pub struct NoFacts;

impl Facts for NoFacts {
    fn flag(&self, _: Flag, _: &Term) -> Tri {
        Tri::Unknown
    }

    fn le(&self, _: Kind, _: &Term, _: &Term) -> Tri {
        Tri::Unknown
    }
}

impl<F: Facts + ?Sized> Facts for &F {
    fn flag(&self, flag: Flag, t: &Term) -> Tri {
        (**self).flag(flag, t)
    }

    fn le(&self, kind: Kind, lhs: &Term, rhs: &Term) -> Tri {
        (**self).le(kind, lhs, rhs)
    }
}

/// Does the term denote a constant problem `c_A` built from mass problems?
pub fn medvedev_image(t: &Term) -> bool {
    match t {
        Term::Medv(_) => true,
        Term::MedvOp(_, l, r) => medvedev_image(l) && medvedev_image(r),
        Term::Binary(BinOp::Meet | BinOp::Prod | BinOp::Star | BinOp::Cimp | BinOp::Mimp, l, r) => {
            medvedev_image(l) && medvedev_image(r)
        }
        _ => false,
    }
}

/// `f` is complete: a fact, or structurally (completions, constant problems
/// `c_A`, and closure of completeness under the algebraic operations).
pub fn complete<F: Facts + ?Sized>(kb: &F, t: &Term) -> bool {
    if strongly_complete(kb, t) || kb.flag(Flag::Complete, t).is_true() || medvedev_image(t) {
        return true;
    }
    match t {
        Term::Unary(UnOp::Par | UnOp::Fpar, c) => complete(kb, c),
        Term::Binary(
            BinOp::Prod | BinOp::Coprod | BinOp::Boxsum | BinOp::Meet | BinOp::Sum | BinOp::Star,
            l,
            r,
        ) => complete(kb, l) && complete(kb, r),
        _ => false,
    }
}

/// `f` is strongly complete: a fact, or structurally.
pub fn strongly_complete<F: Facts + ?Sized>(kb: &F, t: &Term) -> bool {
    if kb.flag(Flag::StronglyComplete, t).is_true() {
        return true;
    }
    match t {
        Term::Inf | Term::Unary(UnOp::Comp, _) => true,
        Term::Unary(UnOp::Par | UnOp::Fpar, c) => strongly_complete(kb, c),
        Term::Binary(
            BinOp::Prod | BinOp::Coprod | BinOp::Boxsum | BinOp::Meet | BinOp::Sum | BinOp::Star,
            l,
            r,
        ) => strongly_complete(kb, l) && strongly_complete(kb, r),
        _ => false,
    }
}

/// `1 ≤W f`: a fact, or `f` is a completion, `1` or `∞`.
pub fn pointed<F: Facts + ?Sized>(kb: &F, t: &Term) -> bool {
    matches!(t, Term::One | Term::Inf | Term::Unary(UnOp::Comp, _))
        || kb.flag(Flag::Pointed, t).is_true()
        || kb.le(Kind::W, &Term::One, t).is_true()
}

pub fn parallelizable<F: Facts + ?Sized>(kb: &F, t: &Term) -> bool {
    medvedev_image(t) || kb.flag(Flag::Parallelizable, t).is_true()
}

/// `f ≢W 0`. Since `0` is the bottom degree this is `f ≰W 0`.
pub fn not_zero<F: Facts + ?Sized>(kb: &F, t: &Term) -> bool {
    pointed(kb, t) || kb.le(Kind::W, t, &Term::Zero).is_false()
}

/// `f ≢W ∞`, i.e. `∞ ≰W f`. Operations on genuine problems stay problems.
pub fn not_inf<F: Facts + ?Sized>(kb: &F, t: &Term) -> bool {
    if kb.le(Kind::W, &Term::Inf, t).is_false() {
        return true;
    }
    match t {
        Term::Zero | Term::One => true,
        Term::Unary(UnOp::Comp | UnOp::Par | UnOp::Fpar, c) => not_inf(kb, c),
        Term::Unary(UnOp::Neg, c) => c.is_inf(),
        Term::Binary(BinOp::Meet | BinOp::Sum, l, r) => not_inf(kb, l) || not_inf(kb, r),
        Term::Binary(BinOp::Prod | BinOp::Coprod | BinOp::Boxsum | BinOp::Star, l, r) => {
            not_inf(kb, l) && not_inf(kb, r)
        }
        _ => false,
    }
}
