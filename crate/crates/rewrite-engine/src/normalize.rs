use term_core::{Kind, Term};

use crate::guards::{self, Facts};
use crate::rules::{respects, rule_set, Guard, Rule};

pub const DEFAULT_STEP_BOUND: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RewriteError {
    #[error("no normal form within {bound} rewrite steps (last term: {last})")]
    StepBound { bound: usize, last: Term },
}

type Binding<'a> = Vec<(&'a str, &'a Term)>;

fn matches<'a>(pat: &'a Term, t: &'a Term, b: &mut Binding<'a>) -> bool {
    match (pat, t) {
        (Term::Atom(v), _) => {
            if let Some((_, bound)) = b.iter().find(|(n, _)| n == v) {
                return *bound == t;
            }
            b.push((v.as_str(), t));
            true
        }
        (Term::Zero, Term::Zero) | (Term::One, Term::One) | (Term::Inf, Term::Inf) => true,
        (Term::Unary(p, pc), Term::Unary(o, c)) => p == o && matches(pc, c, b),
        (Term::Binary(p, pl, pr), Term::Binary(o, l, r)) => {
            p == o && matches(pl, l, b) && matches(pr, r, b)
        }
        (Term::MedvOp(p, pl, pr), Term::MedvOp(o, l, r)) => {
            p == o && matches(pl, l, b) && matches(pr, r, b)
        }
        _ => false,
    }
}

fn instantiate(t: &Term, b: &Binding<'_>) -> Term {
    match t {
        Term::Atom(v) => b.iter().find(|(n, _)| n == v).map(|(_, x)| (*x).clone()).expect("bound variable"),
        Term::Unary(op, c) => Term::unary(*op, instantiate(c, b)),
        Term::Binary(op, l, r) => Term::binary(*op, instantiate(l, b), instantiate(r, b)),
        Term::MedvOp(op, l, r) => Term::medv_op(*op, instantiate(l, b), instantiate(r, b)),
        other => other.clone(),
    }
}

fn guard_holds<F: Facts + ?Sized>(g: Guard, b: &Binding<'_>, kb: &F) -> bool {
    let t = b.iter().find(|(n, _)| *n == g.var()).map(|(_, t)| *t).expect("guard variable bound");
    match g {
        Guard::Pointed(_) => guards::pointed(kb, t),
        Guard::Complete(_) => guards::complete(kb, t),
        Guard::StronglyComplete(_) => guards::strongly_complete(kb, t),
        Guard::Parallelizable(_) => guards::parallelizable(kb, t),
        Guard::NotZero(_) => guards::not_zero(kb, t),
        Guard::NotInf(_) => guards::not_inf(kb, t),
        Guard::Closed(_) => {
            !matches!(t, Term::Binary(term_core::BinOp::Coprod, _, _)) && guards::complete(kb, t)
        }
        Guard::MedvImage(_) => guards::medvedev_image(t),
    }
}

/// Try `rule` at the root of `t`.
pub fn apply_rule<F: Facts + ?Sized>(rule: &Rule, t: &Term, kb: &F) -> Option<Term> {
    let mut b = Vec::new();
    if !matches(&rule.lhs, t, &mut b) {
        return None;
    }
    if !rule.guards.iter().all(|g| guard_holds(*g, &b, kb)) {
        return None;
    }
    Some(instantiate(&rule.rhs, &b))
}

fn usable(rule: &Rule, kind: Kind, context_ok: bool) -> bool {
    rule.kind.implies(kind) && (context_ok || !rule.context_sensitive())
}

/// Normal form of `t` at `kind`, innermost first, rules tried in catalog order.
pub fn normalize<F: Facts + ?Sized>(t: &Term, kind: Kind, kb: &F) -> Result<Term, RewriteError> {
    normalize_bounded(t, kind, kb, DEFAULT_STEP_BOUND)
}

pub fn normalize_bounded<F: Facts + ?Sized>(
    t: &Term,
    kind: Kind,
    kb: &F,
    bound: usize,
) -> Result<Term, RewriteError> {
    let mut n = Normalizer { kind, kb, steps: 0, bound };
    n.run(t, true)
}

/// Trace of an innermost normalization: each applied rule with the term after it.
pub fn normalize_traced<F: Facts + ?Sized>(
    t: &Term,
    kind: Kind,
    kb: &F,
) -> Result<Vec<(&'static str, Term)>, RewriteError> {
    let mut steps = Vec::new();
    let mut cur = t.clone();
    while let Some((path, rule)) = redexes(&cur, kind, kb).into_iter().max_by_key(|(p, _)| p.len()) {
        cur = rewrite_at(&cur, &path, rule, kb);
        steps.push((rule.name, cur.clone()));
        if steps.len() > DEFAULT_STEP_BOUND {
            return Err(RewriteError::StepBound { bound: DEFAULT_STEP_BOUND, last: cur });
        }
    }
    Ok(steps)
}

struct Normalizer<'a, F: ?Sized> {
    kind: Kind,
    kb: &'a F,
    steps: usize,
    bound: usize,
}

impl<F: Facts + ?Sized> Normalizer<'_, F> {
    fn run(&mut self, t: &Term, context_ok: bool) -> Result<Term, RewriteError> {
        let inner = context_ok && respects(self.kind, t);
        let mut cur = match t {
            Term::Unary(op, c) => Term::unary(*op, self.run(c, inner)?),
            Term::Binary(op, l, r) => Term::binary(*op, self.run(l, inner)?, self.run(r, inner)?),
            Term::MedvOp(op, l, r) => Term::medv_op(*op, self.run(l, inner)?, self.run(r, inner)?),
            other => other.clone(),
        };
        loop {
            let next = rule_set()
                .iter()
                .filter(|r| usable(r, self.kind, context_ok))
                .find_map(|r| apply_rule(r, &cur, self.kb));
            let Some(next) = next else { return Ok(cur) };
            self.steps += 1;
            if self.steps > self.bound {
                return Err(RewriteError::StepBound { bound: self.bound, last: next });
            }
            // the contractum's children may contain fresh redexes
            cur = match next {
                Term::Unary(..) | Term::Binary(..) | Term::MedvOp(..) => {
                    let inner = context_ok && respects(self.kind, &next);
                    match &next {
                        Term::Unary(op, c) => Term::unary(*op, self.run(c, inner)?),
                        Term::Binary(op, l, r) => {
                            Term::binary(*op, self.run(l, inner)?, self.run(r, inner)?)
                        }
                        Term::MedvOp(op, l, r) => {
                            Term::medv_op(*op, self.run(l, inner)?, self.run(r, inner)?)
                        }
                        _ => unreachable!(),
                    }
                }
                leaf => leaf,
            };
        }
    }
}

/// Syntactic equality of normal forms. `false` only means "not shown equal".
pub fn equivalent<F: Facts + ?Sized>(a: &Term, b: &Term, kind: Kind, kb: &F) -> Result<bool, RewriteError> {
    Ok(normalize(a, kind, kb)? == normalize(b, kind, kb)?)
}

/// Every applicable (position, rule) pair; positions are child-index paths.
pub fn redexes<F: Facts + ?Sized>(t: &Term, kind: Kind, kb: &F) -> Vec<(Vec<usize>, &'static Rule)> {
    let mut out = Vec::new();
    collect(t, kind, kb, true, &mut Vec::new(), &mut out);
    out
}

fn collect<F: Facts + ?Sized>(
    t: &Term,
    kind: Kind,
    kb: &F,
    context_ok: bool,
    path: &mut Vec<usize>,
    out: &mut Vec<(Vec<usize>, &'static Rule)>,
) {
    for r in rule_set().iter().filter(|r| usable(r, kind, context_ok)) {
        if apply_rule(r, t, kb).is_some() {
            out.push((path.clone(), r));
        }
    }
    let inner = context_ok && respects(kind, t);
    for (i, c) in t.children().into_iter().enumerate() {
        path.push(i);
        collect(c, kind, kb, inner, path, out);
        path.pop();
    }
}

/// Apply `rule` at `path`. Panics if it does not match there.
pub fn rewrite_at<F: Facts + ?Sized>(t: &Term, path: &[usize], rule: &Rule, kb: &F) -> Term {
    let Some((&i, rest)) = path.split_first() else {
        return apply_rule(rule, t, kb).expect("rule matches at path");
    };
    match t {
        Term::Unary(op, c) => Term::unary(*op, rewrite_at(c, rest, rule, kb)),
        Term::Binary(op, l, r) => {
            if i == 0 {
                Term::binary(*op, rewrite_at(l, rest, rule, kb), (**r).clone())
            } else {
                Term::binary(*op, (**l).clone(), rewrite_at(r, rest, rule, kb))
            }
        }
        Term::MedvOp(op, l, r) => {
            if i == 0 {
                Term::medv_op(*op, rewrite_at(l, rest, rule, kb), (**r).clone())
            } else {
                Term::medv_op(*op, (**l).clone(), rewrite_at(r, rest, rule, kb))
            }
        }
        _ => panic!("path leaves the term"),
    }
}
