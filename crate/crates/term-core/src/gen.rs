//! Random terms for property tests.

use crate::term::{BinOp, MOp, Term, UnOp};
use rand::Rng;

/// Shape knobs for [`random_term`].
#[derive(Debug, Clone)]
pub struct TermGen {
    pub atoms: Vec<String>,
    pub max_depth: usize,
    /// allow `medv` leaves and Medvedev operations
    pub medvedev: bool,
    /// allow the implications and negation
    pub implications: bool,
}

impl TermGen {
    pub fn new(atoms: &[&str], max_depth: usize) -> Self {
        TermGen {
            atoms: atoms.iter().map(|s| s.to_string()).collect(),
            max_depth,
            medvedev: true,
            implications: true,
        }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Term {
        random_term(self, rng, self.max_depth)
    }
}

pub fn random_term<R: Rng + ?Sized>(g: &TermGen, rng: &mut R, depth: usize) -> Term {
    if depth <= 1 || rng.gen_bool(0.3) {
        return leaf(g, rng);
    }
    let d = depth - 1;
    match rng.gen_range(0..10) {
        0..=3 => {
            let ops: Vec<UnOp> = UnOp::ALL
                .into_iter()
                .filter(|o| g.implications || *o != UnOp::Neg)
                .collect();
            Term::unary(ops[rng.gen_range(0..ops.len())], random_term(g, rng, d))
        }
        4..=8 => {
            let ops: Vec<BinOp> = BinOp::ALL
                .into_iter()
                .filter(|o| g.implications || !matches!(o, BinOp::Cimp | BinOp::Mimp))
                .collect();
            let op = ops[rng.gen_range(0..ops.len())];
            Term::binary(op, random_term(g, rng, d), random_term(g, rng, d))
        }
        _ if g.medvedev => {
            let op = MOp::ALL[rng.gen_range(0..MOp::ALL.len())];
            Term::medv_op(op, medv_term(rng, d), medv_term(rng, d))
        }
        _ => leaf(g, rng),
    }
}

fn medv_term<R: Rng + ?Sized>(rng: &mut R, depth: usize) -> Term {
    if depth <= 1 || rng.gen_bool(0.5) {
        Term::medv(["A", "B", "C"][rng.gen_range(0..3)])
    } else {
        let op = MOp::ALL[rng.gen_range(0..MOp::ALL.len())];
        Term::medv_op(op, medv_term(rng, depth - 1), medv_term(rng, depth - 1))
    }
}

fn leaf<R: Rng + ?Sized>(g: &TermGen, rng: &mut R) -> Term {
    let n = g.atoms.len();
    let extra = if g.medvedev { 4 } else { 3 };
    let i = rng.gen_range(0..n + extra);
    if i < n {
        return Term::Atom(g.atoms[i].clone());
    }
    match i - n {
        0 => Term::Zero,
        1 => Term::One,
        2 => Term::Inf,
        _ => Term::medv(["A", "B", "C"][rng.gen_range(0..3)]),
    }
}
