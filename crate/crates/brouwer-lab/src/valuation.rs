use std::collections::BTreeMap;

use crate::algebra::FiniteAlgebra;
use crate::formula::Formula;
use crate::LabError;

pub type Valuation = BTreeMap<char, usize>;

pub const MAX_VARS: usize = 4;
pub const MAX_CARRIER: usize = 32;

/// Value of a formula with disjunction as meet, conjunction as join,
/// implication as the algebra's implication and `~A` as `A → top`.
pub fn evaluate(a: &FiniteAlgebra, v: &Valuation, f: &Formula) -> Result<usize, LabError> {
    let imp = a.imp.as_ref().ok_or(LabError::NoImplication)?;
    eval(a, imp, f, &|c| v.get(&c).copied().ok_or(LabError::Unbound(c)))
}

fn eval(
    a: &FiniteAlgebra,
    imp: &[Vec<usize>],
    f: &Formula,
    var: &dyn Fn(char) -> Result<usize, LabError>,
) -> Result<usize, LabError> {
    let l = &a.lattice;
    Ok(match f {
        Formula::Var(c) => var(*c)?,
        Formula::Not(x) => imp[eval(a, imp, x, var)?][l.top()],
        Formula::And(x, y) => l.join(eval(a, imp, x, var)?, eval(a, imp, y, var)?),
        Formula::Or(x, y) => l.meet(eval(a, imp, x, var)?, eval(a, imp, y, var)?),
        Formula::Imp(x, y) => imp[eval(a, imp, x, var)?][eval(a, imp, y, var)?],
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Countervaluation {
    pub valuation: Valuation,
    pub value: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Validity {
    Valid,
    Invalid(Countervaluation),
}

impl Validity {
    pub fn holds(&self) -> bool {
        matches!(self, Validity::Valid)
    }
}

/// How valuations are enumerated. Both modes report the same
/// countervaluation: the first in lexicographic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Sequential,
    /// falls back to sequential without the `parallel` feature
    Parallel,
}

impl Default for Mode {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Mode::Parallel
        } else {
            Mode::Sequential
        }
    }
}

pub fn is_valid(a: &FiniteAlgebra, f: &Formula) -> Result<Validity, LabError> {
    is_valid_with(a, f, Mode::default())
}

/// Valid when every valuation sends `f` to the unit (the bottom).
pub fn is_valid_with(a: &FiniteAlgebra, f: &Formula, mode: Mode) -> Result<Validity, LabError> {
    let imp = a.imp.as_ref().ok_or(LabError::NoImplication)?;
    let vars = f.vars();
    if vars.len() > MAX_VARS {
        return Err(LabError::TooLarge { what: "variable list", size: vars.len(), bound: MAX_VARS });
    }
    let n = a.len();
    if n > MAX_CARRIER {
        return Err(LabError::TooLarge { what: "carrier", size: n, bound: MAX_CARRIER });
    }
    let total = n.pow(vars.len() as u32);
    let decode = |mut i: usize| -> Vec<usize> {
        let mut vals = vec![0; vars.len()];
        for slot in vals.iter_mut().rev() {
            *slot = i % n;
            i /= n;
        }
        vals
    };
    let value = |i: usize| -> usize {
        let vals = decode(i);
        let var = |c: char| Ok(vals[vars.iter().position(|&v| v == c).expect("collected")]);
        eval(a, imp, f, &var).expect("all variables bound")
    };
    let bottom = a.lattice.bottom();
    let bad = match mode {
        Mode::Parallel => first_failure_parallel(total, &|i| value(i) != bottom),
        Mode::Sequential => (0..total).find(|&i| value(i) != bottom),
    };
    Ok(match bad {
        None => Validity::Valid,
        Some(i) => Validity::Invalid(Countervaluation {
            valuation: vars.iter().copied().zip(decode(i)).collect(),
            value: value(i),
        }),
    })
}

#[cfg(feature = "parallel")]
fn first_failure_parallel(total: usize, fails: &(dyn Fn(usize) -> bool + Sync)) -> Option<usize> {
    use rayon::prelude::*;
    (0..total).into_par_iter().find_first(|&i| fails(i))
}

#[cfg(not(feature = "parallel"))]
fn first_failure_parallel(total: usize, fails: &dyn Fn(usize) -> bool) -> Option<usize> {
    (0..total).find(|&i| fails(i))
}

pub fn theory_includes_jankov(a: &FiniteAlgebra) -> Result<bool, LabError> {
    Ok(is_valid(a, &Formula::jankov())?.holds())
}

/// Ten axiom schemata of intuitionistic propositional logic.
pub fn intuitionistic_axioms() -> Vec<Formula> {
    [
        "A -> (B -> A)",
        "(A -> (B -> C)) -> ((A -> B) -> (A -> C))",
        "A & B -> A",
        "A & B -> B",
        "A -> (B -> A & B)",
        "A -> A | B",
        "B -> A | B",
        "(A -> C) -> ((B -> C) -> (A | B -> C))",
        "(A -> B) -> ((A -> ~B) -> ~A)",
        "~A -> (A -> B)",
    ]
    .iter()
    .map(|s| s.parse().expect("well formed"))
    .collect()
}
