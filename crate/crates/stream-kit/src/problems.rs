use std::collections::BTreeSet;
use std::fmt;

use crate::name::UpName;
use crate::space::{decode_completion, Space, Value};
use crate::transformer::{PrefixTransformer, Run, DEFAULT_PERIODS};
use crate::StreamError;

/// `LPO(p) = 0` iff some entry of `p` is 0.
pub fn lpo(p: &UpName) -> u64 {
    u64::from(!p.range().contains(&0))
}

/// `0^k 1^ω` for a binary name with exactly `k` zeros, `0^ω` for infinitely many.
pub fn sort_problem(p: &UpName) -> Result<UpName, StreamError> {
    if p.range().iter().any(|&x| x > 1) {
        return Err(StreamError::Precondition(format!("{p} is not binary")));
    }
    Ok(match p.count(0) {
        Some(k) => UpName::new(vec![0; k], vec![1]).expect("nonempty"),
        None => UpName::constant(0),
    })
}

/// Bound of an all-or-countable choice problem: `{0, …, X-1}` or all naturals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bound {
    Finite(u64),
    Omega,
}

impl Bound {
    pub fn contains(&self, n: u64) -> bool {
        match self {
            Bound::Finite(x) => n < *x,
            Bound::Omega => true,
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Finite(x) => write!(f, "{x}"),
            Bound::Omega => write!(f, "N"),
        }
    }
}

/// A set of naturals that is finite or cofinite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NatSet {
    Finite(BTreeSet<u64>),
    /// all naturals except these
    Cofinite(BTreeSet<u64>),
}

impl NatSet {
    pub fn contains(&self, n: u64) -> bool {
        match self {
            NatSet::Finite(s) => s.contains(&n),
            NatSet::Cofinite(s) => !s.contains(&n),
        }
    }

    /// Members up to and including `window`.
    pub fn members(&self, window: u64) -> Vec<u64> {
        (0..=window).filter(|&n| self.contains(n)).collect()
    }
}

fn acc_domain(x: Bound, p: &UpName) -> bool {
    let nonzero: Vec<u64> = p.range().into_iter().filter(|&v| v != 0).collect();
    match nonzero.as_slice() {
        [] => true,
        [m] => x.contains(m - 1),
        _ => false,
    }
}

/// `{n ∈ X : n+1 ∉ range(p)}` for `p` with range inside `{0, n+1}` for some `n ∈ X`.
pub fn acc(x: Bound, p: &UpName) -> Result<NatSet, StreamError> {
    if !acc_domain(x, p) {
        return Err(StreamError::Precondition(format!("{p} is outside the domain of ACC_{x}")));
    }
    let excluded: BTreeSet<u64> = p.range().into_iter().filter(|&v| v != 0).map(|v| v - 1).collect();
    Ok(match x {
        Bound::Finite(b) => NatSet::Finite((0..b).filter(|n| !excluded.contains(n)).collect()),
        Bound::Omega => NatSet::Cofinite(excluded),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Problem {
    Lpo,
    Sort,
    Acc(Bound),
}

/// Naturals in the output are written as names starting with the value;
/// these are the variants a realizer may produce.
fn nat_names(n: u64) -> [UpName; 3] {
    [UpName::constant(n), UpName::new(vec![n], vec![0]).expect("nonempty"), UpName::new(vec![n], vec![n + 1]).expect("nonempty")]
}

/// Largest natural checked for problems with infinitely many solutions.
pub const SOLUTION_WINDOW: u64 = 8;

impl Problem {
    pub fn input_space(&self) -> Space {
        match self {
            Problem::Sort => Space::cantor(),
            _ => Space::baire(),
        }
    }

    pub fn output_space(&self) -> Space {
        match self {
            Problem::Sort => Space::cantor(),
            _ => Space::nat(),
        }
    }

    pub fn in_domain(&self, x: &UpName) -> bool {
        match self {
            Problem::Lpo => true,
            Problem::Sort => x.range().iter().all(|&v| v <= 1),
            Problem::Acc(b) => acc_domain(*b, x),
        }
    }

    pub fn is_solution(&self, x: &UpName, y: &Value) -> bool {
        match (self, y) {
            (Problem::Lpo, Value::Nat(n)) => *n == lpo(x),
            (Problem::Sort, Value::Seq(q)) => sort_problem(x).is_ok_and(|s| &s == q),
            (Problem::Acc(b), Value::Nat(n)) => acc(*b, x).is_ok_and(|s| s.contains(*n)),
            _ => false,
        }
    }

    /// Names a realizer may output on `x`.
    pub fn solution_names(&self, x: &UpName) -> Result<Vec<UpName>, StreamError> {
        Ok(match self {
            Problem::Lpo => nat_names(lpo(x)).to_vec(),
            Problem::Sort => vec![sort_problem(x)?],
            Problem::Acc(b) => acc(*b, x)?.members(SOLUTION_WINDOW).into_iter().flat_map(nat_names).collect(),
        })
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Problem::Lpo => write!(f, "LPO"),
            Problem::Sort => write!(f, "SORT"),
            Problem::Acc(b) => write!(f, "ACC_{b}"),
        }
    }
}

/// A problem on its own representation or on the completion of it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Semantics {
    Plain(Problem),
    Completion(Problem),
}

impl Semantics {
    pub fn problem(&self) -> Problem {
        match self {
            Semantics::Plain(p) | Semantics::Completion(p) => *p,
        }
    }

    fn decode(&self, space: &Space, p: &UpName) -> Option<Value> {
        match self {
            Semantics::Plain(_) => space.decode(p),
            Semantics::Completion(_) => decode_completion(space, p),
        }
    }

    /// The input named by `p` when it lies in the domain. For a completion
    /// every other name is ⊥ or outside, where any output is correct.
    pub fn input(&self, p: &UpName) -> Option<UpName> {
        let prob = self.problem();
        match self.decode(&prob.input_space(), p) {
            Some(Value::Seq(x)) if prob.in_domain(&x) => Some(x),
            _ => None,
        }
    }

    pub fn is_correct(&self, x: &UpName, out: &UpName) -> bool {
        let prob = self.problem();
        self.decode(&prob.output_space(), out).is_some_and(|y| prob.is_solution(x, &y))
    }
}

/// The transformers `H` and `K` showing that the completion of a problem
/// strongly reduces to the problem.
pub fn completeness_witness(p: Problem) -> (PrefixTransformer, PrefixTransformer) {
    let h = PrefixTransformer::plus_one();
    let k = match p {
        Problem::Lpo | Problem::Sort => PrefixTransformer::pointwise("K", |a| vec![u64::from(a != 1)]),
        Problem::Acc(b) => acc_k(b),
    };
    (h, k)
}

/// Write `k+1` where the first entry larger than 1 is `k+2` with `k ∈ X`,
/// and 0 everywhere else.
fn acc_k(b: Bound) -> PrefixTransformer {
    PrefixTransformer::new("K", vec![0], move |s, a| {
        if s[0] == 0 && a > 1 {
            let k = a - 2;
            (vec![1], vec![if b.contains(k) { k + 1 } else { 0 }])
        } else {
            (s.clone(), vec![0])
        }
    })
}

/// `p ↦ 0^{p(0)+1} 1 0^{p(1)+1} 1 …`, total and Turing equivalent to `p`.
pub fn unary_coding_k() -> PrefixTransformer {
    PrefixTransformer::pointwise("K", |a| {
        let mut w = vec![0; a as usize + 1];
        w.push(1);
        w
    })
}

/// Entry minus one where nonzero; at a zero entry the `i ∈ {0,1}` such that
/// `i+1` occurred most often so far, preferring 0 on ties.
pub fn cluster_point_k() -> PrefixTransformer {
    PrefixTransformer::new("K", vec![0, 0], |s, a| {
        let mut t = s.clone();
        match a {
            1 => t[0] += 1,
            2 => t[1] += 1,
            _ => {}
        }
        let out = if a != 0 { a - 1 } else { u64::from(t[1] > t[0]) };
        (t, vec![out])
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionFailure {
    pub sample: UpName,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReductionReport {
    pub checked: usize,
    pub failures: Vec<ReductionFailure>,
}

impl ReductionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn run_total(t: &PrefixTransformer, p: &UpName) -> Result<Option<UpName>, StreamError> {
    match t.run(p, DEFAULT_PERIODS) {
        Run::Total(q) => Ok(Some(q)),
        Run::Stalls(_) => Ok(None),
        Run::Undetermined(_) => Err(StreamError::Undetermined(format!("{} on {p}", t.name))),
    }
}

fn check_one(f: Semantics, g: Semantics, h: &PrefixTransformer, k: &PrefixTransformer, p: &UpName) -> Result<Option<String>, StreamError> {
    let x = f.input(p);
    if x.is_none() && matches!(f, Semantics::Plain(_)) {
        return Err(StreamError::Precondition(format!("{p} is outside the domain of {}", f.problem())));
    }
    let Some(kp) = run_total(k, p)? else { return Ok(Some("K stalls".into())) };
    let Some(y) = g.input(&kp) else { return Ok(Some(format!("K gives {kp}, outside the domain of {}", g.problem()))) };
    for r in g.problem().solution_names(&y)? {
        let Some(out) = run_total(h, &r)? else { return Ok(Some(format!("H stalls on {r}"))) };
        if let Some(x) = &x {
            if !f.is_correct(x, &out) {
                return Ok(Some(format!("H gives {out} on {r}, not a solution for {x}")));
            }
        }
    }
    Ok(None)
}

/// Check that `H ∘ G ∘ K` solves `f` for every realizer `G` of `g`, on
/// each sample name.
pub fn check_reduction(
    f: Semantics,
    g: Semantics,
    h: &PrefixTransformer,
    k: &PrefixTransformer,
    samples: &[UpName],
) -> Result<ReductionReport, StreamError> {
    let results: Vec<Result<Option<String>, StreamError>> = map_samples(samples, &|p| check_one(f, g, h, k, p));
    let mut report = ReductionReport::default();
    for (p, r) in samples.iter().zip(results) {
        report.checked += 1;
        if let Some(reason) = r? {
            report.failures.push(ReductionFailure { sample: p.clone(), reason });
        }
    }
    Ok(report)
}

#[cfg(feature = "parallel")]
fn map_samples<T: Send>(samples: &[UpName], f: &(dyn Fn(&UpName) -> T + Sync)) -> Vec<T> {
    use rayon::prelude::*;
    samples.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn map_samples<T>(samples: &[UpName], f: &dyn Fn(&UpName) -> T) -> Vec<T> {
    samples.iter().map(f).collect()
}
