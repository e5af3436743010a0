use std::fmt;

use crate::lattice::FiniteLattice;
use crate::order::FinitePreorder;
use crate::LabError;

pub type Table = Vec<Vec<usize>>;

/// A bounded lattice with a monoid and an optional implication
/// `imp[y][x] = y → x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAlgebra {
    pub lattice: FiniteLattice,
    pub dot: Table,
    pub one: usize,
    pub imp: Option<Table>,
    pub labels: Vec<String>,
}

/// Why no implication table exists for a pair `(y, x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoResidualFailure {
    /// no z at all satisfies x ≤ y·z
    NoCandidate { y: usize, x: usize },
    /// the solutions of x ≤ y·z have two incomparable minimal elements
    NoLeast { y: usize, x: usize, z1: usize, z2: usize },
    /// the least solution is below some z that is not a solution
    NotUpward { y: usize, x: usize, z: usize },
}

impl fmt::Display for CoResidualFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CoResidualFailure::NoCandidate { y, x } => write!(f, "no z with {x} <= {y}.z"),
            CoResidualFailure::NoLeast { y, x, z1, z2 } => {
                write!(f, "{z1} and {z2} are both minimal with {x} <= {y}.z")
            }
            CoResidualFailure::NotUpward { y, x, z } => write!(f, "{x} <= {y}.z fails for z = {z} above the least solution"),
        }
    }
}

/// The table of least `z` with `x ≤ y·z`, checked against the full
/// biconditional `x ≤ y·z ⟺ (y → x) ≤ z`.
pub fn co_residual(l: &FiniteLattice, dot: &[Vec<usize>]) -> Result<Table, CoResidualFailure> {
    let n = l.len();
    let mut imp = vec![vec![0; n]; n];
    for y in 0..n {
        for x in 0..n {
            let sols: Vec<usize> = (0..n).filter(|&z| l.leq(x, dot[y][z])).collect();
            let Some(&first) = sols.first() else { return Err(CoResidualFailure::NoCandidate { y, x }) };
            let least = sols.iter().copied().find(|&m| sols.iter().all(|&z| l.leq(m, z)));
            let Some(m) = least else {
                let minimal: Vec<usize> =
                    sols.iter().copied().filter(|&a| sols.iter().all(|&z| z == a || !l.leq(z, a))).collect();
                let z1 = minimal.first().copied().unwrap_or(first);
                let z2 = minimal.get(1).copied().unwrap_or(first);
                return Err(CoResidualFailure::NoLeast { y, x, z1, z2 });
            };
            if let Some(z) = (0..n).find(|&z| l.leq(m, z) && !l.leq(x, dot[y][z])) {
                return Err(CoResidualFailure::NotUpward { y, x, z });
            }
            imp[y][x] = m;
        }
    }
    Ok(imp)
}

fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

impl FiniteAlgebra {
    pub fn new(lattice: FiniteLattice, dot: Table, one: usize, imp: Option<Table>) -> Self {
        let labels = default_labels(lattice.len());
        FiniteAlgebra { lattice, dot, one, imp, labels }
    }

    /// The candidate Brouwer algebra on `l`: dot is join, the unit is the
    /// bottom, and the implication is the co-residual when it exists.
    pub fn brouwer(l: FiniteLattice) -> Result<Self, CoResidualFailure> {
        let dot = l.join_table().to_vec();
        let imp = co_residual(&l, &dot)?;
        let one = l.bottom();
        Ok(FiniteAlgebra::new(l, dot, one, Some(imp)))
    }

    /// Chain `0 < 1 < … < n-1` as a Brouwer algebra.
    pub fn chain(n: usize) -> Self {
        FiniteAlgebra::brouwer(FiniteLattice::chain(n)).expect("chains are distributive")
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.len());
        self.labels = labels;
        self
    }

    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lattice.is_empty()
    }

    pub fn imp(&self, y: usize, x: usize) -> Option<usize> {
        self.imp.as_ref().map(|t| t[y][x])
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| (0..n).all(|y| self.dot[x][y] == self.dot[y][x]))
    }

    /// `x ≤ y·z ⟺ (y → x) ≤ z` for all triples.
    pub fn is_deductive(&self) -> bool {
        let Some(imp) = &self.imp else { return false };
        let l = &self.lattice;
        let n = self.len();
        (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| l.leq(x, self.dot[y][z]) == l.leq(imp[y][x], z))))
    }

    /// Relabel along a permutation: element `i` becomes `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let n = self.len();
        let mut inv = vec![0; n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let leq = (0..n).map(|a| (0..n).map(|b| self.lattice.leq(inv[a], inv[b])).collect()).collect();
        let lattice = FiniteLattice::from_order(FinitePreorder::new(leq).expect("relabelled order")).expect("relabelled lattice");
        let map = |t: &Table| -> Table { (0..n).map(|a| (0..n).map(|b| perm[t[inv[a]][inv[b]]]).collect()).collect() };
        FiniteAlgebra {
            lattice,
            dot: map(&self.dot),
            one: perm[self.one],
            imp: self.imp.as_ref().map(map),
            labels: (0..n).map(|a| self.labels[inv[a]].clone()).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum AlgebraClass {
    NotWeihrauch,
    Weihrauch,
    Troelstra,
    Brouwer,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraReport {
    pub class: AlgebraClass,
    /// failed axioms with a witness each
    pub failures: Vec<String>,
    pub commutative: bool,
    pub deductive: bool,
    /// informational only
    pub distributive: bool,
}

pub fn check_weihrauch_algebra(a: &FiniteAlgebra) -> AlgebraReport {
    let l = &a.lattice;
    let n = a.len();
    let mut failures = Vec::new();
    let tri = || (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))));
    let ok_table = |t: &Table| t.len() == n && t.iter().all(|r| r.len() == n && r.iter().all(|&v| v < n));

    if !l.validate() {
        failures.push("lattice: operations are not bounds".to_string());
    }
    if !ok_table(&a.dot) || a.one >= n {
        failures.push("monoid: table is not total".to_string());
        return AlgebraReport { class: AlgebraClass::NotWeihrauch, failures, commutative: false, deductive: false, distributive: l.is_distributive() };
    }
    let d = &a.dot;
    if let Some((x, y, z)) = tri().find(|&(x, y, z)| d[d[x][y]][z] != d[x][d[y][z]]) {
        failures.push(format!("monoid: ({x}.{y}).{z} differs from {x}.({y}.{z})"));
    }
    if let Some(x) = (0..n).find(|&x| d[a.one][x] != x || d[x][a.one] != x) {
        failures.push(format!("monoid: {} is not neutral for {x}", a.one));
    }
    for arg in 0..2 {
        if !l.order().is_monotone_in(d, arg, false) {
            failures.push(format!("monotonicity: dot is not monotone in argument {}", arg + 1));
        }
    }
    match &a.imp {
        Some(imp) if ok_table(imp) => {
            if !l.order().is_monotone_in(imp, 0, true) {
                failures.push("monotonicity: implication is not antitone in its first argument".to_string());
            }
            if !l.order().is_monotone_in(imp, 1, false) {
                failures.push("monotonicity: implication is not monotone in its second argument".to_string());
            }
            if let Some((x, y, z)) = tri().find(|&(x, y, z)| l.leq(x, d[y][z]) && !l.leq(imp[y][x], z)) {
                failures.push(format!("implication: {x} <= {y}.{z} but ({y} -> {x}) is not below {z}"));
            }
        }
        _ => failures.push("implication: no total implication table".to_string()),
    }
    let commutative = a.is_commutative();
    let deductive = failures.is_empty() && a.is_deductive();
    let class = if !failures.is_empty() {
        AlgebraClass::NotWeihrauch
    } else if !(commutative && deductive) {
        AlgebraClass::Weihrauch
    } else if a.dot.as_slice() == l.join_table() && a.one == l.bottom() {
        AlgebraClass::Brouwer
    } else {
        AlgebraClass::Troelstra
    };
    AlgebraReport { class, failures, commutative, deductive, distributive: l.is_distributive() }
}

pub const MAX_UPSET_POSET: usize = 6;

/// Upward closed subsets of a finite poset ordered by reverse inclusion,
/// so that the full set is the bottom, as a Brouwer algebra.
pub fn upset_algebra(poset: &FinitePreorder) -> Result<FiniteAlgebra, LabError> {
    let n = poset.len();
    if n > MAX_UPSET_POSET {
        return Err(LabError::TooLarge { what: "poset", size: n, bound: MAX_UPSET_POSET });
    }
    if let Some((x, y)) = poset.antisymmetry_violation() {
        return Err(LabError::NotAntisymmetric(x, y));
    }
    let ups: Vec<u32> = (0u32..1 << n)
        .filter(|&s| (0..n).all(|x| s >> x & 1 == 0 || (0..n).all(|y| !poset.leq(x, y) || s >> y & 1 == 1)))
        .collect();
    let m = ups.len();
    let leq = (0..m).map(|i| (0..m).map(|j| ups[j] & !ups[i] == 0).collect()).collect();
    let lattice = FiniteLattice::from_order(FinitePreorder::new(leq)?)?;
    let labels = ups
        .iter()
        .map(|s| format!("{{{}}}", (0..n).filter(|x| s >> x & 1 == 1).map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    let a = FiniteAlgebra::brouwer(lattice).expect("upset lattices are distributive");
    Ok(a.with_labels(labels))
}

/// All partial orders on `0..n` that refine the natural order of the
/// labels, each given by its relation.
pub fn natural_posets(n: usize) -> Vec<FinitePreorder> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let rel = |i: usize, j: usize| i == j || pairs.iter().position(|&p| p == (i, j)).is_some_and(|k| mask >> k & 1 == 1);
        let transitive = (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(rel(i, j) && rel(j, k)) || rel(i, k))));
        if transitive {
            let leq = (0..n).map(|i| (0..n).map(|j| rel(i, j)).collect()).collect();
            out.push(FinitePreorder::new(leq).expect("transitive"));
        }
    }
    out
}

/// Whether `f` embeds `a` into `b`: injective, order reflecting, and
/// preserving bounds, lattice operations, dot, unit and implication.
pub fn is_embedding(a: &FiniteAlgebra, b: &FiniteAlgebra, f: &[usize]) -> bool {
    let n = a.len();
    if f.len() != n || f.iter().any(|&v| v >= b.len()) {
        return false;
    }
    let (la, lb) = (&a.lattice, &b.lattice);
    let pairs = || (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)));
    let imp_ok = match (&a.imp, &b.imp) {
        (Some(i), Some(j)) => pairs().all(|(x, y)| f[i[x][y]] == j[f[x]][f[y]]),
        (None, _) => true,
        (Some(_), None) => false,
    };
    f[la.bottom()] == lb.bottom()
        && f[la.top()] == lb.top()
        && f[a.one] == b.one
        && pairs().all(|(x, y)| {
            la.leq(x, y) == lb.leq(f[x], f[y])
                && f[la.meet(x, y)] == lb.meet(f[x], f[y])
                && f[la.join(x, y)] == lb.join(f[x], f[y])
                && f[a.dot[x][y]] == b.dot[f[x]][f[y]]
        })
        && imp_ok
}
