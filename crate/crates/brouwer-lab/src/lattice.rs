use crate::order::{check_closure_operator, induced_preorder, FinitePreorder};
use crate::LabError;

/// A finite bounded lattice with precomputed operation tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    order: FinitePreorder,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
    bottom: usize,
    top: usize,
}

impl FiniteLattice {
    /// Compute meets and joins of a partial order, failing if some pair
    /// lacks one.
    pub fn from_order(order: FinitePreorder) -> Result<Self, LabError> {
        let n = order.len();
        if n == 0 {
            return Err(LabError::Empty);
        }
        if let Some((x, y)) = order.antisymmetry_violation() {
            return Err(LabError::NotAntisymmetric(x, y));
        }
        let bound = |x: usize, y: usize, upper: bool| -> Option<usize> {
            let below = |a: usize, b: usize| if upper { order.leq(b, a) } else { order.leq(a, b) };
            let cands: Vec<usize> = (0..n).filter(|&z| below(z, x) && below(z, y)).collect();
            cands.iter().copied().find(|&m| cands.iter().all(|&z| below(z, m)))
        };
        let mut meet = vec![vec![0; n]; n];
        let mut join = vec![vec![0; n]; n];
        for x in 0..n {
            for y in 0..n {
                meet[x][y] = bound(x, y, false).ok_or(LabError::NotLattice(x, y, "meet"))?;
                join[x][y] = bound(x, y, true).ok_or(LabError::NotLattice(x, y, "join"))?;
            }
        }
        let bottom = (0..n).fold(0, |a, x| meet[a][x]);
        let top = (0..n).fold(0, |a, x| join[a][x]);
        Ok(FiniteLattice { order, meet, join, bottom, top })
    }

    /// Check that given tables really are the lattice operations of `order`.
    pub fn from_tables(order: FinitePreorder, meet: Vec<Vec<usize>>, join: Vec<Vec<usize>>) -> Result<Self, LabError> {
        let l = FiniteLattice::from_order(order)?;
        if meet != l.meet {
            return Err(LabError::BadTable("meet"));
        }
        if join != l.join {
            return Err(LabError::BadTable("join"));
        }
        Ok(l)
    }

    pub fn chain(n: usize) -> Self {
        FiniteLattice::from_order(FinitePreorder::chain(n)).expect("chains are lattices")
    }

    /// Subsets of a `k`-element set under inclusion; element `i` is the bitmask `i`.
    pub fn boolean(k: usize) -> Self {
        let n = 1usize << k;
        let leq = (0..n).map(|x| (0..n).map(|y| x & !y == 0).collect()).collect();
        FiniteLattice::from_order(FinitePreorder::new(leq).expect("inclusion")).expect("powerset")
    }

    /// The diamond: bottom 0, atoms 1..=3, top 4.
    pub fn m3() -> Self {
        let p = FinitePreorder::generated(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]);
        FiniteLattice::from_order(p).expect("M3")
    }

    /// The pentagon: 0 < 1 < 2 < 4 and 0 < 3 < 4.
    pub fn n5() -> Self {
        let p = FinitePreorder::generated(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]);
        FiniteLattice::from_order(p).expect("N5")
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn order(&self) -> &FinitePreorder {
        &self.order
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.order.leq(x, y)
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x][y]
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x][y]
    }

    pub fn meet_table(&self) -> &[Vec<usize>] {
        &self.meet
    }

    pub fn join_table(&self) -> &[Vec<usize>] {
        &self.join
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Greatest-lower-bound, least-upper-bound and absorption checks.
    pub fn validate(&self) -> bool {
        let n = self.len();
        self.order.is_infimum(&self.meet)
            && self.order.is_supremum(&self.join)
            && (0..n).all(|x| {
                self.leq(self.bottom, x)
                    && self.leq(x, self.top)
                    && (0..n).all(|y| self.meet(x, self.join(x, y)) == x && self.join(x, self.meet(x, y)) == x)
            })
    }

    pub fn is_distributive(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| {
            (0..n).all(|y| (0..n).all(|z| self.meet(x, self.join(y, z)) == self.join(self.meet(x, y), self.meet(x, z))))
        })
    }

    /// The closure operator whose closed elements are the meets of `gens`
    /// (and the top): c(x) is the least generated element above x.
    pub fn moore_closure(&self, gens: &[usize]) -> Vec<usize> {
        (0..self.len())
            .map(|x| gens.iter().filter(|&&g| self.leq(x, g)).fold(self.top, |a, &g| self.meet(a, g)))
            .collect()
    }
}

/// A lattice of ≡c classes together with the class map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    pub lattice: FiniteLattice,
    /// class index of each original element
    pub class_of: Vec<usize>,
    /// least original element of each class
    pub reps: Vec<usize>,
}

/// Quotient of `l` by the equivalence induced by the closure `c`, with
/// meet `c(x) ∧ c(y)` and join `x ∨ y`.
pub fn quotient_lattice(l: &FiniteLattice, c: &[usize]) -> Result<Quotient, LabError> {
    check_closure_operator(l.order(), c).map_err(LabError::NotClosure)?;
    let q = induced_preorder(l.order(), c)?;
    let n = l.len();
    let mut reps: Vec<usize> = Vec::new();
    let mut class_of = vec![0; n];
    for x in 0..n {
        match reps.iter().position(|&r| q.equiv(r, x)) {
            Some(i) => class_of[x] = i,
            None => {
                class_of[x] = reps.len();
                reps.push(x);
            }
        }
    }
    let m = reps.len();
    let leq = (0..m).map(|i| (0..m).map(|j| q.leq(reps[i], reps[j])).collect()).collect();
    let order = FinitePreorder::new(leq)?;
    let meet = (0..m).map(|i| (0..m).map(|j| class_of[l.meet(c[reps[i]], c[reps[j]])]).collect()).collect();
    let join = (0..m).map(|i| (0..m).map(|j| class_of[l.join(reps[i], reps[j])]).collect()).collect();
    let lattice = FiniteLattice::from_tables(order, meet, join)?;
    Ok(Quotient { lattice, class_of, reps })
}
