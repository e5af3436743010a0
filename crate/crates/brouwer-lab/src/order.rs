use std::fmt;

use crate::LabError;

/// A preorder on `0..n`, stored as its relation matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinitePreorder {
    leq: Vec<Vec<bool>>,
}

impl FinitePreorder {
    pub fn new(leq: Vec<Vec<bool>>) -> Result<Self, LabError> {
        let n = leq.len();
        if leq.iter().any(|r| r.len() != n) {
            return Err(LabError::NotSquare);
        }
        if let Some(x) = (0..n).find(|&x| !leq[x][x]) {
            return Err(LabError::NotReflexive(x));
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if leq[x][y] && leq[y][z] && !leq[x][z] {
                        return Err(LabError::NotTransitive(x, y, z));
                    }
                }
            }
        }
        Ok(FinitePreorder { leq })
    }

    /// Reflexive-transitive closure of the given pairs.
    pub fn generated(n: usize, pairs: &[(usize, usize)]) -> Self {
        let mut leq = vec![vec![false; n]; n];
        for (x, row) in leq.iter_mut().enumerate() {
            row[x] = true;
        }
        for &(x, y) in pairs {
            leq[x][y] = true;
        }
        for k in 0..n {
            for x in 0..n {
                if leq[x][k] {
                    for y in 0..n {
                        if leq[k][y] {
                            leq[x][y] = true;
                        }
                    }
                }
            }
        }
        FinitePreorder { leq }
    }

    pub fn chain(n: usize) -> Self {
        FinitePreorder { leq: (0..n).map(|x| (0..n).map(|y| x <= y).collect()).collect() }
    }

    pub fn len(&self) -> usize {
        self.leq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leq.is_empty()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x][y]
    }

    pub fn equiv(&self, x: usize, y: usize) -> bool {
        self.leq[x][y] && self.leq[y][x]
    }

    pub fn matrix(&self) -> &[Vec<bool>] {
        &self.leq
    }

    pub fn antisymmetry_violation(&self) -> Option<(usize, usize)> {
        let n = self.len();
        (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).find(|&(x, y)| self.equiv(x, y))
    }

    pub fn is_total(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| (0..n).all(|y| self.leq[x][y] || self.leq[y][x]))
    }

    /// Whether `t[x][y]` is a greatest lower bound of `x` and `y` for all pairs.
    pub fn is_infimum(&self, t: &[Vec<usize>]) -> bool {
        let n = self.len();
        (0..n).all(|x| {
            (0..n).all(|y| {
                let m = t[x][y];
                self.leq(m, x) && self.leq(m, y) && (0..n).all(|z| !(self.leq(z, x) && self.leq(z, y)) || self.leq(z, m))
            })
        })
    }

    /// Whether `t[x][y]` is a least upper bound of `x` and `y` for all pairs.
    pub fn is_supremum(&self, t: &[Vec<usize>]) -> bool {
        let n = self.len();
        (0..n).all(|x| {
            (0..n).all(|y| {
                let j = t[x][y];
                self.leq(x, j) && self.leq(y, j) && (0..n).all(|z| !(self.leq(x, z) && self.leq(y, z)) || self.leq(j, z))
            })
        })
    }

    pub fn is_monotone(&self, f: &[usize]) -> bool {
        self.is_monotone_into(f, self)
    }

    /// Monotone from this order into `target`.
    pub fn is_monotone_into(&self, f: &[usize], target: &FinitePreorder) -> bool {
        let n = self.len();
        (0..n).all(|x| (0..n).all(|y| !self.leq(x, y) || target.leq(f[x], f[y])))
    }

    /// Monotonicity of a binary table in argument `arg` (0 or 1); with
    /// `antitone` the order is reversed.
    pub fn is_monotone_in(&self, t: &[Vec<usize>], arg: usize, antitone: bool) -> bool {
        let n = self.len();
        (0..n).all(|x1| {
            (0..n).all(|x2| {
                !self.leq(x1, x2)
                    || (0..n).all(|y| {
                        let (a, b) = if arg == 0 { (t[x1][y], t[x2][y]) } else { (t[y][x1], t[y][x2]) };
                        if antitone {
                            self.leq(b, a)
                        } else {
                            self.leq(a, b)
                        }
                    })
            })
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    /// the map is defined on the whole carrier
    Total,
    /// x ≤ c(x)
    Extensive,
    /// cc(x) ≤ c(x)
    Idempotent,
    /// x ≤ y implies c(x) ≤ c(y)
    Monotone,
}

/// First failing closure axiom, with the elements that witness it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub x: usize,
    pub y: Option<usize>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.y {
            Some(y) => write!(f, "{:?} fails at {} <= {}", self.axiom, self.x, y),
            None => write!(f, "{:?} fails at {}", self.axiom, self.x),
        }
    }
}

pub fn check_closure_operator(p: &FinitePreorder, c: &[usize]) -> Result<(), Violation> {
    let n = p.len();
    if c.len() != n {
        return Err(Violation { axiom: Axiom::Total, x: c.len().min(n), y: None });
    }
    if let Some(x) = (0..n).find(|&x| c[x] >= n) {
        return Err(Violation { axiom: Axiom::Total, x, y: None });
    }
    if let Some(x) = (0..n).find(|&x| !p.leq(x, c[x])) {
        return Err(Violation { axiom: Axiom::Extensive, x, y: None });
    }
    if let Some(x) = (0..n).find(|&x| !p.leq(c[c[x]], c[x])) {
        return Err(Violation { axiom: Axiom::Idempotent, x, y: None });
    }
    for x in 0..n {
        for y in 0..n {
            if p.leq(x, y) && !p.leq(c[x], c[y]) {
                return Err(Violation { axiom: Axiom::Monotone, x, y: Some(y) });
            }
        }
    }
    Ok(())
}

/// The preorder `x ≤c y :⟺ x ≤ c(y)`.
pub fn induced_preorder(p: &FinitePreorder, c: &[usize]) -> Result<FinitePreorder, LabError> {
    check_closure_operator(p, c).map_err(LabError::NotClosure)?;
    let n = p.len();
    let leq: Vec<Vec<bool>> = (0..n).map(|x| (0..n).map(|y| p.leq(x, c[y])).collect()).collect();
    let q = FinitePreorder::new(leq)?;
    debug_assert!((0..n).all(|x| (0..n).all(|y| !p.leq(x, y) || q.leq(x, y))));
    Ok(q)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Preservation {
    /// c(x□y) ≤ c(x)□c(y) for all x, y
    pub preserved: bool,
    /// c(x)□c(y) ≤ c(x□y) for all x, y
    pub co_preserved: bool,
}

pub fn check_preservation(p: &FinitePreorder, c: &[usize], op: &[Vec<usize>]) -> Preservation {
    let n = p.len();
    let pairs = || (0..n).flat_map(|x| (0..n).map(move |y| (x, y)));
    Preservation {
        preserved: pairs().all(|(x, y)| p.leq(c[op[x][y]], op[c[x]][c[y]])),
        co_preserved: pairs().all(|(x, y)| p.leq(op[c[x]][c[y]], c[op[x][y]])),
    }
}

/// Whether `c` is preserved by `c2`: c(c2(x)) ≤ c2(c(x)).
pub fn preserved_by(p: &FinitePreorder, c: &[usize], c2: &[usize]) -> bool {
    (0..p.len()).all(|x| p.leq(c[c2[x]], c2[c[x]]))
}

/// `outer ∘ inner`.
pub fn compose(outer: &[usize], inner: &[usize]) -> Vec<usize> {
    inner.iter().map(|&x| outer[x]).collect()
}

/// The table `(x, y) ↦ c(x) □ c(y)`.
pub fn closed_op(c: &[usize], op: &[Vec<usize>]) -> Vec<Vec<usize>> {
    (0..c.len()).map(|x| (0..c.len()).map(|y| op[c[x]][c[y]]).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_order_is_transitive() {
        let p = FinitePreorder::generated(3, &[(0, 1), (1, 2)]);
        assert!(p.leq(0, 2));
        assert!(!p.leq(2, 0));
        assert_eq!(FinitePreorder::new(p.matrix().to_vec()), Ok(p));
    }

    #[test]
    fn rejects_non_preorders() {
        assert_eq!(FinitePreorder::new(vec![vec![false]]), Err(LabError::NotReflexive(0)));
        let bad = vec![vec![true, true, false], vec![false, true, true], vec![false, false, true]];
        assert_eq!(FinitePreorder::new(bad), Err(LabError::NotTransitive(0, 1, 2)));
    }
}
