//! Random finite structures for property checks.

use rand::Rng;

use crate::algebra::{natural_posets, upset_algebra, FiniteAlgebra};
use crate::lattice::FiniteLattice;
use crate::order::FinitePreorder;

/// A random lattice of subsets of a 3-element set closed under
/// intersection, so at most 8 elements.
pub fn random_lattice<R: Rng>(rng: &mut R) -> FiniteLattice {
    let mut fam: Vec<u8> = vec![7];
    for s in 0..7u8 {
        if rng.gen_bool(0.4) {
            fam.push(s);
        }
    }
    loop {
        let mut grew = false;
        for i in 0..fam.len() {
            for j in 0..fam.len() {
                let m = fam[i] & fam[j];
                if !fam.contains(&m) {
                    fam.push(m);
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    fam.sort_unstable();
    let leq = fam.iter().map(|&a| fam.iter().map(|&b| a & !b == 0).collect()).collect();
    FiniteLattice::from_order(FinitePreorder::new(leq).expect("inclusion")).expect("Moore family")
}

/// A random closure operator: the least element above x among a random
/// set of closed elements closed under meets.
pub fn random_closure<R: Rng>(rng: &mut R, l: &FiniteLattice) -> Vec<usize> {
    let gens: Vec<usize> = (0..l.len()).filter(|_| rng.gen_bool(0.5)).collect();
    l.moore_closure(&gens)
}

/// A preorder with infimum and supremum tables and a closure operator.
#[derive(Debug, Clone)]
pub struct Sample {
    pub order: FinitePreorder,
    pub meet: Vec<Vec<usize>>,
    pub join: Vec<Vec<usize>>,
    pub closure: Vec<usize>,
    /// underlying lattice before elements were duplicated
    pub lattice: FiniteLattice,
    pub base_closure: Vec<usize>,
}

/// Random lattice and closure, with some elements duplicated into
/// equivalent copies so the order is a genuine preorder; at most `max`
/// elements.
pub fn random_sample<R: Rng>(rng: &mut R, max: usize) -> Sample {
    let lattice = random_lattice(rng);
    let base_closure = random_closure(rng, &lattice);
    let n = lattice.len();
    let mut base: Vec<usize> = (0..n).collect();
    while base.len() < max && rng.gen_bool(0.5) {
        base.push(rng.gen_range(0..n));
    }
    let first = |b: usize| base.iter().position(|&x| x == b).expect("every base element present");
    let m = base.len();
    let leq = (0..m).map(|x| (0..m).map(|y| lattice.leq(base[x], base[y])).collect()).collect();
    let op = |f: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<usize>> {
        (0..m).map(|x| (0..m).map(|y| first(f(base[x], base[y]))).collect()).collect()
    };
    Sample {
        order: FinitePreorder::new(leq).expect("pulled back order"),
        meet: op(&|a, b| lattice.meet(a, b)),
        join: op(&|a, b| lattice.join(a, b)),
        closure: (0..m).map(|x| first(base_closure[base[x]])).collect(),
        base_closure,
        lattice,
    }
}

/// A random poset on `n` points refining the natural order.
pub fn random_poset<R: Rng>(rng: &mut R, n: usize) -> FinitePreorder {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|_| rng.gen_bool(0.35)).collect();
    FinitePreorder::generated(n, &pairs)
}

/// Upset algebra of a random poset with up to 5 points.
pub fn random_brouwer<R: Rng>(rng: &mut R) -> FiniteAlgebra {
    let n = rng.gen_range(1..=5);
    upset_algebra(&random_poset(rng, n)).expect("small poset")
}

/// Upset algebras of every naturally labelled poset with 1 to `max` points.
pub fn all_upset_algebras(max: usize) -> Vec<FiniteAlgebra> {
    (1..=max).flat_map(natural_posets).map(|p| upset_algebra(&p).expect("small poset")).collect()
}
