use std::collections::HashMap;

use rewrite_engine::Facts;
use term_core::{Flag, Kind, Term, Tri};

/// A hand-filled fact table for tests.
#[derive(Default)]
pub struct TableFacts {
    pub flags: HashMap<(Flag, Term), Tri>,
    pub le: HashMap<(Kind, Term, Term), Tri>,
}

impl TableFacts {
    pub fn with_flag(mut self, f: Flag, t: &str) -> Self {
        self.flags.insert((f, t.parse().unwrap()), Tri::True);
        self
    }

    pub fn with_nle(mut self, k: Kind, a: &str, b: &str) -> Self {
        self.le.insert((k, a.parse().unwrap(), b.parse().unwrap()), Tri::False);
        self
    }

    /// Flags in the spirit of the seed: a few complete and pointed atoms, all
    /// atoms distinct from ∞.
    pub fn seedlike() -> Self {
        let mut f = TableFacts::default();
        for a in ["lim", "LPO", "WKL", "J"] {
            f = f
                .with_flag(Flag::StronglyComplete, a)
                .with_flag(Flag::Pointed, a)
                .with_nle(Kind::W, "INF", a);
        }
        for a in ["C_N", "zero", "a", "b", "c"] {
            f = f.with_nle(Kind::W, "INF", a);
        }
        f.with_flag(Flag::Complete, "COH").with_flag(Flag::Pointed, "C_N")
    }
}

impl Facts for TableFacts {
    fn flag(&self, flag: Flag, t: &Term) -> Tri {
        self.flags.get(&(flag, t.clone())).copied().unwrap_or_default()
    }

    fn le(&self, kind: Kind, lhs: &Term, rhs: &Term) -> Tri {
        self.le.get(&(kind, lhs.clone(), rhs.clone())).copied().unwrap_or_default()
    }
}

#[allow(dead_code)]
pub const ATOMS: [&str; 8] = ["lim", "LPO", "WKL", "C_N", "COH", "a", "b", "c"];
