use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::name::UpName;

pub type State = Vec<u64>;
type Step = Arc<dyn Fn(&State, u64) -> (State, Vec<u64>) + Send + Sync>;

/// A stream transformer that reads one symbol at a time, updates its state
/// and appends a finite word to its output. Output on a prefix never
/// retracts when the prefix grows.
#[derive(Clone)]
pub struct PrefixTransformer {
    pub name: String,
    init: State,
    step: Step,
}

impl fmt::Debug for PrefixTransformer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PrefixTransformer({})", self.name)
    }
}

/// Output of a transformer on a whole name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Run {
    Total(UpName),
    /// the output stops after these symbols
    Stalls(Vec<u64>),
    /// no state repetition within the bound; holds the output so far
    Undetermined(Vec<u64>),
}

impl Run {
    pub fn total(self) -> Option<UpName> {
        match self {
            Run::Total(p) => Some(p),
            _ => None,
        }
    }
}

pub const DEFAULT_PERIODS: usize = 256;

impl PrefixTransformer {
    pub fn new(name: &str, init: State, step: impl Fn(&State, u64) -> (State, Vec<u64>) + Send + Sync + 'static) -> Self {
        PrefixTransformer { name: name.to_string(), init, step: Arc::new(step) }
    }

    /// A transformer writing one word per input symbol.
    pub fn pointwise(name: &str, f: impl Fn(u64) -> Vec<u64> + Send + Sync + 'static) -> Self {
        PrefixTransformer::new(name, Vec::new(), move |s, a| (s.clone(), f(a)))
    }

    pub fn identity() -> Self {
        PrefixTransformer::pointwise("id", |a| vec![a])
    }

    /// `p ↦ p + 1`.
    pub fn plus_one() -> Self {
        PrefixTransformer::pointwise("+1", |a| vec![a + 1])
    }

    pub fn step(&self, s: &State, a: u64) -> (State, Vec<u64>) {
        (self.step)(s, a)
    }

    pub fn initial(&self) -> &State {
        &self.init
    }

    /// Output after reading `prefix`.
    pub fn output_on_prefix(&self, prefix: &[u64]) -> Vec<u64> {
        let mut s = self.init.clone();
        let mut out = Vec::new();
        for &a in prefix {
            let (t, w) = self.step(&s, a);
            s = t;
            out.extend(w);
        }
        out
    }

    /// Run on an ultimately periodic name. The output is periodic from the
    /// first period boundary whose state repeats.
    pub fn run(&self, p: &UpName, max_periods: usize) -> Run {
        let mut s = self.init.clone();
        let mut out = Vec::new();
        for &a in p.preamble() {
            let (t, w) = self.step(&s, a);
            s = t;
            out.extend(w);
        }
        let mut seen: HashMap<State, usize> = HashMap::new();
        for _ in 0..max_periods {
            if let Some(&mark) = seen.get(&s) {
                if out.len() == mark {
                    out.truncate(mark);
                    return Run::Stalls(out);
                }
                let per = out.split_off(mark);
                return Run::Total(UpName::new(out, per).expect("nonempty cycle output"));
            }
            seen.insert(s.clone(), out.len());
            for &a in p.period() {
                let (t, w) = self.step(&s, a);
                s = t;
                out.extend(w);
            }
        }
        Run::Undetermined(out)
    }
}

/// Total version of `f`: after every input symbol write a 0, followed by
/// the symbols `f` wrote, each raised by one. Minus-one decoding of the
/// result is the output of `f` wherever `f` is defined, and ⊥ where it
/// stalls.
pub fn totalize(f: &PrefixTransformer) -> PrefixTransformer {
    let f = f.clone();
    PrefixTransformer::new(&format!("total({})", f.name), f.init.clone(), move |s, a| {
        let (t, w) = f.step(s, a);
        (t, std::iter::once(0).chain(w.into_iter().map(|x| x + 1)).collect())
    })
}

/// The keep-alive padding alone: after every input symbol write a 0, then
/// the symbols of `f` unchanged. Both sides agree after minus-one decoding.
pub fn pad(f: &PrefixTransformer) -> PrefixTransformer {
    let f = f.clone();
    PrefixTransformer::new(&format!("pad({})", f.name), f.init.clone(), move |s, a| {
        let (t, w) = f.step(s, a);
        (t, std::iter::once(0).chain(w).collect())
    })
}

/// A random finite-state transformer over `states` states. Each transition
/// writes up to two symbols and may write nothing, so runs can stall.
pub fn table_transformer(name: &str, table: Vec<Vec<(usize, Vec<u64>)>>) -> PrefixTransformer {
    let width = table.first().map_or(1, |r| r.len().max(1));
    PrefixTransformer::new(name, vec![0], move |s, a| {
        let (next, w) = &table[s[0] as usize][a as usize % width];
        (vec![*next as u64], w.clone())
    })
}
