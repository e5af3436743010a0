use std::fmt;
use std::sync::Arc;

use crate::name::{shift_minus, Shifted, UpName};

/// Elements the spaces here decode to.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Value {
    Nat(u64),
    Seq(UpName),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Nat(n) => write!(f, "{n}"),
            Value::Seq(p) => write!(f, "{p}"),
        }
    }
}

type Decoder = Arc<dyn Fn(&UpName) -> Option<Value> + Send + Sync>;

/// A represented space given by its partial decoder on names.
#[derive(Clone)]
pub struct Space {
    pub name: String,
    decoder: Decoder,
    pub precomplete: bool,
}

impl fmt::Debug for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Space").field("name", &self.name).field("precomplete", &self.precomplete).finish()
    }
}

impl Space {
    pub fn new(name: &str, decoder: impl Fn(&UpName) -> Option<Value> + Send + Sync + 'static) -> Self {
        Space { name: name.to_string(), decoder: Arc::new(decoder), precomplete: false }
    }

    /// Baire space named by itself.
    pub fn baire() -> Self {
        Space::new("N^N", |p| Some(Value::Seq(p.clone())))
    }

    /// Naturals named by the first entry.
    pub fn nat() -> Self {
        Space::new("N", |p| Some(Value::Nat(p.at(0))))
    }

    /// Cantor space: the binary sequences named by themselves.
    pub fn cantor() -> Self {
        Space::new("2^N", |p| p.range().iter().all(|&x| x <= 1).then(|| Value::Seq(p.clone())))
    }

    pub fn decode(&self, p: &UpName) -> Option<Value> {
        (self.decoder)(p)
    }

    /// Names read through the shift by minus one.
    pub fn precompletion(&self) -> Space {
        let inner = self.clone();
        Space {
            name: format!("{}^p", self.name),
            decoder: Arc::new(move |p| match shift_minus(p) {
                Shifted::Infinite(q) => inner.decode(&q),
                Shifted::Finite(_) => None,
            }),
            precomplete: true,
        }
    }
}

/// Decoding in the completion: the precompletion where it is defined and
/// `None` standing for ⊥ everywhere else. Total on names.
pub fn decode_completion(space: &Space, p: &UpName) -> Option<Value> {
    space.precompletion().decode(p)
}
