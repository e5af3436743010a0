use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabError {
    #[error("relation matrix is not square")]
    NotSquare,
    #[error("relation is not reflexive at {0}")]
    NotReflexive(usize),
    #[error("relation is not transitive at {0} <= {1} <= {2}")]
    NotTransitive(usize, usize, usize),
    #[error("order is not antisymmetric at {0} and {1}")]
    NotAntisymmetric(usize, usize),
    #[error("{0} and {1} have no {2}")]
    NotLattice(usize, usize, &'static str),
    #[error("lattice has no elements")]
    Empty,
    #[error("table {0} is malformed")]
    BadTable(&'static str),
    #[error("map is not a closure operator: {0}")]
    NotClosure(crate::order::Violation),
    #[error("{what} of size {size} exceeds the bound {bound}")]
    TooLarge { what: &'static str, size: usize, bound: usize },
    #[error("algebra has no implication")]
    NoImplication,
    #[error("variable {0} is unbound")]
    Unbound(char),
    #[error("formula syntax at {pos}: {msg}")]
    Formula { pos: usize, msg: String },
    #[error("algebra file line {line}: {msg}")]
    Syntax { line: usize, msg: String },
}
