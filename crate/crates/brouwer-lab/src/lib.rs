//! Finite-model laboratory for closure operators, Weihrauch-style
//! algebras and propositional validity.
//!
//! Brouwer algebras are kept in their own orientation: the unit is the
//! bottom, disjunction is evaluated as meet and conjunction as join, and a
//! formula is valid when every valuation sends it to the bottom.
//!
//! ```
//! use brouwer_lab::{is_valid, upset_algebra, FiniteAlgebra, FinitePreorder, Formula};
//! let jankov = Formula::jankov();
//! assert!(is_valid(&FiniteAlgebra::chain(4), &jankov).unwrap().holds());
//! let v = FinitePreorder::generated(3, &[(0, 1), (0, 2)]);
//! assert!(!is_valid(&upset_algebra(&v).unwrap(), &jankov).unwrap().holds());
//! ```

mod algebra;
mod error;
mod formula;
pub mod gen;
mod lattice;
mod order;
mod text;
mod valuation;

pub use algebra::{
    check_weihrauch_algebra, co_residual, is_embedding, natural_posets, upset_algebra, AlgebraClass, AlgebraReport,
    CoResidualFailure, FiniteAlgebra, Table, MAX_UPSET_POSET,
};
pub use error::LabError;
pub use formula::Formula;
pub use lattice::{quotient_lattice, FiniteLattice, Quotient};
pub use order::{
    check_closure_operator, check_preservation, closed_op, compose, induced_preorder, preserved_by, Axiom,
    FinitePreorder, Preservation, Violation,
};
pub use text::{parse_algebra, write_algebra};
pub use valuation::{
    evaluate, intuitionistic_axioms, is_valid, is_valid_with, theory_includes_jankov, Countervaluation, Mode,
    Validity, Valuation, MAX_CARRIER, MAX_VARS,
};
