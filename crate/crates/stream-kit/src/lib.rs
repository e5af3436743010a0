//! Baire-space names restricted to ultimately periodic sequences, with
//! pairing, the plus/minus-one shifts, precompletion and completion
//! decoding, totalization of stream transformers, and executable checks
//! of completeness witnesses for LPO, SORT and ACC.
//!
//! ```
//! use stream_kit::{shift_minus, Shifted, UpName};
//! let p: UpName = "3,1,0,2;(2)".parse().unwrap();
//! assert_eq!(shift_minus(&p), Shifted::Infinite("2,0,1;(1)".parse().unwrap()));
//! assert_eq!(shift_minus(&UpName::constant(0)), Shifted::Finite(vec![]));
//! ```

pub mod gen;
mod name;
mod problems;
mod space;
mod transformer;

use thiserror::Error;

pub use name::{
    cantor_pair, cantor_unpair, interleave, proj_even, proj_odd, shift_minus, shift_plus, CountableTuple, Shifted,
    UpName,
};
pub use problems::{
    acc, check_reduction, cluster_point_k, completeness_witness, lpo, sort_problem, unary_coding_k, Bound, NatSet,
    Problem, ReductionFailure, ReductionReport, Semantics, SOLUTION_WINDOW,
};
pub use space::{decode_completion, Space, Value};
pub use transformer::{pad, table_transformer, totalize, PrefixTransformer, Run, State, DEFAULT_PERIODS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StreamError {
    #[error("name syntax: {0}")]
    Parse(String),
    #[error("period must be nonempty")]
    EmptyPeriod,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("run not determined within the bound: {0}")]
    Undetermined(String),
}
