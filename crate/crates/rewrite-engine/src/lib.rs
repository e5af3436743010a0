//! Kind-indexed normalization of degree expressions.
//!
//! Every rule is an oriented equivalence tagged with the strongest kind at
//! which it holds. `normalize(t, k, kb)` uses the rules whose tag implies `k`;
//! conditional rules consult a [`Facts`] oracle and stay silent on unknowns.
//!
//! ```
//! use rewrite_engine::{normalize, NoFacts};
//! use term_core::{parse_term, Kind};
//! let t = parse_term("comp(comp(lim))").unwrap();
//! assert_eq!(normalize(&t, Kind::SW, &NoFacts).unwrap().to_string(), "comp(lim)");
//! ```

pub mod guards;
mod normalize;
mod rules;

pub use guards::{Facts, NoFacts};
pub use normalize::{
    apply_rule, equivalent, normalize, normalize_bounded, normalize_traced, redexes, rewrite_at,
    RewriteError, DEFAULT_STEP_BOUND,
};
pub use rules::{lookup, respects, rule_set, Guard, Rule};
