//! Degree expressions over named problems: terms, reducibility kinds,
//! attribute flags and the prefix grammar.
//!
//! ```
//! use term_core::{parse_term, Kind};
//! let t = parse_term("meet(prod(WKL,LPO), INF)").unwrap();
//! assert_eq!(t.to_string(), "meet(prod(WKL,LPO),INF)");
//! assert!(Kind::SW.implies(Kind::TW));
//! ```

mod flags;
mod kind;
mod parse;
mod term;

#[cfg(feature = "gen")]
pub mod gen;

pub use flags::{AtomDecl, Flag, Tri, UnknownFlag};
pub use kind::{Kind, UnknownKind, KIND_EDGES};
pub use parse::{is_identifier, parse_term, ParseError};
pub use term::{BinOp, MOp, Term, UnOp};
