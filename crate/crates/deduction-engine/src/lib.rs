//! Forward-chaining closure of reducibility facts.
//!
//! Facts are signed atoms `le(kind, f, g)`, `prop(flag, f)` and
//! `leM(A, B)` over a finite universe of terms kept in rewrite normal form.
//! Closure applies the Horn rules of [`inference_rules`] forwards and, for
//! refuted conclusions, backwards; every fact remembers how it was derived.
//!
//! ```
//! use deduction_engine::{Closure, KnowledgeBase};
//! use term_core::{parse_term, Flag, Kind};
//! let kb = KnowledgeBase::parse("atom f\natom g\nfact le SW f g").unwrap();
//! let c = Closure::new(&kb, 1, &[]);
//! let (f, g) = (parse_term("f").unwrap(), parse_term("g").unwrap());
//! assert!(c.query_le(Kind::TW, &f, &g).is_yes());
//! assert!(!c.query_le(Kind::SW, &g, &f).is_yes());
//! assert!(c.query_prop(Flag::StronglyComplete, &parse_term("comp(f)").unwrap()).is_yes());
//! ```

mod closure;
mod kb;
mod rules;
mod universe;

pub use closure::{explain, Answer, Atom, Closure, Contradiction, Fact, FactId, Origin, ProofTrace};
pub use kb::{seed_text, InputFacts, Input, KbError, KnowledgeBase, Source, Statement};
pub use rules::{families, inference_rules, lookup, Lit, Pat, Rule, CONTRA};
pub use universe::{Id, Universe};

pub const DEFAULT_DEPTH: usize = 1;
