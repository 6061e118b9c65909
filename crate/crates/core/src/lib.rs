//! Negative translations from classical to intuitionistic logic, read as
//! simplifications of Kolmogorov's translation.
//!
//! ```
//! use negtrans::{parse, rewrite::{builtin_ruleset, longest_result}, translations::{apply_translation, builtin}};
//!
//! let a = parse("forall x. (P(x) | Q)").unwrap();
//! let ko = apply_translation(&builtin("kolmogorov").unwrap(), &a);
//! let gg = apply_translation(&builtin("goedel_gentzen").unwrap(), &a);
//! assert_eq!(longest_result(&ko, &builtin_ruleset("r3_prime").unwrap()), gg);
//! ```
//!
//! The guide in `book/` walks through each module.

pub mod cli;
pub mod formula;
pub mod kernel;
pub mod kripke;
pub mod proofsearch;
pub mod rewrite;
pub mod syntax;
pub mod translations;
pub mod verify;

pub use formula::{BinOp, ConnectiveCounts, Formula, Quantifier, Symbol, Term};
pub use syntax::{parse, ParseError};

// Book chapters, so their snippets run with `cargo test --doc`.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/formulas.md")]
    mod formulas {}
    #[doc = include_str!("../../../book/src/translations.md")]
    mod translations {}
    #[doc = include_str!("../../../book/src/simplification.md")]
    mod simplification {}
    #[doc = include_str!("../../../book/src/proofs.md")]
    mod proofs {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
