//! Non-commutative polynomials over an indexed generator alphabet and the
//! normal-ordering rewriting engine.

mod abelian;
mod poly;
mod rewrite;
mod word;

pub use abelian::{abelianize, expand_terms_eps, CommPoly};
pub use poly::NcPoly;
pub use rewrite::{Measure, Mode, RewriteRule, RewriteStats, RuleKind, RuleTable, Strategy};
pub use word::{Alphabet, CopyId, Generator, Letter, PlainAlphabet, Word};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NcError {
    #[error("generator {0} does not belong to the relation system")]
    UnknownGenerator(String),
    #[error("rule {lhs} -> {rhs_word} does not decrease the termination measure ({before:?} -> {after:?})")]
    MeasureViolation {
        lhs: String,
        rhs_word: String,
        before: Measure,
        after: Measure,
    },
    #[error("a rule for {0} is already registered")]
    DuplicateRule(String),
}
