//! A small term language over the lattice operations, with exact evaluation and a file
//! format for sampled assertions.
//!
//! ```text
//! x /\ tr(y) == tr(x) /\ y
//! |tr(x) - tr(y)| <= tr(|x - y|)
//! ```

mod assertion;
mod eval;
mod parse;
mod term;

use thiserror::Error;

pub use assertion::{
    parse_assertion_file, run_assertion_file, AssertionFile, AssertionLine, SampleMode,
};
pub use eval::{check_assertion, eval, AssertionOutcome, DslValue, Env, EvalCtx};
pub use parse::{parse, parse_assertion, ParseError};
pub use term::{Assertion, Relation, Term};

#[derive(Debug, Error)]
pub enum DslError {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("tr applied to a value that is not positive: {0}")]
    NegativeTruncArgument(String),
    #[error("constants other than 0 need a unitization (pass --unitize)")]
    OneOutsideUnitization,
    #[error(transparent)]
    Core(#[from] crate::error::Error),
    #[error("line {line}: {msg}")]
    File { line: usize, msg: String },
}
