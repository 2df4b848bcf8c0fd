//! Exact truncated vector lattices.
//!
//! The crate provides concrete Riesz spaces with exact rational scalars ([`element`]),
//! a catalog of truncations on them ([`truncation`]), the unitization `E ⊕ ℝ` with its
//! cone and absolute value ([`unitization`]), a deterministic law-checking engine
//! ([`engine`]), a small term language for stating identities ([`dsl`]), and scripted
//! reproductions of the classic counterexamples ([`repro`]).

pub mod chain;
pub mod dsl;
pub mod element;
pub mod engine;
pub mod error;
pub mod rational;
pub mod report;
pub mod repro;
pub mod space;
pub mod truncation;
pub mod unitization;

pub use element::Element;
pub use error::{Error, Result};
pub use rational::Rational;
pub use report::{LawReport, Verdict};
pub use space::Space;
pub use truncation::{Truncation, TruncationRegistry};
