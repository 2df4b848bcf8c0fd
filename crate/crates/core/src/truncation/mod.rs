//! Truncations: maps `x ↦ x̄` on the positive cone satisfying
//! `a ∧ b̄ ≤ ā ≤ a` and `ā = 0 ⇒ a = 0`.
//!
//! Each truncation kind is a [`Truncation`] trait object. Kinds are looked up by name in a
//! [`TruncationRegistry`], which is how descriptors and the `--trunc` flag select them.

mod catalog;
pub mod fixtures;
mod laws;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde_json::Value;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::space::Space;

pub use catalog::{Identity, LexMeetZeroOne, MeetWithOne, MeetWithUnit};
pub use laws::{
    check_prop21, check_prop22, check_tau1, check_tau2, check_tau3, compare_fixed_sets,
    tau3_report, FixedSetComparison,
};

/// Outcome of a search for a violation of the Archimedean truncation axiom
/// (`\overline{na} = na` for every `n` forces `a = 0`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tau3Verdict {
    /// `x > 0` with `\overline{nx} = nx` for every searched `n`.
    ViolationWitness(Element),
    NoViolationUpTo(u64),
    /// Proven by a closed-form argument for this kind: `\overline{nx} = nx` for all `n`.
    SymbolicViolation(Element),
    SymbolicPass,
}

pub trait Truncation: Send + Sync + fmt::Debug {
    /// Registry name, e.g. `meet_with_one`.
    fn name(&self) -> &str;

    fn space(&self) -> Space;

    /// The raw map. Callers guarantee `x ≥ 0` and `x` in [`Truncation::space`].
    fn apply(&self, x: &Element) -> Element;

    /// The truncation unit `u` when `x̄ = x ∧ u` for every positive `x`.
    fn unit(&self) -> Option<Element> {
        None
    }

    /// JSON descriptor that rebuilds this truncation through the registry.
    fn descriptor(&self) -> Value;

    /// Closed-form decision of the Archimedean truncation axiom, when the kind allows one.
    /// `samples` are positive elements a witness may be drawn from.
    fn tau3_symbolic(&self, _samples: &[Element]) -> Option<Tau3Verdict> {
        None
    }
}

impl dyn Truncation + '_ {
    /// `x̄` for `x ≥ 0`; negative inputs are rejected rather than silently folded.
    pub fn truncate(&self, x: &Element) -> Result<Element> {
        self.check_space(x)?;
        if !x.is_positive() {
            return Err(Error::NegativeInput(format!("cannot truncate {x}")));
        }
        Ok(self.apply(x))
    }

    /// `x ∈ Ē`, i.e. `\overline{|x|} = |x|`.
    pub fn in_fixed_set(&self, x: &Element) -> Result<bool> {
        self.check_space(x)?;
        let a = x.abs();
        Ok(self.apply(&a) == a)
    }

    pub fn is_unital(&self) -> bool {
        self.unit().is_some()
    }

    fn check_space(&self, x: &Element) -> Result<()> {
        if x.space() != self.space() {
            return Err(Error::SpaceMismatch {
                left: self.space(),
                right: x.space(),
            });
        }
        Ok(())
    }
}

type Builder = fn(Space, &Value) -> Result<Arc<dyn Truncation>>;

/// Name → constructor table for truncation kinds.
pub struct TruncationRegistry {
    builders: BTreeMap<String, Builder>,
}

impl TruncationRegistry {
    pub fn empty() -> Self {
        TruncationRegistry {
            builders: BTreeMap::new(),
        }
    }

    /// The four cataloged kinds.
    pub fn catalog() -> Self {
        let mut r = Self::empty();
        r.register("meet_with_unit", catalog::build_meet_with_unit);
        r.register("meet_with_one", catalog::build_meet_with_one);
        r.register("lex_meet_zero_one", catalog::build_lex_meet_zero_one);
        r.register("identity", catalog::build_identity);
        r
    }

    /// The catalog plus the test fixtures (some of which are deliberately broken).
    pub fn with_fixtures() -> Self {
        let mut r = Self::catalog();
        fixtures::register_all(&mut r);
        r
    }

    pub fn register(&mut self, name: &str, builder: Builder) {
        self.builders.insert(name.to_string(), builder);
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.builders.keys().map(String::as_str)
    }

    /// Builds from `{"kind": <name>, ...}`.
    pub fn build(&self, space: Space, descriptor: &Value) -> Result<Arc<dyn Truncation>> {
        let kind = descriptor
            .get("kind")
            .and_then(Value::as_str)
            .ok_or_else(|| {
                Error::InvalidDescriptor("truncation descriptor needs a \"kind\"".into())
            })?;
        let builder = self
            .builders
            .get(kind)
            .ok_or_else(|| Error::InvalidDescriptor(format!("unknown truncation kind {kind:?}")))?;
        builder(space, descriptor)
    }

    /// Accepts a bare kind name or a JSON descriptor.
    pub fn parse_arg(&self, space: Space, arg: &str) -> Result<Arc<dyn Truncation>> {
        let t = arg.trim();
        let value = if t.starts_with('{') {
            serde_json::from_str(t).map_err(|e| Error::InvalidDescriptor(e.to_string()))?
        } else {
            serde_json::json!({ "kind": t })
        };
        self.build(space, &value)
    }
}

/// The truncation each space is paired with when none is given: meet with the all-ones
/// unit, meet with the constant 1, meet with `(0,1)`, and the identity.
pub fn default_descriptor(space: Space) -> Value {
    let kind = match space {
        Space::FinitePointwise(_) => "meet_with_unit",
        Space::SparseSeq => "meet_with_one",
        Space::LexPlane => "lex_meet_zero_one",
        Space::IdentityLine => "identity",
    };
    serde_json::json!({ "kind": kind })
}

impl Default for TruncationRegistry {
    fn default() -> Self {
        Self::catalog()
    }
}
