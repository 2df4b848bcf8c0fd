//! Test fixtures. `ZeroMap` and `Halving` are deliberately not truncations so the refuting
//! paths of the law checks get exercised; `MeetWithConstant` is a legitimate truncation
//! used to compare fixed sets against the catalog.

use std::sync::Arc;

use serde_json::{json, Value};

use super::{Truncation, TruncationRegistry};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::space::Space;

/// `x ↦ 0`. Satisfies `a ∧ b̄ ≤ ā ≤ a` but violates `ā = 0 ⇒ a = 0`.
#[derive(Debug, Clone, Copy)]
pub struct ZeroMap(pub Space);

impl Truncation for ZeroMap {
    fn name(&self) -> &str {
        "fixture_zero"
    }
    fn space(&self) -> Space {
        self.0
    }
    fn apply(&self, _x: &Element) -> Element {
        Element::zero(self.0)
    }
    fn descriptor(&self) -> Value {
        json!({ "kind": self.name() })
    }
}

/// `x ↦ x/2`. Breaks the first axiom and idempotency.
#[derive(Debug, Clone, Copy)]
pub struct Halving(pub Space);

impl Truncation for Halving {
    fn name(&self) -> &str {
        "fixture_halving"
    }
    fn space(&self) -> Space {
        self.0
    }
    fn apply(&self, x: &Element) -> Element {
        x.scale(&Rational::new(1, 2))
    }
    fn descriptor(&self) -> Value {
        json!({ "kind": self.name() })
    }
}

/// Pointwise `x ↦ x ∧ c` for a constant `c > 0` on a pointwise space.
#[derive(Debug, Clone)]
pub struct MeetWithConstant {
    space: Space,
    c: Rational,
}

impl MeetWithConstant {
    pub fn new(space: Space, c: Rational) -> Result<Self> {
        if !c.is_positive() {
            return Err(Error::InvalidDescriptor("constant must be > 0".into()));
        }
        if space == Space::LexPlane {
            return Err(Error::InvalidDescriptor(
                "fixture_meet_with_constant needs a pointwise space".into(),
            ));
        }
        Ok(MeetWithConstant { space, c })
    }
}

impl Truncation for MeetWithConstant {
    fn name(&self) -> &str {
        "fixture_meet_with_constant"
    }
    fn space(&self) -> Space {
        self.space
    }
    fn apply(&self, x: &Element) -> Element {
        let m = |v: &Rational| v.clone().min(self.c.clone());
        match x {
            Element::Dense(v) => Element::Dense(v.iter().map(m).collect()),
            Element::Sparse(s) => Element::Sparse(s.iter().map(|(k, v)| (*k, m(v))).collect()),
            Element::Line(v) => Element::Line(m(v)),
            Element::Lex(..) => unreachable!("rejected at construction"),
        }
    }
    fn unit(&self) -> Option<Element> {
        match self.space {
            Space::FinitePointwise(n) => Some(Element::dense(vec![self.c.clone(); n])),
            _ => None,
        }
    }
    fn descriptor(&self) -> Value {
        json!({ "kind": self.name(), "c": self.c.to_string() })
    }
}

pub(super) fn register_all(reg: &mut TruncationRegistry) {
    reg.register("fixture_zero", |space, _| Ok(Arc::new(ZeroMap(space))));
    reg.register("fixture_halving", |space, _| Ok(Arc::new(Halving(space))));
    reg.register("fixture_meet_with_constant", |space, d| {
        let c = d
            .get("c")
            .and_then(Value::as_str)
            .ok_or_else(|| {
                Error::InvalidDescriptor("fixture_meet_with_constant needs \"c\"".into())
            })?
            .parse::<Rational>()
            .map_err(|e| Error::InvalidDescriptor(e.to_string()))?;
        Ok(Arc::new(MeetWithConstant::new(space, c)?))
    });
}
