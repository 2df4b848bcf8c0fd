use std::sync::Arc;

use serde_json::{json, Value};

use super::{Tau3Verdict, Truncation};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::space::Space;

/// `x̄ = x ∧ u` for a fixed `u ≥ 0`; unital with unit `u`.
#[derive(Debug, Clone)]
pub struct MeetWithUnit {
    unit: Element,
}

impl MeetWithUnit {
    pub fn new(unit: Element) -> Result<Self> {
        if !unit.is_positive() {
            return Err(Error::InvalidDescriptor(format!(
                "truncation unit {unit} is not positive"
            )));
        }
        Ok(MeetWithUnit { unit })
    }
}

impl Truncation for MeetWithUnit {
    fn name(&self) -> &str {
        "meet_with_unit"
    }

    fn space(&self) -> Space {
        self.unit.space()
    }

    fn apply(&self, x: &Element) -> Element {
        x.meet(&self.unit).expect("space checked by caller")
    }

    fn unit(&self) -> Option<Element> {
        Some(self.unit.clone())
    }

    fn descriptor(&self) -> Value {
        json!({ "kind": self.name(), "unit": self.unit.to_json() })
    }

    fn tau3_symbolic(&self, _samples: &[Element]) -> Option<Tau3Verdict> {
        // nx = nx ∧ u for all n means 0 ≤ nx ≤ u for all n.
        match &self.unit {
            // n·(0,1) < (a, b) for every n once a > 0.
            Element::Lex(a, _) if a.is_positive() => Some(Tau3Verdict::SymbolicViolation(
                Element::lex(Rational::zero(), Rational::one()),
            )),
            // u = (0, b): n·(0, s) ≤ (0, b) for all n forces s = 0, and a first coordinate
            // > 0 already exceeds u at n = 1.
            Element::Lex(..) => Some(Tau3Verdict::SymbolicPass),
            // Componentwise rational order: n·x_k ≤ u_k for all n forces x_k ≤ 0.
            _ => Some(Tau3Verdict::SymbolicPass),
        }
    }
}

/// `x̄ = x ∧ 1` on eventually-zero sequences. The constant sequence 1 is not in the
/// space, so this truncation is not unital.
#[derive(Debug, Clone, Copy)]
pub struct MeetWithOne;

impl Truncation for MeetWithOne {
    fn name(&self) -> &str {
        "meet_with_one"
    }

    fn space(&self) -> Space {
        Space::SparseSeq
    }

    fn apply(&self, x: &Element) -> Element {
        match x {
            Element::Sparse(m) => Element::Sparse(
                m.iter()
                    .map(|(k, v)| (*k, v.clone().min(Rational::one())))
                    .collect(),
            ),
            other => panic!("meet_with_one applied to {other}"),
        }
    }

    fn descriptor(&self) -> Value {
        json!({ "kind": self.name() })
    }

    fn tau3_symbolic(&self, _samples: &[Element]) -> Option<Tau3Verdict> {
        // n·x_k ≤ 1 for every n forces x_k = 0 at each coordinate of the support.
        Some(Tau3Verdict::SymbolicPass)
    }
}

/// `\overline{(x,y)} = (x,y) ∧ (0,1)` on the lexicographic plane; unital with unit (0,1).
#[derive(Debug, Clone, Copy)]
pub struct LexMeetZeroOne;

impl LexMeetZeroOne {
    fn unit_element() -> Element {
        Element::lex(Rational::zero(), Rational::one())
    }
}

impl Truncation for LexMeetZeroOne {
    fn name(&self) -> &str {
        "lex_meet_zero_one"
    }

    fn space(&self) -> Space {
        Space::LexPlane
    }

    fn apply(&self, x: &Element) -> Element {
        x.meet(&Self::unit_element()).expect("lex element")
    }

    fn unit(&self) -> Option<Element> {
        Some(Self::unit_element())
    }

    fn descriptor(&self) -> Value {
        json!({ "kind": self.name() })
    }

    fn tau3_symbolic(&self, _samples: &[Element]) -> Option<Tau3Verdict> {
        // x = (p, s) ≥ 0: p > 0 gives x > (0,1) already at n = 1; p = 0 needs n·s ≤ 1
        // for all n, so s = 0.
        Some(Tau3Verdict::SymbolicPass)
    }
}

/// `x̄ = x` on the line `{0} × ℚ`. A truncation, but not an Archimedean one.
#[derive(Debug, Clone, Copy)]
pub struct Identity;

impl Truncation for Identity {
    fn name(&self) -> &str {
        "identity"
    }

    fn space(&self) -> Space {
        Space::IdentityLine
    }

    fn apply(&self, x: &Element) -> Element {
        x.clone()
    }

    fn descriptor(&self) -> Value {
        json!({ "kind": self.name() })
    }

    fn tau3_symbolic(&self, samples: &[Element]) -> Option<Tau3Verdict> {
        // \overline{nx} = nx holds for every n and every x.
        let witness = samples
            .iter()
            .find(|x| !x.is_zero() && x.is_positive())
            .cloned()
            .unwrap_or_else(|| Element::line(Rational::one()));
        Some(Tau3Verdict::SymbolicViolation(witness))
    }
}

fn no_params(descriptor: &Value, kind: &str) -> Result<()> {
    match descriptor.as_object() {
        Some(obj) if obj.keys().all(|k| k == "kind") => Ok(()),
        _ => Err(Error::InvalidDescriptor(format!(
            "{kind} takes no parameters"
        ))),
    }
}

fn require_space(space: Space, want: Space, kind: &str) -> Result<()> {
    if space == want {
        Ok(())
    } else {
        Err(Error::InvalidDescriptor(format!(
            "{kind} is only defined on {want}, not {space}"
        )))
    }
}

pub(super) fn build_meet_with_unit(space: Space, d: &Value) -> Result<Arc<dyn Truncation>> {
    let unit = match (d.get("unit"), space) {
        (Some(unit), _) => Element::from_json(space, unit)?,
        (None, Space::FinitePointwise(n)) => Element::dense(vec![Rational::one(); n]),
        (None, _) => {
            return Err(Error::InvalidDescriptor(
                "meet_with_unit needs a \"unit\" element".into(),
            ))
        }
    };
    Ok(Arc::new(MeetWithUnit::new(unit)?))
}

pub(super) fn build_meet_with_one(space: Space, d: &Value) -> Result<Arc<dyn Truncation>> {
    no_params(d, "meet_with_one")?;
    require_space(space, Space::SparseSeq, "meet_with_one")?;
    Ok(Arc::new(MeetWithOne))
}

pub(super) fn build_lex_meet_zero_one(space: Space, d: &Value) -> Result<Arc<dyn Truncation>> {
    no_params(d, "lex_meet_zero_one")?;
    require_space(space, Space::LexPlane, "lex_meet_zero_one")?;
    Ok(Arc::new(LexMeetZeroOne))
}

pub(super) fn build_identity(space: Space, d: &Value) -> Result<Arc<dyn Truncation>> {
    no_params(d, "identity")?;
    require_space(space, Space::IdentityLine, "identity")?;
    Ok(Arc::new(Identity))
}
