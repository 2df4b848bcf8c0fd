use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde_json::Value as Json;

use super::term::{Assertion, Relation, Term};
use super::DslError;
use crate::element::Element;
use crate::error::Error;
use crate::rational::Rational;
use crate::space::Space;
use crate::truncation::Truncation;
use crate::unitization::{Unitization, UnitizedElement};

/// Where terms are evaluated: the base space with its truncation, or its unitization.
#[derive(Clone, Debug)]
pub struct EvalCtx {
    unitization: Unitization,
    unitized: bool,
}

impl EvalCtx {
    pub fn base(trunc: Arc<dyn Truncation>) -> Self {
        EvalCtx {
            unitization: Unitization::new(trunc),
            unitized: false,
        }
    }

    pub fn unitized(trunc: Arc<dyn Truncation>) -> Self {
        EvalCtx {
            unitization: Unitization::new(trunc),
            unitized: true,
        }
    }

    pub fn new(trunc: Arc<dyn Truncation>, unitized: bool) -> Self {
        EvalCtx {
            unitization: Unitization::new(trunc),
            unitized,
        }
    }

    pub fn is_unitized(&self) -> bool {
        self.unitized
    }

    pub fn space(&self) -> Space {
        self.unitization.base_space()
    }

    pub fn truncation(&self) -> &dyn Truncation {
        self.unitization.truncation()
    }

    pub fn truncation_arc(&self) -> Arc<dyn Truncation> {
        self.unitization.truncation_arc()
    }

    pub fn unitization(&self) -> &Unitization {
        &self.unitization
    }

    /// Reads a binding: an element of the base, or `{"e":..,"lambda":..}` in a unitization.
    pub fn value_from_json(&self, v: &Json) -> Result<DslValue, DslError> {
        if self.unitized && v.get("lambda").is_some() {
            return Ok(DslValue::Unitized(UnitizedElement::from_json(
                self.space(),
                v,
            )?));
        }
        Ok(DslValue::Base(Element::from_json(self.space(), v)?))
    }
}

/// The value of a term: a base element, or an element of the unitization.
#[derive(Clone, PartialEq, Eq)]
pub enum DslValue {
    Base(Element),
    Unitized(UnitizedElement),
}

impl DslValue {
    pub fn to_json(&self) -> Json {
        match self {
            DslValue::Base(x) => x.to_json(),
            DslValue::Unitized(x) => x.to_json(),
        }
    }

    fn lift(self) -> UnitizedElement {
        match self {
            DslValue::Base(x) => UnitizedElement::embed(x),
            DslValue::Unitized(x) => x,
        }
    }
}

impl fmt::Display for DslValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

impl fmt::Debug for DslValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub type Env = BTreeMap<String, DslValue>;

/// Exact evaluation of `term` under `env`.
pub fn eval(term: &Term, env: &Env, ctx: &EvalCtx) -> Result<DslValue, DslError> {
    if ctx.unitized {
        eval_unitized(term, env, ctx.unitization()).map(DslValue::Unitized)
    } else {
        eval_base(term, env, ctx.truncation()).map(DslValue::Base)
    }
}

fn eval_base(term: &Term, env: &Env, t: &dyn Truncation) -> Result<Element, DslError> {
    let go = |x: &Term| eval_base(x, env, t);
    Ok(match term {
        Term::Var(v) => match env.get(v) {
            Some(DslValue::Base(x)) => x.clone(),
            Some(DslValue::Unitized(x)) if x.lambda.is_zero() => x.e.clone(),
            Some(DslValue::Unitized(_)) => return Err(DslError::OneOutsideUnitization),
            None => return Err(DslError::UnboundVariable(v.clone())),
        },
        Term::Lit(c) if c.is_zero() => Element::zero(t.space()),
        Term::Lit(_) | Term::One => return Err(DslError::OneOutsideUnitization),
        Term::Add(a, b) => go(a)?.add(&go(b)?)?,
        Term::Sub(a, b) => go(a)?.sub(&go(b)?)?,
        Term::Scale(c, a) => go(a)?.scale(c),
        Term::Join(a, b) => go(a)?.join(&go(b)?)?,
        Term::Meet(a, b) => go(a)?.meet(&go(b)?)?,
        Term::Abs(a) => go(a)?.abs(),
        Term::Pos(a) => go(a)?.pos(),
        Term::Neg(a) => go(a)?.neg(),
        Term::Trunc(a) => {
            let x = go(a)?;
            t.truncate(&x).map_err(|e| match e {
                Error::NegativeInput(_) => DslError::NegativeTruncArgument(x.to_string()),
                other => other.into(),
            })?
        }
    })
}

fn eval_unitized(term: &Term, env: &Env, u: &Unitization) -> Result<UnitizedElement, DslError> {
    let go = |x: &Term| eval_unitized(x, env, u);
    let space = u.base_space();
    Ok(match term {
        Term::Var(v) => {
            let val = env
                .get(v)
                .cloned()
                .ok_or_else(|| DslError::UnboundVariable(v.clone()))?
                .lift();
            if val.space() != space {
                return Err(Error::SpaceMismatch {
                    left: space,
                    right: val.space(),
                }
                .into());
            }
            val
        }
        Term::Lit(c) => UnitizedElement::scalar(space, c.clone()),
        Term::One => UnitizedElement::scalar(space, Rational::one()),
        Term::Add(a, b) => go(a)?.add(&go(b)?)?,
        Term::Sub(a, b) => go(a)?.sub(&go(b)?)?,
        Term::Scale(c, a) => go(a)?.scale(c),
        Term::Join(a, b) => u.join(&go(a)?, &go(b)?)?,
        Term::Meet(a, b) => u.meet(&go(a)?, &go(b)?)?,
        Term::Abs(a) => u.abs(&go(a)?)?,
        Term::Pos(a) => u.pos(&go(a)?)?,
        Term::Neg(a) => u.neg(&go(a)?)?,
        Term::Trunc(a) => {
            let x = go(a)?;
            u.truncate(&x).map_err(|e| match e {
                Error::NegativeInput(_) => DslError::NegativeTruncArgument(x.to_string()),
                other => other.into(),
            })?
        }
    })
}

/// Both evaluated sides and whether the relation held.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssertionOutcome {
    pub holds: bool,
    pub lhs: DslValue,
    pub rhs: DslValue,
}

pub fn check_assertion(
    a: &Assertion,
    env: &Env,
    ctx: &EvalCtx,
) -> Result<AssertionOutcome, DslError> {
    let lhs = eval(&a.lhs, env, ctx)?;
    let rhs = eval(&a.rhs, env, ctx)?;
    let holds = match (&lhs, &rhs) {
        (DslValue::Base(l), DslValue::Base(r)) => match a.relation {
            Relation::Leq => l.leq(r)?,
            Relation::Geq => r.leq(l)?,
            Relation::Eq => l == r,
            Relation::Disjoint => l.abs().meet(&r.abs())?.is_zero(),
        },
        (DslValue::Unitized(l), DslValue::Unitized(r)) => {
            let u = ctx.unitization();
            match a.relation {
                Relation::Leq => u.leq(l, r)?,
                Relation::Geq => u.leq(r, l)?,
                Relation::Eq => l == r,
                Relation::Disjoint => u.disjoint(l, r)?,
            }
        }
        _ => {
            return Err(DslError::Core(Error::KernelBug(
                "mixed evaluation contexts".into(),
            )))
        }
    };
    Ok(AssertionOutcome { holds, lhs, rhs })
}
