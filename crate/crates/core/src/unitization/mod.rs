//! The unitization `E ⊕ ℝ` of a truncated space.
//!
//! An element `x + λ` is stored as `(x, λ)`. The positive cone is
//! `E⁺ ∪ { x + λ : λ > 0, (1/λ)·x⁻ ∈ Ē }`, the absolute value follows the closed formula
//! below, and join/meet are derived from it, so that formula is the single source of
//! truth for the order structure. On the unitization the truncation is `a ↦ a ∧ 1`.

mod theorems;

use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::element::Element;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::space::Space;
use crate::truncation::Truncation;

pub use theorems::{
    check_ideal, check_thm11_fixedset, density_check, orthogonal_complement_witness,
    ComplementWitness,
};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UnitizedElement {
    pub e: Element,
    pub lambda: Rational,
}

impl UnitizedElement {
    pub fn new(e: Element, lambda: Rational) -> Self {
        UnitizedElement { e, lambda }
    }

    /// `x ↦ (x, 0)`.
    pub fn embed(e: Element) -> Self {
        UnitizedElement {
            e,
            lambda: Rational::zero(),
        }
    }

    /// `λ·1`.
    pub fn scalar(space: Space, lambda: Rational) -> Self {
        UnitizedElement {
            e: Element::zero(space),
            lambda,
        }
    }

    pub fn zero(space: Space) -> Self {
        Self::scalar(space, Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.e.is_zero() && self.lambda.is_zero()
    }

    pub fn space(&self) -> Space {
        self.e.space()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(UnitizedElement {
            e: self.e.add(&other.e)?,
            lambda: &self.lambda + &other.lambda,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        Ok(UnitizedElement {
            e: self.e.sub(&other.e)?,
            lambda: &self.lambda - &other.lambda,
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        UnitizedElement {
            e: self.e.scale(c),
            lambda: c * &self.lambda,
        }
    }

    pub fn negate(&self) -> Self {
        UnitizedElement {
            e: self.e.negate(),
            lambda: -&self.lambda,
        }
    }

    /// `{"e": <element>, "lambda": "p/q"}`.
    pub fn to_json(&self) -> Value {
        json!({ "e": self.e.to_json(), "lambda": self.lambda.to_string() })
    }

    pub fn from_json(space: Space, value: &Value) -> Result<Self> {
        let obj = value
            .as_object()
            .filter(|o| o.len() == 2 && o.contains_key("e") && o.contains_key("lambda"))
            .ok_or_else(|| {
                Error::InvalidDescriptor(format!(
                    "expected {{\"e\":..,\"lambda\":..}}, got {value}"
                ))
            })?;
        let e = Element::from_json(space, &obj["e"])?;
        let lambda = obj["lambda"]
            .as_str()
            .ok_or_else(|| Error::InvalidDescriptor("lambda must be a \"p/q\" string".into()))?
            .parse()
            .map_err(|e: crate::rational::ParseRationalError| {
                Error::InvalidDescriptor(e.to_string())
            })?;
        Ok(UnitizedElement { e, lambda })
    }
}

impl fmt::Display for UnitizedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

impl fmt::Debug for UnitizedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `E ⊕ ℝ` over a base space with its truncation.
#[derive(Clone, Debug)]
pub struct Unitization {
    trunc: Arc<dyn Truncation>,
}

impl Unitization {
    pub fn new(trunc: Arc<dyn Truncation>) -> Self {
        Unitization { trunc }
    }

    pub fn base_space(&self) -> Space {
        self.trunc.space()
    }

    pub fn truncation(&self) -> &dyn Truncation {
        self.trunc.as_ref()
    }

    pub fn truncation_arc(&self) -> Arc<dyn Truncation> {
        Arc::clone(&self.trunc)
    }

    /// The base truncation unit, when the base is unital.
    pub fn base_unit(&self) -> Option<Element> {
        self.trunc.unit()
    }

    pub fn one(&self) -> UnitizedElement {
        UnitizedElement::scalar(self.base_space(), Rational::one())
    }

    pub fn zero(&self) -> UnitizedElement {
        UnitizedElement::zero(self.base_space())
    }

    pub fn embed(&self, x: &Element) -> Result<UnitizedElement> {
        self.check(x)?;
        Ok(UnitizedElement::embed(x.clone()))
    }

    fn check(&self, x: &Element) -> Result<()> {
        if x.space() != self.base_space() {
            return Err(Error::SpaceMismatch {
                left: self.base_space(),
                right: x.space(),
            });
        }
        Ok(())
    }

    /// Cone membership. `λ < 0`: never; `λ = 0`: `x ≥ 0` in `E`; `λ > 0`: `(1/λ)·x⁻ ∈ Ē`.
    pub fn is_positive(&self, a: &UnitizedElement) -> Result<bool> {
        self.check(&a.e)?;
        if a.lambda.is_negative() {
            return Ok(false);
        }
        if a.lambda.is_zero() {
            return Ok(a.e.is_positive());
        }
        let inv = a.lambda.recip().expect("nonzero");
        self.trunc.in_fixed_set(&a.e.neg().scale(&inv))
    }

    pub fn leq(&self, a: &UnitizedElement, b: &UnitizedElement) -> Result<bool> {
        self.is_positive(&b.sub(a)?)
    }

    /// `|x + λ| = |x| − 2|λ|·\overline{(1/λ)x⁻ ∨ (−1/λ)x⁺} + |λ|` for `λ ≠ 0`, `|x|` for `λ = 0`.
    pub fn abs(&self, a: &UnitizedElement) -> Result<UnitizedElement> {
        self.check(&a.e)?;
        if a.lambda.is_zero() {
            return Ok(UnitizedElement::embed(a.e.abs()));
        }
        let inv = a.lambda.recip().expect("nonzero");
        let inner = a.e.neg().scale(&inv).join(&a.e.pos().scale(&-&inv))?;
        let t = self.trunc.truncate(&inner).map_err(|e| {
            Error::KernelBug(format!(
                "abs formula produced a non-positive truncation argument: {e}"
            ))
        })?;
        let lam = a.lambda.abs();
        let two_lam = &lam + &lam;
        Ok(UnitizedElement {
            e: a.e.abs().sub(&t.scale(&two_lam))?,
            lambda: lam,
        })
    }

    /// `a ∨ b = ½(a + b + |a − b|)`.
    pub fn join(&self, a: &UnitizedElement, b: &UnitizedElement) -> Result<UnitizedElement> {
        let d = self.abs(&a.sub(b)?)?;
        Ok(a.add(b)?.add(&d)?.scale(&Rational::new(1, 2)))
    }

    /// `a ∧ b = ½(a + b − |a − b|)`.
    pub fn meet(&self, a: &UnitizedElement, b: &UnitizedElement) -> Result<UnitizedElement> {
        let d = self.abs(&a.sub(b)?)?;
        Ok(a.add(b)?.sub(&d)?.scale(&Rational::new(1, 2)))
    }

    pub fn pos(&self, a: &UnitizedElement) -> Result<UnitizedElement> {
        self.join(a, &self.zero())
    }

    pub fn neg(&self, a: &UnitizedElement) -> Result<UnitizedElement> {
        self.join(&a.negate(), &self.zero())
    }

    /// The truncation of the unitization: `a ↦ a ∧ 1` on the positive cone.
    pub fn truncate(&self, a: &UnitizedElement) -> Result<UnitizedElement> {
        if !self.is_positive(a)? {
            return Err(Error::NegativeInput(format!("cannot truncate {a}")));
        }
        self.meet(a, &self.one())
    }

    /// `meet(|a|, |b|) = 0`.
    pub fn disjoint(&self, a: &UnitizedElement, b: &UnitizedElement) -> Result<bool> {
        Ok(self.meet(&self.abs(a)?, &self.abs(b)?)?.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use crate::truncation::{Identity, MeetWithOne, MeetWithUnit};

    fn c00() -> Unitization {
        Unitization::new(Arc::new(MeetWithOne))
    }

    fn ue(entries: &[(u64, (i64, i64))], lambda: (i64, i64)) -> UnitizedElement {
        UnitizedElement::new(
            Element::sparse(entries.iter().map(|&(k, (n, d))| (k, q(n, d)))),
            q(lambda.0, lambda.1),
        )
    }

    #[test]
    fn cone_examples() {
        let u = c00();
        assert!(u.is_positive(&ue(&[(1, (-1, 1))], (2, 1))).unwrap());
        assert!(!u.is_positive(&ue(&[(1, (-3, 1))], (2, 1))).unwrap());
        assert!(u.is_positive(&ue(&[(1, (5, 1))], (0, 1))).unwrap());
        assert!(!u.is_positive(&ue(&[], (-1, 1))).unwrap());
    }

    #[test]
    fn order_examples() {
        let u = c00();
        assert!(u.leq(&u.zero(), &u.one()).unwrap());
        assert!(u.leq(&ue(&[(1, (1, 2))], (0, 1)), &u.one()).unwrap());
        assert!(!u.leq(&ue(&[(1, (2, 1))], (0, 1)), &u.one()).unwrap());
    }

    #[test]
    fn abs_examples() {
        let u = c00();
        assert_eq!(
            u.abs(&ue(&[(1, (2, 1))], (-1, 1))).unwrap(),
            ue(&[], (1, 1))
        );
        assert_eq!(
            u.abs(&ue(&[(1, (1, 1))], (0, 1))).unwrap(),
            ue(&[(1, (1, 1))], (0, 1))
        );
        assert_eq!(u.abs(&ue(&[], (-3, 1))).unwrap(), ue(&[], (3, 1)));
    }

    #[test]
    fn join_meet_examples() {
        let u = c00();
        assert_eq!(u.join(&u.zero(), &u.one()).unwrap(), u.one());
        assert_eq!(
            u.meet(&ue(&[(1, (2, 1))], (0, 1)), &ue(&[], (1, 1)))
                .unwrap(),
            ue(&[(1, (1, 1))], (0, 1))
        );
        let a = ue(&[(1, (-2, 3)), (4, (5, 1))], (1, 2));
        assert_eq!(u.join(&a, &a).unwrap(), a);
    }

    #[test]
    fn truncate_examples() {
        let u = c00();
        assert_eq!(u.truncate(&ue(&[], (1, 1))).unwrap(), ue(&[], (1, 1)));
        assert_eq!(
            u.truncate(&ue(&[(1, (2, 1))], (0, 1))).unwrap(),
            ue(&[(1, (1, 1))], (0, 1))
        );
        assert_eq!(u.truncate(&ue(&[], (3, 1))).unwrap(), ue(&[], (1, 1)));
        assert!(matches!(
            u.truncate(&ue(&[], (-1, 1))),
            Err(Error::NegativeInput(_))
        ));
    }

    #[test]
    fn identity_line_unitization_is_scalar_dominated() {
        let u = Unitization::new(Arc::new(Identity));
        let big = UnitizedElement::embed(Element::line(q(1000, 1)));
        let tiny_one = UnitizedElement::scalar(Space::IdentityLine, q(1, 1000));
        assert!(u.leq(&big, &tiny_one).unwrap());
    }

    #[test]
    fn unital_base_one_minus_u_is_disjoint_from_e() {
        let unit = Element::dense(vec![q(1, 1), q(1, 1)]);
        let u = Unitization::new(Arc::new(MeetWithUnit::new(unit.clone()).unwrap()));
        let w = UnitizedElement::new(unit.negate(), q(1, 1));
        assert_eq!(u.abs(&w).unwrap(), w);
        let x = UnitizedElement::embed(Element::dense(vec![q(1, 1), q(0, 1)]));
        assert!(u.meet(&u.abs(&w).unwrap(), &x).unwrap().is_zero());
    }

    #[test]
    fn json_round_trip() {
        let a = ue(&[(3, (1, 2))], (-1, 3));
        let v = a.to_json();
        assert_eq!(v.to_string(), r#"{"e":{"3":"1/2"},"lambda":"-1/3"}"#);
        assert_eq!(UnitizedElement::from_json(Space::SparseSeq, &v).unwrap(), a);
        assert!(UnitizedElement::from_json(Space::SparseSeq, &json!({"e":{}})).is_err());
    }
}
