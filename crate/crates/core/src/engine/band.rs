//! Bands of `FinitePointwise(n)` (coordinate subsets) and the splitting of a unital
//! unitization into `E ⊕ E^d` with `E^d = ℝ·(1 − u)`.

use std::collections::BTreeSet;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::space::Space;
use crate::unitization::{Unitization, UnitizedElement};

/// The band of `FinitePointwise(dim)` of elements supported in `coords` (1-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordBand {
    dim: usize,
    coords: BTreeSet<usize>,
}

impl CoordBand {
    pub fn new(dim: usize, coords: impl IntoIterator<Item = usize>) -> Result<Self> {
        let coords: BTreeSet<usize> = coords.into_iter().collect();
        if let Some(bad) = coords.iter().find(|&&k| k == 0 || k > dim) {
            return Err(Error::PreconditionViolated(format!(
                "coordinate {bad} outside 1..={dim}"
            )));
        }
        Ok(CoordBand { dim, coords })
    }

    pub fn full(dim: usize) -> Self {
        CoordBand {
            dim,
            coords: (1..=dim).collect(),
        }
    }

    pub fn empty(dim: usize) -> Self {
        CoordBand {
            dim,
            coords: BTreeSet::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coords(&self) -> &BTreeSet<usize> {
        &self.coords
    }

    /// `B^d`: the complementary coordinates.
    pub fn complement(&self) -> Self {
        CoordBand {
            dim: self.dim,
            coords: (1..=self.dim)
                .filter(|k| !self.coords.contains(k))
                .collect(),
        }
    }

    pub fn contains(&self, x: &Element) -> bool {
        match x {
            Element::Dense(v) if v.len() == self.dim => v
                .iter()
                .enumerate()
                .all(|(i, c)| c.is_zero() || self.coords.contains(&(i + 1))),
            _ => false,
        }
    }

    fn mask(&self, x: &Element) -> Result<Element> {
        match x {
            Element::Dense(v) if v.len() == self.dim => Ok(Element::dense(
                v.iter()
                    .enumerate()
                    .map(|(i, c)| {
                        if self.coords.contains(&(i + 1)) {
                            c.clone()
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect(),
            )),
            _ => Err(Error::SpaceMismatch {
                left: Space::FinitePointwise(self.dim),
                right: x.space(),
            }),
        }
    }
}

/// Component of `x ≥ 0` in `band`: `sup(B⁺ ∩ [0, x])`, which is `x` restricted to the band's
/// coordinates.
pub fn band_component(band: &CoordBand, x: &Element) -> Result<Element> {
    if !x.is_positive() {
        return Err(Error::NegativeInput(format!("band component of {x}")));
    }
    band.mask(x)
}

/// A band of the unitization of a unital base: `(B ∩ E) ⊕ (B ∩ E^d)`, where the second
/// summand is either `0` or all of `E^d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitizedBand {
    pub base: CoordBand,
    pub include_dual: bool,
}

impl UnitizedBand {
    pub fn complement(&self) -> Self {
        UnitizedBand {
            base: self.base.complement(),
            include_dual: !self.include_dual,
        }
    }
}

/// Splits `x = (x₁ + λu) + λ(1 − u)` along `E ⊕ E^d` and projects each summand onto the band.
/// Returns `(P_B x, x − P_B x)`.
pub fn project_band_unitized(
    ctx: &Unitization,
    band: &UnitizedBand,
    x: &UnitizedElement,
) -> Result<(UnitizedElement, UnitizedElement)> {
    let u = ctx
        .base_unit()
        .ok_or_else(|| Error::PreconditionViolated("base truncation is not unital".into()))?;
    if ctx.base_space() != Space::FinitePointwise(band.base.dim) {
        return Err(Error::SpaceMismatch {
            left: ctx.base_space(),
            right: Space::FinitePointwise(band.base.dim),
        });
    }
    let e_part = x.e.add(&u.scale(&x.lambda))?;
    let mut in_b = UnitizedElement::embed(band.base.mask(&e_part)?);
    if band.include_dual {
        in_b = in_b.add(&UnitizedElement::new(
            u.scale(&-&x.lambda),
            x.lambda.clone(),
        ))?;
    }
    let in_bd = x.sub(&in_b)?;
    Ok((in_b, in_bd))
}

/// Membership of `y` in a unitized band, read off the `E ⊕ E^d` coordinates of `y`.
pub fn in_unitized_band(
    ctx: &Unitization,
    band: &UnitizedBand,
    y: &UnitizedElement,
) -> Result<bool> {
    let u = ctx
        .base_unit()
        .ok_or_else(|| Error::PreconditionViolated("base truncation is not unital".into()))?;
    let e_part = y.e.add(&u.scale(&y.lambda))?;
    Ok(band.base.contains(&e_part) && (band.include_dual || y.lambda.is_zero()))
}
