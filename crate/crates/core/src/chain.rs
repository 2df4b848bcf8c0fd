//! Finite increasing chains: the decomposition of a chain bounded by `|u| + |v|`, and
//! additivity of suprema along two chains indexed alike.
//!
//! Nets over general directed sets are represented only by finite increasing sequences.

use crate::element::Element;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainSplit {
    pub u_chain: Vec<Element>,
    pub v_chain: Vec<Element>,
}

pub fn is_increasing(chain: &[Element]) -> Result<bool> {
    for w in chain.windows(2) {
        if !w[0].leq(&w[1])? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Splits `0 ≤ x₁ ≤ x₂ ≤ … ≤ |u| + |v|` into `xᵢ = uᵢ + vᵢ` with
/// `uᵢ = (xᵢ ∨ −|u|) ∧ |u|`; both parts are again increasing with `0 ≤ uᵢ ≤ |u|`
/// and `0 ≤ vᵢ ≤ |v|`.
pub fn decompose_chain(chain: &[Element], u: &Element, v: &Element) -> Result<ChainSplit> {
    let abs_u = u.abs();
    let abs_v = v.abs();
    let bound = abs_u.add(&abs_v)?;
    if !is_increasing(chain)? {
        return Err(Error::PreconditionViolated(
            "chain is not increasing".into(),
        ));
    }
    let neg_abs_u = abs_u.negate();
    let mut split = ChainSplit {
        u_chain: Vec::with_capacity(chain.len()),
        v_chain: Vec::with_capacity(chain.len()),
    };
    for x in chain {
        if !x.is_positive() || !x.leq(&bound)? {
            return Err(Error::PreconditionViolated(format!(
                "chain element {x} is not in [0, |u|+|v|]"
            )));
        }
        let ui = x.join(&neg_abs_u)?.meet(&abs_u)?;
        let vi = x.sub(&ui)?;
        split.u_chain.push(ui);
        split.v_chain.push(vi);
    }
    Ok(split)
}

/// `sup(xᵢ + yᵢ) = sup xᵢ + sup yᵢ` for two increasing chains of equal length.
pub fn check_chain_sup_additivity(xs: &[Element], ys: &[Element]) -> Result<bool> {
    if xs.is_empty() || xs.len() != ys.len() {
        return Err(Error::PreconditionViolated(
            "chains must be nonempty and of equal length".into(),
        ));
    }
    if !is_increasing(xs)? || !is_increasing(ys)? {
        return Err(Error::PreconditionViolated(
            "chains must be increasing".into(),
        ));
    }
    let sums = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| x.add(y))
        .collect::<Result<Vec<_>>>()?;
    let lhs = Element::sup_finite(&sums)?;
    let rhs = Element::sup_finite(xs)?.add(&Element::sup_finite(ys)?)?;
    Ok(lhs == rhs)
}
