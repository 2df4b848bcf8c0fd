//! The Archimedean property of the base space: `0 ≤ n·x ≤ y` for every `n` forces `x = 0`.

use serde_json::json;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::report::{LawReport, Verdict};
use crate::space::Space;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArchimedeanDecision {
    /// `0 < x` and `n·x ≤ y` for every searched `n`.
    Witness(Element, Element),
    NoWitnessUpTo(u64),
    /// Closed-form answer for the space; `witness` is `(x, y)` when it is not Archimedean.
    SymbolicDecision {
        archimedean: bool,
        witness: Option<(Element, Element)>,
    },
}

/// The standard witness in the lexicographic plane: `n·(0,1) ≤ (1,0)` for every `n`.
pub fn lex_witness() -> (Element, Element) {
    (
        Element::lex(Rational::zero(), Rational::one()),
        Element::lex(Rational::one(), Rational::zero()),
    )
}

/// Smallest `n` with `n·x ≰ y`, for `x > 0` in a space ordered coordinatewise: any
/// coordinate `k` with `x_k > 0` gives `n = ⌊y_k / x_k⌋ + 1`. `None` when `x = 0`.
pub fn pointwise_breaking_multiple(x: &Element, y: &Element) -> Result<Option<u64>> {
    let coords: Vec<(Rational, Rational)> = match (x, y) {
        (Element::Dense(a), Element::Dense(b)) if a.len() == b.len() => {
            a.iter().cloned().zip(b.iter().cloned()).collect()
        }
        (Element::Sparse(a), Element::Sparse(b)) => a
            .iter()
            .map(|(k, v)| (v.clone(), b.get(k).cloned().unwrap_or_else(Rational::zero)))
            .collect(),
        (Element::Line(a), Element::Line(b)) => vec![(a.clone(), b.clone())],
        _ => {
            return Err(Error::PreconditionViolated(format!(
                "no coordinatewise bound for {x} and {y}"
            )))
        }
    };
    let mut best: Option<u64> = None;
    for (xk, yk) in coords.into_iter().filter(|(xk, _)| xk.is_positive()) {
        let q = &yk / &xk;
        let n = if q.is_negative() {
            1
        } else {
            q.floor_u64() + 1
        };
        best = Some(best.map_or(n, |b| b.min(n)));
    }
    Ok(best)
}

/// Bounded search over candidate pairs: a pair is a witness when `x ≠ 0` and
/// `n·x ≤ y` for `n = 1..=bound`.
pub fn bounded_archimedean_search(
    pairs: &[(Element, Element)],
    bound: u64,
) -> Result<ArchimedeanDecision> {
    for (x, y) in pairs {
        if x.is_zero() {
            continue;
        }
        let mut all = true;
        for n in 1..=bound {
            if !x.scale(&Rational::from(n as i64)).leq(y)? {
                all = false;
                break;
            }
        }
        if all {
            return Ok(ArchimedeanDecision::Witness(x.clone(), y.clone()));
        }
    }
    Ok(ArchimedeanDecision::NoWitnessUpTo(bound))
}

/// Decides the property for `space`. Every space kind has a closed form, so `pairs` are only
/// validated here; [`bounded_archimedean_search`] is the fallback for anything without one.
pub fn archimedean_check(
    space: Space,
    pairs: &[(Element, Element)],
    _bound: u64,
) -> Result<ArchimedeanDecision> {
    for (x, y) in pairs {
        if !x.is_positive() || !y.is_positive() {
            return Err(Error::NegativeInput(format!("candidate pair ({x}, {y})")));
        }
    }
    Ok(match space {
        Space::LexPlane => ArchimedeanDecision::SymbolicDecision {
            archimedean: false,
            witness: Some(lex_witness()),
        },
        Space::FinitePointwise(_) | Space::SparseSeq | Space::IdentityLine => {
            ArchimedeanDecision::SymbolicDecision {
                archimedean: true,
                witness: None,
            }
        }
    })
}

/// Suite form of [`archimedean_check`]. The symbolic answer is backed by evidence: the
/// lexicographic witness is replayed up to `bound`, and for coordinatewise spaces every
/// sampled pair with `x ≠ 0` gets an explicit `n` with `n·x ≰ y`.
pub fn archimedean_report(
    space: Space,
    pairs: &[(Element, Element)],
    bound: u64,
) -> Result<LawReport> {
    let trials = pairs.len() as u64;
    match archimedean_check(space, pairs, bound)? {
        ArchimedeanDecision::SymbolicDecision {
            archimedean: false,
            witness: Some((x, y)),
        } => {
            let replay = bounded_archimedean_search(&[(x.clone(), y.clone())], bound)?;
            if !matches!(replay, ArchimedeanDecision::Witness(..)) {
                return Err(Error::KernelBug(format!(
                    "witness ({x}, {y}) does not replay"
                )));
            }
            Ok(LawReport::new(
                "archimedean",
                trials,
                Verdict::Refuted {
                    witness: json!({ "x": x.to_json(), "y": y.to_json() }),
                },
            )
            .with_note(format!(
                "symbolic: n·x <= y for every n; replayed to n={bound}"
            )))
        }
        ArchimedeanDecision::SymbolicDecision {
            archimedean: true, ..
        } => {
            for (x, y) in pairs.iter().filter(|(x, _)| !x.is_zero()) {
                let n = pointwise_breaking_multiple(x, y)?
                    .ok_or_else(|| Error::KernelBug(format!("no positive coordinate in {x}")))?;
                if x.scale(&Rational::from(n as i64)).leq(y)? {
                    return Err(Error::KernelBug(format!("{n}·{x} <= {y}")));
                }
            }
            Ok(LawReport::pass("archimedean", trials).with_note("symbolic: coordinatewise order"))
        }
        ArchimedeanDecision::SymbolicDecision {
            archimedean: false,
            witness: None,
        } => Err(Error::KernelBug(
            "non-Archimedean decision without a witness".into(),
        )),
        ArchimedeanDecision::Witness(x, y) => Ok(LawReport::new(
            "archimedean",
            trials,
            Verdict::Inconclusive {
                bound,
                witness: Some(json!({ "x": x.to_json(), "y": y.to_json() })),
            },
        )),
        ArchimedeanDecision::NoWitnessUpTo(n) => Ok(LawReport::new(
            "archimedean",
            trials,
            Verdict::Inconclusive {
                bound: n,
                witness: None,
            },
        )),
    }
}
