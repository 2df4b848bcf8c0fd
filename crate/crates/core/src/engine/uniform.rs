//! Relatively uniform convergence: exact Cauchy-window checks, the harmonic sequence
//! `aₙ = Σ_{k≤n} (1/k)·e_k` that is `1`-uniformly Cauchy in the unitization of `c₀₀` with no
//! limit there, and certificate-driven limits of sequences inside `c₀₀`.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde_json::{json, Value};

use crate::element::Element;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::report::{LawReport, Verdict};
use crate::space::Space;
use crate::truncation::MeetWithOne;
use crate::unitization::{Unitization, UnitizedElement};

fn check_window(eps: &Rational, lo: u64, hi: u64) -> Result<()> {
    if !eps.is_positive() {
        return Err(Error::PreconditionViolated(format!(
            "eps = {eps} must be > 0"
        )));
    }
    if lo > hi {
        return Err(Error::PreconditionViolated(format!(
            "empty window [{lo}, {hi}]"
        )));
    }
    Ok(())
}

/// First pair `n < m` in `[lo, hi]` with `|seq(n) − seq(m)| ≰ eps·u`, if any.
pub fn uniform_cauchy_violation<F>(
    ctx: &Unitization,
    seq: F,
    u: &UnitizedElement,
    eps: &Rational,
    lo: u64,
    hi: u64,
) -> Result<Option<(u64, u64)>>
where
    F: Fn(u64) -> UnitizedElement,
{
    check_window(eps, lo, hi)?;
    if !ctx.is_positive(u)? {
        return Err(Error::PreconditionViolated(format!(
            "regulator {u} is not positive"
        )));
    }
    let bound = u.scale(eps);
    let terms: Vec<UnitizedElement> = (lo..=hi).map(&seq).collect();
    for (i, a) in terms.iter().enumerate() {
        for (j, b) in terms.iter().enumerate().skip(i + 1) {
            if !ctx.leq(&ctx.abs(&a.sub(b)?)?, &bound)? {
                return Ok(Some((lo + i as u64, lo + j as u64)));
            }
        }
    }
    Ok(None)
}

/// `|seq(n) − seq(m)| ≤ eps·u` for all `lo ≤ n, m ≤ hi`, exactly.
pub fn uniform_cauchy_prefix<F>(
    ctx: &Unitization,
    seq: F,
    u: &UnitizedElement,
    eps: &Rational,
    lo: u64,
    hi: u64,
) -> Result<bool>
where
    F: Fn(u64) -> UnitizedElement,
{
    Ok(uniform_cauchy_violation(ctx, seq, u, eps, lo, hi)?.is_none())
}

/// `aₙ = Σ_{k=1}^{n} (1/k)·e_k`.
pub fn harmonic_term(n: u64) -> Element {
    Element::sparse((1..=n).map(|k| (k, Rational::new(1, k as i64))))
}

/// `n(ε) = ⌈1/ε⌉`, the first index with `1/k ≤ ε` for all `k ≥ n(ε)`.
pub fn harmonic_index(eps: &Rational) -> u64 {
    eps.recip().and_then(|r| r.ceil_u64()).unwrap_or(1).max(1)
}

/// How one candidate limit was ruled out.
#[derive(Debug, Clone, PartialEq)]
pub enum Refutation {
    /// `λ ≠ 0`: the scalar part of `|aₙ − c|` is `|λ|`, which exceeds `eps` for
    /// every `n` of the tail window.
    ScalarPart {
        eps: Rational,
        lambda: Rational,
        window: (u64, u64),
    },
    /// `λ = 0` with support in `1..=n₀`: coordinate `n₀+1` of `|aₙ − c|` is `1/(n₀+1) > eps`
    /// for every `n ≥ n₀+1` of the tail window.
    Coordinate {
        eps: Rational,
        index: u64,
        gap: Rational,
        window: (u64, u64),
    },
}

impl Refutation {
    pub fn to_json(&self) -> Value {
        match self {
            Refutation::ScalarPart {
                eps,
                lambda,
                window,
            } => json!({
                "kind": "scalar_part",
                "eps": eps.to_string(),
                "abs_lambda": lambda.to_string(),
                "window": [window.0, window.1],
            }),
            Refutation::Coordinate {
                eps,
                index,
                gap,
                window,
            } => json!({
                "kind": "coordinate",
                "eps": eps.to_string(),
                "index": index,
                "gap": gap.to_string(),
                "window": [window.0, window.1],
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicOutcome {
    /// `(eps, n(eps), Cauchy on [n(eps), n(eps) + window])`.
    pub cauchy: Vec<(Rational, u64, bool)>,
    /// One entry per candidate; `None` means the candidate could not be ruled out.
    pub refutations: Vec<(UnitizedElement, Option<Refutation>)>,
    pub report: LawReport,
}

/// Smallest listed eps strictly below `limit`, else `limit / 2`.
fn eps_below(eps_list: &[Rational], limit: &Rational) -> Rational {
    eps_list
        .iter()
        .filter(|e| *e < limit)
        .min()
        .cloned()
        .unwrap_or_else(|| limit * &Rational::new(1, 2))
}

fn refute(
    ctx: &Unitization,
    eps_list: &[Rational],
    window: u64,
    c: &UnitizedElement,
) -> Result<Option<Refutation>> {
    let space = Space::SparseSeq;
    // |aₙ − c| when it is not within eps of 0, else None.
    let far_from = |n: u64, eps: &Rational| -> Result<Option<UnitizedElement>> {
        let d = ctx.abs(&UnitizedElement::embed(harmonic_term(n)).sub(c)?)?;
        Ok((!ctx.leq(&d, &UnitizedElement::scalar(space, eps.clone()))?).then_some(d))
    };
    if !c.lambda.is_zero() {
        let lam = c.lambda.abs();
        let eps = eps_below(eps_list, &lam);
        let lo = harmonic_index(&eps);
        for n in lo..=lo + window {
            match far_from(n, &eps)? {
                Some(d) if d.lambda == lam => {}
                _ => return Ok(None),
            }
        }
        return Ok(Some(Refutation::ScalarPart {
            eps,
            lambda: lam,
            window: (lo, lo + window),
        }));
    }
    let n0 = match &c.e {
        Element::Sparse(m) => m.keys().next_back().copied().unwrap_or(0),
        other => {
            return Err(Error::SpaceMismatch {
                left: space,
                right: other.space(),
            })
        }
    };
    let index = n0 + 1;
    let gap = Rational::new(1, index as i64);
    let eps = eps_below(eps_list, &gap);
    let lo = harmonic_index(&eps).max(index);
    for n in lo..=lo + window {
        match far_from(n, &eps)? {
            Some(d) if d.e.coord(index as usize) == Some(gap.clone()) => {}
            _ => return Ok(None),
        }
    }
    Ok(Some(Refutation::Coordinate {
        eps,
        index,
        gap,
        window: (lo, lo + window),
    }))
}

/// The harmonic sequence in the unitization of `c₀₀` is `1`-uniformly Cauchy but has no
/// `1`-uniform limit.
///
/// For each eps the Cauchy condition is checked exactly on `[n(ε), n(ε) + window]`. Each
/// candidate limit `c = (v, λ)` is then ruled out on a tail window: through the scalar part
/// when `λ ≠ 0`, else through the first coordinate past the support of `v`.
pub fn repro_example43(
    eps_list: &[Rational],
    window: u64,
    candidate_limits: &[UnitizedElement],
) -> Result<HarmonicOutcome> {
    if let Some(e) = eps_list.iter().find(|e| !e.is_positive()) {
        return Err(Error::PreconditionViolated(format!(
            "eps = {e} must be > 0"
        )));
    }
    let ctx = Unitization::new(Arc::new(MeetWithOne));
    let one = ctx.one();
    let seq = |n: u64| UnitizedElement::embed(harmonic_term(n));

    let mut cauchy = Vec::new();
    for eps in eps_list {
        let lo = harmonic_index(eps);
        let ok = uniform_cauchy_prefix(&ctx, seq, &one, eps, lo, lo + window)?;
        cauchy.push((eps.clone(), lo, ok));
    }
    let mut refutations = Vec::new();
    for c in candidate_limits {
        refutations.push((c.clone(), refute(&ctx, eps_list, window, c)?));
    }

    let trials = (cauchy.len() + refutations.len()) as u64;
    let verdict = if let Some((eps, lo, _)) = cauchy.iter().find(|(_, _, ok)| !ok) {
        Verdict::Refuted {
            witness: json!({ "eps": eps.to_string(), "from": lo, "window": window }),
        }
    } else if let Some((c, _)) = refutations.iter().find(|(_, r)| r.is_none()) {
        Verdict::Inconclusive {
            bound: window,
            witness: Some(json!({ "candidate": c.to_json() })),
        }
    } else {
        Verdict::Pass
    };
    let report = LawReport::new("example43", trials, verdict).with_note(format!(
        "{} eps windows, {} candidate limits",
        cauchy.len(),
        refutations.len()
    ));
    Ok(HarmonicOutcome {
        cauchy,
        refutations,
        report,
    })
}

/// The candidate limit family used by the reproduction: 21 elements covering nonzero
/// scalar parts of both signs and sizes, and zero scalar part with empty, harmonic and
/// arbitrary finite supports.
pub fn harmonic_candidates() -> Vec<UnitizedElement> {
    let mut out = Vec::new();
    for lambda in [
        Rational::new(1, 2),
        Rational::new(-1, 3),
        Rational::one(),
        Rational::new(1, 100),
        Rational::from(-2),
    ] {
        out.push(UnitizedElement::new(Element::sparse([]), lambda.clone()));
        out.push(UnitizedElement::new(harmonic_term(5), lambda));
    }
    out.push(UnitizedElement::new(
        harmonic_term(50),
        Rational::new(1, 1000),
    ));
    out.push(UnitizedElement::embed(Element::sparse([])));
    for n0 in 1..=8 {
        out.push(UnitizedElement::embed(harmonic_term(n0)));
    }
    out.push(UnitizedElement::embed(Element::sparse([
        (1, Rational::one()),
        (3, Rational::new(1, 3)),
        (7, Rational::from(5)),
    ])));
    out
}

/// A sequence in `c₀₀` together with a claimed stabilization index for every coordinate
/// it ever touches.
pub struct CertifiedSequence {
    pub name: String,
    pub term: Box<dyn Fn(u64) -> Element + Send + Sync>,
    /// coordinate → index from which that coordinate is constant.
    pub certificate: BTreeMap<u64, u64>,
    pub regulator: Element,
    /// How far past the last certified index the certificate is re-checked.
    pub horizon: u64,
}

/// Limits extracted from certificates, in fixture order.
#[derive(Debug, Clone, PartialEq)]
pub struct CertifiedLimits {
    pub limits: Vec<(String, Element)>,
    pub report: LawReport,
}

/// Extracts each fixture's coordinatewise limit from its certificate and verifies it.
///
/// Every term up to the last certified index plus the horizon must be supported inside the
/// certified coordinates, each coordinate must hold its value from its certified index on,
/// and each `|aₙ − c|` must be a multiple of the regulator bounded by `εₙ·v` where `εₙ = 0`
/// once all coordinates have settled.
pub fn repro_c00_ruc(fixtures: &[CertifiedSequence]) -> Result<CertifiedLimits> {
    let mut limits = Vec::new();
    let mut trials = 0u64;
    for f in fixtures {
        let settle = f.certificate.values().copied().max().unwrap_or(1).max(1);
        let last = settle + f.horizon;
        let terms: Vec<Element> = (1..=last).map(|n| (f.term)(n)).collect();
        let term = |n: u64| &terms[(n - 1) as usize];
        let declared: BTreeSet<u64> = f.certificate.keys().copied().collect();

        for n in 1..=last {
            let Element::Sparse(m) = term(n) else {
                return Err(Error::SpaceMismatch {
                    left: Space::SparseSeq,
                    right: term(n).space(),
                });
            };
            if let Some(k) = m.keys().find(|k| !declared.contains(k)) {
                return Err(Error::InvalidCertificate(format!(
                    "{}: term {n} touches uncertified coordinate {k}",
                    f.name
                )));
            }
        }
        let mut limit = BTreeMap::new();
        for (&k, &from) in &f.certificate {
            let from = from.max(1);
            let value = term(from).coord(k as usize).unwrap_or_else(Rational::zero);
            for n in from..=last {
                if term(n).coord(k as usize).unwrap_or_else(Rational::zero) != value {
                    return Err(Error::InvalidCertificate(format!(
                        "{}: coordinate {k} changes at term {n} after its certified index {from}",
                        f.name
                    )));
                }
            }
            limit.insert(k, value);
        }
        let c = Element::sparse(limit);

        for n in 1..=last {
            trials += 1;
            let diff = term(n).sub(&c)?.abs();
            let eps = regulator_multiple(&diff, &f.regulator).ok_or_else(|| {
                Error::InvalidCertificate(format!(
                    "{}: term {n} is not dominated by the regulator",
                    f.name
                ))
            })?;
            if n >= settle && !eps.is_zero() {
                return Err(Error::InvalidCertificate(format!(
                    "{}: term {n} differs from the limit after every coordinate settled",
                    f.name
                )));
            }
            if !diff.leq(&f.regulator.scale(&eps))? {
                return Err(Error::KernelBug(format!(
                    "{}: |a_{n} - c| > {eps}·v",
                    f.name
                )));
            }
        }
        limits.push((f.name.clone(), c));
    }
    let report = LawReport::pass("c00_ruc", trials)
        .with_note(format!("{} certified sequences", fixtures.len()));
    Ok(CertifiedLimits { limits, report })
}

/// Smallest `ε ≥ 0` with `d ≤ ε·v` for `d ≥ 0`, or `None` when `d` leaves the support of `v`.
fn regulator_multiple(d: &Element, v: &Element) -> Option<Rational> {
    let (Element::Sparse(dm), Element::Sparse(vm)) = (d, v) else {
        return None;
    };
    let mut eps = Rational::zero();
    for (k, dk) in dm {
        let vk = vm.get(k).filter(|vk| vk.is_positive())?;
        eps = eps.max(dk / vk);
    }
    Some(eps)
}

/// The fixtures used by the reproduction: a coordinate that settles immediately, a constant
/// sequence, and a truncated harmonic sequence settling at index 5.
pub fn c00_fixtures() -> Vec<CertifiedSequence> {
    vec![
        CertifiedSequence {
            name: "settles_at_one".into(),
            term: Box::new(|_| Element::sparse([(1, Rational::one())])),
            certificate: BTreeMap::from([(1, 1)]),
            regulator: Element::sparse([(1, Rational::one())]),
            horizon: 20,
        },
        CertifiedSequence {
            name: "constant".into(),
            term: Box::new(|_| {
                Element::sparse([(2, Rational::new(3, 4)), (5, Rational::from(-2))])
            }),
            certificate: BTreeMap::from([(2, 1), (5, 1)]),
            regulator: Element::sparse([(2, Rational::one()), (5, Rational::one())]),
            horizon: 20,
        },
        CertifiedSequence {
            name: "harmonic_prefix".into(),
            term: Box::new(|n| harmonic_term(n.min(5))),
            certificate: (1..=5).map(|k| (k, k)).collect(),
            regulator: Element::sparse((1..=5).map(|k| (k, Rational::one()))),
            horizon: 50,
        },
    ]
}
