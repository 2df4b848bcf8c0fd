//! Law checks for a single truncation over sampled positive elements.

use serde_json::{json, Value};

use super::{Tau3Verdict, Truncation};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::report::{report_from, LawReport, Verdict};

fn pair_witness(a: &Element, b: &Element) -> Value {
    json!({ "a": a.to_json(), "b": b.to_json() })
}

/// `a ∧ b̄ ≤ ā ≤ a` on every sampled pair of positive elements.
pub fn check_tau1(t: &dyn Truncation, pairs: &[(Element, Element)]) -> Result<LawReport> {
    report_from("tau1", pairs, |(a, b)| {
        let ta = t.truncate(a)?;
        let lower = a.meet(&t.truncate(b)?)?;
        Ok((!(lower.leq(&ta)? && ta.leq(a)?)).then(|| pair_witness(a, b)))
    })
}

/// `ā = 0 ⇒ a = 0` on every sample.
pub fn check_tau2(t: &dyn Truncation, samples: &[Element]) -> Result<LawReport> {
    report_from("tau2", samples, |a| {
        Ok((t.truncate(a)?.is_zero() && !a.is_zero()).then(|| json!({ "a": a.to_json() })))
    })
}

/// Decides the Archimedean truncation axiom: symbolically when the kind has a closed
/// form, else by checking `\overline{nx} = nx` for `n = 1..=bound` on each nonzero sample.
pub fn check_tau3(t: &dyn Truncation, samples: &[Element], bound: u64) -> Result<Tau3Verdict> {
    if let Some(v) = t.tau3_symbolic(samples) {
        return Ok(v);
    }
    for x in samples.iter().filter(|x| !x.is_zero()) {
        let mut fixed_for_all = true;
        for n in 1..=bound {
            let nx = x.scale(&Rational::from(n as i64));
            if t.truncate(&nx)? != nx {
                fixed_for_all = false;
                break;
            }
        }
        if fixed_for_all {
            return Ok(Tau3Verdict::ViolationWitness(x.clone()));
        }
    }
    Ok(Tau3Verdict::NoViolationUpTo(bound))
}

/// Folds a [`Tau3Verdict`] into a report. Bounded-search outcomes (searched up to
/// `bound`) are never claimed as proofs either way.
pub fn tau3_report(verdict: &Tau3Verdict, trials: u64, bound: u64) -> LawReport {
    match verdict {
        Tau3Verdict::SymbolicPass => LawReport::pass("tau3", trials).with_note("symbolic"),
        Tau3Verdict::SymbolicViolation(x) => LawReport::new(
            "tau3",
            trials,
            Verdict::Refuted {
                witness: json!({ "a": x.to_json() }),
            },
        )
        .with_note("symbolic: n·a is fixed for every n"),
        Tau3Verdict::ViolationWitness(x) => LawReport::new(
            "tau3",
            trials,
            Verdict::Inconclusive {
                bound,
                witness: Some(json!({ "a": x.to_json() })),
            },
        )
        .with_note("n·a fixed for every searched n"),
        Tau3Verdict::NoViolationUpTo(n) => LawReport::new(
            "tau3",
            trials,
            Verdict::Inconclusive {
                bound: *n,
                witness: None,
            },
        ),
    }
}

/// `a ∧ b̄ = ā ∧ b`.
pub fn check_prop21(t: &dyn Truncation, pairs: &[(Element, Element)]) -> Result<LawReport> {
    report_from("prop21", pairs, |(a, b)| {
        let lhs = a.meet(&t.truncate(b)?)?;
        let rhs = t.truncate(a)?.meet(b)?;
        Ok((lhs != rhs).then(|| pair_witness(a, b)))
    })
}

/// The six elementary consequences of the axioms, each evaluated on every pair:
/// `x̄ ≤ x`; monotonicity; idempotency; `Ē` is exactly the image of the truncation;
/// `Ē` is downward closed; the truncated Birkhoff inequality `|x̄ − ȳ| ≤ \overline{|x − y|}`.
pub fn check_prop22(t: &dyn Truncation, pairs: &[(Element, Element)]) -> Result<LawReport> {
    report_from("prop22", pairs, |(x, y)| {
        let fail = |item: u8| Some(json!({ "item": item, "x": x.to_json(), "y": y.to_json() }));
        let tx = t.truncate(x)?;
        let ty = t.truncate(y)?;
        if !tx.leq(x)? || !ty.leq(y)? {
            return Ok(fail(1));
        }
        let upper = x.join(y)?;
        let t_upper = t.truncate(&upper)?;
        if !tx.leq(&t_upper)? || !ty.leq(&t_upper)? || (x.leq(y)? && !tx.leq(&ty)?) {
            return Ok(fail(2));
        }
        if t.truncate(&tx)? != tx {
            return Ok(fail(3));
        }
        if !t.in_fixed_set(&tx)? || (t.in_fixed_set(x)? && tx != *x) {
            return Ok(fail(4));
        }
        let below = x.meet(&ty)?;
        if !t.in_fixed_set(&below)? || (x.leq(y)? && t.in_fixed_set(y)? && !t.in_fixed_set(x)?) {
            return Ok(fail(5));
        }
        let lhs = tx.sub(&ty)?.abs();
        let rhs = t.truncate(&x.sub(y)?.abs())?;
        if !lhs.leq(&rhs)? {
            return Ok(fail(6));
        }
        Ok(None)
    })
}

/// Agreement of two truncations, measured both through their fixed sets and pointwise.
#[derive(Debug, Clone, PartialEq)]
pub struct FixedSetComparison {
    pub fixed_sets_agree: bool,
    pub truncations_agree: bool,
    pub fixed_set_witness: Option<Element>,
    pub truncation_witness: Option<Element>,
    /// Samples actually compared (inputs plus their images under both maps).
    pub compared: usize,
}

impl FixedSetComparison {
    pub fn to_report(&self) -> LawReport {
        let verdict = if self.truncations_agree {
            Verdict::Pass
        } else {
            Verdict::Refuted {
                witness: json!({
                    "fixed_set_witness": self.fixed_set_witness.as_ref().map(Element::to_json),
                    "truncation_witness": self.truncation_witness.as_ref().map(Element::to_json),
                }),
            }
        };
        LawReport::new("lemma23", self.compared as u64, verdict)
    }
}

/// Compares two truncations on a sample set closed under both maps. Two truncations are
/// equal iff their fixed sets are, and closing the sample set makes the two sampled
/// verdicts coincide: when `x* ≠ x⋆`, one of `x*`, `x⋆` is fixed by one map and not the
/// other. A disagreement between the two verdicts is reported as a kernel bug.
pub fn compare_fixed_sets(
    t1: &dyn Truncation,
    t2: &dyn Truncation,
    samples: &[Element],
) -> Result<FixedSetComparison> {
    if t1.space() != t2.space() {
        return Err(Error::SpaceMismatch {
            left: t1.space(),
            right: t2.space(),
        });
    }
    let mut closed: Vec<Element> = Vec::with_capacity(samples.len() * 3);
    for x in samples {
        let a = x.abs();
        closed.push(t1.truncate(&a)?);
        closed.push(t2.truncate(&a)?);
        closed.push(a);
    }
    let mut fixed_set_witness = None;
    let mut truncation_witness = None;
    for x in &closed {
        if fixed_set_witness.is_none() && t1.in_fixed_set(x)? != t2.in_fixed_set(x)? {
            fixed_set_witness = Some(x.clone());
        }
        if truncation_witness.is_none() && t1.truncate(x)? != t2.truncate(x)? {
            truncation_witness = Some(x.clone());
        }
    }
    let cmp = FixedSetComparison {
        fixed_sets_agree: fixed_set_witness.is_none(),
        truncations_agree: truncation_witness.is_none(),
        fixed_set_witness,
        truncation_witness,
        compared: closed.len(),
    };
    if cmp.fixed_sets_agree != cmp.truncations_agree {
        return Err(Error::KernelBug(format!(
            "fixed-set and pointwise comparison diverge: {cmp:?}"
        )));
    }
    Ok(cmp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use crate::space::Space;
    use crate::truncation::fixtures::{Halving, MeetWithConstant, ZeroMap};
    use crate::truncation::{Identity, LexMeetZeroOne, MeetWithOne};

    fn sp(k: u64, n: i64, d: i64) -> Element {
        Element::sparse([(k, q(n, d))])
    }

    #[test]
    fn prop21_examples() {
        let t = MeetWithOne;
        let (a, b) = (sp(1, 2, 1), sp(1, 3, 1));
        assert_eq!(a.meet(&t.apply(&b)).unwrap(), sp(1, 1, 1));
        assert_eq!(t.apply(&a).meet(&b).unwrap(), sp(1, 1, 1));
        assert!(check_prop21(&t, &[(a.clone(), b), (a.clone(), a)])
            .unwrap()
            .is_pass());

        let lex = LexMeetZeroOne;
        let pair = (
            Element::lex(q(0, 1), q(5, 1)),
            Element::lex(q(1, 1), q(1, 1)),
        );
        assert!(check_prop21(&lex, &[pair]).unwrap().is_pass());
    }

    #[test]
    fn prop22_examples() {
        let t = MeetWithOne;
        let (x, y) = (sp(1, 3, 1), sp(1, 5, 1));
        let lhs = t.apply(&x).sub(&t.apply(&y)).unwrap().abs();
        assert!(lhs.is_zero());
        assert_eq!(t.apply(&x.sub(&y).unwrap().abs()), sp(1, 1, 1));
        assert_eq!(t.apply(&t.apply(&sp(1, 7, 1))), sp(1, 1, 1));
        assert!(check_prop22(&t, &[(x.clone(), y), (x.clone(), x)])
            .unwrap()
            .is_pass());
    }

    #[test]
    fn broken_fixtures_are_refuted() {
        let s = Space::SparseSeq;
        let x = sp(2, 3, 1);
        let r = check_tau2(&ZeroMap(s), std::slice::from_ref(&x)).unwrap();
        assert_eq!(
            r.verdict,
            Verdict::Refuted {
                witness: json!({"a": x.to_json()})
            }
        );
        assert!(check_tau1(&ZeroMap(s), &[(x.clone(), x.clone())])
            .unwrap()
            .is_pass());

        let pair = (sp(1, 2, 1), sp(1, 4, 1));
        assert!(check_tau1(&Halving(s), std::slice::from_ref(&pair))
            .unwrap()
            .verdict
            .is_refuted());
        assert!(check_prop21(&Halving(s), std::slice::from_ref(&pair))
            .unwrap()
            .verdict
            .is_refuted());
        let r = check_prop22(&Halving(s), &[pair]).unwrap();
        assert_eq!(r.verdict.witness().unwrap()["item"], json!(3));
    }

    #[test]
    fn tau3_by_kind() {
        let one = Element::line(q(1, 1));
        assert_eq!(
            check_tau3(&Identity, std::slice::from_ref(&one), 100).unwrap(),
            Tau3Verdict::SymbolicViolation(one)
        );
        assert_eq!(
            check_tau3(&LexMeetZeroOne, &[], 100).unwrap(),
            Tau3Verdict::SymbolicPass
        );
        assert_eq!(
            check_tau3(&MeetWithOne, &[], 100).unwrap(),
            Tau3Verdict::SymbolicPass
        );
        let unit_lex =
            crate::truncation::MeetWithUnit::new(Element::lex(q(1, 1), q(0, 1))).unwrap();
        assert!(matches!(
            check_tau3(&unit_lex, &[], 100).unwrap(),
            Tau3Verdict::SymbolicViolation(_)
        ));
    }

    #[test]
    fn tau3_bounded_search_for_fixtures() {
        let s = Space::SparseSeq;
        let samples = vec![sp(1, 1, 3)];
        // x ↦ x ∧ 2: n·(1/3) ≤ 2 only up to n = 6
        let c2 = MeetWithConstant::new(s, q(2, 1)).unwrap();
        assert_eq!(
            check_tau3(&c2, &samples, 100).unwrap(),
            Tau3Verdict::NoViolationUpTo(100)
        );
        assert_eq!(
            check_tau3(&c2, &samples, 6).unwrap(),
            Tau3Verdict::ViolationWitness(samples[0].clone())
        );
        let r = tau3_report(&Tau3Verdict::NoViolationUpTo(100), 1, 100);
        assert!(matches!(
            r.verdict,
            Verdict::Inconclusive { bound: 100, .. }
        ));
    }

    #[test]
    fn fixed_set_comparisons() {
        let s = Space::SparseSeq;
        let samples = vec![sp(1, 3, 2), sp(2, 1, 3), sp(3, 5, 1)];
        let same = compare_fixed_sets(&MeetWithOne, &MeetWithOne, &samples).unwrap();
        assert!(same.fixed_sets_agree && same.truncations_agree);

        let c2 = MeetWithConstant::new(s, q(2, 1)).unwrap();
        let diff = compare_fixed_sets(&MeetWithOne, &c2, &samples).unwrap();
        assert!(!diff.fixed_sets_agree && !diff.truncations_agree);
        assert_eq!(diff.fixed_set_witness, Some(sp(1, 3, 2)));
        assert_eq!(diff.truncation_witness, Some(sp(1, 3, 2)));

        let line_samples: Vec<Element> = (0..20).map(|n| Element::line(q(n, 3))).collect();
        let big = MeetWithConstant::new(Space::IdentityLine, q(1000, 1)).unwrap();
        let below = compare_fixed_sets(&Identity, &big, &line_samples).unwrap();
        assert!(below.fixed_sets_agree && below.truncations_agree);

        assert!(matches!(
            compare_fixed_sets(&Identity, &MeetWithOne, &[]),
            Err(Error::SpaceMismatch { .. })
        ));
    }
}
