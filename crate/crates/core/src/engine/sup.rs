//! Suprema in the unitization: truncations of the elements below `x`, the unital variant
//! `x ∧ u`, and the transfer of finite suprema from `E` to `E ⊕ ℝ`.

use serde_json::json;

use crate::element::Element;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::report::{first_failure, LawReport, Verdict};
use crate::unitization::{Unitization, UnitizedElement};

/// Samples `y` with `0 ≤ y` in `E` and `y ≤ x` in the unitization.
fn below(ctx: &Unitization, x: &UnitizedElement, ys: &[Element]) -> Result<Vec<Element>> {
    let mut out = Vec::new();
    for y in ys {
        if y.is_positive() && ctx.leq(&UnitizedElement::embed(y.clone()), x)? {
            out.push(y.clone());
        }
    }
    Ok(out)
}

/// `sup{ȳ : y ∈ E, 0 ≤ y ≤ x} = x̄` for positive `x` in the unitization of a non-unital base.
///
/// Checks that every sampled `ȳ` lies below `x̄`, that `x̄` is attained by `y = x` when
/// `x ∈ E`, and that each candidate `z < x̄` is beaten by some sampled `ȳ`. The last part is
/// a search: a candidate nothing beats leaves the report inconclusive.
pub fn check_thm33_sup(
    ctx: &Unitization,
    x: &UnitizedElement,
    sample_ys: &[Element],
    candidate_zs: &[UnitizedElement],
) -> Result<LawReport> {
    if ctx.base_unit().is_some() {
        return Err(Error::PreconditionViolated(
            "base truncation is unital".into(),
        ));
    }
    if x.is_zero() || !ctx.is_positive(x)? {
        return Err(Error::PreconditionViolated(format!(
            "{x} is not strictly positive"
        )));
    }
    let t = ctx.truncation();
    let tx = ctx.truncate(x)?;
    let ys = below(ctx, x, sample_ys)?;

    let upper = first_failure(&ys, |y| {
        let ty = UnitizedElement::embed(t.truncate(y)?);
        Ok((!ctx.leq(&ty, &tx)?)
            .then(|| json!({ "x": x.to_json(), "y": y.to_json(), "part": "upper_bound" })))
    })?;
    if let Some(witness) = upper {
        return Ok(LawReport::new(
            "thm33.sup",
            ys.len() as u64,
            Verdict::Refuted { witness },
        ));
    }
    if x.lambda.is_zero() && UnitizedElement::embed(t.truncate(&x.e)?) != tx {
        return Ok(LawReport::new(
            "thm33.sup",
            ys.len() as u64,
            Verdict::Refuted {
                witness: json!({ "x": x.to_json(), "part": "attained" }),
            },
        ));
    }

    let truncated: Vec<UnitizedElement> = ys
        .iter()
        .map(|y| t.truncate(y).map(UnitizedElement::embed))
        .collect::<Result<_>>()?;
    let mut strict = 0u64;
    for z in candidate_zs {
        if *z == tx || !ctx.leq(z, &tx)? {
            continue;
        }
        strict += 1;
        let mut beaten = false;
        for ty in &truncated {
            if !ctx.leq(ty, z)? {
                beaten = true;
                break;
            }
        }
        if !beaten {
            return Ok(LawReport::new(
                "thm33.sup",
                ys.len() as u64 + strict,
                Verdict::Inconclusive {
                    bound: ys.len() as u64,
                    witness: Some(json!({ "x": x.to_json(), "z": z.to_json() })),
                },
            ));
        }
    }
    Ok(
        LawReport::pass("thm33.sup", ys.len() as u64 + strict).with_note(format!(
            "{} sampled y below x, {strict} candidates below x̄",
            ys.len()
        )),
    )
}

/// Unital variant: for `x = x₁ + μ(1 − u)` positive, `sup{ȳ : y ∈ E, 0 ≤ y ≤ x} = x ∧ u`
/// with `x ∧ u = x₁ ∧ u`, attained at `y = x₁`.
pub fn check_remark34(
    ctx: &Unitization,
    x1: &Element,
    mu: &Rational,
    sample_ys: &[Element],
) -> Result<LawReport> {
    let u = ctx
        .base_unit()
        .ok_or_else(|| Error::PreconditionViolated("base truncation is not unital".into()))?;
    let x = UnitizedElement::new(x1.sub(&u.scale(mu))?, mu.clone());
    if !ctx.is_positive(&x)? {
        return Err(Error::PreconditionViolated(format!("{x} is not positive")));
    }
    let t = ctx.truncation();
    let m = ctx.meet(&x, &UnitizedElement::embed(u.clone()))?;
    let expected = UnitizedElement::embed(x1.meet(&u)?);
    if m != expected {
        return Ok(LawReport::new(
            "remark34",
            1,
            Verdict::Refuted {
                witness: json!({ "x": x.to_json(), "x_meet_u": m.to_json(), "expected": expected.to_json() }),
            },
        ));
    }
    let ys = below(ctx, &x, sample_ys)?;
    let upper = first_failure(&ys, |y| {
        let ty = UnitizedElement::embed(t.truncate(y)?);
        Ok((!ctx.leq(&ty, &m)?).then(|| json!({ "x": x.to_json(), "y": y.to_json() })))
    })?;
    if let Some(witness) = upper {
        return Ok(LawReport::new(
            "remark34",
            ys.len() as u64,
            Verdict::Refuted { witness },
        ));
    }
    let mut note = format!("{} sampled y below x", ys.len());
    if x1.is_positive() && ctx.leq(&UnitizedElement::embed(x1.clone()), &x)? {
        if UnitizedElement::embed(t.truncate(x1)?) != m {
            return Ok(LawReport::new(
                "remark34",
                ys.len() as u64 + 1,
                Verdict::Refuted {
                    witness: json!({ "x": x.to_json(), "part": "attained" }),
                },
            ));
        }
        note.push_str("; attained at y = x1");
    }
    Ok(LawReport::pass("remark34", ys.len() as u64 + 1).with_note(note))
}

/// The supremum `a₀` of a finite `A ⊆ E` stays the supremum in the unitization: every
/// sampled upper bound of `A` in `E ⊕ ℝ` lies above `a₀`.
pub fn check_lemma54(
    ctx: &Unitization,
    set: &[Element],
    sampled_upper_bounds: &[UnitizedElement],
) -> Result<LawReport> {
    let a0 = UnitizedElement::embed(Element::sup_finite(set)?);
    let embedded: Vec<UnitizedElement> = set.iter().cloned().map(UnitizedElement::embed).collect();
    let mut bounds = Vec::new();
    for z in sampled_upper_bounds {
        let mut is_bound = true;
        for a in &embedded {
            if !ctx.leq(a, z)? {
                is_bound = false;
                break;
            }
        }
        if is_bound {
            bounds.push(z);
        }
    }
    let witness = first_failure(&bounds, |z| {
        Ok((!ctx.leq(&a0, z)?).then(|| json!({ "sup": a0.to_json(), "z": z.to_json() })))
    })?;
    let verdict = match witness {
        None => Verdict::Pass,
        Some(witness) => Verdict::Refuted { witness },
    };
    Ok(LawReport::new("lemma54", bounds.len() as u64, verdict))
}

/// Upper bounds of `A` in the unitization built without consulting the order, so that
/// [`check_lemma54`] is not handed only what it would accept anyway: `(a₀ + p, 0)` and
/// `(a₀ + p − μ·ȳ, μ)` for positive `p`, `y` and `μ > 0`. Both dominate every `(a, 0)`,
/// `a ∈ A`, because their difference with `(a, 0)` is positive by the cone description.
pub fn lemma54_bound(
    ctx: &Unitization,
    a0: &Element,
    p: &Element,
    y: &Element,
    mu: &Rational,
) -> Result<UnitizedElement> {
    let base = a0.add(p)?;
    if mu.is_zero() {
        return Ok(UnitizedElement::embed(base));
    }
    let ty = ctx.truncation().truncate(y)?;
    Ok(UnitizedElement::new(base.sub(&ty.scale(mu))?, mu.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use crate::truncation::{MeetWithOne, MeetWithUnit};
    use std::sync::Arc;

    fn c00() -> Unitization {
        Unitization::new(Arc::new(MeetWithOne))
    }

    fn sp(entries: &[(u64, i64)]) -> Element {
        Element::sparse(entries.iter().map(|&(k, n)| (k, q(n, 1))))
    }

    fn d2(a: i64, b: i64) -> Element {
        Element::dense(vec![q(a, 1), q(b, 1)])
    }

    #[test]
    fn thm33_with_x_one() {
        let u = c00();
        let x = u.one();
        let ys = vec![sp(&[(1, 1)]), sp(&[(1, 5), (2, 1)]), sp(&[(3, 1)])];
        let z = UnitizedElement::scalar(crate::space::Space::SparseSeq, q(1, 2));
        let r = check_thm33_sup(&u, &x, &ys, std::slice::from_ref(&z)).unwrap();
        assert!(r.is_pass(), "{r}");
        // {1:1} beats z = 1/2 at index 1
        assert!(!u.leq(&UnitizedElement::embed(sp(&[(1, 1)])), &z).unwrap());
    }

    #[test]
    fn thm33_attained_inside_e() {
        let u = c00();
        let x = UnitizedElement::embed(sp(&[(1, 3)]));
        assert_eq!(
            u.truncate(&x).unwrap(),
            UnitizedElement::embed(sp(&[(1, 1)]))
        );
        let r = check_thm33_sup(&u, &x, &[sp(&[(1, 3)])], &[]).unwrap();
        assert!(r.is_pass());
    }

    #[test]
    fn thm33_unresolved_candidate_is_inconclusive() {
        let u = c00();
        let z = UnitizedElement::embed(sp(&[(1, 1), (2, 1)]));
        let r = check_thm33_sup(&u, &u.one(), &[sp(&[(1, 1)])], &[z]).unwrap();
        assert!(matches!(r.verdict, Verdict::Inconclusive { .. }));
    }

    #[test]
    fn thm33_preconditions() {
        let unital = Unitization::new(Arc::new(MeetWithUnit::new(d2(1, 1)).unwrap()));
        assert!(matches!(
            check_thm33_sup(&unital, &unital.one(), &[], &[]),
            Err(Error::PreconditionViolated(_))
        ));
        let u = c00();
        assert!(check_thm33_sup(&u, &u.zero(), &[], &[]).is_err());
        assert!(check_thm33_sup(&u, &u.one().negate(), &[], &[]).is_err());
    }

    #[test]
    fn remark34_examples() {
        let ctx = Unitization::new(Arc::new(MeetWithUnit::new(d2(1, 1)).unwrap()));
        let ys = vec![d2(2, 0), d2(1, 0), d2(0, 0), d2(5, 5)];
        let r = check_remark34(&ctx, &d2(2, 0), &q(0, 1), &ys).unwrap();
        assert!(r.is_pass(), "{r}");
        assert_eq!(
            r.note.as_deref(),
            Some("3 sampled y below x; attained at y = x1")
        );

        let r = check_remark34(&ctx, &d2(0, 0), &q(1, 1), &ys).unwrap();
        assert!(r.is_pass(), "{r}");
        let r = check_remark34(&ctx, &d2(1, 1), &q(0, 1), &ys).unwrap();
        assert!(r.is_pass(), "{r}");
        assert!(check_remark34(&c00(), &sp(&[]), &q(0, 1), &[]).is_err());
    }

    #[test]
    fn lemma54_examples() {
        let u = c00();
        let set = vec![sp(&[(1, 1)]), sp(&[(2, 1)])];
        let a0 = UnitizedElement::embed(sp(&[(1, 1), (2, 1)]));
        let zs = vec![u.one(), a0.clone(), UnitizedElement::embed(sp(&[(1, 1)]))];
        let r = check_lemma54(&u, &set, &zs).unwrap();
        assert!(r.is_pass());
        assert_eq!(r.trials, 2);
        assert!(matches!(check_lemma54(&u, &[], &zs), Err(Error::EmptySet)));
    }

    #[test]
    fn constructed_bounds_dominate() {
        let u = c00();
        let set = vec![sp(&[(1, 2)]), sp(&[(1, -1), (4, 3)])];
        let a0 = Element::sup_finite(&set).unwrap();
        let z = lemma54_bound(&u, &a0, &sp(&[(2, 1)]), &sp(&[(1, 7), (3, 1)]), &q(3, 2)).unwrap();
        for a in &set {
            assert!(u.leq(&UnitizedElement::embed(a.clone()), &z).unwrap());
        }
    }
}
