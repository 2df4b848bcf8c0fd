//! Sampled checks of how `E` sits inside `E ⊕ ℝ`: the fixed set as the unit interval,
//! `E` as an ideal, the disjoint complement of `E`, and order density.

use serde_json::json;

use super::{Unitization, UnitizedElement};
use crate::element::Element;
use crate::error::Result;
use crate::rational::Rational;
use crate::report::{first_failure, report_from, LawReport, Verdict};

/// `x ∈ Ē ⟺ |x| ≤ 1` in the unitization, for each sample `x ∈ E`.
pub fn check_thm11_fixedset(ctx: &Unitization, samples: &[Element]) -> Result<LawReport> {
    report_from("thm11.fixed_set", samples, |x| {
        let in_fixed = ctx.truncation().in_fixed_set(x)?;
        let below_one = ctx.leq(&UnitizedElement::embed(x.abs()), &ctx.one())?;
        Ok((in_fixed != below_one).then(
            || json!({ "x": x.to_json(), "in_fixed_set": in_fixed, "abs_leq_one": below_one }),
        ))
    })
}

/// Ideal absorption: whenever `|b| ≤ |a|` with `a ∈ E`, the scalar part of `b` is zero.
/// Pairs whose premise fails are vacuous; the note records how many premises held.
pub fn check_ideal(ctx: &Unitization, pairs: &[(Element, UnitizedElement)]) -> Result<LawReport> {
    let mut premises = 0u64;
    for (a, b) in pairs {
        if ctx.leq(&ctx.abs(b)?, &UnitizedElement::embed(a.abs()))? {
            premises += 1;
        }
    }
    let report = report_from("thm11.ideal", pairs, |(a, b)| {
        let bounded = ctx.leq(&ctx.abs(b)?, &UnitizedElement::embed(a.abs()))?;
        Ok((bounded && !b.lambda.is_zero()).then(|| json!({ "a": a.to_json(), "b": b.to_json() })))
    })?;
    Ok(report.with_note(format!("{premises} pairs with |b| <= |a|")))
}

#[derive(Debug, Clone, PartialEq)]
pub enum ComplementWitness {
    /// Every sampled nonzero candidate meets some sampled `|x|`; the table pairs each
    /// candidate with that `x`.
    NonUnitalZero {
        table: Vec<(UnitizedElement, Element)>,
    },
    /// `E^⊥ = ℚ·(1 − u)`, spanned by `w = (−u, 1)`.
    UnitalSpan { w: UnitizedElement },
}

/// Disjoint complement of `E` in the unitization.
///
/// Unital base with unit `u`: returns `w = (−u, 1)` and checks `|c·w| ∧ |x| = 0` for all
/// sampled `x` and `c`. Non-unital base: for each nonzero candidate `z`, searches the
/// samples for an `x` with `|z| ∧ |x| ≠ 0`; a candidate with no such `x` leaves the report
/// inconclusive.
pub fn orthogonal_complement_witness(
    ctx: &Unitization,
    xs: &[Element],
    scalars: &[Rational],
    candidates: &[UnitizedElement],
) -> Result<(ComplementWitness, LawReport)> {
    if let Some(u) = ctx.base_unit() {
        let w = UnitizedElement::new(u.negate(), Rational::one());
        let grid: Vec<(&Element, &Rational)> = xs
            .iter()
            .flat_map(|x| scalars.iter().map(move |c| (x, c)))
            .collect();
        let witness = first_failure(&grid, |(x, c)| {
            let cw = w.scale(c);
            let ok = ctx.disjoint(&cw, &UnitizedElement::embed((*x).clone()))?;
            Ok((!ok).then(|| json!({ "x": x.to_json(), "c": c.to_string(), "w": w.to_json() })))
        })?;
        let verdict = match witness {
            None => Verdict::Pass,
            Some(witness) => Verdict::Refuted { witness },
        };
        let report = LawReport::new("thm11.complement", grid.len() as u64, verdict)
            .with_note(format!("unital: E-perp spanned by {w}"));
        return Ok((ComplementWitness::UnitalSpan { w }, report));
    }

    let mut table = Vec::new();
    let mut unresolved = None;
    for z in candidates.iter().filter(|z| !z.is_zero()) {
        let abs_z = ctx.abs(z)?;
        let mut found = None;
        for x in xs {
            if !ctx
                .meet(&abs_z, &UnitizedElement::embed(x.abs()))?
                .is_zero()
            {
                found = Some(x.clone());
                break;
            }
        }
        match found {
            Some(x) => table.push((z.clone(), x)),
            None if unresolved.is_none() => unresolved = Some(z.clone()),
            None => {}
        }
    }
    let trials = table.len() as u64 + u64::from(unresolved.is_some());
    let report = match unresolved {
        None => LawReport::pass("thm11.complement", trials)
            .with_note("non-unital: E-perp = {0} on samples"),
        Some(z) => LawReport::new(
            "thm11.complement",
            trials,
            Verdict::Inconclusive {
                bound: xs.len() as u64,
                witness: Some(json!({ "z": z.to_json() })),
            },
        ),
    };
    Ok((ComplementWitness::NonUnitalZero { table }, report))
}

/// Order density of `E` in the unitization, in sampled form.
///
/// Non-unital base: for each sampled `a > 0`, looks for `x ∈ E` with `0 < x ≤ a`, trying the
/// samples and the ideal-projected candidates `a ∧ |y|`. Failure to find one is reported
/// inconclusive, never as a refutation. Unital base: density fails at `1 − u`; the check
/// confirms no sampled `x > 0` in `E` lies below it.
pub fn density_check(
    ctx: &Unitization,
    positives: &[UnitizedElement],
    xs: &[Element],
) -> Result<LawReport> {
    if let Some(u) = ctx.base_unit() {
        let w = UnitizedElement::new(u.negate(), Rational::one());
        let report = report_from("thm11.density", xs, |x| {
            let ax = UnitizedElement::embed(x.abs());
            Ok((!ax.is_zero() && ctx.leq(&ax, &w)?).then(|| json!({ "x": x.to_json() })))
        })?;
        return Ok(report.with_note(format!("unital: E is not dense, gap below {w}")));
    }

    let mut unresolved = None;
    for a in positives.iter().filter(|a| !a.is_zero()) {
        let mut found = false;
        for y in xs {
            let direct = UnitizedElement::embed(y.abs());
            let projected = ctx.meet(a, &direct)?;
            for cand in [direct, projected] {
                if cand.lambda.is_zero()
                    && !cand.is_zero()
                    && ctx.is_positive(&cand)?
                    && ctx.leq(&cand, a)?
                {
                    found = true;
                    break;
                }
            }
            if found {
                break;
            }
        }
        if !found {
            unresolved = Some(a.clone());
            break;
        }
    }
    Ok(match unresolved {
        None => LawReport::pass("thm11.density", positives.len() as u64).with_note("sampled"),
        Some(a) => LawReport::new(
            "thm11.density",
            positives.len() as u64,
            Verdict::Inconclusive {
                bound: xs.len() as u64,
                witness: Some(json!({ "a": a.to_json() })),
            },
        ),
    })
}
