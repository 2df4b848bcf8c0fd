//! The standard law set. Laws with a DSL twin draw their variables per trial in
//! alphabetical order, the same way the assertion runner does, so both paths see the
//! same samples for a shared seed.

use serde_json::json;

use super::archimedean::archimedean_report;
use super::band::{
    band_component, in_unitized_band, project_band_unitized, CoordBand, UnitizedBand,
};
use super::gen::SampleGen;
use super::sup::{check_lemma54, check_remark34, check_thm33_sup, lemma54_bound};
use crate::chain::{check_chain_sup_additivity, decompose_chain, is_increasing};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::report::{report_from, LawReport, Verdict};
use crate::space::Space;
use crate::truncation::{
    check_prop21, check_prop22, check_tau1, check_tau2, check_tau3, compare_fixed_sets,
    tau3_report, Tau3Verdict, TruncationRegistry,
};
use crate::unitization::{
    check_ideal, check_thm11_fixedset, density_check, orthogonal_complement_witness, Unitization,
    UnitizedElement,
};

type RunFn = fn(&Unitization, &mut SampleGen, usize) -> Result<LawReport>;

/// A law backed by plain functions; the standard registry is made of these.
pub struct FnLaw {
    pub id: &'static str,
    pub applies: fn(&Unitization) -> bool,
    pub run: RunFn,
    pub dsl: Option<&'static str>,
}

fn always(_: &Unitization) -> bool {
    true
}

fn unital(ctx: &Unitization) -> bool {
    ctx.base_unit().is_some()
}

fn pointwise(ctx: &Unitization) -> bool {
    matches!(ctx.base_space(), Space::FinitePointwise(_))
}

fn pointwise_unital(ctx: &Unitization) -> bool {
    pointwise(ctx) && unital(ctx)
}

/// Non-unital base whose truncation is Archimedean.
fn archimedean_non_unital(ctx: &Unitization) -> bool {
    !unital(ctx)
        && matches!(
            ctx.truncation().tau3_symbolic(&[]),
            Some(Tau3Verdict::SymbolicPass)
        )
}

fn eq_or(a: &Element, b: &Element, fail: &mut Vec<&'static str>, what: &'static str) {
    if a != b {
        fail.push(what);
    }
}

/// Lattice identities on triples `a, b, c`.
fn lattice_laws(_ctx: &Unitization, gen: &mut SampleGen, trials: usize) -> Result<LawReport> {
    let triples: Vec<(Element, Element, Element)> = (0..trials)
        .map(|_| (gen.element(), gen.element(), gen.element()))
        .collect();
    report_from("lattice.laws", &triples, |(a, b, c)| {
        let mut fail = Vec::new();
        eq_or(&a.join(b)?, &b.join(a)?, &mut fail, "join commutes");
        eq_or(&a.meet(b)?, &b.meet(a)?, &mut fail, "meet commutes");
        eq_or(
            &a.join(b)?.join(c)?,
            &a.join(&b.join(c)?)?,
            &mut fail,
            "join associates",
        );
        eq_or(
            &a.meet(b)?.meet(c)?,
            &a.meet(&b.meet(c)?)?,
            &mut fail,
            "meet associates",
        );
        eq_or(&a.join(&a.meet(b)?)?, a, &mut fail, "absorption");
        eq_or(&a.meet(&a.join(b)?)?, a, &mut fail, "absorption");
        eq_or(
            &a.meet(&b.join(c)?)?,
            &a.meet(b)?.join(&a.meet(c)?)?,
            &mut fail,
            "distributive",
        );
        eq_or(
            &a.join(b)?.add(c)?,
            &a.add(c)?.join(&b.add(c)?)?,
            &mut fail,
            "translation",
        );
        eq_or(
            &a.meet(b)?.add(c)?,
            &a.add(c)?.meet(&b.add(c)?)?,
            &mut fail,
            "translation",
        );
        eq_or(
            &a.add(b)?,
            &a.join(b)?.add(&a.meet(b)?)?,
            &mut fail,
            "a + b = a∨b + a∧b",
        );
        Ok(fail.first().map(
            |what| json!({ "law": what, "a": a.to_json(), "b": b.to_json(), "c": c.to_json() }),
        ))
    })
}

/// `x = x⁺ − x⁻`, `|x| = x⁺ + x⁻`, `x⁺ ∧ x⁻ = 0`, `|x| = x ∨ −x`.
fn lattice_parts(_ctx: &Unitization, gen: &mut SampleGen, trials: usize) -> Result<LawReport> {
    let xs = gen.elements(trials);
    report_from("lattice.parts", &xs, |x| {
        let (p, n) = (x.pos(), x.neg());
        let mut fail = Vec::new();
        eq_or(&p.sub(&n)?, x, &mut fail, "x = x+ - x-");
        eq_or(&p.add(&n)?, &x.abs(), &mut fail, "|x| = x+ + x-");
        eq_or(
            &p.meet(&n)?,
            &Element::zero(x.space()),
            &mut fail,
            "x+ /\\ x- = 0",
        );
        eq_or(&x.join(&x.negate())?, &x.abs(), &mut fail, "|x| = x \\/ -x");
        Ok(fail
            .first()
            .map(|what| json!({ "law": what, "x": x.to_json() })))
    })
}

/// Partial order axioms and compatibility with the vector operations.
fn order_partial(_ctx: &Unitization, gen: &mut SampleGen, trials: usize) -> Result<LawReport> {
    let triples: Vec<(Element, Element, Element, Rational)> = (0..trials)
        .map(|_| {
            (
                gen.element(),
                gen.element(),
                gen.element(),
                gen.nonneg_rational(),
            )
        })
        .collect();
    report_from("order.partial", &triples, |(a, b, c, r)| {
        let fail = |what: &str| {
            Some(json!({ "law": what, "a": a.to_json(), "b": b.to_json(), "c": c.to_json() }))
        };
        if !a.leq(a)? {
            return Ok(fail("reflexive"));
        }
        let ab = a.leq(b)?;
        if ab && b.leq(a)? && a != b {
            return Ok(fail("antisymmetric"));
        }
        if ab != (a.join(b)? == *b) || ab != (a.meet(b)? == *a) {
            return Ok(fail("a <= b iff a \\/ b = b iff a /\\ b = a"));
        }
        let up = a.join(b)?;
        let top = up.join(c)?;
        if !(a.leq(&up)? && up.leq(&top)? && a.leq(&top)?) {
            return Ok(fail("transitive"));
        }
        if ab && b.leq(c)? && !a.leq(c)? {
            return Ok(fail("transitive"));
        }
        if ab && !(a.add(c)?.leq(&b.add(c)?)? && a.scale(r).leq(&b.scale(r))?) {
            return Ok(fail("compatible with + and positive scaling"));
        }
        Ok(None)
    })
}

/// `sup_finite` is an upper bound below every sampled upper bound.
fn sup_finite(_ctx: &Unitization, gen: &mut SampleGen, trials: usize) -> Result<LawReport> {
    let cases: Vec<(Vec<Element>, Vec<Element>)> = (0..trials)
        .map(|_| {
            let n = 1 + gen.below(4) as usize;
            let set = gen.elements(n);
            let mut bounds = gen.elements(2);
            let total = set.iter().fold(Element::zero(gen.space()), |acc, a| {
                acc.add(&a.abs()).expect("same space")
            });
            bounds.push(total.add(&gen.positive()).expect("same space"));
            (set, bounds)
        })
        .collect();
    report_from("sup.finite", &cases, |(set, bounds)| {
        let s = Element::sup_finite(set)?;
        for a in set {
            if !a.leq(&s)? {
                return Ok(Some(
                    json!({ "set": set.iter().map(Element::to_json).collect::<Vec<_>>(), "a": a.to_json() }),
                ));
            }
        }
        for z in bounds {
            let mut is_bound = true;
            for a in set {
                is_bound &= a.leq(z)?;
            }
            if is_bound && !s.leq(z)? {
                return Ok(Some(
                    json!({ "set": set.iter().map(Element::to_json).collect::<Vec<_>>(), "z": z.to_json() }),
                ));
            }
        }
        Ok(None)
    })
}

fn tau1(ctx: &Unitization, gen: &mut SampleGen, trials: usize) -> Result<LawReport> {
    check_tau1(ctx.truncation(), &gen.positive_pairs(trials))
}

fn tau2(ctx: &Unitization, gen: &mut SampleGen, trials: usize) -> Result<LawReport> {
    check_tau2(ctx.truncation(), &gen.positives(trials))
}

const TAU3_BOUND: u64 = 64;

fn tau3(ctx: &Unitization, gen: &mut SampleGen, trials: usize) -> Result<LawReport> {
    let samples = gen.positives(trials);
    let v = check_tau3(ctx.truncation(), &samples, TAU3_BOUND)?;
    Ok(tau3_report(&v, trials as u64, TAU3_BOUND))
}

fn prop21(ctx: &Unitization, gen: &mut SampleGen, trials: usize) -> Result<LawReport> {
    check_prop21(ctx.truncation(), &gen.positive_pairs(trials))
}

fn prop22(ctx: &Unitization, gen: &mut SampleGen, trials: usize) -> Result<LawReport> {
    check_prop22(ctx.truncation(), &gen.positive_pairs(trials))
}

/// A truncation agrees with its own rebuild from its descriptor, and the fixed-set and
/// pointwise comparisons against a different truncation reach the same verdict.
fn lemma23(ctx: &Unitization, gen: &mut SampleGen, trials: usize) -> Result<LawReport> {
    let t = ctx.truncation();
    let registry = TruncationRegistry::with_fixtures();
    let twin = registry.build(t.space(), &t.descriptor())?;
    let samples = gen.elements(trials);
    let same = compare_fixed_sets(t, twin.as_ref(), &samples)?;
    let mut report = same.to_report();
    if t.space() != Space::LexPlane {
        let other = registry.build(
            t.space(),
            &json!({ "kind": "fixture_meet_with_constant", "c": "2/1" }),
        )?;
        let cmp = compare_fixed_sets(t, other.as_ref(), &samples)?;
        report = report.with_note(format!(
            "vs meet with 2: fixed sets {}",
            if cmp.fixed_sets_agree {
                "agree"
            } else {
                "differ"
            }
        ));
    }
    Ok(report)
}

fn archimedean(ctx: &Unitization, gen: &mut SampleGen, trials: usize) -> Result<LawReport> {
    archimedean_report(ctx.base_space(), &gen.positive_pairs(trials), 1000)
}

fn thm11_fixed_set(ctx: &Unitization, gen: &mut SampleGen, trials: usize) -> Result<LawReport> {
    check_thm11_fixedset(ctx, &gen.elements(trials))
}

fn thm11_ideal(ctx: &Unitization, gen: &mut SampleGen, trials: usize) -> Result<LawReport> {
    let pairs: Vec<(Element, UnitizedElement)> = (0..trials)
        .map(|_| {
            let a = gen.element();
            let b = if gen.chance(1, 2) {
                let small = a.abs().meet(&gen.positive()).expect("same space");
                UnitizedElement::embed(if gen.chance(1, 2) {
                    small.negate()
                } else {
                    small
                })
            } else {
                gen.unitized()
            };
            (a, b)
        })
        .collect();
    check_ideal(ctx, &pairs)
}

fn thm11_complement(ctx: &Unitization, gen: &mut SampleGen, trials: usize) -> Result<LawReport> {
    let xs = gen.elements(trials.min(200));
    let scalars: Vec<Rational> = (0..5).map(|_| gen.rational()).collect();
    let mut candidates: Vec<UnitizedElement> =
        (0..trials.min(200)).map(|_| gen.unitized()).collect();
    candidates.push(ctx.one());
    Ok(orthogonal_complement_witness(ctx, &xs, &scalars, &candidates)?.1)
}

fn thm11_density(ctx: &Unitization, gen: &mut SampleGen, trials: usize) -> Result<LawReport> {
    let positives: Vec<UnitizedElement> = (0..trials.min(200))
        .map(|_| gen.positive_unitized(ctx.truncation()))
        .collect();
    let xs = gen.elements(trials.min(200));
    density_check(ctx, &positives, &xs)
}

/// Positive elements of `E` below `x`, obtained as `x ∧ n·w` for positive probes `w ∈ E`.
fn approximants_below(
    ctx: &Unitization,
    x: &UnitizedElement,
    probes: &[Element],
) -> Result<Vec<Element>> {
    let mut ys = Vec::new();
    for w in probes {
        for n in [1, 2, 64] {
            let m = ctx.meet(x, &UnitizedElement::embed(w.scale(&Rational::from(n))))?;
            if !m.lambda.is_zero() {
                return Err(Error::KernelBug(format!("{x} ∧ {n}·{w} left E")));
            }
            ys.push(m.e);
        }
    }
    Ok(ys)
}

fn thm33_sup(ctx: &Unitization, gen: &mut SampleGen, trials: usize) -> Result<LawReport> {
    let cases = (trials / 10).max(1);
    let mut reports = Vec::with_capacity(cases);
    for _ in 0..cases {
        let x = loop {
            let x = gen.positive_unitized(ctx.truncation());
            if !x.is_zero() {
                break x;
            }
        };
        let tx = ctx.truncate(&x)?;
        let mut probes = gen.positives(4);
        let mut candidates = Vec::new();
        if let Element::Sparse(m) = &x.e {
            let past = m.keys().next_back().copied().unwrap_or(0) + 1;
            let mut support: Vec<u64> = m.keys().copied().collect();
            support.push(past);
            probes.push(Element::sparse(
                support.iter().map(|&k| (k, Rational::one())),
            ));
            for k in support {
                let bump = UnitizedElement::embed(Element::sparse([(k, Rational::new(1, 3))]));
                candidates.push(tx.sub(&bump)?);
            }
        }
        candidates.push(tx.scale(&Rational::new(1, 2)));
        candidates.push(tx.scale(&Rational::new(3, 4)));
        let mut ys = approximants_below(ctx, &x, &probes)?;
        ys.extend(gen.positives(4));
        reports.push(check_thm33_sup(ctx, &x, &ys, &candidates)?);
    }
    Ok(combine("thm33.sup", reports))
}

fn remark34(ctx: &Unitization, gen: &mut SampleGen, trials: usize) -> Result<LawReport> {
    let u = ctx.base_unit().expect("unital");
    let cases = (trials / 10).max(1);
    let mut reports = Vec::with_capacity(cases);
    for _ in 0..cases {
        let x1 = gen.positive();
        let mu = if gen.chance(1, 4) {
            Rational::zero()
        } else {
            gen.nonneg_rational()
        };
        let mut ys = vec![x1.clone(), x1.meet(&u)?];
        for p in gen.positives(6) {
            ys.push(x1.meet(&p)?);
            ys.push(p);
        }
        reports.push(check_remark34(ctx, &x1, &mu, &ys)?);
    }
    Ok(combine("remark34", reports))
}

fn random_chain(gen: &mut SampleGen, len: usize, cap: Option<&Element>) -> Result<Vec<Element>> {
    let mut chain: Vec<Element> = Vec::with_capacity(len);
    let mut x = Element::zero(gen.space());
    for _ in 0..len {
        x = x.add(&gen.positive())?;
        if let Some(cap) = cap {
            x = x.meet(cap)?;
        }
        chain.push(x.clone());
    }
    Ok(chain)
}

/// Splitting `0 ≤ x₁ ≤ … ≤ |u| + |v|` into increasing chains below `|u|` and `|v|`.
fn lemma52(_ctx: &Unitization, gen: &mut SampleGen, trials: usize) -> Result<LawReport> {
    let mut cases = Vec::with_capacity(trials);
    for _ in 0..trials {
        let (u, v) = (gen.element(), gen.element());
        let cap = u.abs().add(&v.abs())?;
        let len = 1 + gen.below(6) as usize;
        cases.push((random_chain(gen, len, Some(&cap))?, u, v));
    }
    report_from("lemma52.decompose", &cases, |(chain, u, v)| {
        let split = decompose_chain(chain, u, v)?;
        let (au, av) = (u.abs(), v.abs());
        let mut ok = is_increasing(&split.u_chain)? && is_increasing(&split.v_chain)?;
        for ((x, ui), vi) in chain.iter().zip(&split.u_chain).zip(&split.v_chain) {
            ok &= ui.add(vi)? == *x;
            ok &= ui.is_positive() && ui.leq(&au)?;
            ok &= vi.is_positive() && vi.leq(&av)?;
        }
        Ok((!ok).then(|| {
            json!({ "chain": chain.iter().map(Element::to_json).collect::<Vec<_>>(), "u": u.to_json(), "v": v.to_json() })
        }))
    })
}

/// `sup(xᵢ + yᵢ) = sup xᵢ + sup yᵢ`, on independent chains and on the two halves of a split.
fn lemma53(_ctx: &Unitization, gen: &mut SampleGen, trials: usize) -> Result<LawReport> {
    let mut cases = Vec::with_capacity(trials);
    for _ in 0..trials {
        let len = 1 + gen.below(6) as usize;
        let xs = random_chain(gen, len, None)?;
        let ys = random_chain(gen, len, None)?;
        let (u, v) = (gen.element(), gen.element());
        let cap = u.abs().add(&v.abs())?;
        let split = decompose_chain(&random_chain(gen, len, Some(&cap))?, &u, &v)?;
        cases.push((xs, ys, split));
    }
    report_from("lemma53.additivity", &cases, |(xs, ys, split)| {
        let ok = check_chain_sup_additivity(xs, ys)?
            && check_chain_sup_additivity(&split.u_chain, &split.v_chain)?;
        Ok((!ok).then(|| {
            json!({
                "xs": xs.iter().map(Element::to_json).collect::<Vec<_>>(),
                "ys": ys.iter().map(Element::to_json).collect::<Vec<_>>(),
            })
        }))
    })
}

fn lemma54(ctx: &Unitization, gen: &mut SampleGen, trials: usize) -> Result<LawReport> {
    let sets = (trials / 10).max(1);
    let mut reports = Vec::with_capacity(sets);
    for _ in 0..sets {
        let n = 1 + gen.below(4) as usize;
        let set = gen.elements(n);
        let a0 = Element::sup_finite(&set)?;
        let mut bounds = Vec::with_capacity(10);
        for i in 0..10 {
            let p = gen.positive();
            let y = gen.positive();
            let mu = if i % 3 == 0 {
                Rational::zero()
            } else {
                gen.positive_rational()
            };
            bounds.push(lemma54_bound(ctx, &a0, &p, &y, &mu)?);
        }
        bounds.push(gen.unitized());
        bounds.push(ctx.one().scale(&Rational::from(64)));
        reports.push(check_lemma54(ctx, &set, &bounds)?);
    }
    Ok(combine("lemma54", reports))
}

fn random_band(gen: &mut SampleGen, dim: usize) -> CoordBand {
    let coords: Vec<usize> = (1..=dim).filter(|_| gen.chance(1, 2)).collect();
    CoordBand::new(dim, coords).expect("coordinates in range")
}

fn band_component_law(ctx: &Unitization, gen: &mut SampleGen, trials: usize) -> Result<LawReport> {
    let Space::FinitePointwise(dim) = ctx.base_space() else {
        return Err(Error::PreconditionViolated(
            "bands need a finite pointwise space".into(),
        ));
    };
    let cases: Vec<(CoordBand, Element, Vec<Element>)> = (0..trials)
        .map(|_| {
            let band = random_band(gen, dim);
            let x = gen.positive();
            // positive elements supported in the band, cut down below x
            let inside: Vec<Element> = (0..3)
                .map(|_| {
                    let p = gen.positive();
                    let masked: Vec<Rational> = (1..=dim)
                        .map(|k| {
                            if band.coords().contains(&k) {
                                p.coord(k).expect("in range")
                            } else {
                                Rational::zero()
                            }
                        })
                        .collect();
                    Element::dense(masked).meet(&x).expect("same space")
                })
                .collect();
            (band, x, inside)
        })
        .collect();
    report_from("band.component", &cases, |(band, x, inside)| {
        let c = band_component(band, x)?;
        let rest = x.sub(&c)?;
        let mut ok = band.contains(&c) && band.complement().contains(&rest);
        ok &= c.is_positive() && c.leq(x)?;
        for y in inside {
            ok &= y.leq(&c)?;
        }
        Ok((!ok)
            .then(|| json!({ "band": band.coords().iter().collect::<Vec<_>>(), "x": x.to_json() })))
    })
}

fn band_unitized_law(ctx: &Unitization, gen: &mut SampleGen, trials: usize) -> Result<LawReport> {
    let Space::FinitePointwise(dim) = ctx.base_space() else {
        return Err(Error::PreconditionViolated(
            "bands need a finite pointwise space".into(),
        ));
    };
    let cases: Vec<(UnitizedBand, UnitizedElement)> = (0..trials)
        .map(|_| {
            let band = UnitizedBand {
                base: random_band(gen, dim),
                include_dual: gen.chance(1, 2),
            };
            (band, gen.unitized())
        })
        .collect();
    report_from("band.unitized", &cases, |(band, x)| {
        let (in_b, in_bd) = project_band_unitized(ctx, band, x)?;
        let ok = in_b.add(&in_bd)? == *x
            && ctx.disjoint(&in_b, &in_bd)?
            && in_unitized_band(ctx, band, &in_b)?
            && in_unitized_band(ctx, &band.complement(), &in_bd)?;
        Ok((!ok).then(|| {
            json!({
                "band": band.base.coords().iter().collect::<Vec<_>>(),
                "include_dual": band.include_dual,
                "x": x.to_json(),
            })
        }))
    })
}

/// Cone sanity: `a ≥ 0 ∧ −a ≥ 0 ⇒ a = 0`, `a ≥ 0 ⟺ |a| = a`, and the constructed positive
/// samples are closed under addition and positive scaling.
fn unit_cone(ctx: &Unitization, gen: &mut SampleGen, trials: usize) -> Result<LawReport> {
    let t = ctx.truncation();
    let cases: Vec<(UnitizedElement, UnitizedElement, UnitizedElement, Rational)> = (0..trials)
        .map(|_| {
            (
                gen.unitized(),
                gen.positive_unitized(t),
                gen.positive_unitized(t),
                gen.nonneg_rational(),
            )
        })
        .collect();
    report_from("unit.cone", &cases, |(a, p, q, r)| {
        let fail = |what: &str| {
            Some(json!({ "law": what, "a": a.to_json(), "p": p.to_json(), "q": q.to_json() }))
        };
        let pos = ctx.is_positive(a)?;
        if pos && ctx.is_positive(&a.negate())? && !a.is_zero() {
            return Ok(fail("pointed"));
        }
        if pos != (ctx.abs(a)? == *a) {
            return Ok(fail("a >= 0 iff |a| = a"));
        }
        if !ctx.is_positive(p)? || !ctx.is_positive(q)? {
            return Ok(fail("constructed positives"));
        }
        if !ctx.is_positive(&p.add(q)?)? || !ctx.is_positive(&p.scale(r))? {
            return Ok(fail("closed under + and positive scaling"));
        }
        Ok(None)
    })
}

/// `|a|` is an upper bound of `{a, −a}` below the bounds `(|x|, |λ|)` and
/// `a + 2(|x|, |λ|) + p`, which dominate `±a` by the cone description alone.
fn unit_abs_lub(ctx: &Unitization, gen: &mut SampleGen, trials: usize) -> Result<LawReport> {
    let cases: Vec<(UnitizedElement, UnitizedElement)> = (0..trials)
        .map(|_| {
            let a = gen.unitized();
            let p = UnitizedElement::new(gen.positive(), gen.nonneg_rational());
            (a, p)
        })
        .collect();
    report_from("unit.abs_lub", &cases, |(a, p)| {
        let abs = ctx.abs(a)?;
        let fail = |what: &str| Some(json!({ "law": what, "a": a.to_json(), "p": p.to_json() }));
        if !ctx.leq(a, &abs)? || !ctx.leq(&a.negate(), &abs)? {
            return Ok(fail("upper bound"));
        }
        let tight = UnitizedElement::new(a.e.abs(), a.lambda.abs());
        let loose = a.add(&tight.scale(&Rational::from(2)))?.add(p)?;
        for z in [&tight, &loose] {
            if !ctx.leq(a, z)? || !ctx.leq(&a.negate(), z)? {
                return Err(Error::KernelBug(format!("{z} does not dominate ±{a}")));
            }
            if !ctx.leq(&abs, z)? {
                return Ok(fail("least"));
            }
        }
        Ok(None)
    })
}

/// Lattice inequalities in the unitization.
fn unit_lattice(ctx: &Unitization, gen: &mut SampleGen, trials: usize) -> Result<LawReport> {
    let pairs: Vec<(UnitizedElement, UnitizedElement)> = (0..trials)
        .map(|_| (gen.unitized(), gen.unitized()))
        .collect();
    report_from("unit.lattice", &pairs, |(a, b)| {
        let fail = |what: &str| Some(json!({ "law": what, "a": a.to_json(), "b": b.to_json() }));
        let (abs_a, abs_b) = (ctx.abs(a)?, ctx.abs(b)?);
        if !ctx.leq(&ctx.abs(&a.add(b)?)?, &abs_a.add(&abs_b)?)? {
            return Ok(fail("triangle"));
        }
        let (j, m) = (ctx.join(a, b)?, ctx.meet(a, b)?);
        if !(ctx.leq(a, &j)? && ctx.leq(b, &j)? && ctx.leq(&m, a)? && ctx.leq(&m, b)?) {
            return Ok(fail("join and meet bound"));
        }
        if ctx.join(a, b)? != ctx.join(b, a)? {
            return Ok(fail("join commutes"));
        }
        if ctx.pos(a)?.sub(&ctx.neg(a)?)? != *a {
            return Ok(fail("a = pos(a) - neg(a)"));
        }
        if ctx.pos(a)?.add(&ctx.neg(a)?)? != abs_a {
            return Ok(fail("|a| = pos(a) + neg(a)"));
        }
        Ok(None)
    })
}

/// The truncation `a ↦ a ∧ 1` of the unitization satisfies the axioms and the
/// elementary identities on positive pairs.
fn unit_trunc(ctx: &Unitization, gen: &mut SampleGen, trials: usize) -> Result<LawReport> {
    let t = ctx.truncation();
    let pairs: Vec<(UnitizedElement, UnitizedElement)> = (0..trials)
        .map(|_| (gen.positive_unitized(t), gen.positive_unitized(t)))
        .collect();
    report_from("unit.trunc", &pairs, |(a, b)| {
        let fail = |what: &str| Some(json!({ "law": what, "a": a.to_json(), "b": b.to_json() }));
        let (ta, tb) = (ctx.truncate(a)?, ctx.truncate(b)?);
        if !ctx.leq(&ctx.meet(a, &tb)?, &ta)? || !ctx.leq(&ta, a)? {
            return Ok(fail("a /\\ tr(b) <= tr(a) <= a"));
        }
        if ctx.meet(a, &tb)? != ctx.meet(&ta, b)? {
            return Ok(fail("a /\\ tr(b) = tr(a) /\\ b"));
        }
        if ctx.truncate(&ta)? != ta {
            return Ok(fail("idempotent"));
        }
        let lhs = ctx.abs(&ta.sub(&tb)?)?;
        let rhs = ctx.truncate(&ctx.abs(&a.sub(b)?)?)?;
        if !ctx.leq(&lhs, &rhs)? {
            return Ok(fail("|tr(a) - tr(b)| <= tr(|a - b|)"));
        }
        Ok(None)
    })
}

fn unit_tau2(ctx: &Unitization, gen: &mut SampleGen, trials: usize) -> Result<LawReport> {
    let t = ctx.truncation();
    let xs: Vec<UnitizedElement> = (0..trials).map(|_| gen.positive_unitized(t)).collect();
    report_from("unit.tau2", &xs, |a| {
        Ok((ctx.truncate(a)?.is_zero() && !a.is_zero()).then(|| json!({ "a": a.to_json() })))
    })
}

/// Positive elements with nonzero scalar parts are never disjoint.
fn unit_disjoint_scalar(
    ctx: &Unitization,
    gen: &mut SampleGen,
    trials: usize,
) -> Result<LawReport> {
    let t = ctx.truncation();
    let pairs: Vec<(UnitizedElement, UnitizedElement)> = (0..trials)
        .map(|_| (gen.positive_unitized(t), gen.positive_unitized(t)))
        .collect();
    report_from("unit.disjoint_scalar", &pairs, |(a, b)| {
        let both = a.lambda.is_positive() && b.lambda.is_positive();
        Ok((both && ctx.meet(a, b)?.is_zero())
            .then(|| json!({ "a": a.to_json(), "b": b.to_json() })))
    })
}

/// Folds per-case reports: trials add up; the first refutation wins, then the first
/// inconclusive case.
pub(crate) fn combine(law_id: &str, reports: Vec<LawReport>) -> LawReport {
    let trials = reports.iter().map(|r| r.trials).sum();
    let verdict = reports
        .iter()
        .find(|r| r.verdict.is_refuted())
        .or_else(|| reports.iter().find(|r| !r.is_pass()))
        .map_or(Verdict::Pass, |r| r.verdict.clone());
    LawReport::new(law_id, trials, verdict)
}

macro_rules! dsl {
    ($file:literal) => {
        Some(include_str!(concat!("../../laws/", $file)))
    };
}

pub fn standard_laws() -> Vec<FnLaw> {
    let law = |id, applies, run, dsl| FnLaw {
        id,
        applies,
        run,
        dsl,
    };
    vec![
        law("archimedean", always, archimedean, None),
        law("band.component", pointwise, band_component_law, None),
        law("band.unitized", pointwise_unital, band_unitized_law, None),
        law(
            "lattice.laws",
            always,
            lattice_laws,
            dsl!("lattice_laws.law"),
        ),
        law(
            "lattice.parts",
            always,
            lattice_parts,
            dsl!("lattice_parts.law"),
        ),
        law("lemma23", always, lemma23, None),
        law("lemma52.decompose", always, lemma52, None),
        law("lemma53.additivity", always, lemma53, None),
        law("lemma54", always, lemma54, None),
        law("order.partial", always, order_partial, None),
        law("prop21", always, prop21, dsl!("prop21.law")),
        law("prop22", always, prop22, dsl!("prop22.law")),
        law("remark34", unital, remark34, None),
        law("sup.finite", always, sup_finite, None),
        law("tau1", always, tau1, dsl!("tau1.law")),
        law("tau2", always, tau2, None),
        law("tau3", always, tau3, None),
        law("thm11.complement", always, thm11_complement, None),
        law("thm11.density", always, thm11_density, None),
        law("thm11.fixed_set", always, thm11_fixed_set, None),
        law("thm11.ideal", always, thm11_ideal, None),
        law("thm33.sup", archimedean_non_unital, thm33_sup, None),
        law("unit.abs_lub", always, unit_abs_lub, None),
        law("unit.cone", always, unit_cone, None),
        law("unit.disjoint_scalar", always, unit_disjoint_scalar, None),
        law(
            "unit.lattice",
            always,
            unit_lattice,
            dsl!("unit_lattice.law"),
        ),
        law("unit.tau2", always, unit_tau2, None),
        law("unit.trunc", always, unit_trunc, dsl!("unit_trunc.law")),
    ]
}
