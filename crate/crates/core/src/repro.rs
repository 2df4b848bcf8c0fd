//! Scripted reproductions of the named counterexamples and constructions.
//!
//! Each [`Repro`] runs with a pinned seed and produces a plain-text trace; the trace is
//! deterministic, so its checksum identifies the expected output.

use std::sync::Arc;

use crate::element::Element;
use crate::engine::{
    archimedean_report, c00_fixtures, harmonic_candidates, in_unitized_band, lex_witness,
    project_band_unitized, repro_c00_ruc, repro_example43, run_one, Bounds, CoordBand, LawRegistry,
    Refutation, SampleGen, UnitizedBand,
};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::report::LawReport;
use crate::space::Space;
use crate::truncation::{
    check_tau1, check_tau2, check_tau3, tau3_report, LexMeetZeroOne, MeetWithUnit, Tau3Verdict,
    Truncation,
};
use crate::unitization::{Unitization, UnitizedElement};

#[derive(Debug, Clone, PartialEq)]
pub struct ReproOutcome {
    pub id: String,
    /// Whether the computation came out as claimed.
    pub reproduced: bool,
    pub trace: Vec<String>,
}

impl ReproOutcome {
    pub fn render(&self) -> String {
        let mut out = String::new();
        for line in &self.trace {
            out.push_str(line);
            out.push('\n');
        }
        out.push_str(&format!(
            "verdict: {} {}\n",
            self.id,
            if self.reproduced {
                "REPRODUCED"
            } else {
                "NOT REPRODUCED"
            }
        ));
        out
    }
}

pub trait Repro: Send + Sync {
    fn id(&self) -> &str;
    /// One line: what is being reproduced.
    fn claim(&self) -> &str;
    fn seed(&self) -> u64;
    fn run(&self) -> Result<ReproOutcome>;
}

pub struct ReproRegistry {
    items: Vec<Box<dyn Repro>>,
}

impl ReproRegistry {
    pub fn empty() -> Self {
        ReproRegistry { items: Vec::new() }
    }

    pub fn standard() -> Self {
        let mut r = Self::empty();
        r.register(Box::new(LexTruncArchimedean));
        r.register(Box::new(IdentityTruncTau3));
        r.register(Box::new(C00Ruc));
        r.register(Box::new(UnitizationNotRuc));
        r.register(Box::new(SupOfTruncations));
        r.register(Box::new(BandDecomposition));
        r
    }

    pub fn register(&mut self, item: Box<dyn Repro>) {
        self.items.retain(|r| r.id() != item.id());
        self.items.push(item);
    }

    pub fn get(&self, id: &str) -> Option<&dyn Repro> {
        self.items.iter().find(|r| r.id() == id).map(|r| r.as_ref())
    }

    pub fn ids(&self) -> Vec<&str> {
        self.items.iter().map(|r| r.id()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn Repro> {
        self.items.iter().map(|r| r.as_ref())
    }
}

impl Default for ReproRegistry {
    fn default() -> Self {
        Self::standard()
    }
}

const SAMPLES: usize = 1000;

fn report_line(r: &LawReport) -> String {
    format!("  {r}")
}

/// Axiom checks shared by the two truncation reproductions.
fn axioms(t: &dyn Truncation, seed: u64, trace: &mut Vec<String>) -> Result<(bool, Tau3Verdict)> {
    let mut gen = SampleGen::for_stream(seed, "repro", t.space(), Bounds::default());
    let pairs = gen.positive_pairs(SAMPLES);
    let singles = gen.positives(SAMPLES);
    let tau1 = check_tau1(t, &pairs)?;
    let tau2 = check_tau2(t, &singles)?;
    let tau3 = check_tau3(t, &singles, 64)?;
    trace.push(format!("space {}, truncation {}", t.space(), t.name()));
    trace.push(report_line(&tau1));
    trace.push(report_line(&tau2));
    trace.push(report_line(&tau3_report(&tau3, SAMPLES as u64, 64)));
    Ok((tau1.is_pass() && tau2.is_pass(), tau3))
}

/// `(a, b) ↦ (0, b) ∧ (0, 1)`-style truncation on the lexicographic plane: an Archimedean
/// truncation on a space that is not Archimedean.
pub struct LexTruncArchimedean;

impl Repro for LexTruncArchimedean {
    fn id(&self) -> &str {
        "lex-trunc-archimedean"
    }
    fn claim(&self) -> &str {
        "the lexicographic plane carries an Archimedean truncation but is not Archimedean"
    }
    fn seed(&self) -> u64 {
        11
    }
    fn run(&self) -> Result<ReproOutcome> {
        let mut trace = Vec::new();
        let t = LexMeetZeroOne;
        let (axioms_ok, tau3) = axioms(&t, self.seed(), &mut trace)?;
        let (x, y) = lex_witness();
        let pairs = SampleGen::for_stream(
            self.seed(),
            "archimedean",
            Space::LexPlane,
            Bounds::default(),
        )
        .positive_pairs(SAMPLES);
        let arch = archimedean_report(Space::LexPlane, &pairs, 1000)?;
        trace.push(report_line(&arch));
        let mut replay = true;
        for n in 1..=1000i64 {
            replay &= x.scale(&Rational::from(n)).leq(&y)?;
        }
        trace.push(format!("  replay: n·{x} <= {y} for n = 1..=1000: {replay}"));
        let witness_ok = arch.verdict.witness()
            == Some(&serde_json::json!({ "x": x.to_json(), "y": y.to_json() }));
        let reproduced = axioms_ok && tau3 == Tau3Verdict::SymbolicPass && witness_ok && replay;
        Ok(ReproOutcome {
            id: self.id().into(),
            reproduced,
            trace,
        })
    }
}

/// The identity on `{0} × ℝ` satisfies the first two axioms and fails the Archimedean one.
pub struct IdentityTruncTau3;

impl Repro for IdentityTruncTau3 {
    fn id(&self) -> &str {
        "identity-trunc-tau3"
    }
    fn claim(&self) -> &str {
        "the identity on the line is a truncation that is not Archimedean"
    }
    fn seed(&self) -> u64 {
        12
    }
    fn run(&self) -> Result<ReproOutcome> {
        let mut trace = Vec::new();
        let t: &dyn Truncation = &crate::truncation::Identity;
        let (axioms_ok, tau3) = axioms(t, self.seed(), &mut trace)?;
        let reproduced = match &tau3 {
            Tau3Verdict::SymbolicViolation(a) => {
                let mut fixed = !a.is_zero();
                for n in 1..=1000i64 {
                    let na = a.scale(&Rational::from(n));
                    fixed &= t.truncate(&na)? == na;
                }
                trace.push(format!(
                    "  replay: tr(n·{a}) = n·{a} for n = 1..=1000: {fixed}"
                ));
                axioms_ok && fixed
            }
            _ => false,
        };
        Ok(ReproOutcome {
            id: self.id().into(),
            reproduced,
            trace,
        })
    }
}

/// Sequences in `c₀₀` with certified coordinatewise stabilization converge uniformly.
pub struct C00Ruc;

impl Repro for C00Ruc {
    fn id(&self) -> &str {
        "c00-ruc"
    }
    fn claim(&self) -> &str {
        "certified uniformly Cauchy sequences in c00 have uniform limits"
    }
    fn seed(&self) -> u64 {
        0
    }
    fn run(&self) -> Result<ReproOutcome> {
        let fixtures = c00_fixtures();
        let out = repro_c00_ruc(&fixtures)?;
        let mut trace = vec![format!(
            "{} certified sequences in sparse_seq",
            fixtures.len()
        )];
        for (name, limit) in &out.limits {
            trace.push(format!("  {name:<16} limit {limit}"));
        }
        trace.push(report_line(&out.report));
        let reproduced = out.report.is_pass() && out.limits.len() == fixtures.len();
        Ok(ReproOutcome {
            id: self.id().into(),
            reproduced,
            trace,
        })
    }
}

/// The harmonic sequence `Σ_{k≤n} (1/k)e_k` in the unitization of `c₀₀` is `1`-uniformly
/// Cauchy with no `1`-uniform limit.
pub struct UnitizationNotRuc;

impl Repro for UnitizationNotRuc {
    fn id(&self) -> &str {
        "unitization-not-ruc"
    }
    fn claim(&self) -> &str {
        "the unitization of c00 is not relatively uniformly complete"
    }
    fn seed(&self) -> u64 {
        0
    }
    fn run(&self) -> Result<ReproOutcome> {
        let eps = [Rational::new(1, 10), Rational::new(1, 100)];
        let candidates = harmonic_candidates();
        let out = repro_example43(&eps, 50, &candidates)?;
        let mut trace = vec![
            "a_n = sum_{k<=n} (1/k) e_k, regulator 1".to_string(),
            "cauchy window:".to_string(),
        ];
        trace.push(format!(
            "  {:<8} {:>6} {:>6}  {}",
            "eps", "from", "to", "1-uniformly Cauchy"
        ));
        for (e, lo, ok) in &out.cauchy {
            trace.push(format!(
                "  {:<8} {:>6} {:>6}  {ok}",
                e.to_string(),
                lo,
                lo + 50
            ));
        }
        trace.push("candidate limits:".to_string());
        for (c, r) in &out.refutations {
            let why = match r {
                Some(Refutation::ScalarPart {
                    eps,
                    lambda,
                    window,
                }) => {
                    format!(
                        "scalar part |lambda| = {lambda} > {eps} on n in {}..={}",
                        window.0, window.1
                    )
                }
                Some(Refutation::Coordinate {
                    eps,
                    index,
                    gap,
                    window,
                }) => {
                    format!(
                        "coordinate {index} of |a_n - c| = {gap} > {eps} on n in {}..={}",
                        window.0, window.1
                    )
                }
                None => "not refuted".to_string(),
            };
            trace.push(format!("  {c}  {why}"));
        }
        trace.push(report_line(&out.report));
        let reproduced = out.report.is_pass()
            && out.cauchy.iter().all(|(_, _, ok)| *ok)
            && out.refutations.len() >= 20
            && out.refutations.iter().all(|(_, r)| r.is_some());
        Ok(ReproOutcome {
            id: self.id().into(),
            reproduced,
            trace,
        })
    }
}

/// Truncations of elements below `x` have supremum `x̄` in the unitization (non-unital
/// base), and `x ∧ u` in the unital case.
pub struct SupOfTruncations;

impl Repro for SupOfTruncations {
    fn id(&self) -> &str {
        "thm33-sup"
    }
    fn claim(&self) -> &str {
        "sup of truncations below x is the truncation of x in the unitization"
    }
    fn seed(&self) -> u64 {
        33
    }
    fn run(&self) -> Result<ReproOutcome> {
        let laws = LawRegistry::standard();
        let mut trace = Vec::new();
        let mut reproduced = true;
        let cases: [(&str, Arc<dyn Truncation>); 2] = [
            ("thm33.sup", Arc::new(crate::truncation::MeetWithOne)),
            (
                "remark34",
                Arc::new(MeetWithUnit::new(Element::dense(vec![Rational::one(); 3]))?),
            ),
        ];
        for (law_id, t) in cases {
            let law = laws
                .get(law_id)
                .ok_or_else(|| Error::KernelBug(format!("law {law_id} missing")))?;
            let ctx = Unitization::new(t);
            trace.push(format!(
                "space {}, truncation {}",
                ctx.base_space(),
                ctx.truncation().name()
            ));
            let r = run_one(law, &ctx, self.seed(), SAMPLES, Bounds::default());
            reproduced &= !r.verdict.is_refuted();
            trace.push(report_line(&r));
        }
        Ok(ReproOutcome {
            id: self.id().into(),
            reproduced,
            trace,
        })
    }
}

pub const BAND_INSTANCES: usize = 500;

/// Band projections in the unitization of a unital pointwise base, matched against the
/// product-coordinate oracle `(e, λ) ↦ (e + λu, λ)`.
pub struct BandDecomposition;

/// Coordinates of `(e, λ)` in the product `ℚⁿ × ℚ`, where the order is coordinatewise.
fn product_coords(u: &Element, x: &UnitizedElement) -> Result<Vec<Rational>> {
    let f = x.e.add(&u.scale(&x.lambda))?;
    let Element::Dense(mut v) = f else {
        return Err(Error::SpaceMismatch {
            left: u.space(),
            right: f.space(),
        });
    };
    v.push(x.lambda.clone());
    Ok(v)
}

fn from_product(u: &Element, v: &[Rational]) -> Result<UnitizedElement> {
    let (lambda, f) = v.split_last().expect("at least the scalar coordinate");
    Ok(UnitizedElement::new(
        Element::dense(f.to_vec()).sub(&u.scale(lambda))?,
        lambda.clone(),
    ))
}

/// Oracle projection: keep the band's coordinates (and the scalar one for a dual band).
fn oracle_projection(
    u: &Element,
    band: &UnitizedBand,
    x: &UnitizedElement,
) -> Result<UnitizedElement> {
    let mut v = product_coords(u, x)?;
    let n = v.len() - 1;
    for (i, c) in v.iter_mut().enumerate() {
        let keep = if i == n {
            band.include_dual
        } else {
            band.base.coords().contains(&(i + 1))
        };
        if !keep {
            *c = Rational::zero();
        }
    }
    from_product(u, &v)
}

impl Repro for BandDecomposition {
    fn id(&self) -> &str {
        "band-decomposition"
    }
    fn claim(&self) -> &str {
        "every element of the unitization splits into disjoint band components"
    }
    fn seed(&self) -> u64 {
        82
    }
    fn run(&self) -> Result<ReproOutcome> {
        let mut trace = Vec::new();
        let mut matched = 0usize;
        let mut first_miss = None;
        for dim in 1..=4usize {
            let space = Space::FinitePointwise(dim);
            let u = Element::dense(vec![Rational::one(); dim]);
            let ctx = Unitization::new(Arc::new(MeetWithUnit::new(u.clone())?));
            let mut gen = SampleGen::for_stream(
                self.seed(),
                &format!("band-{dim}"),
                space,
                Bounds::default(),
            );
            let mut ok_here = 0usize;
            for i in 0..BAND_INSTANCES / 4 {
                let coords: Vec<usize> = (1..=dim).filter(|_| gen.chance(1, 2)).collect();
                let band = UnitizedBand {
                    base: CoordBand::new(dim, coords)?,
                    include_dual: gen.chance(1, 2),
                };
                let x = gen.unitized();
                let (in_b, in_bd) = project_band_unitized(&ctx, &band, &x)?;
                let ok = in_b == oracle_projection(&u, &band, &x)?
                    && in_bd == oracle_projection(&u, &band.complement(), &x)?
                    && in_b.add(&in_bd)? == x
                    && ctx.disjoint(&in_b, &in_bd)?
                    && in_unitized_band(&ctx, &band, &in_b)?
                    && in_unitized_band(&ctx, &band.complement(), &in_bd)?;
                if ok {
                    ok_here += 1;
                } else if first_miss.is_none() {
                    first_miss = Some(format!("  mismatch: dim {dim}, instance {i}, x = {x}"));
                }
            }
            matched += ok_here;
            trace.push(format!(
                "  finite_pointwise({dim}): {ok_here}/{} projections match",
                BAND_INSTANCES / 4
            ));
        }
        trace.extend(first_miss);
        trace.push(format!(
            "{matched}/{BAND_INSTANCES} oracle-matched projections"
        ));
        Ok(ReproOutcome {
            id: self.id().into(),
            reproduced: matched == BAND_INSTANCES,
            trace,
        })
    }
}
