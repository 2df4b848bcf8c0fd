//! Deterministic law runner and the sampled and symbolic checks it drives.
//!
//! A [`Law`] draws its samples from its own [`SampleGen`] stream, derived from the run seed
//! and the law id, so laws can run in parallel and still give byte-identical reports.

mod archimedean;
mod band;
mod gen;
mod laws;
mod sup;
mod uniform;

use rayon::prelude::*;
use serde_json::json;

use crate::error::Result;
use crate::report::{LawReport, Verdict};
use crate::unitization::Unitization;

pub use archimedean::{
    archimedean_check, archimedean_report, bounded_archimedean_search, lex_witness,
    pointwise_breaking_multiple, ArchimedeanDecision,
};
pub use band::{band_component, in_unitized_band, project_band_unitized, CoordBand, UnitizedBand};
pub use gen::{derive_seed, Bounds, SampleGen};
pub use laws::FnLaw;
pub use sup::{check_lemma54, check_remark34, check_thm33_sup, lemma54_bound};
pub use uniform::{
    c00_fixtures, harmonic_candidates, harmonic_index, harmonic_term, repro_c00_ruc,
    repro_example43, uniform_cauchy_prefix, uniform_cauchy_violation, CertifiedLimits,
    CertifiedSequence, HarmonicOutcome, Refutation,
};

pub trait Law: Send + Sync {
    fn id(&self) -> &str;

    /// Whether the law makes sense for this base (unital, pointwise, ...).
    fn applies(&self, _ctx: &Unitization) -> bool {
        true
    }

    /// Runs `trials` sampled trials drawing from `gen`.
    fn run(&self, ctx: &Unitization, gen: &mut SampleGen, trials: usize) -> Result<LawReport>;

    /// Source of the equivalent assertion file, when the law is expressible as one.
    fn dsl(&self) -> Option<&'static str> {
        None
    }
}

impl Law for FnLaw {
    fn id(&self) -> &str {
        self.id
    }
    fn applies(&self, ctx: &Unitization) -> bool {
        (self.applies)(ctx)
    }
    fn run(&self, ctx: &Unitization, gen: &mut SampleGen, trials: usize) -> Result<LawReport> {
        (self.run)(ctx, gen, trials)
    }
    fn dsl(&self) -> Option<&'static str> {
        self.dsl
    }
}

/// Refutations that are the expected outcome for a given space and truncation kind.
#[derive(Debug, Clone)]
pub struct ExpectedViolation {
    pub space: &'static str,
    /// `None` matches every truncation kind.
    pub truncation: Option<&'static str>,
    pub law_id: &'static str,
    pub reason: &'static str,
}

pub fn expected_violations() -> Vec<ExpectedViolation> {
    vec![
        ExpectedViolation {
            space: "identity_line",
            truncation: Some("identity"),
            law_id: "tau3",
            reason: "the identity is a truncation that is not Archimedean",
        },
        ExpectedViolation {
            space: "lex_plane",
            truncation: None,
            law_id: "archimedean",
            reason: "the lexicographic plane is not an Archimedean space",
        },
    ]
}

fn is_expected(ctx: &Unitization, law_id: &str) -> bool {
    let space = ctx.base_space().name();
    let kind = ctx.truncation().name();
    expected_violations()
        .iter()
        .any(|v| v.space == space && v.law_id == law_id && v.truncation.is_none_or(|t| t == kind))
}

pub struct LawRegistry {
    laws: Vec<Box<dyn Law>>,
}

impl LawRegistry {
    pub fn empty() -> Self {
        LawRegistry { laws: Vec::new() }
    }

    pub fn standard() -> Self {
        let mut r = Self::empty();
        for law in laws::standard_laws() {
            r.register(Box::new(law));
        }
        r
    }

    /// Adds a law, replacing any law with the same id.
    pub fn register(&mut self, law: Box<dyn Law>) {
        self.laws.retain(|l| l.id() != law.id());
        self.laws.push(law);
        self.laws.sort_by(|a, b| a.id().cmp(b.id()));
    }

    pub fn get(&self, id: &str) -> Option<&dyn Law> {
        self.laws.iter().find(|l| l.id() == id).map(|l| l.as_ref())
    }

    pub fn laws(&self) -> impl Iterator<Item = &dyn Law> {
        self.laws.iter().map(|l| l.as_ref())
    }

    pub fn ids(&self) -> Vec<&str> {
        self.laws.iter().map(|l| l.id()).collect()
    }

    /// Runs every applicable law, in parallel, and returns reports sorted by law id. A law
    /// that errors is reported as refuted with the error as its witness.
    pub fn run_suite(
        &self,
        ctx: &Unitization,
        seed: u64,
        trials: usize,
        bounds: Bounds,
    ) -> Vec<LawReport> {
        let mut reports: Vec<LawReport> = self
            .laws
            .par_iter()
            .filter(|law| law.applies(ctx))
            .map(|law| run_one(law.as_ref(), ctx, seed, trials, bounds))
            .collect();
        reports.sort_by(|a, b| a.law_id.cmp(&b.law_id));
        reports
    }
}

impl Default for LawRegistry {
    fn default() -> Self {
        Self::standard()
    }
}

/// Runs one law on its own seeded stream and applies the expected-violation flag.
pub fn run_one(
    law: &dyn Law,
    ctx: &Unitization,
    seed: u64,
    trials: usize,
    bounds: Bounds,
) -> LawReport {
    let mut gen = SampleGen::for_stream(seed, law.id(), ctx.base_space(), bounds);
    let mut report = match law.run(ctx, &mut gen, trials) {
        Ok(r) => r,
        Err(e) => LawReport::new(
            law.id(),
            trials as u64,
            Verdict::Refuted {
                witness: json!({ "error": e.to_string() }),
            },
        ),
    }
    .with_seed(seed);
    report.law_id = law.id().to_string();
    if report.verdict.is_refuted() && is_expected(ctx, law.id()) {
        report.expected_violation = true;
    }
    report
}

/// The standard suite with default bounds.
pub fn run_suite(ctx: &Unitization, seed: u64, trials: usize) -> Vec<LawReport> {
    LawRegistry::standard().run_suite(ctx, seed, trials, Bounds::default())
}
