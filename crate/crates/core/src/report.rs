//! Law reports: the machine-readable outcome of one law check.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::error::Result;

#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    Pass,
    /// The law fails; the witness replays the failing trial.
    Refuted {
        witness: Value,
    },
    /// A search over `bound` candidates neither proved nor refuted the claim.
    Inconclusive {
        bound: u64,
        witness: Option<Value>,
    },
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Refuted { .. } => "refuted",
            Verdict::Inconclusive { .. } => "inconclusive",
        }
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, Verdict::Refuted { .. })
    }

    pub fn witness(&self) -> Option<&Value> {
        match self {
            Verdict::Pass => None,
            Verdict::Refuted { witness } => Some(witness),
            Verdict::Inconclusive { witness, .. } => witness.as_ref(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LawReport {
    pub law_id: String,
    pub trials: u64,
    pub verdict: Verdict,
    pub seed: u64,
    /// Short free-form detail, e.g. "symbolic" for decided-by-argument verdicts.
    pub note: Option<String>,
    /// Set when the refutation is a known counterexample rather than a bug.
    pub expected_violation: bool,
}

#[derive(Serialize)]
struct Record<'a> {
    law_id: &'a str,
    trials: u64,
    verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<&'a Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bound: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'a str>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    expected_violation: bool,
    seed: u64,
}

impl LawReport {
    pub fn new(law_id: impl Into<String>, trials: u64, verdict: Verdict) -> Self {
        LawReport {
            law_id: law_id.into(),
            trials,
            verdict,
            seed: 0,
            note: None,
            expected_violation: false,
        }
    }

    pub fn pass(law_id: impl Into<String>, trials: u64) -> Self {
        Self::new(law_id, trials, Verdict::Pass)
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn is_pass(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// One JSON object, no trailing newline. Key order is fixed.
    pub fn to_json_line(&self) -> String {
        let bound = match self.verdict {
            Verdict::Inconclusive { bound, .. } => Some(bound),
            _ => None,
        };
        let rec = Record {
            law_id: &self.law_id,
            trials: self.trials,
            verdict: self.verdict.label(),
            witness: self.verdict.witness(),
            bound,
            note: self.note.as_deref(),
            expected_violation: self.expected_violation,
            seed: self.seed,
        };
        serde_json::to_string(&rec).expect("report serializes")
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut verdict = self.verdict.label().to_uppercase();
        if self.expected_violation {
            verdict.push_str(" (EXPECTED_VIOLATION)");
        }
        write!(f, "{:<28} {:>6}  {}", self.law_id, self.trials, verdict)?;
        if let Some(n) = &self.note {
            write!(f, "  [{n}]")?;
        }
        if let Some(w) = self.verdict.witness() {
            write!(f, "  witness={w}")?;
        }
        Ok(())
    }
}

/// Renders reports as an aligned plain-text table.
pub fn render_table(reports: &[LawReport]) -> String {
    let mut out = format!("{:<28} {:>6}  {}\n", "LAW", "TRIALS", "VERDICT");
    for r in reports {
        out.push_str(&r.to_string());
        out.push('\n');
    }
    out
}

/// Runs `check` over every trial and returns the witness of the smallest failing trial
/// index, independent of scheduling.
pub(crate) fn first_failure<T, F>(items: &[T], check: F) -> Result<Option<Value>>
where
    T: Sync,
    F: Fn(&T) -> Result<Option<Value>> + Sync,
{
    items
        .par_iter()
        .map(&check)
        .find_map_first(|r| match r {
            Ok(None) => None,
            other => Some(other),
        })
        .unwrap_or(Ok(None))
}

/// Pass when no trial fails, otherwise Refuted with the first failing witness.
pub(crate) fn report_from<T, F>(law_id: &str, items: &[T], check: F) -> Result<LawReport>
where
    T: Sync,
    F: Fn(&T) -> Result<Option<Value>> + Sync,
{
    let verdict = match first_failure(items, check)? {
        None => Verdict::Pass,
        Some(witness) => Verdict::Refuted { witness },
    };
    Ok(LawReport::new(law_id, items.len() as u64, verdict))
}
