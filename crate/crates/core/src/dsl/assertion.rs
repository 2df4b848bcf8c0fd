use std::sync::Arc;

use serde_json::{json, Map, Value as Json};

use super::eval::{check_assertion, DslValue, Env, EvalCtx};
use super::parse::parse_assertion;
use super::term::Assertion;
use super::DslError;
use crate::engine::{Bounds, SampleGen};
use crate::report::{report_from, LawReport};
use crate::space::Space;
use crate::truncation::{default_descriptor, Truncation, TruncationRegistry};

/// How variables are drawn: anywhere in the space, or from the positive cone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SampleMode {
    #[default]
    Any,
    Positive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssertionLine {
    pub line: usize,
    pub label: Option<String>,
    pub assertion: Assertion,
}

/// A parsed assertion file.
///
/// ```text
/// # comment
/// law: prop21
/// ctx: {"space": "sparse_seq", "trunc": "meet_with_one", "unitize": false}
/// sample: positive
/// [label] a /\ tr(b) == tr(a) /\ b
/// ```
#[derive(Debug, Clone, PartialEq)]
pub struct AssertionFile {
    pub law: Option<String>,
    pub ctx: Map<String, Json>,
    pub sample: SampleMode,
    pub assertions: Vec<AssertionLine>,
}

pub fn parse_assertion_file(src: &str) -> Result<AssertionFile, DslError> {
    let mut file = AssertionFile {
        law: None,
        ctx: Map::new(),
        sample: SampleMode::Any,
        assertions: Vec::new(),
    };
    for (i, raw) in src.lines().enumerate() {
        let line = i + 1;
        let text = raw.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let err = |msg: String| DslError::File { line, msg };
        if let Some(rest) = text.strip_prefix("law:") {
            file.law = Some(rest.trim().to_string());
        } else if let Some(rest) = text.strip_prefix("ctx:") {
            match serde_json::from_str(rest.trim()) {
                Ok(Json::Object(m)) => file.ctx = m,
                Ok(_) => return Err(err("ctx must be a JSON object".into())),
                Err(e) => return Err(err(format!("ctx: {e}"))),
            }
        } else if let Some(rest) = text.strip_prefix("sample:") {
            file.sample = match rest.trim() {
                "any" => SampleMode::Any,
                "positive" => SampleMode::Positive,
                other => return Err(err(format!("unknown sample mode `{other}`"))),
            };
        } else {
            let (label, body) = match text.strip_prefix('[') {
                Some(rest) => {
                    let (label, body) = rest
                        .split_once(']')
                        .ok_or_else(|| err("unclosed label".into()))?;
                    (Some(label.trim().to_string()), body)
                }
                None => (None, text),
            };
            let assertion = parse_assertion(body).map_err(|e| err(format!("{e}")))?;
            file.assertions.push(AssertionLine {
                line,
                label,
                assertion,
            });
        }
    }
    if file.assertions.is_empty() {
        return Err(DslError::File {
            line: 0,
            msg: "no assertions".into(),
        });
    }
    Ok(file)
}

impl AssertionFile {
    pub fn law_id(&self) -> &str {
        self.law.as_deref().unwrap_or("assertions")
    }

    /// Variables of every assertion, in alphabetical order.
    pub fn vars(&self) -> Vec<String> {
        let mut out = std::collections::BTreeSet::new();
        for a in &self.assertions {
            out.extend(a.assertion.vars());
        }
        out.into_iter().collect()
    }

    /// The evaluation context: the `ctx:` header applied over `default`.
    pub fn context(
        &self,
        default: Arc<dyn Truncation>,
        registry: &TruncationRegistry,
    ) -> Result<EvalCtx, DslError> {
        let unitize = match self.ctx.get("unitize") {
            None => false,
            Some(Json::Bool(b)) => *b,
            Some(_) => {
                return Err(DslError::File {
                    line: 0,
                    msg: "ctx.unitize must be a boolean".into(),
                })
            }
        };
        let header = Json::Object(self.ctx.clone());
        let space = if self.ctx.contains_key("space") {
            Space::from_descriptor(&header)?
        } else {
            default.space()
        };
        let trunc = match self.ctx.get("trunc") {
            Some(Json::String(s)) => registry.parse_arg(space, s)?,
            Some(d @ Json::Object(_)) => registry.build(space, d)?,
            Some(_) => {
                return Err(DslError::File {
                    line: 0,
                    msg: "ctx.trunc must be a name or descriptor".into(),
                })
            }
            None if space == default.space() => default,
            None => registry.build(space, &default_descriptor(space))?,
        };
        Ok(EvalCtx::new(trunc, unitize))
    }
}

fn draw(gen: &mut SampleGen, ctx: &EvalCtx, mode: SampleMode) -> DslValue {
    match (ctx.is_unitized(), mode) {
        (false, SampleMode::Any) => DslValue::Base(gen.element()),
        (false, SampleMode::Positive) => DslValue::Base(gen.positive()),
        (true, SampleMode::Any) => DslValue::Unitized(gen.unitized()),
        (true, SampleMode::Positive) => DslValue::Unitized(gen.positive_unitized(ctx.truncation())),
    }
}

/// Checks every assertion on `trials` sampled environments, drawn from the stream named
/// after the law id. The witness replays the first failing trial; a trial whose
/// evaluation errors (say `tr` of a value that is not positive) counts as failing.
pub fn run_assertion_file(
    file: &AssertionFile,
    ctx: &EvalCtx,
    seed: u64,
    trials: usize,
    bounds: Bounds,
) -> Result<LawReport, DslError> {
    let law_id = file.law_id();
    if !ctx.is_unitized() {
        if let Some(line) = file
            .assertions
            .iter()
            .find(|l| l.assertion.lhs.needs_unit() || l.assertion.rhs.needs_unit())
        {
            return Err(DslError::File {
                line: line.line,
                msg: DslError::OneOutsideUnitization.to_string(),
            });
        }
    }
    let mut gen = SampleGen::for_stream(seed, law_id, ctx.space(), bounds);
    let vars = file.vars();
    let envs: Vec<Env> = (0..trials)
        .map(|_| {
            vars.iter()
                .map(|v| (v.clone(), draw(&mut gen, ctx, file.sample)))
                .collect()
        })
        .collect();
    let report = report_from(law_id, &envs, |env| {
        let env_json =
            || -> Map<String, Json> { env.iter().map(|(k, v)| (k.clone(), v.to_json())).collect() };
        for line in &file.assertions {
            let out = match check_assertion(&line.assertion, env, ctx) {
                Ok(out) => out,
                Err(e) => {
                    return Ok(Some(json!({
                        "assertion": line.assertion.to_string(),
                        "label": line.label,
                        "line": line.line,
                        "env": env_json(),
                        "error": e.to_string(),
                    })))
                }
            };
            if !out.holds {
                return Ok(Some(json!({
                    "assertion": line.assertion.to_string(),
                    "label": line.label,
                    "line": line.line,
                    "env": env_json(),
                    "lhs": out.lhs.to_json(),
                    "rhs": out.rhs.to_json(),
                })));
            }
        }
        Ok(None)
    })?;
    Ok(report.with_seed(seed))
}
