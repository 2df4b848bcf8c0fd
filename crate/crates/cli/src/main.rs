use std::collections::BTreeMap;
use std::fmt::Display;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use trunclat::dsl::{self, DslValue, Env, EvalCtx};
use trunclat::engine::{Bounds, LawRegistry};
use trunclat::report::render_table;
use trunclat::repro::ReproRegistry;
use trunclat::truncation::default_descriptor;
use trunclat::{LawReport, Space, Truncation, TruncationRegistry, Verdict};

#[derive(Parser)]
#[command(
    name = "trunclat",
    version,
    about = "Exact law checking for truncated vector lattices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(clap::Args)]
struct SpaceArgs {
    /// sparse_seq, finite_pointwise(N), lex_plane, identity_line, or a JSON descriptor.
    #[arg(long, default_value = "sparse_seq")]
    space: String,
    /// Truncation kind or JSON descriptor; defaults to the space's standard truncation.
    #[arg(long)]
    trunc: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Run the law suite (and optionally an assertion file).
    Check {
        #[command(flatten)]
        target: SpaceArgs,
        #[arg(long, env = "TRUNCLAT_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        /// Also write the JSON lines report to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long)]
        assertions: Option<PathBuf>,
        /// Evaluate the assertion file in the unitization.
        #[arg(long)]
        unitize: bool,
    },
    /// Evaluate one expression.
    Eval {
        expr: String,
        #[command(flatten)]
        target: SpaceArgs,
        /// name=JSON, e.g. x='{"1":"2/1"}'.
        #[arg(long = "bind", value_name = "NAME=JSON")]
        binds: Vec<String>,
        #[arg(long)]
        unitize: bool,
    },
    /// Run a scripted reproduction.
    Repro {
        /// Reproduction id; `list` prints the available ids.
        id: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

struct Failure {
    code: u8,
    msg: String,
}

fn config_error(e: impl Display) -> Failure {
    Failure {
        code: 2,
        msg: e.to_string(),
    }
}

fn build_target(
    args: &SpaceArgs,
    registry: &TruncationRegistry,
) -> Result<Arc<dyn Truncation>, Failure> {
    let space = Space::parse_arg(&args.space).map_err(config_error)?;
    match &args.trunc {
        Some(t) => registry.parse_arg(space, t),
        None => registry.build(space, &default_descriptor(space)),
    }
    .map_err(config_error)
}

fn write_out(path: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    if let Some(p) = path {
        std::fs::write(p, text).map_err(|e| config_error(format!("{}: {e}", p.display())))?;
    }
    Ok(())
}

fn check(
    target: &SpaceArgs,
    seed: u64,
    trials: usize,
    out: &Option<PathBuf>,
    format: Format,
    assertions: &Option<PathBuf>,
    unitize: bool,
) -> Result<u8, Failure> {
    let registry = TruncationRegistry::with_fixtures();
    let t = build_target(target, &registry)?;
    let file = match assertions {
        Some(path) => {
            let src = std::fs::read_to_string(path)
                .map_err(|e| config_error(format!("{}: {e}", path.display())))?;
            let mut file = dsl::parse_assertion_file(&src).map_err(config_error)?;
            if unitize {
                file.ctx.entry("unitize").or_insert(true.into());
            }
            let ctx = file.context(t.clone(), &registry).map_err(config_error)?;
            Some((file, ctx))
        }
        None => None,
    };

    let ctx = trunclat::unitization::Unitization::new(t);
    let mut reports = LawRegistry::standard().run_suite(&ctx, seed, trials, Bounds::default());
    if let Some((file, eval_ctx)) = &file {
        let r = dsl::run_assertion_file(file, eval_ctx, seed, trials, Bounds::default())
            .map_err(config_error)?;
        reports.push(r);
    }

    let json: String = reports.iter().map(|r| r.to_json_line() + "\n").collect();
    write_out(out, &json)?;
    match format {
        Format::Json => print!("{json}"),
        Format::Table => print!("{}", render_table(&reports)),
    }
    summarize(&reports)
}

fn summarize(reports: &[LawReport]) -> Result<u8, Failure> {
    let count = |f: &dyn Fn(&LawReport) -> bool| reports.iter().filter(|r| f(r)).count();
    let unexpected = count(&|r| r.verdict.is_refuted() && !r.expected_violation);
    let expected = count(&|r| r.expected_violation);
    let inconclusive = count(&|r| matches!(r.verdict, Verdict::Inconclusive { .. }));
    eprintln!(
        "{} laws: {} pass, {expected} expected violations, {inconclusive} inconclusive, {unexpected} unexpected refutations",
        reports.len(),
        count(&|r| r.is_pass()),
    );
    for r in reports.iter().filter(|r| r.expected_violation) {
        eprintln!("EXPECTED_VIOLATION {}", r.law_id);
    }
    for r in reports
        .iter()
        .filter(|r| matches!(r.verdict, Verdict::Inconclusive { .. }))
    {
        eprintln!("INCONCLUSIVE {}", r.law_id);
    }
    Ok(if unexpected > 0 { 1 } else { 0 })
}

fn eval(expr: &str, target: &SpaceArgs, binds: &[String], unitize: bool) -> Result<u8, Failure> {
    let registry = TruncationRegistry::with_fixtures();
    let t = build_target(target, &registry)?;
    let ctx = EvalCtx::new(t, unitize);
    let term = dsl::parse(expr).map_err(config_error)?;
    let mut env = Env::new();
    let mut raw: BTreeMap<&str, &str> = BTreeMap::new();
    for b in binds {
        let (name, json) = b
            .split_once('=')
            .ok_or_else(|| config_error(format!("--bind {b:?}: expected NAME=JSON")))?;
        raw.insert(name.trim(), json);
    }
    for (name, json) in raw {
        let v: serde_json::Value =
            serde_json::from_str(json).map_err(|e| config_error(format!("--bind {name}: {e}")))?;
        let value: DslValue = ctx
            .value_from_json(&v)
            .map_err(|e| config_error(format!("--bind {name}: {e}")))?;
        env.insert(name.to_string(), value);
    }
    let value = dsl::eval(&term, &env, &ctx).map_err(config_error)?;
    println!("{}", value.to_json());
    Ok(0)
}

fn repro(id: &str, out: &Option<PathBuf>) -> Result<u8, Failure> {
    let registry = ReproRegistry::standard();
    if id == "list" {
        for r in registry.iter() {
            println!("{:<24} seed {:<4} {}", r.id(), r.seed(), r.claim());
        }
        return Ok(0);
    }
    let r = registry.get(id).ok_or_else(|| {
        config_error(format!(
            "unknown reproduction {id:?}; known: {}",
            registry.ids().join(", ")
        ))
    })?;
    let outcome = r.run().map_err(|e| Failure {
        code: 1,
        msg: e.to_string(),
    })?;
    let text = outcome.render();
    write_out(out, &text)?;
    print!("{text}");
    Ok(if outcome.reproduced { 0 } else { 1 })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Check {
            target,
            seed,
            trials,
            out,
            format,
            assertions,
            unitize,
        } => check(
            target,
            *seed,
            *trials as usize,
            out,
            *format,
            assertions,
            *unitize,
        ),
        Command::Eval {
            expr,
            target,
            binds,
            unitize,
        } => eval(expr, target, binds, *unitize),
        Command::Repro { id, out } => repro(id, out),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
