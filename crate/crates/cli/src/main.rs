//! Command-line front end: invariant reports, bound verification over a
//! catalogue, and twist-family experiments.

mod compute;
mod input;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Result};
use clap::{Args, Parser, Subcommand};
use knotcert::braid::parse_braid;
use knotcert::diagram::PdConvention;
use knotcert::quadform::UnitCirclePoint;
use knotcert::theoremlab::twist_family_experiment;
use rayon::prelude::*;
use serde::Serialize;

use input::{gather, Entry, Sources};

#[derive(Parser)]
#[command(name = "knotcert", version, about = "Exact knot invariants and signature-bound certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariant report for each input link.
    Compute {
        #[command(flatten)]
        input: InputArgs,
        /// Levine-Tristram angle `piAngle:p/q`, meaning exp(iπp/q); repeatable.
        #[arg(long = "omega", value_name = "piAngle:p/q")]
        omegas: Vec<UnitCirclePoint>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Certify the signature bound for each input link.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Twist family of a positive braid at one letter.
    Twist {
        #[arg(long)]
        braid: String,
        /// Letter position, counted from 0.
        #[arg(long, default_value_t = 0)]
        pos: usize,
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct InputArgs {
    #[arg(long)]
    pd: Option<String>,
    /// Braid word such as `3: 1 -2 1`.
    #[arg(long)]
    braid: Option<String>,
    /// Line-delimited JSON catalogue.
    #[arg(long, value_name = "FILE")]
    catalogue: Option<PathBuf>,
    /// Tuple convention for `--pd`.
    #[arg(long, default_value = "standard")]
    convention: PdConvention,
}

#[derive(Args)]
struct RunArgs {
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[arg(long)]
    json: bool,
}

/// Distinguishes bad input (exit 2) from failed verification (exit 1).
#[derive(Debug)]
struct InputError(anyhow::Error);

fn input_error(e: impl Into<anyhow::Error>) -> anyhow::Error {
    anyhow!(InputError(e.into()))
}

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:#}", self.0)
    }
}

impl std::error::Error for InputError {}

fn entries(input: &InputArgs) -> Result<Vec<Entry>> {
    let src = Sources {
        pd: input.pd.as_deref(),
        braid: input.braid.as_deref(),
        catalogue: input.catalogue.as_deref(),
        convention: input.convention,
    };
    let out = gather(&src).map_err(input_error)?;
    if out.is_empty() {
        return Err(input_error(anyhow!("no input: pass --pd, --braid or --catalogue")));
    }
    Ok(out)
}

/// Maps `f` over the entries on a pool of `jobs` threads, keeping input order.
fn run_parallel<T: Send>(jobs: usize, items: &[Entry], f: impl Fn(&Entry) -> T + Sync) -> Result<Vec<T>> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?;
    Ok(pool.install(|| items.par_iter().map(&f).collect()))
}

fn json_line<T: Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string(v)?)
}

#[derive(Serialize)]
struct InputFailure<'a> {
    name: &'a str,
    status: &'static str,
    error: &'a str,
}

fn cmd_compute(input: &InputArgs, omegas: &[UnitCirclePoint], run: &RunArgs) -> Result<ExitCode> {
    let items = entries(input)?;
    let omegas = if omegas.is_empty() { vec![UnitCirclePoint::minus_one()] } else { omegas.to_vec() };
    let reports = run_parallel(run.jobs, &items, |e| e.link.as_ref().map(|l| compute::compute(l, &omegas)).map_err(String::clone))?;
    let mut bad_input = false;
    let mut mismatch = false;
    for (e, r) in items.iter().zip(&reports) {
        match r {
            Ok(r) => {
                mismatch |= r.matches_expected == Some(false);
                println!("{}", if run.json { json_line(r)? } else { compute::render_text(r) });
            }
            Err(msg) => {
                bad_input = true;
                if run.json {
                    println!("{}", json_line(&InputFailure { name: &e.label, status: "rejected", error: msg })?);
                } else {
                    println!("{}: REJECTED {msg}", e.label);
                }
            }
        }
    }
    Ok(if mismatch {
        ExitCode::from(1)
    } else if bad_input {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_verify(input: &InputArgs, run: &RunArgs) -> Result<ExitCode> {
    let items = entries(input)?;
    let outcomes = run_parallel(run.jobs, &items, |e| match &e.link {
        Ok(l) => verify::verify(l),
        Err(msg) => verify::RecordOutcome::Rejected { name: e.label.clone(), error: msg.clone() },
    })?;
    let mut summary = verify::Summary::default();
    for o in &outcomes {
        summary.add(o);
        println!("{}", if run.json { json_line(o)? } else { verify::render_text(o) });
    }
    if run.json {
        #[derive(Serialize)]
        struct Wrapped<'a> {
            summary: &'a verify::Summary,
        }
        println!("{}", json_line(&Wrapped { summary: &summary })?);
    } else {
        println!(
            "summary: {} records, {} HOLDS, {} DEGRADED, {} FAILED, {} expected-value mismatches, {} rejected",
            summary.records,
            summary.holds,
            summary.degraded,
            summary.failed,
            summary.expected_mismatches,
            summary.rejected
        );
    }
    Ok(if outcomes.iter().any(verify::RecordOutcome::fails) {
        ExitCode::from(1)
    } else if summary.rejected > 0 {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_twist(braid: &str, pos: usize, nmax: usize, json: bool) -> Result<ExitCode> {
    let beta = parse_braid(braid).map_err(input_error)?;
    if pos >= beta.len() {
        return Err(input_error(anyhow!("--pos {pos} is outside a word of length {}", beta.len())));
    }
    if !beta.is_positive() {
        return Err(input_error(anyhow!("`{beta}` is not a positive braid word")));
    }
    let report = twist_family_experiment(&beta, pos, nmax).map_err(input_error)?;
    if json {
        println!("{}", json_line(&report)?);
    }
    if json {
        eprintln!("{}", report.summary());
    } else {
        println!("{}", report.summary());
    }
    let ok = report.monotone && report.diagram_agrees && report.affine.as_ref().map_or(true, |a| a.residual_zero && a.slope_matches_border);
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn run(cli: Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Compute { input, omegas, run } => cmd_compute(input, omegas, run),
        Command::Verify { input, run } => cmd_verify(input, run),
        Command::Twist { braid, pos, nmax, json } => {
            if braid.trim().is_empty() {
                bail!(InputError(anyhow!("--braid is empty")));
            }
            cmd_twist(braid, *pos, *nmax, *json)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<InputError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
