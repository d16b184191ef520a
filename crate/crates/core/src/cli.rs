//! Command-line front end: `gen`, `solve`, `validate`, `bounds`, `exact`
//! and `bench`.
//!
//! Exit codes: 0 success, 1 violations / infeasible / failed check,
//! 2 usage or parse errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use crate::analysis::{analytic_upper_bound, evaluate, lower_bounds, team_itinerary, InstanceReport};
use crate::error::Error;
use crate::exact::solve_exact;
use crate::graph::{christofides_with_parts, min_weight_perfect_matching};
use crate::instance::{
    generate_instance, load_instance_with, serialize_instance, DistanceMatrix, InstanceFormat,
    InstanceKind, DEFAULT_EPS_TRI,
};
use crate::numbering::{assign_numbering, numbering_diagnostics};
use crate::schedule::Schedule;
use crate::validation::validate_schedule;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "ttp2", version, about = "TTP-2 schedules for n ≡ 2 (mod 4)")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum KindArg {
    Euclidean,
    Circle,
    RandomMetric,
}

impl From<KindArg> for InstanceKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Euclidean => InstanceKind::Euclidean,
            KindArg::Circle => InstanceKind::Circle,
            KindArg::RandomMetric => InstanceKind::RandomMetric,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FormatArg {
    Headered,
    Bare,
}

impl From<FormatArg> for InstanceFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Headered => InstanceFormat::Headered,
            FormatArg::Bare => InstanceFormat::Bare,
        }
    }
}

/// Where the distance matrix comes from: a file, or a generator.
#[derive(Debug, Clone, Args)]
pub struct Source {
    /// Instance file; excludes the generator flags.
    #[arg(long, conflicts_with_all = ["kind", "n", "seed"])]
    pub instance: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub kind: Option<KindArg>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_enum, default_value = "headered")]
    pub format: FormatArg,
    #[arg(long, default_value_t = DEFAULT_EPS_TRI)]
    pub eps_tri: f64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a generated instance.
    Gen {
        #[arg(long, value_enum, default_value = "euclidean")]
        kind: KindArg,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value = "headered")]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a schedule; timetable to --out (or stdout), report to --report (or stderr).
    Solve {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Check a timetable against the TTP-k constraints.
    Validate {
        #[arg(long)]
        timetable: PathBuf,
        /// Optional instance to also report travel.
        #[arg(long)]
        instance: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "headered")]
        format: FormatArg,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_EPS_TRI)]
        eps_tri: f64,
    },
    /// Print lower bounds, the analytic upper bound and numbering checks.
    Bounds {
        #[command(flatten)]
        source: Source,
    },
    /// Solve a tiny instance (n ≤ 8) to optimality.
    Exact {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 50_000_000)]
        node_limit: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep n and seeds; one JSON report per line, ordered by (n, seed).
    Bench {
        #[arg(long, value_enum, default_value = "euclidean")]
        kind: KindArg,
        #[arg(long, default_value_t = 10)]
        n_min: usize,
        #[arg(long, default_value_t = 50)]
        n_max: usize,
        #[arg(long, default_value_t = 4)]
        n_step: usize,
        #[arg(long, default_value_t = 20)]
        seeds: u64,
        #[arg(long, default_value_t = 0)]
        first_seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Failure inside a command, mapped to an exit code.
struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_)
            | Error::Shape(_)
            | Error::Metric(_)
            | Error::Domain(_)
            | Error::Unsupported(_) => EXIT_USAGE,
            _ => EXIT_FAIL,
        };
        Failure(code, e.to_string())
    }
}

fn io_fail(e: std::io::Error, what: &str) -> Failure {
    Failure(EXIT_USAGE, format!("{what}: {e}"))
}

/// Parses `args` (program name first) and runs the command.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(cfg) => run(&cfg, stdout, stderr),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            if e.use_stderr() {
                let _ = write!(stderr, "{e}");
            } else {
                let _ = write!(stdout, "{e}");
            }
            code
        }
    }
}

pub fn run(cfg: &RunConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    match dispatch(cfg, stdout, stderr) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            code
        }
    }
}

fn load(source: &Source) -> Result<(DistanceMatrix, Option<u64>, Option<InstanceKind>), Failure> {
    if let Some(path) = &source.instance {
        let text = fs::read_to_string(path).map_err(|e| io_fail(e, &path.display().to_string()))?;
        let d = load_instance_with(&text, source.format.into(), source.eps_tri)?;
        return Ok((d, None, None));
    }
    let kind: InstanceKind = source.kind.unwrap_or(KindArg::Euclidean).into();
    let seed = source.seed.unwrap_or(1);
    let d = generate_instance(kind, source.n.unwrap_or(10), seed)?;
    Ok((d, Some(seed), Some(kind)))
}

fn emit(path: &Option<PathBuf>, text: &str, fallback: &mut dyn Write) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| io_fail(e, &p.display().to_string())),
        None => fallback
            .write_all(text.as_bytes())
            .map_err(|e| io_fail(e, "write")),
    }
}

fn json_line<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("reports serialize");
    s.push('\n');
    s
}

fn dispatch(cfg: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match &cfg.command {
        Command::Gen {
            kind,
            n,
            seed,
            format,
            out: path,
        } => {
            let d = generate_instance((*kind).into(), *n, *seed)?;
            emit(path, &serialize_instance(&d, (*format).into()), out)?;
            Ok(EXIT_OK)
        }
        Command::Solve {
            source,
            out: path,
            report,
        } => {
            let (d, seed, kind) = load(source)?;
            let (c, _, line) = evaluate(&d, seed, kind)?;
            emit(path, &c.schedule.to_timetable_text()?, out)?;
            emit(report, &json_line(&line), err)?;
            Ok(if line.violations == 0 { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Validate {
            timetable,
            instance,
            format,
            k,
            eps_tri,
        } => {
            let text = fs::read_to_string(timetable)
                .map_err(|e| io_fail(e, &timetable.display().to_string()))?;
            let sched = Schedule::from_timetable_text(&text)?;
            let days = 2 * (sched.n.max(1) - 1);
            let v = validate_schedule(&sched, *k, days);
            for x in &v {
                let _ = writeln!(out, "{x}");
            }
            let mut summary = json!({ "n": sched.n, "days": sched.days, "violations": v.len() });
            if let Some(p) = instance {
                let t = fs::read_to_string(p).map_err(|e| io_fail(e, &p.display().to_string()))?;
                let d = load_instance_with(&t, (*format).into(), *eps_tri)?;
                if d.n() != sched.n {
                    return Err(Failure(EXIT_USAGE, "instance and timetable sizes differ".into()));
                }
                let total: f64 = (0..d.n()).map(|i| team_itinerary(&sched, &d, i).distance).sum();
                summary["total"] = json!(total);
            }
            let _ = write!(out, "{}", json_line(&summary));
            Ok(if v.is_empty() { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Bounds { source } => {
            let (d, _, _) = load(source)?;
            let all: Vec<usize> = (0..d.n()).collect();
            let m = min_weight_perfect_matching(&d, &all)?;
            let parts = christofides_with_parts(&d)?;
            let lb = lower_bounds(&d, &m, &parts.tree);
            let num = assign_numbering(&d, &m, &parts.tour);
            let diag = numbering_diagnostics(&num, &d, &m, &parts.tree, &parts.tour);
            let v = json!({
                "n": d.n(),
                "lb1": lb.lb1,
                "lb2": lb.lb2,
                "analytic_upper": analytic_upper_bound(&d, &num, &m),
                "ineq3_holds": diag.ineq3_holds,
                "ineq4_holds": diag.ineq4_holds,
            });
            let _ = write!(out, "{}", json_line(&v));
            Ok(EXIT_OK)
        }
        Command::Exact {
            source,
            k,
            node_limit,
            out: path,
        } => {
            let (d, _, _) = load(source)?;
            let r = solve_exact(&d, *k, *node_limit)?;
            emit(path, &r.schedule.to_timetable_text()?, out)?;
            let v = json!({ "n": d.n(), "optimum": r.optimum, "nodes": r.nodes_explored });
            let _ = write!(err, "{}", json_line(&v));
            Ok(EXIT_OK)
        }
        Command::Bench {
            kind,
            n_min,
            n_max,
            n_step,
            seeds,
            first_seed,
            out: path,
        } => {
            if *n_step == 0 {
                return Err(Failure(EXIT_USAGE, "--n-step must be positive".into()));
            }
            let kind: InstanceKind = (*kind).into();
            let jobs: Vec<(usize, u64)> = (*n_min..=*n_max)
                .step_by(*n_step)
                .flat_map(|n| (*first_seed..first_seed + seeds).map(move |s| (n, s)))
                .collect();
            let lines: Vec<Result<InstanceReport, Error>> = jobs
                .par_iter()
                .map(|&(n, seed)| {
                    let d = generate_instance(kind, n, seed)?;
                    evaluate(&d, Some(seed), Some(kind)).map(|(_, _, line)| line)
                })
                .collect();
            let mut text = String::new();
            let mut ok = true;
            for l in lines {
                let l = l?;
                ok &= l.passes();
                text.push_str(&json_line(&l));
            }
            emit(path, &text, out)?;
            Ok(if ok { EXIT_OK } else { EXIT_FAIL })
        }
    }
}
