//! Command-line interface.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 validation failure,
//! 3 refutation under `--fail-on-refuted`.

use std::ffi::OsString;
use std::fmt::Display;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::Arc;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use fuzzbound_core::claims::select_claims;
use fuzzbound_core::search::enumerate::enumerate_topologies;
use fuzzbound_core::search::{AuditPlan, Clock, SearchConfig, Status};
use fuzzbound_core::topology::DEFAULT_COMPLETION_CAP;
use fuzzbound_core::{BoundaryKind, Carrier, FuzzyTopology, Violation};

use crate::parallel::{run_audit, WallClock};
use crate::report::{render_human, render_machine, ConfigEcho};
use crate::spacefile::{render, SpaceFile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_REFUTED: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "fuzzbound",
    version,
    about = "Exact finite fuzzy topologies and boundary operators"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a space file lists a fuzzy topology.
    Validate { space: PathBuf },
    /// Evaluate operators on one fuzzy set.
    Eval {
        space: PathBuf,
        /// Numerators in carrier order, e.g. `4,3`.
        #[arg(long)]
        set: String,
        /// Comma-separated operators: cl, int, bd, bdI, bdII, bdIII.
        #[arg(long, default_value = "bd")]
        ops: String,
    },
    /// Complete a generator file to a topology and write it as a space file.
    Complete {
        generators: PathBuf,
        output: PathBuf,
        /// Maximum number of open sets.
        #[arg(long, default_value_t = DEFAULT_COMPLETION_CAP)]
        cap: usize,
    },
    /// Audit claims over enumerated or sampled spaces.
    Check(CheckArgs),
    /// List or count all topologies on a small grid.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        count_only: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exhaustive,
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Machine,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// `all` or comma-separated claim ids.
    #[arg(long, default_value = "all")]
    pub claims: String,
    /// Enumerate every topology in range, or draw random ones.
    #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
    pub mode: Mode,
    /// Carrier size, `k` or `lo-hi`.
    #[arg(long, default_value = "1-2", value_parser = parse_range::<usize>)]
    pub n: RangeInclusive<usize>,
    /// Denominator, `k` or `lo-hi`.
    #[arg(long, default_value = "1", value_parser = parse_range::<u32>)]
    pub d: RangeInclusive<u32>,
    /// Random spaces to draw in random mode.
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    /// Space files checked in addition to the searched spaces.
    #[arg(long, value_delimiter = ',')]
    pub spaces: Vec<PathBuf>,
    /// Seed for random spaces and random arguments.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// `human` table or line-delimited JSON `machine` records.
    #[arg(long, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    /// Exit with status 3 if any selected claim is refuted.
    #[arg(long)]
    pub fail_on_refuted: bool,
    /// Worker threads; the report does not depend on this.
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    /// Searched instances per claim; fixtures and extra spaces are always checked.
    #[arg(long)]
    pub budget: Option<usize>,
    /// Generators per random topology, `k` or `lo-hi`.
    #[arg(long, default_value = "1-4", value_parser = parse_range::<usize>)]
    pub generators: RangeInclusive<usize>,
    /// Random arguments drawn per random space.
    #[arg(long, default_value_t = 16)]
    pub args_per_space: usize,
    /// Maximum open sets per generated topology.
    #[arg(long, default_value_t = DEFAULT_COMPLETION_CAP)]
    pub cap: usize,
    /// Leave out the built-in fixture spaces.
    #[arg(long)]
    pub no_fixtures: bool,
}

fn parse_range<T>(s: &str) -> Result<RangeInclusive<T>, String>
where
    T: FromStr + PartialOrd,
    T::Err: Display,
{
    let one = |t: &str| t.trim().parse::<T>().map_err(|e| format!("`{t}`: {e}"));
    let (lo, hi) = match s.split_once('-') {
        Some((lo, hi)) => (one(lo)?, one(hi)?),
        None => (one(s)?, one(s)?),
    };
    if lo > hi {
        return Err(format!("empty range `{s}`"));
    }
    Ok(lo..=hi)
}

/// Parse `args` and run; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_ERROR
        }
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> anyhow::Result<i32> {
    match command {
        Command::Validate { space } => validate(&space, out, err),
        Command::Eval { space, set, ops } => eval(&space, &set, &ops, out, err),
        Command::Complete {
            generators,
            output,
            cap,
        } => complete(&generators, &output, cap, out),
        Command::Check(args) => check(&args, out),
        Command::Enumerate { n, d, count_only } => enumerate(n, d, count_only, out),
    }
}

fn read_space(path: &Path) -> anyhow::Result<SpaceFile> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    SpaceFile::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn report_violations(path: &Path, violations: &[Violation], err: &mut dyn Write) -> anyhow::Result<i32> {
    writeln!(err, "{}: not a fuzzy topology", path.display())?;
    for v in violations {
        writeln!(err, "{v}")?;
    }
    Ok(EXIT_INVALID)
}

fn load_topology(path: &Path, err: &mut dyn Write) -> anyhow::Result<Result<FuzzyTopology, i32>> {
    match read_space(path)?.topology() {
        Ok(t) => Ok(Ok(t)),
        Err(violations) => Ok(Err(report_violations(path, &violations, err)?)),
    }
}

fn validate(path: &Path, out: &mut dyn Write, err: &mut dyn Write) -> anyhow::Result<i32> {
    match load_topology(path, err)? {
        Ok(t) => {
            writeln!(
                out,
                "ok: {} open sets on {} points, denom {}",
                t.len(),
                t.carrier().len(),
                t.denominator()
            )?;
            Ok(EXIT_OK)
        }
        Err(code) => Ok(code),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Op {
    Closure,
    Interior,
    Boundary(BoundaryKind),
}

fn parse_ops(list: &str) -> anyhow::Result<Vec<(&str, Op)>> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|name| {
            let op = match name {
                "cl" => Op::Closure,
                "int" => Op::Interior,
                other => Op::Boundary(other.parse().map_err(|_| {
                    anyhow::anyhow!("unknown operator `{other}` (expected cl, int, bd, bdI, bdII, bdIII)")
                })?),
            };
            Ok((name, op))
        })
        .collect()
}

fn eval(path: &Path, set: &str, ops: &str, out: &mut dyn Write, err: &mut dyn Write) -> anyhow::Result<i32> {
    let file = read_space(path)?;
    let a = file.parse_set(set).context("parsing --set")?;
    let ops = parse_ops(ops)?;
    if ops.is_empty() {
        bail!("--ops lists no operators");
    }
    let t = match file.topology() {
        Ok(t) => t,
        Err(violations) => return report_violations(path, &violations, err),
    };
    for (name, op) in ops {
        let value = match op {
            Op::Closure => t.closure(&a)?,
            Op::Interior => t.interior(&a)?,
            Op::Boundary(kind) => kind.apply(&t, &a)?,
        };
        writeln!(out, "{name} = {value}")?;
        if op == Op::Boundary(BoundaryKind::InteriorClosure) {
            writeln!(out, "closed={} open={}", t.is_closed(&value)?, t.is_open(&value)?)?;
        }
    }
    Ok(EXIT_OK)
}

fn complete(generators: &Path, output: &Path, cap: usize, out: &mut dyn Write) -> anyhow::Result<i32> {
    let t = read_space(generators)?.complete(cap)?;
    std::fs::write(output, render(&t)).with_context(|| format!("writing {}", output.display()))?;
    writeln!(out, "wrote {} open sets to {}", t.len(), output.display())?;
    Ok(EXIT_OK)
}

fn check(args: &CheckArgs, out: &mut dyn Write) -> anyhow::Result<i32> {
    let claims = select_claims(&args.claims)?;
    if args.workers == 0 {
        bail!("--workers must be at least 1");
    }
    let mut config = SearchConfig {
        seed: args.seed,
        topology_cap: args.cap,
        claim_budget: args.budget,
        generators: args.generators.clone(),
        args_per_space: args.args_per_space,
        fixtures: !args.no_fixtures,
        ..SearchConfig::default()
    };
    config = match args.mode {
        Mode::Exhaustive => config.with_exhaustive(args.n.clone(), args.d.clone()),
        Mode::Random => config.with_random(args.n.clone(), args.d.clone(), args.samples),
    };
    for path in &args.spaces {
        let t = read_space(path)?.topology().map_err(|violations| {
            let listed: Vec<String> = violations.iter().map(ToString::to_string).collect();
            anyhow::anyhow!("{} is not a fuzzy topology: {}", path.display(), listed.join("; "))
        })?;
        config.extra_spaces.push(t);
    }

    let clock = WallClock::start();
    let plan = AuditPlan::new(&config, claims)?;
    let report = run_audit(&plan, args.workers, &clock)?;
    let text = match args.format {
        Format::Machine => {
            let spaces = args.spaces.iter().map(|p| p.display().to_string()).collect();
            render_machine(&report, args.seed, &ConfigEcho::new(&config, &args.claims, spaces))
        }
        Format::Human => render_human(&report, args.seed, clock.now_nanos()),
    };
    out.write_all(text.as_bytes())?;
    let refuted = report.records.iter().any(|r| r.status == Status::Refuted);
    Ok(if args.fail_on_refuted && refuted {
        EXIT_REFUTED
    } else {
        EXIT_OK
    })
}

fn enumerate(n: usize, d: u32, count_only: bool, out: &mut dyn Write) -> anyhow::Result<i32> {
    let carrier = Arc::new(Carrier::alphabetic(n)?);
    let all = enumerate_topologies(&carrier, d)?;
    if count_only {
        writeln!(out, "{}", all.len())?;
        return Ok(EXIT_OK);
    }
    for (i, t) in all.iter().enumerate() {
        if i > 0 {
            writeln!(out)?;
        }
        writeln!(out, "# topology {} of {}", i + 1, all.len())?;
        out.write_all(render(t).as_bytes())?;
    }
    Ok(EXIT_OK)
}
