//! Command-line front end.
//!
//! `fuzzred EPSILON [options] < automaton` prints the reduced automaton in the
//! dense format. `fuzzred sweep …` prints a CSV table. Exit codes: 0 success,
//! 1 parse or configuration error, 2 closure cap exceeded, 3 failed check.

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::ops::Range;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::error::{Error, Result};
use crate::format::{self, format_value, Format};
use crate::lattice::Lattice;
use crate::oracle::{self, Verdict};
use crate::reduction::{soft_state_reduction, Bound, ReductionConfig, ReductionReport};
use crate::sweep::{self, RandomShape, Source, SweepSpec, ValueSet};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_CLOSURE_CAP: i32 = 2;
pub const EXIT_CHECK_FAILED: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "fuzzred",
    version,
    about = "Soft state reduction of fuzzy finite automata",
    args_conflicts_with_subcommands = true,
    subcommand_negates_reqs = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Option<Command>,

    #[command(flatten)]
    pub reduce: ReduceArgs,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reduce over a grid of structures, epsilons and bounds; print CSV.
    Sweep(SweepArgs),
}

#[derive(Args, Debug)]
pub struct ReduceArgs {
    /// Approximation threshold in [0, 1].
    #[arg(required = true)]
    pub epsilon: Option<f64>,

    /// Maximum word length: a natural number or `infinity`.
    #[arg(long, default_value = "infinity")]
    pub k: Bound,

    /// P (product), H (Hamacher), G (Gödel), L (Łukasiewicz) or N (nilpotent minimum).
    #[arg(long, default_value = "P")]
    pub structure: Lattice,

    /// Hamacher parameter; only valid with `--structure H`.
    #[arg(long)]
    pub lambda: Option<f64>,

    /// Read the sparse format instead of the dense one.
    #[arg(long)]
    pub sparse: bool,

    /// Print phase state counts, counters and the chosen branch as `#` lines.
    #[arg(short, long)]
    pub verbose: bool,

    /// Rounding step used to compare vectors.
    #[arg(long, default_value_t = ReductionConfig::DEFAULT_PRECISION)]
    pub precision: f64,

    /// Maximum number of closure vectors before giving up.
    #[arg(long, default_value_t = ReductionConfig::DEFAULT_MAX_CLOSURE)]
    pub max_closure: usize,

    /// Check the result against the input on all words up to this length (0 skips).
    #[arg(long, default_value_t = 0)]
    pub check: usize,

    /// Write the reduced automaton here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    /// Structure codes, e.g. `PHGLN` or `P,G`.
    #[arg(long, default_value = "PHGLN")]
    pub structures: String,

    #[arg(long, value_delimiter = ',', default_value = "0")]
    pub eps: Vec<f64>,

    #[arg(long, value_delimiter = ',', default_value = "infinity")]
    pub k: Vec<Bound>,

    /// Automaton file; standard input when absent and no random shape is given.
    #[arg(long, conflicts_with = "random_states")]
    pub input: Option<PathBuf>,

    #[arg(long)]
    pub sparse: bool,

    /// Generate random automata with this many states instead of reading one.
    #[arg(long)]
    pub random_states: Option<usize>,

    #[arg(long, default_value_t = 2)]
    pub random_symbols: usize,

    #[arg(long, default_value_t = 0.5)]
    pub density: f64,

    /// `lo..hi` or a comma-separated grid.
    #[arg(long, default_value = "0.1..1")]
    pub values: ValueSet,

    /// Seed range `a..b` (exclusive) or `a..=b`.
    #[arg(long, default_value = "0..10", value_parser = parse_seeds)]
    pub seeds: Range<u64>,

    /// Oracle word length per cell, capped by the cell's k (0 skips).
    #[arg(long, default_value_t = 0)]
    pub check: usize,

    #[arg(long, default_value_t = ReductionConfig::DEFAULT_PRECISION)]
    pub precision: f64,

    #[arg(long, default_value_t = ReductionConfig::DEFAULT_MAX_CLOSURE)]
    pub max_closure: usize,

    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn parse_seeds(s: &str) -> std::result::Result<Range<u64>, String> {
    let bad = || format!("expected a seed range like 0..100, got '{s}'");
    let (lo, hi, inclusive) = match s.split_once("..=") {
        Some((lo, hi)) => (lo, hi, true),
        None => {
            let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
            (lo, hi, false)
        }
    };
    let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: u64 = hi.trim().parse().map_err(|_| bad())?;
    Ok(lo..if inclusive { hi + 1 } else { hi })
}

pub fn parse_structures(s: &str) -> Result<Vec<Lattice>> {
    s.chars()
        .filter(|c| !matches!(c, ',' | ' '))
        .map(|c| Lattice::from_code(c).ok_or_else(|| Error::Config(format!("unknown structure '{c}'"))))
        .collect()
}

/// Validated options of a single reduction run.
#[derive(Clone, Debug, PartialEq)]
pub struct RunOptions {
    pub epsilon: f64,
    pub k: Bound,
    pub structure: Lattice,
    pub hamacher_lambda: f64,
    pub format: Format,
    pub verbose: bool,
    pub precision: f64,
    pub max_closure: usize,
    pub check: usize,
}

impl RunOptions {
    pub fn new(epsilon: f64) -> Self {
        RunOptions {
            epsilon,
            k: Bound::Infinite,
            structure: Lattice::Product,
            hamacher_lambda: 0.0,
            format: Format::Dense,
            verbose: false,
            precision: ReductionConfig::DEFAULT_PRECISION,
            max_closure: ReductionConfig::DEFAULT_MAX_CLOSURE,
            check: 0,
        }
    }

    pub fn from_args(args: &ReduceArgs) -> Result<Self> {
        let epsilon = args.epsilon.ok_or_else(|| Error::Config("missing epsilon".into()))?;
        if args.lambda.is_some() && args.structure.code() != 'H' {
            return Err(Error::Config("--lambda requires --structure H".into()));
        }
        Ok(RunOptions {
            epsilon,
            k: args.k,
            structure: args.structure,
            hamacher_lambda: args.lambda.unwrap_or(0.0),
            format: if args.sparse { Format::Sparse } else { Format::Dense },
            verbose: args.verbose,
            precision: args.precision,
            max_closure: args.max_closure,
            check: args.check,
        })
    }

    pub fn lattice(&self) -> Result<Lattice> {
        match self.structure {
            Lattice::Hamacher { .. } => Lattice::hamacher(self.hamacher_lambda),
            other => Ok(other),
        }
    }

    pub fn config(&self) -> Result<ReductionConfig> {
        Ok(ReductionConfig::new(self.epsilon, self.k, self.lattice()?)?
            .with_precision(self.precision)?
            .with_max_closure(self.max_closure))
    }
}

/// Result of a run: the reduced automaton, `#` comment lines, and an exit code.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub automaton: String,
    pub comments: String,
    pub stderr: String,
    pub code: i32,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ClosureCapExceeded { .. } => EXIT_CLOSURE_CAP,
        _ => EXIT_INPUT,
    }
}

fn failure(e: &Error) -> Outcome {
    Outcome {
        automaton: String::new(),
        comments: String::new(),
        stderr: format!("fuzzred: {e}\n"),
        code: exit_code(e),
    }
}

/// Parses `input`, reduces it and optionally checks the result.
pub fn run(opts: &RunOptions, input: &str) -> Outcome {
    match try_run(opts, input) {
        Ok(o) => o,
        Err(e) => failure(&e),
    }
}

fn try_run(opts: &RunOptions, input: &str) -> Result<Outcome> {
    let cfg = opts.config()?;
    let a = format::parse_automaton(input, opts.format)?;
    let report = soft_state_reduction(&a, &cfg)?;
    let mut out = Outcome {
        automaton: format::to_dense(&report.result),
        comments: String::new(),
        stderr: String::new(),
        code: EXIT_OK,
    };
    if opts.verbose {
        out.comments.push_str(&verbose_lines(&cfg, &report));
    }
    if opts.check > 0 {
        let len = cfg.k.min(opts.check);
        match oracle::check_eps_equivalent(&a, &report.result, cfg.epsilon, len, cfg.lattice)? {
            Verdict::Equal => {
                let _ = writeln!(out.comments, "# EQUIVALENT(eps={}, k={len})", format_value(cfg.epsilon));
            }
            Verdict::Counterexample { word, left, right } => {
                let _ = writeln!(
                    out.comments,
                    "# COUNTEREXAMPLE(eps={}, k={len}) word={} input={} result={}",
                    format_value(cfg.epsilon),
                    word.display(a.alphabet()),
                    format_value(left),
                    format_value(right)
                );
                out.stderr = format!("fuzzred: check failed on word '{}'\n", word.display(a.alphabet()));
                out.code = EXIT_CHECK_FAILED;
            }
        }
    }
    Ok(out)
}

fn verbose_lines(cfg: &ReductionConfig, r: &ReductionReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "# structure={} epsilon={} k={} precision={}",
        cfg.lattice,
        format_value(cfg.epsilon),
        cfg.k,
        cfg.precision
    );
    let phases: Vec<String> = r.phase_state_counts.iter().map(|(l, n)| format!("{l}={n}")).collect();
    let _ = writeln!(s, "# states: {}", phases.join(" "));
    let _ = writeln!(s, "# branch: {}", r.branch);
    let _ = writeln!(s, "# while-loop iterations: {}", r.while_loop_iterations);
    let _ = writeln!(s, "# closure-step executions: {}", r.closure_step_executions);
    let _ = writeln!(s, "# closure vectors: {}", r.closure_vectors);
    s
}

fn sweep_spec(args: &SweepArgs, read_stdin: &mut dyn FnMut() -> Result<String>) -> Result<SweepSpec> {
    let source = match args.random_states {
        Some(n) => Source::Random(RandomShape {
            states: n,
            symbols: args.random_symbols,
            density: args.density,
            values: args.values.clone(),
            seeds: args.seeds.clone(),
        }),
        None => {
            let (name, text) = match &args.input {
                Some(p) => (
                    p.file_name().map_or("input".into(), |f| f.to_string_lossy().into_owned()),
                    std::fs::read_to_string(p)
                        .map_err(|e| Error::Config(format!("cannot read {}: {e}", p.display())))?,
                ),
                None => ("stdin".to_string(), read_stdin()?),
            };
            let fmt = if args.sparse { Format::Sparse } else { Format::Dense };
            Source::Automaton { name, automaton: format::parse_automaton(&text, fmt)? }
        }
    };
    let mut spec = SweepSpec::new(parse_structures(&args.structures)?, args.eps.clone(), args.k.clone(), source);
    spec.check = args.check;
    spec.precision = args.precision;
    spec.max_closure = args.max_closure;
    Ok(spec)
}

fn write_or_fail(path: &Option<PathBuf>, text: &str, stdout: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Config(format!("cannot write {}: {e}", p.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| Error::Config(format!("cannot write output: {e}"))),
    }
}

/// Entry point shared by the binary and the tests.
pub fn main_with<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind::{DisplayHelp, DisplayVersion};
            if matches!(e.kind(), DisplayHelp | DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return EXIT_OK;
            }
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("invalid arguments");
            let _ = writeln!(stderr, "fuzzred: {}", first.trim_start_matches("error: "));
            return EXIT_INPUT;
        }
    };
    let mut read_stdin = || -> Result<String> {
        let mut s = String::new();
        stdin.read_to_string(&mut s).map_err(|e| Error::Config(format!("cannot read input: {e}")))?;
        Ok(s)
    };
    let result = match &cli.command {
        Some(Command::Sweep(args)) => sweep_spec(args, &mut read_stdin)
            .and_then(|spec| sweep::run_sweep(&spec))
            .and_then(|rows| sweep::to_csv_string(&rows))
            .and_then(|csv| write_or_fail(&args.out, &csv, stdout))
            .map(|_| EXIT_OK),
        None => RunOptions::from_args(&cli.reduce).and_then(|opts| {
            let input = read_stdin()?;
            let o = run(&opts, &input);
            if !o.automaton.is_empty() {
                write_or_fail(&cli.reduce.out, &o.automaton, stdout)?;
            }
            let _ = stdout.write_all(o.comments.as_bytes());
            let _ = stderr.write_all(o.stderr.as_bytes());
            Ok(o.code)
        }),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "fuzzred: {e}");
            exit_code(&e)
        }
    }
}
