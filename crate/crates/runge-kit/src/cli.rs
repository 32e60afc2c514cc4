//! Command-line front end.
//!
//! Every subcommand streams [`ResultRecord`]s as JSON lines, to `--out` or to
//! standard output. Human-readable summaries go to standard error, except for
//! `report`, whose table is its output.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde::Serialize;

use crate::curves::{self, bundled_fixtures, load_fixtures};
use crate::error::{Error, Result};
use crate::exact::IntPoly;
use crate::family::{self, EquationInstance, Tuple};
use crate::pell;
use crate::records::{read_jsonl, write_jsonl, RecordKind, ResultRecord};
use crate::runge::{batch_solve, runge_solve_with, HullMode, SolveOptions};
use crate::search::{self, Exclusions, RunOptions, SearchTask, TaskKind};

pub const JOBS_ENV: &str = "RUNGE_KIT_JOBS";

#[derive(Debug, Parser)]
#[command(name = "runge-kit", version, about = "Perfect powers among sums of products of consecutive integers")]
pub struct Cli {
    /// Worker threads (default: $RUNGE_KIT_JOBS, else one per core).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Write JSONL records here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Add a wall-clock timestamp to every record (breaks byte-for-byte reproducibility).
    #[arg(long, global = true)]
    pub timestamps: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve one equation y^m = f(x) completely.
    Solve(SolveArgs),
    /// Solve y^m = g_T(x) for every T in A_n.
    Batch(BatchArgs),
    /// Constructions and structural checks on g_T.
    #[command(subcommand)]
    Family(FamilyCmd),
    /// Pell streams and the polynomial families built from them.
    #[command(subcommand)]
    Pell(PellCmd),
    /// Exhaustive checkpointed searches.
    #[command(subcommand)]
    Search(SearchCmd),
    /// Discriminant curves, identities and point tables.
    #[command(subcommand)]
    Curves(CurvesCmd),
    /// Summarize a JSONL result file.
    Report {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long)]
    pub m: u32,
    /// Use g_T with this n (requires --tuple).
    #[arg(long, requires = "tuple")]
    pub n: Option<usize>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub tuple: Option<Vec<usize>>,
    /// Raw polynomial coefficients, constant term first.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with_all = ["n", "tuple"])]
    pub poly: Option<Vec<BigInt>>,
    #[command(flatten)]
    pub solver: SolverFlags,
}

#[derive(Debug, Args)]
pub struct SolverFlags {
    /// Run the interval reduction schedule (the default).
    #[arg(long, overrides_with = "no_reduce")]
    pub reduce: bool,
    /// Keep k1 = k2 = 1.
    #[arg(long)]
    pub no_reduce: bool,
    /// Use exact Sturm hulls instead of coefficient root bounds.
    #[arg(long)]
    pub exact_hull: bool,
    /// Record wall time per equation.
    #[arg(long)]
    pub timing: bool,
}

impl SolverFlags {
    fn options(&self) -> SolveOptions {
        SolveOptions {
            reduce: !self.no_reduce,
            hull_mode: if self.exact_hull { HullMode::Exact } else { HullMode::RootBound },
            timing: self.timing,
        }
    }
}

#[derive(Debug, Args)]
pub struct BatchArgs {
    #[arg(long)]
    pub m: u32,
    #[arg(long)]
    pub n: usize,
    /// First tuple index (lexicographic order, from 0).
    #[arg(long, default_value_t = 0)]
    pub from: usize,
    /// One past the last tuple index.
    #[arg(long)]
    pub to: Option<usize>,
    #[command(flatten)]
    pub solver: SolverFlags,
}

#[derive(Debug, Subcommand)]
pub enum FamilyCmd {
    /// Print g_T as a coefficient list.
    G {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',')]
        tuple: Vec<usize>,
    },
    /// Tuples with a repeated root of g_T, checked against the three families.
    Conjecture1 {
        #[arg(long, default_value_t = 20)]
        max_n: usize,
    },
    /// Factorization and mod-4 checks for every tuple of A_n.
    Lemma3 {
        #[arg(long)]
        n: usize,
    },
    /// Genus of y^2 = g_T(x).
    Genus {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',')]
        tuple: Vec<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum PellCmd {
    /// Terms of X^2 - A Z^2 = B from a particular and a fundamental solution.
    Stream {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, num_args = 1)]
        particular: Vec<i64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, num_args = 1)]
        fundamental: Vec<i64>,
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
    /// Polynomial solutions of z^3 = p_2(x) + p_2(y) built from the Pell pair (U_n, V_n).
    CubicSum {
        #[arg(long, default_value_t = 3)]
        count: usize,
    },
    /// Both congruences and the closed forms for n <= max-n.
    Congruences {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
    /// Solutions of z^2 = p_4(x) + p_4(-x) from Fibonacci and Lucas numbers.
    Fibonacci {
        #[arg(long, default_value_t = 10)]
        count: u64,
    },
    /// The odd-exponent family for given m and t.
    OddM {
        #[arg(long)]
        m: u32,
        #[arg(long, allow_hyphen_values = true)]
        t: BigInt,
    },
}

#[derive(Debug, Args)]
pub struct CheckpointFlags {
    /// Checkpoint file (default: <out>.ckpt.json).
    #[arg(long)]
    pub checkpoint: Option<PathBuf>,
    /// Continue from an existing checkpoint.
    #[arg(long)]
    pub resume: bool,
    /// Stop cleanly after this many outer indices.
    #[arg(long)]
    pub stop_after: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum SearchCmd {
    /// z^m = p_a1(x) + p_a2(y) over 1 <= x <= y <= bound.
    Additive {
        #[arg(long, value_delimiter = ',', num_args = 1)]
        arities: Vec<usize>,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        bound: u64,
        /// Drop the polynomial family of trivial solutions.
        #[arg(long)]
        exclude_trivial: bool,
        /// Require x < y.
        #[arg(long)]
        strict: bool,
        #[command(flatten)]
        cp: CheckpointFlags,
    },
    /// Number of solutions of z^m = p_a1(x) + p_a2(y) over 1 <= x <= y <= bound.
    Count {
        #[arg(long, value_delimiter = ',', num_args = 1)]
        arities: Vec<usize>,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        bound: u64,
    },
    /// Negative x with g_T(x) a perfect power for some T.
    NegativeX {
        #[arg(long, allow_hyphen_values = true, default_value_t = -1000)]
        x_min: i64,
        #[arg(long, default_value_t = 14)]
        n_max: usize,
        #[arg(long, default_value_t = 0)]
        m_max: u32,
        #[command(flatten)]
        cp: CheckpointFlags,
    },
    /// Positive x with g_T(x) a perfect power.
    PositiveX {
        #[arg(long, default_value_t = 4)]
        x_max: i64,
        #[arg(long, default_value_t = 14)]
        n_max: usize,
        #[arg(long, default_value_t = 0)]
        m_max: u32,
        #[command(flatten)]
        cp: CheckpointFlags,
    },
    /// Brute force over |x| <= x-bound for every T in A_n.
    Bounded {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        x_bound: i64,
        #[command(flatten)]
        cp: CheckpointFlags,
    },
}

#[derive(Debug, Subcommand)]
pub enum CurvesCmd {
    /// Rational points of bounded height on Disc_x(p_i(x) + p_i(ax + b)) = 0.
    DiscSearch {
        #[arg(long)]
        i: usize,
        #[arg(long)]
        height: u64,
    },
    /// Divisibility of the discriminant by G1^2 and the cofactor degree.
    G1,
    /// The product and half-integer identities for k <= k-max.
    Identities {
        #[arg(long, default_value_t = 25)]
        k_max: u32,
    },
    /// Check every point of the fixture file.
    VerifyTables {
        /// Fixture file (default: the bundled one).
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
}

/// Resolves the worker count from the flag, then the environment.
/// `None` means the hardware default.
pub fn resolve_jobs(flag: Option<usize>, env: Option<&str>) -> Result<Option<usize>> {
    let jobs = match (flag, env) {
        (Some(j), _) => Some(j),
        (None, Some(v)) if !v.trim().is_empty() => Some(
            v.trim().parse::<usize>().map_err(|_| Error::precondition(format!("{JOBS_ENV}={v:?} is not a number")))?,
        ),
        _ => None,
    };
    if jobs == Some(0) {
        return Err(Error::precondition("--jobs must be at least 1"));
    }
    Ok(jobs)
}

/// Parses `argv` and runs it, returning the process exit code.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(cli: Cli) -> Result<()> {
    let env = std::env::var(JOBS_ENV).ok();
    let jobs = resolve_jobs(cli.jobs, env.as_deref())?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        builder = builder.num_threads(j);
    }
    let pool = builder.build().map_err(|e| Error::precondition(format!("cannot start workers: {e}")))?;
    let Cli { out, timestamps, command, .. } = cli;
    pool.install(move || match command {
        Command::Search(cmd) => run_search(cmd, out.as_deref(), timestamps),
        Command::Report { input } => report(&input),
        other => {
            let mut sink = Sink::open(out.as_deref(), timestamps)?;
            let r = dispatch(other, &mut sink);
            sink.finish()?;
            r
        }
    })
}

/// One output stream of records.
struct Sink {
    w: Box<dyn Write>,
    timestamps: bool,
    count: u64,
}

impl Sink {
    fn open(path: Option<&Path>, timestamps: bool) -> Result<Self> {
        let w: Box<dyn Write> = match path {
            Some(p) => Box::new(BufWriter::new(File::create(p)?)),
            None => Box::new(BufWriter::new(io::stdout())),
        };
        Ok(Sink { w, timestamps, count: 0 })
    }

    fn emit(&mut self, kind: RecordKind, source: impl Into<String>, payload: &impl Serialize) -> Result<()> {
        let mut rec = ResultRecord::new(kind, source, payload)?;
        if self.timestamps {
            rec = rec.stamped();
        }
        write_jsonl(&mut self.w, &rec)?;
        self.count += 1;
        Ok(())
    }

    fn finish(mut self) -> Result<()> {
        self.w.flush()?;
        Ok(())
    }
}

fn tuple_label(t: &[usize]) -> String {
    t.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn dispatch(cmd: Command, sink: &mut Sink) -> Result<()> {
    match cmd {
        Command::Solve(a) => solve(a, sink),
        Command::Batch(a) => batch(a, sink),
        Command::Family(c) => family_cmd(c, sink),
        Command::Pell(c) => pell_cmd(c, sink),
        Command::Curves(c) => curves_cmd(c, sink),
        Command::Search(_) | Command::Report { .. } => unreachable!("handled by execute"),
    }
}

fn solve(a: SolveArgs, sink: &mut Sink) -> Result<()> {
    let (inst, source) = match (a.poly, a.n, a.tuple) {
        (Some(c), _, _) => {
            let f = IntPoly::new(c);
            let src = format!("runge/solve:m={},f={:?}", a.m, f.to_strings());
            (EquationInstance::raw(a.m, f)?, src)
        }
        (None, Some(n), Some(t)) => {
            let src = format!("runge/solve:m={},n={n},T=({})", a.m, tuple_label(&t));
            (EquationInstance::family(a.m, n, Tuple::new(t, n)?)?, src)
        }
        _ => return Err(Error::precondition("solve needs either --poly or --n with --tuple")),
    };
    let report = runge_solve_with(&inst, a.solver.options())?;
    eprintln!("{inst}: {} solutions", report.solutions.len());
    for s in &report.solutions {
        eprintln!("  ({}, {})", s.x, s.y);
    }
    sink.emit(RecordKind::Report, source, &report)
}

fn batch(a: BatchArgs, sink: &mut Sink) -> Result<()> {
    let total = (1usize << a.n.min(usize::BITS as usize - 1)) - 1;
    let to = a.to.unwrap_or(total).min(total);
    if a.from > to {
        return Err(Error::precondition(format!("empty tuple range {}..{to}", a.from)));
    }
    let mut failures = 0usize;
    let mut solved = 0usize;
    let (m, n) = (a.m, a.n);
    batch_solve(m, n, a.from..to, a.solver.options(), |(t, r)| {
        let source = format!("runge/batch:m={m},n={n},T=({})", tuple_label(t.entries()));
        match r {
            Ok(report) => {
                solved += 1;
                sink.emit(RecordKind::Report, source, &report)
            }
            Err(message) => {
                failures += 1;
                sink.emit(RecordKind::Verification, source, &serde_json::json!({"tuple": t, "error": message}))
            }
        }
    })?;
    eprintln!("batch m={m} n={n}: {solved} equations solved, {failures} failed");
    Ok(())
}

fn family_cmd(c: FamilyCmd, sink: &mut Sink) -> Result<()> {
    match c {
        FamilyCmd::G { n, tuple } => {
            let src = format!("family/g_poly:n={n},T=({})", tuple_label(&tuple));
            let g = family::g_poly(n, &Tuple::new(tuple, n)?)?;
            eprintln!("{g}");
            sink.emit(RecordKind::Family, src, &g)
        }
        FamilyCmd::Conjecture1 { max_n } => {
            let scan = family::multiple_root_scan(max_n)?;
            for e in &scan.entries {
                let src = format!("family/multiple_root_scan:n={},T=({})", e.n, tuple_label(e.tuple.entries()));
                sink.emit(RecordKind::Family, src, e)?;
            }
            let summary = serde_json::json!({
                "n_max": scan.n_max,
                "tuples_scanned": scan.tuples_scanned,
                "flagged": scan.entries.len(),
                "counterexamples": scan.counterexamples,
                "missing": scan.missing,
                "verified": scan.verified(),
            });
            sink.emit(RecordKind::Verification, format!("family/multiple_root_scan:max_n={max_n}"), &summary)?;
            eprintln!("{} tuples scanned, {} with repeated roots", scan.tuples_scanned, scan.entries.len());
            if !scan.verified() {
                return Err(Error::inconsistency("repeated-root tuples differ from the three predicted families"));
            }
            Ok(())
        }
        FamilyCmd::Lemma3 { n } => {
            let r = family::lemma3_verify(n)?;
            sink.emit(RecordKind::Verification, format!("family/lemma3_verify:n={n}"), &r)?;
            eprintln!("{} tuples checked, {} mod-4 exceptions", r.tuples_checked, r.mod4_exceptions.len());
            if !r.passed() {
                return Err(Error::inconsistency(format!("factorization checks failed: {:?}", r.failures)));
            }
            Ok(())
        }
        FamilyCmd::Genus { n, tuple } => {
            let src = format!("family/hyperelliptic_genus:n={n},T=({})", tuple_label(&tuple));
            let g = family::hyperelliptic_genus(&family::g_poly(n, &Tuple::new(tuple, n)?)?)?;
            eprintln!("genus {}", g.genus);
            sink.emit(RecordKind::Family, src, &g)
        }
    }
}

fn pair(v: &[i64], what: &str) -> Result<(i64, i64)> {
    match v {
        [a, b] => Ok((*a, *b)),
        _ => Err(Error::precondition(format!("--{what} takes two comma-separated integers"))),
    }
}

fn pell_cmd(c: PellCmd, sink: &mut Sink) -> Result<()> {
    match c {
        PellCmd::Stream { a, b, particular, fundamental, count } => {
            let (p, f) = (pair(&particular, "particular")?, pair(&fundamental, "fundamental")?);
            let mut s = pell::PellStream::from_i64(a, b, p, f)?;
            let src = format!("pell/pell_next:A={a},B={b}");
            for (k, (x, z)) in s.take(count)?.into_iter().enumerate() {
                let payload = serde_json::json!({"index": k, "x": x.to_string(), "z": z.to_string()});
                sink.emit(RecordKind::Solution, src.clone(), &payload)?;
            }
            Ok(())
        }
        PellCmd::CubicSum { count } => {
            for n in 0..count {
                let fam = pell::cubic_sum_solution(n)?;
                fam.check().map_err(|e| Error::inconsistency(format!("cubic-sum family n={n}: {e}")))?;
                sink.emit(RecordKind::Family, format!("pell/cubic_sum_solution:n={n}"), &fam)?;
            }
            eprintln!("{count} cubic-sum families checked");
            Ok(())
        }
        PellCmd::Congruences { max_n } => {
            let r = pell::verify_congruences(max_n)?;
            sink.emit(RecordKind::Verification, format!("pell/verify_congruences:n_max={max_n}"), &r)?;
            if !r.passed() {
                return Err(Error::inconsistency("congruence checks failed"));
            }
            eprintln!("congruences hold for n <= {max_n}");
            Ok(())
        }
        PellCmd::Fibonacci { count } => {
            for n in 1..=count {
                let (x, y) = pell::fibonacci_family(n)?;
                let payload = serde_json::json!({"n": n, "x": x.to_string(), "y": y.to_string()});
                sink.emit(RecordKind::Solution, format!("pell/fibonacci_family:n={n}"), &payload)?;
            }
            Ok(())
        }
        PellCmd::OddM { m, t } => {
            let (x, y, z) = pell::odd_m_family(m, &t)?;
            let payload = serde_json::json!({"m": m, "t": t.to_string(), "x": x.to_string(), "y": y.to_string(), "z": z.to_string()});
            sink.emit(RecordKind::Solution, format!("pell/odd_m_family:m={m},t={t}"), &payload)
        }
    }
}

fn curves_cmd(c: CurvesCmd, sink: &mut Sink) -> Result<()> {
    match c {
        CurvesCmd::DiscSearch { i, height } => {
            let pts = curves::rational_point_search(i, height)?;
            for p in &pts {
                sink.emit(RecordKind::PointCheck, format!("curves/rational_point_search:i={i},h={height}"), p)?;
            }
            eprintln!("{} points of height <= {height} on the i={i} curve", pts.len());
            Ok(())
        }
        CurvesCmd::G1 => {
            let r = curves::g1_check()?;
            sink.emit(RecordKind::Verification, "curves/g1_check", &r)?;
            if !r.passed {
                return Err(Error::inconsistency("G1 divisibility check failed"));
            }
            eprintln!("G1^{} divides the discriminant, cofactor degree {:?}", r.multiplicity, r.cofactor_degree);
            Ok(())
        }
        CurvesCmd::Identities { k_max } => {
            let r = curves::identity_suite(k_max)?;
            sink.emit(RecordKind::Verification, format!("curves/identity_suite:k_max={k_max}"), &r)?;
            if !r.passed() {
                return Err(Error::inconsistency("identity checks failed"));
            }
            eprintln!("identities hold for k <= {k_max}");
            Ok(())
        }
        CurvesCmd::VerifyTables { fixtures } => {
            let fx = match fixtures {
                Some(p) => load_fixtures(p)?,
                None => bundled_fixtures(),
            };
            let r = curves::point_table_verify(&fx)?;
            for c in &r.checks {
                sink.emit(RecordKind::PointCheck, format!("curves/point_table_verify:{}", c.anchor), c)?;
            }
            for note in &r.notes {
                eprintln!("note: {note}");
            }
            let failed: Vec<_> = r.failures().collect();
            eprintln!("{} points, {} failed", r.checks.len(), failed.len());
            for f in &failed {
                eprintln!("  FAIL {} {}: {}", f.anchor, f.point, f.detail);
            }
            if !failed.is_empty() {
                return Err(Error::inconsistency(format!("{} displayed points do not verify", failed.len())));
            }
            Ok(())
        }
    }
}

fn arity_pair(arities: &[usize]) -> Result<(usize, usize)> {
    match arities {
        [a1, a2] => Ok((*a1, *a2)),
        _ => Err(Error::precondition("--arities takes exactly two values, e.g. 2,2")),
    }
}

fn run_search(cmd: SearchCmd, out: Option<&Path>, timestamps: bool) -> Result<()> {
    if timestamps {
        return Err(Error::precondition("--timestamps is not supported for checkpointed searches"));
    }
    let (kind, cp) = match cmd {
        SearchCmd::Count { arities, m, bound } => {
            let (a1, a2) = arity_pair(&arities)?;
            let count = search::additive_count(a1, a2, m, bound)?;
            let mut sink = Sink::open(out, false)?;
            let payload = serde_json::json!({"a1": a1, "a2": a2, "m": m, "bound": bound, "count": count});
            sink.emit(RecordKind::Verification, format!("search/additive_count:a1={a1},a2={a2},m={m},bound={bound}"), &payload)?;
            eprintln!("{count} solutions");
            return sink.finish();
        }
        SearchCmd::Additive { arities, m, bound, exclude_trivial, strict, cp } => {
            let (a1, a2) = arity_pair(&arities)?;
            let exclusions = Exclusions { trivial_family: exclude_trivial, strict };
            (TaskKind::AdditiveTwoVar { a1, a2, m, bound, exclusions }, cp)
        }
        SearchCmd::NegativeX { x_min, n_max, m_max, cp } => (TaskKind::NegativeX { x_min, n_max, m_max }, cp),
        SearchCmd::PositiveX { x_max, n_max, m_max, cp } => (TaskKind::PositiveX { x_max, n_max, m_max }, cp),
        SearchCmd::Bounded { m, n, x_bound, cp } => (TaskKind::BoundedEquation { m, n, x_bound }, cp),
    };
    let task = SearchTask::new(kind)?;
    let (output, checkpoint, to_stdout) = match (out, &cp.checkpoint) {
        (Some(o), Some(c)) => (o.to_path_buf(), c.clone(), false),
        (Some(o), None) => (o.to_path_buf(), default_checkpoint(o), false),
        (None, Some(c)) => (c.with_extension("jsonl"), c.clone(), false),
        (None, None) => {
            if cp.resume || cp.stop_after.is_some() {
                return Err(Error::precondition("--resume and --stop-after need --out or --checkpoint"));
            }
            let dir = std::env::temp_dir().join(format!("runge-kit-{}", std::process::id()));
            std::fs::create_dir_all(&dir)?;
            (dir.join("out.jsonl"), dir.join("out.ckpt.json"), true)
        }
    };
    let mut opts = RunOptions::new(&output, &checkpoint);
    opts.resume = cp.resume;
    opts.stop_after = cp.stop_after;
    let report = search::run_with_checkpoint(&task, &opts)?;
    if to_stdout {
        io::copy(&mut File::open(&output)?, &mut io::stdout().lock())?;
        let _ = std::fs::remove_dir_all(output.parent().expect("temp dir"));
    } else {
        eprintln!(
            "{}: {} records, {} ({})",
            report.task_id,
            report.count,
            if report.complete { "complete" } else { "interrupted" },
            checkpoint.display()
        );
    }
    Ok(())
}

fn default_checkpoint(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".ckpt.json");
    PathBuf::from(s)
}

/// Per-kind and per-operation record counts of a JSONL file.
#[derive(Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub by_kind: BTreeMap<String, usize>,
    /// Keyed by the source up to the first `:`.
    pub by_operation: BTreeMap<String, usize>,
    pub partial_tail: bool,
}

pub fn summarize(path: &Path) -> Result<Summary> {
    let contents = read_jsonl(path)?;
    let mut s = Summary { partial_tail: contents.partial_tail.is_some(), ..Summary::default() };
    for r in &contents.records {
        s.total += 1;
        *s.by_kind.entry(r.kind.as_str().to_string()).or_default() += 1;
        let op = r.source.split(':').next().unwrap_or_default().to_string();
        *s.by_operation.entry(op).or_default() += 1;
    }
    Ok(s)
}

fn report(input: &Path) -> Result<()> {
    let s = summarize(input)?;
    let mut out = io::stdout().lock();
    writeln!(out, "{}", input.display())?;
    writeln!(out, "  {:<44} {:>10}", "kind", "records")?;
    for (k, v) in &s.by_kind {
        writeln!(out, "  {k:<44} {v:>10}")?;
    }
    writeln!(out, "  {:<44} {:>10}", "operation", "records")?;
    for (k, v) in &s.by_operation {
        writeln!(out, "  {k:<44} {v:>10}")?;
    }
    writeln!(out, "  {:<44} {:>10}", "total", s.total)?;
    if s.partial_tail {
        writeln!(out, "  (a partial final line was ignored)")?;
    }
    Ok(())
}
