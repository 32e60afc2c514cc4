//! Exhaustive searches with periodic checkpoints.
//!
//! A task walks an outer range in order. Blocks of outer indices run in
//! parallel and are appended to the output in index order, so the output is
//! the same for any number of workers. After a block the runner may write a
//! checkpoint holding the last finished index, the output length and a
//! SHA-256 digest of the output so far. Resuming checks the digest,
//! truncates the output to the recorded length and continues.

mod additive;
mod scans;

pub use additive::{
    additive_count, additive_search, construct_additive_solution, trivial_family_predicate, AdditiveSolution,
    ConstructedSolution, Exclusions, TrivialFamily,
};
pub use scans::{
    bounded_search, bounded_tuple, negative_member, negative_x_scan, positive_hits, positive_x_scan, NegativeMember,
    NegativeWitness, PositiveHit,
};

use std::fs::{self, File, OpenOptions};
use std::io::{BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::family::Tuple;
use crate::records::{RecordKind, ResultRecord};

/// What a search task computes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum TaskKind {
    AdditiveTwoVar { a1: usize, a2: usize, m: u32, bound: u64, exclusions: Exclusions },
    NegativeX { x_min: i64, n_max: usize, m_max: u32 },
    PositiveX { x_max: i64, n_max: usize, m_max: u32 },
    BoundedEquation { m: u32, n: usize, x_bound: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchTask {
    pub id: String,
    pub kind: TaskKind,
}

impl SearchTask {
    /// A task whose identifier is derived from its parameters.
    pub fn new(kind: TaskKind) -> Result<Self> {
        let id = match &kind {
            TaskKind::AdditiveTwoVar { a1, a2, m, bound, exclusions } => {
                if *bound < 1 || *m < 2 {
                    return Err(Error::precondition("additive search needs bound >= 1 and m >= 2"));
                }
                format!(
                    "additive-two-var:a1={a1},a2={a2},m={m},bound={bound},trivial={},strict={}",
                    u8::from(exclusions.trivial_family),
                    u8::from(exclusions.strict)
                )
            }
            TaskKind::NegativeX { x_min, n_max, m_max } => {
                if *x_min > -1 {
                    return Err(Error::precondition("x_min must be at most -1"));
                }
                format!("negative-x:x_min={x_min},n_max={n_max},m_max={m_max}")
            }
            TaskKind::PositiveX { x_max, n_max, m_max } => {
                if *x_max < 1 {
                    return Err(Error::precondition("x_max must be at least 1"));
                }
                format!("positive-x:x_max={x_max},n_max={n_max},m_max={m_max}")
            }
            TaskKind::BoundedEquation { m, n, x_bound } => {
                if *n < 1 || *n > 40 || *x_bound < 0 || *m < 2 {
                    return Err(Error::precondition("bounded search needs 1 <= n <= 40, m >= 2, x_bound >= 0"));
                }
                format!("bounded-equation:m={m},n={n},x_bound={x_bound}")
            }
        };
        Ok(SearchTask { id, kind })
    }

    /// Inclusive outer range.
    pub fn outer_range(&self) -> (i64, i64) {
        match &self.kind {
            TaskKind::AdditiveTwoVar { bound, .. } => (1, *bound as i64),
            TaskKind::NegativeX { x_min, .. } => (*x_min, -1),
            TaskKind::PositiveX { x_max, .. } => (1, *x_max),
            TaskKind::BoundedEquation { n, .. } => (0, (1i64 << n) - 2),
        }
    }

    fn worker(&self) -> Result<Box<dyn Fn(i64) -> Result<Vec<ResultRecord>> + Sync + '_>> {
        let source = format!("search/{}", self.id);
        Ok(match &self.kind {
            TaskKind::AdditiveTwoVar { a1, a2, m, bound, exclusions } => {
                let ctx = additive::AdditiveContext::new(*a1, *a2, *m, *bound)?;
                let ex = *exclusions;
                let m = *m;
                Box::new(move |x| {
                    let (a1, a2) = ctx.arities();
                    ctx.row(x as u64, ex)
                        .into_iter()
                        .map(|s| {
                            let payload = serde_json::json!({"a1": a1, "a2": a2, "m": m, "x": s.x, "y": s.y, "z": s.z.to_string()});
                            ResultRecord::new(RecordKind::Solution, source.clone(), &payload)
                        })
                        .collect()
                })
            }
            TaskKind::NegativeX { n_max, m_max, .. } => {
                let (n_max, m_max) = (*n_max, *m_max);
                Box::new(move |x| {
                    negative_member(x, n_max, m_max)
                        .map(|mem| ResultRecord::new(RecordKind::Solution, source.clone(), &mem))
                        .into_iter()
                        .collect()
                })
            }
            TaskKind::PositiveX { n_max, m_max, .. } => {
                let (n_max, m_max) = (*n_max, *m_max);
                Box::new(move |x| {
                    positive_hits(x, n_max, m_max)
                        .iter()
                        .map(|h| ResultRecord::new(RecordKind::Solution, source.clone(), h))
                        .collect()
                })
            }
            TaskKind::BoundedEquation { m, n, x_bound } => {
                let (m, n, x_bound) = (*m, *n, *x_bound);
                let tuples: Vec<Tuple> = crate::family::enumerate_tuples(n).collect();
                Box::new(move |i| {
                    bounded_tuple(m, n, &tuples[i as usize], x_bound)?
                        .iter()
                        .map(|s| ResultRecord::new(RecordKind::Solution, source.clone(), s))
                        .collect()
                })
            }
        })
    }

    /// Rough inner-iteration count of one outer index, for checkpoint cadence.
    fn weight(&self, i: i64) -> u64 {
        match &self.kind {
            TaskKind::AdditiveTwoVar { bound, .. } => bound.saturating_sub(i as u64) + 1,
            TaskKind::NegativeX { n_max, .. } | TaskKind::PositiveX { n_max, .. } => 1u64 << (*n_max).min(40),
            TaskKind::BoundedEquation { x_bound, .. } => 2 * *x_bound as u64 + 1,
        }
    }
}

/// Persistent progress of one task.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub task_id: String,
    pub task: TaskKind,
    /// Last fully processed outer index, or `None` before the first.
    pub cursor: Option<i64>,
    /// Records written so far.
    pub count: u64,
    pub output_len: u64,
    /// Hex SHA-256 of the first `output_len` bytes of the output.
    pub digest: String,
    pub complete: bool,
}

impl Checkpoint {
    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::Checkpoint(format!("cannot read {}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| Error::Checkpoint(format!("corrupt checkpoint {}: {e}", path.display())))
    }

    /// Write-new-then-rename.
    pub fn store(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        {
            let mut f = File::create(&tmp)?;
            f.write_all(serde_json::to_string_pretty(self)?.as_bytes())?;
            f.write_all(b"\n")?;
            f.sync_all()?;
        }
        fs::rename(&tmp, path)?;
        Ok(())
    }
}

/// Runner settings.
#[derive(Clone, Debug)]
pub struct RunOptions {
    pub output: PathBuf,
    pub checkpoint: PathBuf,
    pub resume: bool,
    /// Outer indices per parallel block.
    pub block: usize,
    /// Checkpoint after this many inner iterations...
    pub every_iterations: u64,
    /// ...or this much time, whichever comes first.
    pub every: Duration,
    /// Stop cleanly after at least this many outer indices in this session.
    pub stop_after: Option<u64>,
}

impl RunOptions {
    pub fn new(output: impl Into<PathBuf>, checkpoint: impl Into<PathBuf>) -> Self {
        RunOptions {
            output: output.into(),
            checkpoint: checkpoint.into(),
            resume: false,
            block: 64,
            every_iterations: 1 << 30,
            every: Duration::from_secs(60),
            stop_after: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub task_id: String,
    pub cursor: Option<i64>,
    pub count: u64,
    pub digest: String,
    pub complete: bool,
    pub resumed: bool,
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// Reopens the output of an interrupted run after checking it.
fn reopen(task: &SearchTask, opts: &RunOptions) -> Result<(Checkpoint, Sha256)> {
    let cp = Checkpoint::load(&opts.checkpoint)?;
    if cp.task_id != task.id {
        return Err(Error::Checkpoint(format!("checkpoint belongs to task {:?}, not {:?}", cp.task_id, task.id)));
    }
    if cp.task != task.kind {
        return Err(Error::Checkpoint("checkpoint parameters do not match the task".into()));
    }
    let mut file = File::open(&opts.output)
        .map_err(|e| Error::Checkpoint(format!("cannot open output {}: {e}", opts.output.display())))?;
    let actual = file.metadata()?.len();
    if actual < cp.output_len {
        return Err(Error::Checkpoint(format!("output is {actual} bytes, checkpoint expects at least {}", cp.output_len)));
    }
    let mut hasher = Sha256::new();
    let mut prefix = (&mut file).take(cp.output_len);
    std::io::copy(&mut prefix, &mut hasher)?;
    if hex(&hasher.clone().finalize()) != cp.digest {
        return Err(Error::Checkpoint("output digest does not match the checkpoint".into()));
    }
    OpenOptions::new().write(true).open(&opts.output)?.set_len(cp.output_len)?;
    Ok((cp, hasher))
}

/// Runs `task`, writing JSONL records to `opts.output`.
pub fn run_with_checkpoint(task: &SearchTask, opts: &RunOptions) -> Result<RunReport> {
    let (lo, hi) = task.outer_range();
    let (mut cp, mut hasher, resumed) = if opts.resume {
        let (cp, h) = reopen(task, opts)?;
        (cp, h, true)
    } else {
        let cp = Checkpoint {
            task_id: task.id.clone(),
            task: task.kind.clone(),
            cursor: None,
            count: 0,
            output_len: 0,
            digest: hex(&Sha256::new().finalize()),
            complete: false,
        };
        File::create(&opts.output)?;
        (cp, Sha256::new(), false)
    };
    let mut out = BufWriter::new(OpenOptions::new().append(true).open(&opts.output)?);
    let worker = task.worker()?;
    let block = opts.block.max(1) as i64;
    let mut next = cp.cursor.map_or(lo, |c| c + 1);
    let mut done_here = 0u64;
    let mut since_iterations = 0u64;
    let mut since = Instant::now();
    while next <= hi && !cp.complete {
        let end = (next + block - 1).min(hi);
        let results: Vec<Result<Vec<ResultRecord>>> = (next..=end).into_par_iter().map(|i| worker(i)).collect();
        for r in results {
            for rec in r? {
                let line = rec.to_line()?;
                out.write_all(line.as_bytes())?;
                hasher.update(line.as_bytes());
                cp.output_len += line.len() as u64;
                cp.count += 1;
            }
        }
        since_iterations += (next..=end).map(|i| task.weight(i)).sum::<u64>();
        done_here += (end - next + 1) as u64;
        cp.cursor = Some(end);
        next = end + 1;
        cp.complete = next > hi;
        let stopping = opts.stop_after.is_some_and(|s| done_here >= s);
        if cp.complete || stopping || since_iterations >= opts.every_iterations || since.elapsed() >= opts.every {
            out.flush()?;
            out.get_ref().sync_all()?;
            cp.digest = hex(&hasher.clone().finalize());
            cp.store(&opts.checkpoint)?;
            since_iterations = 0;
            since = Instant::now();
        }
        if stopping {
            break;
        }
    }
    if cp.cursor.is_none() || (lo > hi && !cp.complete) {
        cp.complete = true;
        cp.digest = hex(&hasher.clone().finalize());
        cp.store(&opts.checkpoint)?;
    }
    out.flush()?;
    Ok(RunReport {
        task_id: cp.task_id.clone(),
        cursor: cp.cursor,
        count: cp.count,
        digest: cp.digest.clone(),
        complete: cp.complete,
        resumed,
    })
}
