//! Enumeration, offset equations and the full solver.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::{bounding_intervals, reduction_schedule, runge_exponent, Bounding, HullMode, ReductionState, RootPart, RungeSetup};
use crate::error::{Error, Result};
use crate::exact::{integer_roots, perfect_power, IntInterval, IntPoly};
use crate::family::{enumerate_tuples, EquationInstance, ProductTable, Tuple};

/// Where a solution was found. The order is the tie-break order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Channel {
    IntervalEnumeration,
    OffsetEquation,
    IntegerRoot,
}

/// One verified solution of `y^m = f(x)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolutionRecord {
    #[serde(with = "crate::records::dec")]
    pub x: BigInt,
    #[serde(with = "crate::records::dec")]
    pub y: BigInt,
    pub m: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub origin: Option<(usize, Tuple)>,
    pub channel: Channel,
}

impl SolutionRecord {
    pub fn verify(&self, f: &IntPoly) -> bool {
        num_traits::pow(self.y.clone(), self.m as usize) == f.eval(&self.x)
    }
}

/// `f` with native coefficients when they fit, for a fast evaluation path.
struct Evaluator<'a> {
    f: &'a IntPoly,
    native: Option<Vec<i128>>,
}

impl<'a> Evaluator<'a> {
    fn new(f: &'a IntPoly) -> Self {
        let native = f.coeffs().iter().map(|c| c.to_i128()).collect();
        Evaluator { f, native }
    }

    fn eval(&self, x: i64) -> BigInt {
        if let Some(cs) = &self.native {
            let xi = i128::from(x);
            let mut acc: Option<i128> = Some(0);
            for c in cs.iter().rev() {
                acc = acc.and_then(|a| a.checked_mul(xi)).and_then(|a| a.checked_add(*c));
                if acc.is_none() {
                    break;
                }
            }
            if let Some(v) = acc {
                return BigInt::from(v);
            }
        }
        self.f.eval(&BigInt::from(x))
    }
}

fn push_roots(out: &mut Vec<(BigInt, BigInt)>, x: BigInt, v: &BigInt, m: u32) {
    if let Some(y) = perfect_power(v, m) {
        if m % 2 == 0 && !y.is_zero() {
            out.push((x.clone(), -y.clone()));
        }
        out.push((x, y));
    }
}

const CHUNK: i64 = 1 << 14;

/// Every `(x, y)` with `x` in `interval` and `y^m = f(x)`, ordered by `x`
/// then `y`. Work is split into fixed chunks and merged in order.
pub fn enumerate_interval(f: &IntPoly, interval: &IntInterval, m: u32) -> Result<Vec<(BigInt, BigInt)>> {
    if m < 2 {
        return Err(Error::precondition("exponent m must be at least 2"));
    }
    let Some((lo, hi)) = interval.bounds() else { return Ok(Vec::new()) };
    let (Some(lo), Some(hi)) = (lo.to_i64(), hi.to_i64()) else {
        return Err(Error::precondition(format!("interval {interval} is too long to enumerate")));
    };
    let ev = Evaluator::new(f);
    let starts: Vec<i64> = (0..).map(|i| lo + i * CHUNK).take_while(|&s| s <= hi).collect();
    let parts: Vec<Vec<(BigInt, BigInt)>> = starts
        .par_iter()
        .map(|&s| {
            let mut out = Vec::new();
            for x in s..=(s + CHUNK - 1).min(hi) {
                let v = ev.eval(x);
                push_roots(&mut out, BigInt::from(x), &v, m);
            }
            out
        })
        .collect();
    let mut all: Vec<_> = parts.into_iter().flatten().collect();
    all.sort();
    Ok(all)
}

/// Integer roots `x` of the offsets `-k1 < k < k2` with `f(x)` an `m`-th power.
pub fn solve_offset_equations(setup: &RungeSetup, k1: &BigInt, k2: &BigInt, m: u32) -> Result<Vec<(BigInt, BigInt)>> {
    let lo = (-k1 + 1u32).to_i64().ok_or_else(|| Error::precondition("k1 too large"))?;
    let hi = (k2 - 1u32).to_i64().ok_or_else(|| Error::precondition("k2 too large"))?;
    let ks: Vec<i64> = (lo..=hi).collect();
    let parts: Vec<Vec<(BigInt, BigInt)>> = ks
        .par_iter()
        .map(|&k| {
            let off = setup.offset(&BigInt::from(k));
            let mut out = Vec::new();
            if off.is_zero() {
                return out;
            }
            for (x, _) in integer_roots(&off) {
                let v = setup.f.eval(&x);
                push_roots(&mut out, x, &v, m);
            }
            out
        })
        .collect();
    let mut all: Vec<_> = parts.into_iter().flatten().collect();
    all.sort();
    all.dedup();
    Ok(all)
}

/// Summary of the root part as written to reports.
#[derive(Clone, Debug, Serialize)]
pub struct RootPartSummary {
    pub q: crate::exact::RatPoly,
    #[serde(with = "crate::records::dec")]
    pub d: BigInt,
    pub e: u32,
}

impl From<&RootPart> for RootPartSummary {
    fn from(rp: &RootPart) -> Self {
        RootPartSummary { q: rp.q.clone(), d: rp.d.clone(), e: rp.e }
    }
}

/// Full trace of one solved equation.
#[derive(Clone, Debug, Serialize)]
pub struct EquationReport {
    pub m: u32,
    pub f: IntPoly,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub origin: Option<(usize, Tuple)>,
    pub method: &'static str,
    pub hull_mode: HullMode,
    pub root_part: RootPartSummary,
    pub initial: Bounding,
    pub reduction: Option<ReductionState>,
    /// The intervals actually used.
    pub used: Bounding,
    /// Set when `f = Q^e` exactly, so every `x` gives an `e`-th power.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degenerate: Option<String>,
    pub solutions: Vec<SolutionRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl EquationReport {
    /// The solution set as `(x, y)` pairs.
    pub fn pairs(&self) -> Vec<(BigInt, BigInt)> {
        self.solutions.iter().map(|s| (s.x.clone(), s.y.clone())).collect()
    }
}

/// Solver switches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    pub reduce: bool,
    pub hull_mode: HullMode,
    pub timing: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { reduce: true, hull_mode: HullMode::RootBound, timing: false }
    }
}

/// Solves `y^m = f(x)` completely with the default options.
pub fn runge_solve(m: u32, f: &IntPoly) -> Result<EquationReport> {
    runge_solve_with(&EquationInstance::raw(m, f.clone())?, SolveOptions::default())
}

pub fn runge_solve_with(instance: &EquationInstance, opts: SolveOptions) -> Result<EquationReport> {
    let start = Instant::now();
    let (m, f) = (instance.m, &instance.f);
    let e = runge_exponent(m, f)?;
    let setup = RungeSetup::new(f, e)?;
    let one = BigInt::one();
    let initial = bounding_intervals(&setup, &one, &one, opts.hull_mode)?;
    let mut found: BTreeMap<(BigInt, BigInt), Channel> = BTreeMap::new();
    let degenerate = setup.offset(&BigInt::zero()).is_zero();
    let (reduction, used) = if degenerate {
        (None, initial.clone())
    } else if opts.reduce {
        let r = reduction_schedule(&setup, opts.hull_mode)?;
        let used = r.last.clone();
        (Some(r), used)
    } else {
        (None, initial.clone())
    };
    if !degenerate {
        for (x, y) in enumerate_interval(f, &used.region, m)? {
            found.entry((x, y)).or_insert(Channel::IntervalEnumeration);
        }
        for (x, y) in solve_offset_equations(&setup, &used.k1, &used.k2, m)? {
            found.entry((x, y)).or_insert(Channel::OffsetEquation);
        }
    }
    for (x, _) in integer_roots(f) {
        found.entry((x, BigInt::zero())).or_insert(Channel::IntegerRoot);
    }
    let solutions: Vec<SolutionRecord> = found
        .into_iter()
        .map(|((x, y), channel)| SolutionRecord { x, y, m, origin: instance.origin.clone(), channel })
        .collect();
    if let Some(bad) = solutions.iter().find(|s| !s.verify(f)) {
        return Err(Error::inconsistency(format!("solution ({}, {}) fails verification", bad.x, bad.y)));
    }
    Ok(EquationReport {
        m,
        f: f.clone(),
        origin: instance.origin.clone(),
        method: "runge",
        hull_mode: opts.hull_mode,
        root_part: (&setup.rp).into(),
        initial,
        reduction,
        used,
        degenerate: degenerate.then(|| format!("f = Q^{e} identically; every integer x gives an e-th power")),
        solutions,
        wall_time_ms: opts.timing.then(|| start.elapsed().as_millis() as u64),
    })
}

/// One batch entry: a report, or the failure isolated to that tuple.
pub type BatchItem = (Tuple, std::result::Result<EquationReport, String>);

/// Solves `y^m = g_T(x)` for the tuples of `A_n` with index in `range`,
/// handing results to `sink` in tuple order.
pub fn batch_solve(
    m: u32,
    n: usize,
    range: std::ops::Range<usize>,
    opts: SolveOptions,
    mut sink: impl FnMut(BatchItem) -> Result<()>,
) -> Result<()> {
    let deg = (n + 1) as u32;
    if num_integer::Integer::gcd(&m, &deg) < 2 {
        return Err(Error::precondition(format!("Runge inapplicable: gcd(m, deg)=1 for m={m}, n={n}")));
    }
    let table = ProductTable::new(n);
    let tuples: Vec<Tuple> = enumerate_tuples(n).skip(range.start).take(range.len()).collect();
    const BLOCK: usize = 64;
    for block in tuples.chunks(BLOCK) {
        let items: Vec<BatchItem> = block
            .par_iter()
            .map(|t| {
                let inst = EquationInstance { m, f: table.g(n, t), origin: Some((n, t.clone())) };
                (t.clone(), runge_solve_with(&inst, opts).map_err(|e| e.to_string()))
            })
            .collect();
        for item in items {
            sink(item)?;
        }
    }
    Ok(())
}
