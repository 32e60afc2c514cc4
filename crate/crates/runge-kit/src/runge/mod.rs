//! Complete integer solution of `y^m = f(x)` for monic `f` by Runge's method.
//!
//! With `e = gcd(m, deg f) >= 2`, let `Q` be the polynomial part of `f^(1/e)`
//! and `D` the least common denominator of its coefficients. Outside the
//! region where the offset polynomials `D^e f - (DQ - k1)^e` and
//! `D^e f - (DQ + k2)^e` can change sign, and where `|DQ| <= max(k1, k2)`,
//! every solution satisfies `D^e f(x) = (DQ(x) + k)^e` for some
//! `-k1 < k < k2`. The region is enumerated directly; the finitely many
//! offset equations are solved for their integer roots.

mod solve;

pub use solve::{
    batch_solve, enumerate_interval, runge_solve, runge_solve_with, solve_offset_equations, BatchItem, Channel,
    EquationReport, SolutionRecord, SolveOptions,
};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{nth_root_floor, real_root_hull, root_bound_hull, IntInterval, IntPoly, RatPoly};

/// Polynomial part `Q` of `f^(1/e)` with its denominator `D`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootPart {
    pub q: RatPoly,
    #[serde(with = "crate::records::dec")]
    pub d: BigInt,
    pub e: u32,
}

impl RootPart {
    /// `D * Q` as an integer polynomial.
    pub fn dq(&self) -> IntPoly {
        let dr = BigRational::from_integer(self.d.clone());
        self.q.scale(&dr).to_int().expect("D clears the denominators")
    }
}

/// The unique monic `Q` with `deg(f - Q^e) < deg f - deg Q`.
pub fn root_poly_part(f: &IntPoly, e: u32) -> Result<RootPart> {
    if e < 2 {
        return Err(Error::precondition("root_poly_part needs e >= 2"));
    }
    if !f.is_monic() {
        return Err(Error::precondition("root_poly_part needs a monic polynomial"));
    }
    let big_n = f.degree().expect("monic");
    if big_n % e as usize != 0 {
        return Err(Error::precondition(format!("e = {e} does not divide deg f = {big_n}")));
    }
    let s = big_n / e as usize;
    let fr = f.to_rat();
    let mut coeffs = vec![BigRational::zero(); s + 1];
    coeffs[s] = BigRational::one();
    let e_rat = BigRational::from_integer(e.into());
    for k in 1..=s {
        let partial = RatPoly::new(coeffs.clone()).pow(e);
        let target = big_n - k;
        coeffs[s - k] = (fr.coeff(target) - partial.coeff(target)) / &e_rat;
    }
    let q = RatPoly::new(coeffs);
    let defect = &fr - &q.pow(e);
    if defect.deg_i64() > (big_n - s) as i64 - 1 {
        return Err(Error::inconsistency("root part defect has too high a degree"));
    }
    let d = q.denominator_lcm();
    Ok(RootPart { q, d, e })
}

/// Precomputed data shared by every offset and interval computation.
#[derive(Clone, Debug)]
pub struct RungeSetup {
    pub f: IntPoly,
    pub rp: RootPart,
    dq: IntPoly,
    de_f: IntPoly,
}

impl RungeSetup {
    pub fn new(f: &IntPoly, e: u32) -> Result<Self> {
        let rp = root_poly_part(f, e)?;
        let dq = rp.dq();
        let de_f = f.scale(&num_traits::pow(rp.d.clone(), e as usize));
        Ok(RungeSetup { f: f.clone(), rp, dq, de_f })
    }

    /// `D^e f - (DQ + k)^e`.
    pub fn offset(&self, k: &BigInt) -> IntPoly {
        let shifted = &self.dq + &IntPoly::constant(k.clone());
        &self.de_f - &shifted.pow(self.rp.e)
    }

    pub fn dq(&self) -> &IntPoly {
        &self.dq
    }
}

/// `D^e f - (DQ + k)^e` for the root part of `f`.
pub fn offset_poly(f: &IntPoly, rp: &RootPart, k: &BigInt) -> IntPoly {
    let dq = rp.dq();
    let de_f = f.scale(&num_traits::pow(rp.d.clone(), rp.e as usize));
    &de_f - &(&dq + &IntPoly::constant(k.clone())).pow(rp.e)
}

/// How root locations of the offset polynomials are enclosed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum HullMode {
    /// Coefficient-sign root bounds, rounded outward. Cheap and the default.
    #[default]
    RootBound,
    /// Exact `[floor(min root), ceil(max root)]` from Sturm sequences.
    Exact,
}

impl HullMode {
    pub fn hull(self, p: &IntPoly) -> IntInterval {
        if p.degree().unwrap_or(0) == 0 {
            return IntInterval::Empty;
        }
        match self {
            HullMode::RootBound => root_bound_hull(p),
            HullMode::Exact => real_root_hull(p).expect("degree >= 1"),
        }
    }
}

/// Intervals for one choice of `(k1, k2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bounding {
    #[serde(with = "crate::records::dec")]
    pub k1: BigInt,
    #[serde(with = "crate::records::dec")]
    pub k2: BigInt,
    pub i1: IntInterval,
    pub i2: IntInterval,
    /// Convex hull of `i1` and `i2`: every integer here is tested directly.
    pub region: IntInterval,
    /// Integers in `region` plus the nonzero offsets `-k1 < k < k2`.
    #[serde(with = "crate::records::dec")]
    pub subequation_count: BigInt,
}

/// Exact hull of `{x : |DQ(x)| <= k}`.
fn small_q_region(setup: &RungeSetup, k: &BigInt, within: &IntInterval) -> IntInterval {
    let lower = &setup.dq - &IntPoly::constant(k.clone());
    let upper = &setup.dq + &IntPoly::constant(k.clone());
    let cheap = HullMode::RootBound.hull(&lower).hull(&HullMode::RootBound.hull(&upper));
    if cheap.is_subset_of(within) {
        // Already covered, so the exact hull cannot widen anything.
        return IntInterval::Empty;
    }
    HullMode::Exact.hull(&lower).hull(&HullMode::Exact.hull(&upper))
}

fn side_interval(setup: &RungeSetup, k: &BigInt, lower_side: bool, mode: HullMode) -> IntInterval {
    let off = if lower_side { setup.offset(&-k) } else { setup.offset(k) };
    let i = mode.hull(&off);
    let w = small_q_region(setup, k, &i);
    i.hull(&w)
}

fn count(region: &IntInterval, k1: &BigInt, k2: &BigInt) -> BigInt {
    region.len() + k1 + k2 - 2u32
}

/// `I1`, `I2` and the enumeration region for given `k1, k2 >= 1`.
pub fn bounding_intervals(setup: &RungeSetup, k1: &BigInt, k2: &BigInt, mode: HullMode) -> Result<Bounding> {
    if k1 < &BigInt::one() || k2 < &BigInt::one() {
        return Err(Error::precondition("k1 and k2 must be at least 1"));
    }
    let i1 = mode.hull(&setup.offset(&-k1));
    let i2 = mode.hull(&setup.offset(k2));
    let kmax = k1.max(k2);
    let within = i1.intersect(&i2);
    let w = small_q_region(setup, kmax, &within);
    let i1 = i1.hull(&w);
    let i2 = i2.hull(&w);
    let region = i1.hull(&i2);
    let subequation_count = count(&region, k1, k2);
    Ok(Bounding { k1: k1.clone(), k2: k2.clone(), i1, i2, region, subequation_count })
}

/// Result of the interval-reduction schedule.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionState {
    pub initial: Bounding,
    pub last: Bounding,
    #[serde(with = "crate::records::dec")]
    pub step1: BigInt,
    #[serde(with = "crate::records::dec")]
    pub step2: BigInt,
    pub iterations1: u32,
    pub iterations2: u32,
}

/// Cost of one offset equation relative to testing one integer directly.
pub const OFFSET_WEIGHT: u32 = 3;

const MAX_STEPS: u32 = 100_000;

/// Integers in the hull of `i` and `0`.
fn extent(i: &IntInterval) -> BigInt {
    i.hull(&IntInterval::point(BigInt::zero())).len()
}

fn run_side(setup: &RungeSetup, base: &IntInterval, lower_side: bool, mode: HullMode) -> (BigInt, BigInt, u32) {
    let size = extent(base);
    let step = BigInt::from(nth_root_floor(size.magnitude(), 4)).max(BigInt::one());
    let weight = BigInt::from(OFFSET_WEIGHT);
    let mut prev = size + &weight;
    let mut i = 0u32;
    loop {
        i += 1;
        let k = &step * i;
        let cost = extent(&side_interval(setup, &k, lower_side, mode)) + &weight * &k;
        if cost >= prev || i >= MAX_STEPS {
            return (step, k, i);
        }
        prev = cost;
    }
}

/// Chooses `k1 = i1 * s1` and `k2 = i2 * s2` with `s = floor(|I|^(1/4))`.
///
/// Each side starts from its interval at `k = 1` and advances the multiplier
/// while its own cost, the integers left to test plus `OFFSET_WEIGHT` per
/// offset equation, strictly decreases. The first multiplier that fails to
/// improve is the one kept. The intervals are anchored at 0 when sized.
pub fn reduction_schedule(setup: &RungeSetup, mode: HullMode) -> Result<ReductionState> {
    let one = BigInt::one();
    let initial = bounding_intervals(setup, &one, &one, mode)?;
    if initial.i1.is_empty() && initial.i2.is_empty() {
        return Ok(ReductionState {
            last: initial.clone(),
            initial,
            step1: one.clone(),
            step2: one,
            iterations1: 0,
            iterations2: 0,
        });
    }
    let (step1, k1, iterations1) = run_side(setup, &initial.i1, true, mode);
    let (step2, k2, iterations2) = run_side(setup, &initial.i2, false, mode);
    let last = bounding_intervals(setup, &k1, &k2, mode)?;
    Ok(ReductionState { initial, last, step1, step2, iterations1, iterations2 })
}

/// `e = gcd(m, deg f)`, or an error when Runge's method does not apply.
pub fn runge_exponent(m: u32, f: &IntPoly) -> Result<u32> {
    if m < 2 {
        return Err(Error::precondition("exponent m must be at least 2"));
    }
    if !f.is_monic() {
        return Err(Error::precondition("Runge's method needs a monic polynomial"));
    }
    let deg = f.degree().expect("monic") as u32;
    let e = m.gcd(&deg);
    if e < 2 {
        return Err(Error::precondition(format!("Runge inapplicable: gcd(m, deg)=1 for m={m}, deg={deg}")));
    }
    Ok(e)
}

/// Rounds to `digits` significant digits, for comparing printed endpoints.
pub fn round_significant(v: &BigInt, digits: u32) -> BigInt {
    let s = v.abs().to_string();
    let len = s.len() as u32;
    if len <= digits {
        return v.clone();
    }
    let unit = num_traits::pow(BigInt::from(10), (len - digits) as usize);
    let (q, r) = v.abs().div_rem(&unit);
    let up = &r * 2u32 >= unit;
    let q = if up { q + 1u32 } else { q };
    let out = q * unit;
    if v.is_negative() {
        -out
    } else {
        out
    }
}

/// Integers as `f64` for logging only.
pub fn approx(v: &BigInt) -> f64 {
    v.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn ip(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(cs)
    }

    #[test]
    fn root_part_examples() {
        let rp = root_poly_part(&ip(&[3, 2, 1]), 2).unwrap();
        assert_eq!((rp.q.clone(), rp.d.clone()), (ip(&[1, 1]).to_rat(), BigInt::one()));
        let rp = root_poly_part(&ip(&[2, 3, 3, 1]), 3).unwrap();
        assert_eq!(rp.q, ip(&[1, 1]).to_rat());
        assert!(root_poly_part(&ip(&[2, 3, 3, 1]), 2).is_err());
        assert!(root_poly_part(&ip(&[1, 2]), 1).is_err());
        assert!(root_poly_part(&ip(&[1, 0, 2]), 2).is_err());
    }

    #[test]
    fn half_integer_root_part() {
        // x^2 + x: Q = x + 1/2, D = 2.
        let rp = root_poly_part(&ip(&[0, 1, 1]), 2).unwrap();
        assert_eq!(rp.q, RatPoly::new(vec![rat(1, 2), rat(1, 1)]));
        assert_eq!(rp.d, BigInt::from(2));
    }

    #[test]
    fn offset_examples() {
        let f = ip(&[3, 2, 1]);
        let rp = root_poly_part(&f, 2).unwrap();
        assert_eq!(offset_poly(&f, &rp, &BigInt::from(-1)), ip(&[3, 2]));
        assert_eq!(offset_poly(&f, &rp, &BigInt::zero()), ip(&[2]));
    }

    #[test]
    fn small_bounding_example() {
        let setup = RungeSetup::new(&ip(&[3, 2, 1]), 2).unwrap();
        let b = bounding_intervals(&setup, &BigInt::one(), &BigInt::one(), HullMode::Exact).unwrap();
        assert!(IntInterval::from_i64(-2, -1).is_subset_of(&b.i1));
        assert!(IntInterval::from_i64(-1, 0).is_subset_of(&b.i2));
        let s = reduction_schedule(&setup, HullMode::RootBound).unwrap();
        assert_eq!((s.last.k1.clone(), s.last.k2.clone()), (BigInt::one(), BigInt::one()));
    }

    #[test]
    fn runge_condition() {
        assert!(runge_exponent(3, &ip(&[0, 8, 12, 6, 1])).is_err());
        assert_eq!(runge_exponent(2, &ip(&[0, 8, 12, 6, 1])).unwrap(), 2);
        assert_eq!(runge_exponent(8, &ip(&[0, 8, 12, 6, 1])).unwrap(), 4);
    }

    #[test]
    fn significant_rounding() {
        assert_eq!(round_significant(&BigInt::from(2017906), 4), BigInt::from(2018000));
        assert_eq!(round_significant(&BigInt::from(-1009045), 3), BigInt::from(-1010000));
        assert_eq!(round_significant(&BigInt::from(-68), 4), BigInt::from(-68));
    }

    #[test]
    fn degree_fourteen_worked_example() {
        use crate::family::{g_poly, Tuple};
        let t = Tuple::new(vec![2, 3, 4, 5, 7, 9, 10, 12], 13).unwrap();
        let setup = RungeSetup::new(&g_poly(13, &t).unwrap(), 2).unwrap();
        assert_eq!(setup.rp.d, BigInt::from(16));
        assert_eq!(setup.rp.q.coeff(5), rat(1693, 2));
        assert_eq!(setup.rp.q.coeff(0), rat(574129, 16));
        let s = reduction_schedule(&setup, HullMode::RootBound).unwrap();
        assert_eq!(s.initial.i1, IntInterval::from_i64(-68, 2017906));
        assert_eq!(s.initial.i2, IntInterval::from_i64(-1009045, 0));
        assert_eq!(s.initial.subequation_count, BigInt::from(3026952));
        assert_eq!((s.step1.clone(), s.iterations1), (BigInt::from(37), 23));
        assert_eq!((s.step2.clone(), s.iterations2), (BigInt::from(31), 20));
        assert_eq!((s.last.k1.clone(), s.last.k2.clone()), (BigInt::from(851), BigInt::from(620)));
        assert_eq!(s.last.i1, IntInterval::from_i64(-69, 2280));
        assert_eq!(s.last.i2, IntInterval::from_i64(-1674, 0));
        assert_eq!(s.last.subequation_count, BigInt::from(5424));
    }
}
