//! Exact real-root hulls from Sturm sequences.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::algebra::squarefree_part;
use super::int::sign_of;
use super::interval::IntInterval;
use super::poly::{IntPoly, RatPoly};
use crate::error::{Error, Result};

/// A Sturm chain of a square-free integer polynomial, each member scaled by
/// a positive constant to stay primitive.
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(f: &IntPoly) -> Self {
        let s0 = squarefree_part(f);
        let s1 = s0.derivative().content_primitive().expect("degree >= 1").1;
        let mut chain = vec![s0, s1];
        loop {
            let n = chain.len();
            let r = chain[n - 2].to_rat().rem(&chain[n - 1].to_rat()).expect("nonzero");
            if r.is_zero() {
                break;
            }
            chain.push((-&r).to_primitive_int_same_sign());
        }
        SturmChain { chain }
    }

    fn variations(signs: impl Iterator<Item = i32>) -> usize {
        let mut last = 0;
        let mut v = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    fn v_at(&self, a: &BigInt) -> usize {
        Self::variations(self.chain.iter().map(|p| sign_of(&p.eval(a))))
    }

    fn v_at_infinity(&self, positive: bool) -> usize {
        Self::variations(self.chain.iter().map(|p| {
            let s = sign_of(p.lc().expect("nonzero"));
            let d = p.degree().unwrap_or(0);
            if positive || d % 2 == 0 {
                s
            } else {
                -s
            }
        }))
    }

    /// Number of distinct real roots.
    pub fn count(&self) -> usize {
        self.v_at_infinity(false) - self.v_at_infinity(true)
    }

    /// Number of distinct real roots `<= a`.
    pub fn count_le(&self, a: &BigInt) -> usize {
        self.v_at_infinity(false) - self.v_at(a)
    }

    fn count_lt(&self, a: &BigInt) -> usize {
        self.count_le(a) - usize::from(self.chain[0].eval(a).is_zero())
    }
}

/// `1 + ceil(max |a_i| / |a_n|)`: every root has absolute value below it.
pub fn cauchy_bound(f: &IntPoly) -> BigInt {
    let lc = f.lc().expect("nonzero").abs();
    let n = f.coeffs().len() - 1;
    let m = f.coeffs()[..n].iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero);
    let q = (&m + &lc - BigInt::one()) / &lc;
    q + 1u32
}

/// Smallest integer interval `[floor(r_min), ceil(r_max)]` holding every real
/// root of `f`, or empty when there are none.
pub fn real_root_hull(f: &IntPoly) -> Result<IntInterval> {
    if f.degree().unwrap_or(0) == 0 {
        return Err(Error::precondition("real_root_hull of a constant polynomial"));
    }
    let chain = SturmChain::new(f);
    let total = chain.count();
    if total == 0 {
        return Ok(IntInterval::Empty);
    }
    let b = cauchy_bound(&chain.chain[0]);
    // floor(r_min) = max { a : no root < a }.
    let (mut lo, mut hi) = (-b.clone(), b.clone());
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi) >> 1;
        if chain.count_lt(&mid) == 0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let floor_min = lo;
    // ceil(r_max) = min { a : every root <= a }.
    let (mut lo, mut hi) = (-b.clone(), b);
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi) >> 1;
        if chain.count_le(&mid) == total {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(IntInterval::new(floor_min, hi))
}

/// [`real_root_hull`] for a rational polynomial.
pub fn real_root_hull_rat(f: &RatPoly) -> Result<IntInterval> {
    real_root_hull(&f.to_primitive_int())
}
