//! `z^m = p_a1(x) + p_a2(y)` over `1 <= x <= y <= bound`.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{checked_pow_u128, nth_root_u128, perfect_power, product_poly, IntPoly};

/// Which pairs an additive search leaves out.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Exclusions {
    /// Drop the parametric family `y = p_a(x) - 1` (and its mirror image).
    pub trivial_family: bool,
    /// Require `x < y`.
    pub strict: bool,
}

impl Exclusions {
    pub const NONE: Exclusions = Exclusions { trivial_family: false, strict: false };
    /// Nontrivial solutions with `x < y`.
    pub const NONTRIVIAL: Exclusions = Exclusions { trivial_family: true, strict: true };
}

/// The parametric family attached to `(a1, a2, m)`, if there is one.
///
/// `p_1(s-1) + s = s^2` and `p_2(s-1) + s = s^3` give `y = p_a(x) - 1`
/// for `(a, a, m) = (1, 1, 2)` and `(2, 2, 3)`.
#[derive(Clone, Debug)]
pub struct TrivialFamily {
    p: Option<IntPoly>,
}

pub fn trivial_family_predicate(a1: usize, a2: usize, m: u32) -> TrivialFamily {
    let p = match (a1, a2, m) {
        (1, 1, 2) | (2, 2, 3) => Some(product_poly(a1)),
        _ => None,
    };
    TrivialFamily { p }
}

impl TrivialFamily {
    pub fn contains(&self, x: &BigInt, y: &BigInt) -> bool {
        match &self.p {
            Some(p) => &(p.eval(x) - 1u32) == y || &(p.eval(y) - 1u32) == x,
            None => false,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_none()
    }
}

/// One solution `(x, y, z)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AdditiveSolution {
    pub x: u64,
    pub y: u64,
    #[serde(with = "crate::records::dec")]
    pub z: BigInt,
}

/// `m`-th power residues modulo a product of small moduli, as a bitset.
struct PowerFilter {
    modulus: u64,
    bits: Vec<u64>,
}

impl PowerFilter {
    fn new(m: u32) -> Self {
        let modulus: u64 = if m % 2 == 0 {
            64 * 63 * 65 * 11
        } else {
            let mut md: u64 = if m % 3 == 0 { 9 } else { 1 };
            for q in (3u64..2000).filter(|q| (2..*q).take_while(|d| d * d <= *q).all(|d| q % d != 0)) {
                if q % u64::from(m) == 1 && md * q <= 4_000_000 {
                    md *= q;
                }
            }
            md.max(2)
        };
        let mut bits = vec![0u64; (modulus as usize).div_ceil(64)];
        for r in 0..modulus {
            let mut acc: u64 = 1;
            for _ in 0..m {
                acc = acc * r % modulus;
            }
            bits[(acc / 64) as usize] |= 1 << (acc % 64);
        }
        PowerFilter { modulus, bits }
    }

    #[inline]
    fn admits(&self, r: u64) -> bool {
        self.bits[(r / 64) as usize] >> (r % 64) & 1 == 1
    }
}

/// Precomputed tables for one `(a1, a2, m, bound)`.
pub(crate) struct AdditiveContext {
    a1: usize,
    a2: usize,
    m: u32,
    bound: u64,
    filter: PowerFilter,
    native: Option<(Vec<u128>, Vec<u128>)>,
    res1: Vec<u32>,
    res2: Vec<u32>,
    p1: IntPoly,
    p2: IntPoly,
    trivial: TrivialFamily,
}

fn table(p: &IntPoly, bound: u64) -> Option<Vec<u128>> {
    (0..=bound).map(|x| p.eval(&BigInt::from(x)).to_u128()).collect()
}

impl AdditiveContext {
    pub(crate) fn new(a1: usize, a2: usize, m: u32, bound: u64) -> Result<Self> {
        if bound < 1 {
            return Err(Error::precondition("bound must be at least 1"));
        }
        if m < 2 {
            return Err(Error::precondition("exponent m must be at least 2"));
        }
        let (p1, p2) = (product_poly(a1), product_poly(a2));
        let filter = PowerFilter::new(m);
        let native = match (table(&p1, bound), table(&p2, bound)) {
            (Some(t1), Some(t2)) if t1[bound as usize].checked_add(t2[bound as usize]).is_some() => Some((t1, t2)),
            _ => None,
        };
        let md = BigInt::from(filter.modulus);
        let residues = |p: &IntPoly| -> Vec<u32> {
            (0..=bound).map(|x| (p.eval(&BigInt::from(x)) % &md).to_u32().expect("nonnegative")).collect()
        };
        let (res1, res2) = (residues(&p1), residues(&p2));
        let trivial = trivial_family_predicate(a1, a2, m);
        Ok(AdditiveContext { a1, a2, m, bound, filter, native, res1, res2, p1, p2, trivial })
    }

    /// All solutions with the given `x`, ordered by `y`.
    pub(crate) fn row(&self, x: u64, ex: Exclusions) -> Vec<AdditiveSolution> {
        let mut out = Vec::new();
        let start = if ex.strict { x + 1 } else { x };
        let rx = u64::from(self.res1[x as usize]);
        let md = self.filter.modulus;
        for y in start..=self.bound {
            let mut r = rx + u64::from(self.res2[y as usize]);
            if r >= md {
                r -= md;
            }
            if !self.filter.admits(r) {
                continue;
            }
            let z = match &self.native {
                Some((t1, t2)) => {
                    let s = t1[x as usize] + t2[y as usize];
                    let z = nth_root_u128(s, self.m);
                    if checked_pow_u128(z, self.m) != Some(s) {
                        continue;
                    }
                    BigInt::from(z)
                }
                None => {
                    let s = self.p1.eval(&BigInt::from(x)) + self.p2.eval(&BigInt::from(y));
                    match perfect_power(&s, self.m) {
                        Some(z) => z,
                        None => continue,
                    }
                }
            };
            if ex.trivial_family && self.trivial.contains(&BigInt::from(x), &BigInt::from(y)) {
                continue;
            }
            debug_assert!(self.verify(x, y, &z));
            out.push(AdditiveSolution { x, y, z });
        }
        out
    }

    pub(crate) fn verify(&self, x: u64, y: u64, z: &BigInt) -> bool {
        num_traits::pow(z.clone(), self.m as usize) == self.p1.eval(&BigInt::from(x)) + self.p2.eval(&BigInt::from(y))
    }

    pub(crate) fn arities(&self) -> (usize, usize) {
        (self.a1, self.a2)
    }
}

/// Every solution with `1 <= x <= y <= bound` outside the exclusions,
/// ordered by `x` then `y`.
pub fn additive_search(a1: usize, a2: usize, m: u32, bound: u64, ex: Exclusions) -> Result<Vec<AdditiveSolution>> {
    let ctx = AdditiveContext::new(a1, a2, m, bound)?;
    let rows: Vec<Vec<AdditiveSolution>> = (1..=bound).into_par_iter().map(|x| ctx.row(x, ex)).collect();
    let out: Vec<_> = rows.into_iter().flatten().collect();
    if let Some(bad) = out.iter().find(|s| !ctx.verify(s.x, s.y, &s.z)) {
        return Err(Error::inconsistency(format!("additive solution {bad:?} fails verification")));
    }
    Ok(out)
}

/// Number of solutions with `1 <= x <= y <= bound`.
pub fn additive_count(a1: usize, a2: usize, m: u32, bound: u64) -> Result<u64> {
    let ctx = AdditiveContext::new(a1, a2, m, bound)?;
    Ok((1..=bound).into_par_iter().map(|x| ctx.row(x, Exclusions::NONE).len() as u64).sum())
}

/// A full solution of `z^m = p_a1(x1) + ... + p_ak(xk)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstructedSolution {
    pub m: u32,
    pub arities: Vec<usize>,
    #[serde(with = "crate::records::dec_vec")]
    pub values: Vec<BigInt>,
    #[serde(with = "crate::records::dec")]
    pub z: BigInt,
}

/// Completes a tail `(x2, ..., xk)` with `x1 = S - 1`, where `S` is the tail
/// sum, using `p_1(S-1) + S = S^2` or `p_2(S-1) + S = S^3`.
pub fn construct_additive_solution(m: u32, tail_arities: &[usize], tail_values: &[BigInt]) -> Result<ConstructedSolution> {
    let lead = match m {
        2 => 1,
        3 => 2,
        _ => return Err(Error::precondition(format!("m must be 2 or 3, got {m}"))),
    };
    if tail_arities.len() != tail_values.len() || tail_arities.is_empty() {
        return Err(Error::precondition("tail arities and values must be nonempty and of equal length"));
    }
    let s: BigInt = tail_arities.iter().zip(tail_values).map(|(&a, x)| product_poly(a).eval(x)).sum();
    if s < BigInt::one() {
        return Err(Error::precondition(format!("tail sum {s} must be at least 1")));
    }
    let x1 = &s - 1u32;
    let total = product_poly(lead).eval(&x1) + &s;
    if total != num_traits::pow(s.clone(), m as usize) {
        return Err(Error::inconsistency("constructed additive solution fails verification"));
    }
    let mut arities = vec![lead];
    arities.extend_from_slice(tail_arities);
    let mut values = vec![x1];
    values.extend_from_slice(tail_values);
    Ok(ConstructedSolution { m, arities, values, z: s })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive(a1: usize, a2: usize, m: u32, bound: u64) -> Vec<(u64, u64)> {
        let (p1, p2) = (product_poly(a1), product_poly(a2));
        let mut out = Vec::new();
        for x in 1..=bound {
            for y in x..=bound {
                let s = p1.eval(&BigInt::from(x)) + p2.eval(&BigInt::from(y));
                let mut z = BigInt::from(0);
                while num_traits::pow(z.clone(), m as usize) < s {
                    z += 1;
                }
                if num_traits::pow(z, m as usize) == s {
                    out.push((x, y));
                }
            }
        }
        out
    }

    fn pairs(v: &[AdditiveSolution]) -> Vec<(u64, u64)> {
        v.iter().map(|s| (s.x, s.y)).collect()
    }

    #[test]
    fn matches_naive_loop() {
        for (a1, a2, m) in [(2, 2, 2), (0, 0, 2), (1, 2, 3), (2, 2, 3), (0, 1, 5)] {
            let got = additive_search(a1, a2, m, 60, Exclusions::NONE).unwrap();
            assert_eq!(pairs(&got), naive(a1, a2, m, 60), "{a1} {a2} {m}");
        }
    }

    #[test]
    fn small_examples() {
        // x + y in {4, 9, 16}: 2 + 4 + 3 pairs.
        assert_eq!(additive_count(0, 0, 2, 10).unwrap(), 9);
        let all = additive_search(2, 2, 3, 10, Exclusions::NONE).unwrap();
        assert!(all.contains(&AdditiveSolution { x: 1, y: 5, z: 6.into() }));
        assert!(additive_search(4, 4, 2, 1000, Exclusions::NONE).unwrap().is_empty());
    }

    #[test]
    fn trivial_predicate() {
        let t = trivial_family_predicate(2, 2, 3);
        assert!(t.contains(&1.into(), &5.into()));
        assert!(!t.contains(&97.into(), &277.into()));
        assert!(trivial_family_predicate(2, 2, 2).is_empty());
    }

    #[test]
    fn constructions() {
        let s = construct_additive_solution(2, &[2], &[3.into()]).unwrap();
        assert_eq!((s.values[0].clone(), s.z.clone()), (59.into(), 60.into()));
        let s = construct_additive_solution(3, &[1], &[2.into()]).unwrap();
        assert_eq!((s.values[0].clone(), s.z.clone()), (5.into(), 6.into()));
        let s = construct_additive_solution(2, &[0], &[1.into()]).unwrap();
        assert_eq!(s.values[0], 0.into());
        assert!(construct_additive_solution(2, &[0], &[0.into()]).is_err());
    }
}
