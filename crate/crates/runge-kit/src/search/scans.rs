//! Scans over `x` for perfect-power values of `g_T(x)`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{perfect_power, power_roots, product_poly, IntInterval};
use crate::family::{enumerate_tuples, g_poly, Tuple};
use crate::runge::{enumerate_interval, Channel, SolutionRecord};

/// `g_T(x)` for every `T` in `A_n`, in tuple order.
fn g_values(x: &BigInt, n: usize) -> Vec<(Tuple, BigInt)> {
    let p: Vec<BigInt> = (0..=n).map(|a| product_poly(a).eval(x)).collect();
    enumerate_tuples(n)
        .map(|t| {
            let v = t.entries().iter().fold(p[n].clone(), |acc, &a| acc + &p[a]);
            (t, v)
        })
        .collect()
}

/// One `(m, n, T)` with `g_T(x) = ±y^m`, `y > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NegativeWitness {
    pub m: u32,
    pub n: usize,
    pub tuple: Tuple,
    #[serde(with = "crate::records::dec")]
    pub y: BigInt,
    /// `g_T(x) = -y^m` for odd `m`: a solution with negative `y`, kept
    /// and reported through `|y|`.
    pub negative_value: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NegativeMember {
    pub x: i64,
    /// `x = -u^3`, covered by the family `(t^3, t(t^3 + 2))` with `t = -u`.
    pub cube_family: bool,
    pub witnesses: Vec<NegativeWitness>,
}

/// `m_max`, or with `m_max = 0` the largest exponent `|v|` can carry. The
/// floor of 3 keeps `v = ±1` visible.
fn exponent_cap(v: &BigInt, m_max: u32) -> u32 {
    if m_max == 0 {
        (v.bits() as u32).max(3)
    } else {
        m_max
    }
}

/// Witnesses for one negative `x`, or `None` when there are none.
/// `m_max = 0` means up to the bit length of the value.
pub fn negative_member(x: i64, n_max: usize, m_max: u32) -> Option<NegativeMember> {
    let bx = BigInt::from(x);
    let mut witnesses = Vec::new();
    for n in 2..=n_max {
        for (t, v) in g_values(&bx, n) {
            if v.is_zero() {
                continue;
            }
            for (m, y) in power_roots(&v, exponent_cap(&v, m_max)) {
                witnesses.push(NegativeWitness { m, n, tuple: t.clone(), y: y.abs(), negative_value: v.is_negative() });
            }
        }
    }
    if witnesses.is_empty() {
        return None;
    }
    let cube_family = perfect_power(&-&bx, 3).is_some();
    Some(NegativeMember { x, cube_family, witnesses })
}

/// Members of the negative set in `[x_min, -1]`, in increasing `x`.
pub fn negative_x_scan(x_min: i64, n_max: usize, m_max: u32) -> Result<Vec<NegativeMember>> {
    if x_min > -1 {
        return Err(Error::precondition("x_min must be at most -1"));
    }
    Ok((x_min..=-1).into_par_iter().filter_map(|x| negative_member(x, n_max, m_max)).collect())
}

/// `y^m = g_T(x)` with `x, y >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositiveHit {
    pub x: i64,
    pub m: u32,
    pub n: usize,
    pub tuple: Tuple,
    #[serde(with = "crate::records::dec")]
    pub y: BigInt,
}

/// Every `(m, n, T)` for one positive `x`, ordered by `n`, `T`, `m`.
/// `m_max = 0` means up to the bit length of the value.
pub fn positive_hits(x: i64, n_max: usize, m_max: u32) -> Vec<PositiveHit> {
    let bx = BigInt::from(x);
    let mut out = Vec::new();
    for n in 2..=n_max {
        for (t, v) in g_values(&bx, n) {
            for (m, y) in power_roots(&v, exponent_cap(&v, m_max)) {
                out.push(PositiveHit { x, m, n, tuple: t.clone(), y });
            }
        }
    }
    out
}

pub fn positive_x_scan(x_max: i64, n_max: usize, m_max: u32) -> Result<Vec<PositiveHit>> {
    if x_max < 1 {
        return Err(Error::precondition("x_max must be at least 1"));
    }
    let rows: Vec<Vec<PositiveHit>> = (1..=x_max).into_par_iter().map(|x| positive_hits(x, n_max, m_max)).collect();
    Ok(rows.into_iter().flatten().collect())
}

/// Solutions of `y^m = g_T(x)` with `|x| <= x_bound` for one tuple.
pub fn bounded_tuple(m: u32, n: usize, t: &Tuple, x_bound: i64) -> Result<Vec<SolutionRecord>> {
    let g = g_poly(n, t)?;
    let pairs = enumerate_interval(&g, &IntInterval::from_i64(-x_bound, x_bound), m)?;
    Ok(pairs
        .into_iter()
        .map(|(x, y)| SolutionRecord { x, y, m, origin: Some((n, t.clone())), channel: Channel::IntervalEnumeration })
        .collect())
}

/// Brute force over all of `A_n` for exponent pairs outside Runge's method.
pub fn bounded_search(m: u32, n: usize, x_bound: i64) -> Result<Vec<SolutionRecord>> {
    if x_bound < 0 {
        return Err(Error::precondition("x_bound must be nonnegative"));
    }
    let mut out = Vec::new();
    for t in enumerate_tuples(n) {
        out.extend(bounded_tuple(m, n, &t, x_bound)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn has(member: &NegativeMember, m: u32, n: usize, t: &[usize], y: i64) -> bool {
        member.witnesses.iter().any(|w| w.m == m && w.n == n && w.tuple.entries() == t && w.y == BigInt::from(y))
    }

    #[test]
    fn negative_examples() {
        let s = negative_x_scan(-9, 4, 3).unwrap();
        let get = |x: i64| s.iter().find(|m| m.x == x).unwrap();
        assert!(has(get(-4), 2, 3, &[1], 6));
        assert!(has(get(-8), 3, 3, &[0, 1], 12));
        let w = get(-5).witnesses.iter().find(|w| w.m == 3 && w.n == 4 && w.tuple.entries() == [0]).unwrap();
        assert!(w.negative_value && w.y == BigInt::from(5));
        assert!(get(-8).cube_family && !get(-4).cube_family);
        let open = negative_x_scan(-9, 4, 0).unwrap();
        assert!(has(open.iter().find(|m| m.x == -4).unwrap(), 2, 3, &[1], 6));
    }

    #[test]
    fn positive_examples() {
        let hits = positive_x_scan(4, 6, 0).unwrap();
        let has = |x: i64, m: u32, n: usize, t: &[usize]| {
            hits.iter().any(|h| h.x == x && h.m == m && h.n == n && h.tuple.entries() == t)
        };
        assert!(has(1, 2, 4, &[0]));
        assert!(has(2, 7, 3, &[0, 1]));
        assert!(has(4, 2, 6, &[0, 4]));
    }

    #[test]
    fn bounded_includes_roots() {
        let s = bounded_search(5, 3, 20).unwrap();
        assert!(s.iter().all(|r| r.m == 5));
        assert!(s.iter().any(|r| r.y.is_zero()));
    }
}
