//! Upper bounds on positive real roots from coefficient sign patterns.
//!
//! Two classical bounds are combined: the local-max-quadratic bound and the
//! first-lambda bound. Both pair every negative coefficient with positive
//! coefficients of higher degree and take radicals of the ratios; the
//! smaller of the two is used. Everything is evaluated exactly and only the
//! final value is rounded outward to an integer.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::int::ceil_nth_root;
use super::interval::IntInterval;
use super::poly::IntPoly;

/// The real number `r^(1/e)` for a nonnegative rational `r`.
#[derive(Clone, Debug)]
struct Radical {
    r: BigRational,
    e: u32,
}

impl Radical {
    fn new(num: BigInt, den: &BigInt, e: usize) -> Self {
        Radical { r: BigRational::new(num, den.clone()), e: e as u32 }
    }

    fn compare(&self, other: &Radical) -> Ordering {
        let a = num_traits::pow(self.r.clone(), other.e as usize);
        let b = num_traits::pow(other.r.clone(), self.e as usize);
        a.cmp(&b)
    }

    fn ceil(&self) -> BigInt {
        ceil_nth_root(&self.r.ceil().to_integer(), self.e)
    }
}

fn min_rad(a: Option<Radical>, b: Radical) -> Option<Radical> {
    match a {
        Some(a) if a.compare(&b) != Ordering::Greater => Some(a),
        _ => Some(b),
    }
}

fn max_rad(a: Option<Radical>, b: Radical) -> Option<Radical> {
    match a {
        Some(a) if a.compare(&b) != Ordering::Less => Some(a),
        _ => Some(b),
    }
}

fn local_max_quadratic(a: &[BigInt]) -> Option<Radical> {
    let n = a.len() - 1;
    let mut uses = vec![1u32; n + 1];
    let mut ub = None;
    for i in (0..n).rev() {
        if !a[i].is_negative() {
            continue;
        }
        let mut best = None;
        for j in (i + 1..=n).rev() {
            if a[j].is_positive() {
                let num = (BigInt::from(1) << uses[j]) * a[i].abs();
                best = min_rad(best, Radical::new(num, &a[j], j - i));
                uses[j] += 1;
            }
        }
        if let Some(b) = best {
            ub = max_rad(ub, b);
        }
    }
    ub
}

fn first_lambda(a: &[BigInt]) -> Option<Radical> {
    let n = a.len() - 1;
    let positives: Vec<usize> = (0..=n).rev().filter(|&j| a[j].is_positive()).collect();
    let negatives: Vec<usize> = (0..=n).rev().filter(|&i| a[i].is_negative()).collect();
    if negatives.is_empty() {
        return None;
    }
    let mut used = vec![false; n + 1];
    let partner: Vec<Option<usize>> = negatives
        .iter()
        .map(|&i| {
            let j = positives.iter().copied().find(|&j| j > i && !used[j])?;
            used[j] = true;
            Some(j)
        })
        .collect();
    let sharing = partner.iter().filter(|p| p.is_none_or(|j| j == n)).count();
    let mut ub = None;
    for (&i, p) in negatives.iter().zip(&partner) {
        let rad = match p {
            Some(j) if *j != n => Radical::new(a[i].abs(), &a[*j], j - i),
            _ => Radical::new(BigInt::from(sharing) * a[i].abs(), &a[n], n - i),
        };
        ub = max_rad(ub, rad);
    }
    ub
}

/// Integer upper bound on the positive real roots of `f` (0 when the sign
/// pattern rules positive roots out).
pub fn positive_root_bound(f: &IntPoly) -> BigInt {
    let Some(lc) = f.lc() else { return BigInt::zero() };
    let mut a = f.coeffs().to_vec();
    if lc.is_negative() {
        a.iter_mut().for_each(|c| *c = -c.clone());
    }
    if a.len() < 2 {
        return BigInt::zero();
    }
    let lmq = local_max_quadratic(&a);
    let fl = first_lambda(&a);
    match (lmq, fl) {
        (Some(x), Some(y)) => min_rad(Some(x), y).expect("some").ceil(),
        (Some(x), None) | (None, Some(x)) => x.ceil(),
        (None, None) => BigInt::zero(),
    }
}

/// `[-B(f(-x)), B(f(x))]`: an integer interval containing every real root.
pub fn root_bound_hull(f: &IntPoly) -> IntInterval {
    let hi = positive_root_bound(f);
    let lo = -positive_root_bound(&f.negate_x());
    IntInterval::new(lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(cs)
    }

    #[test]
    fn quadratic_bounds() {
        // x^2 - 2: both bounds are sqrt(2)-ish, rounded up to 2.
        assert_eq!(root_bound_hull(&ip(&[-2, 0, 1])), IntInterval::from_i64(-2, 2));
        assert_eq!(root_bound_hull(&ip(&[1, 0, 1])), IntInterval::from_i64(0, 0));
    }

    #[test]
    fn bound_is_valid_for_simple_products() {
        // (x - 7)(x + 3) = x^2 - 4x - 21.
        let h = root_bound_hull(&ip(&[-21, -4, 1]));
        assert!(h.contains(&BigInt::from(7)) && h.contains(&BigInt::from(-3)));
    }

    #[test]
    fn sign_of_leading_coefficient_is_irrelevant() {
        let f = ip(&[5, -3, -8, 2]);
        assert_eq!(positive_root_bound(&f), positive_root_bound(&-&f));
    }
}
