//! Discriminant curves of `F_{a,b,i}(x) = p_i(x) + p_i(ax + b)`, rational
//! point search on them, fixed identities and the displayed point tables.

mod fixtures;
mod g1;
mod identities;

pub use fixtures::{bundled_fixtures, load_fixtures, point_table_verify, Fixture, PointCheck, PointTableReport};
pub use g1::{g1_check, BiPoly, G1Report};
pub use identities::{identity_suite, IdentityCheck, IdentityReport};

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{discriminant, product_poly, rational_roots, RatPoly};

fn check_i(i: usize) -> Result<()> {
    if i == 3 || i == 4 {
        Ok(())
    } else {
        Err(Error::precondition(format!("i must be 3 or 4, got {i}")))
    }
}

/// `p_i(x) + p_i(a x + b)`.
pub fn mixed_poly(i: usize, a: &BigRational, b: &BigRational) -> Result<RatPoly> {
    check_i(i)?;
    let p = product_poly(i).to_rat();
    let inner = RatPoly::new(vec![b.clone(), a.clone()]);
    Ok(&p + &p.compose(&inner))
}

/// Newton interpolation through `(x_k, y_k)` with distinct `x_k`.
pub fn interpolate(xs: &[BigRational], ys: &[BigRational]) -> RatPoly {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    let mut dd = ys.to_vec();
    for level in 1..n {
        for k in (level..n).rev() {
            dd[k] = (&dd[k] - &dd[k - 1]) / (&xs[k] - &xs[k - level]);
        }
    }
    let mut acc = RatPoly::zero();
    for k in (0..n).rev() {
        acc = &(&acc * &RatPoly::new(vec![-xs[k].clone(), BigRational::one()])) + &RatPoly::constant(dd[k].clone());
    }
    acc
}

/// The `x`-discriminant of `F_{a,b,i}` as a polynomial in `b`.
#[derive(Clone, Debug, Serialize)]
pub struct DiscInB {
    pub i: usize,
    #[serde(with = "crate::records::rat")]
    pub a: BigRational,
    /// Degree of `F` in `x` used for the discriminant.
    pub x_degree: usize,
    pub poly: RatPoly,
    /// Set for the branch `1 + a^(i+1) = 0` or an identically zero result.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degenerate: Option<String>,
}

/// Integers `0, 1, -1, 2, -2, ...`.
fn sample_points() -> impl Iterator<Item = BigRational> {
    (0i64..).flat_map(|k| if k == 0 { vec![0] } else { vec![k, -k] }).map(|k| BigRational::from_integer(k.into()))
}

/// Exact interpolation of `b -> Disc_x F_{a,b,i}` from `i(i+1) + 3` samples.
/// Two samples beyond the degree bound guard the interpolant.
pub fn disc_in_b(i: usize, a: &BigRational) -> Result<DiscInB> {
    check_i(i)?;
    let lead = BigRational::one() + num_traits::pow(a.clone(), i + 1);
    let (x_degree, mut degenerate) = if lead.is_zero() {
        (i, Some(format!("leading coefficient 1 + a^{} vanishes; discriminant taken in degree {i}", i + 1)))
    } else {
        (i + 1, None)
    };
    let needed = i * (i + 1) + 3;
    let mut xs = Vec::with_capacity(needed);
    let mut ys = Vec::with_capacity(needed);
    for b in sample_points() {
        if xs.len() == needed {
            break;
        }
        let f = mixed_poly(i, a, &b)?;
        if f.degree() != Some(x_degree) {
            continue;
        }
        ys.push(discriminant(&f)?);
        xs.push(b);
    }
    let poly = interpolate(&xs, &ys);
    if poly.deg_i64() > (i * (i + 1)) as i64 {
        return Err(Error::inconsistency(format!("discriminant in b exceeds degree {} for a = {a}", i * (i + 1))));
    }
    if poly.is_zero() {
        degenerate = Some("discriminant vanishes identically in b".into());
    }
    Ok(DiscInB { i, a: a.clone(), x_degree, poly, degenerate })
}

/// `max(|p|, q)` for `p/q` in lowest terms.
pub fn height(r: &BigRational) -> BigInt {
    r.numer().abs().max(r.denom().clone())
}

/// A point `(a, b)` on `Disc_x F_{a,b,i} = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurvePoint {
    #[serde(with = "crate::records::rat")]
    pub a: BigRational,
    #[serde(with = "crate::records::rat")]
    pub b: BigRational,
    /// On the branch where the leading coefficient of `F` vanishes.
    pub degenerate_branch: bool,
}

/// Whether `F_{a,b,i}` has a repeated root, or vanishes identically.
pub fn on_disc_curve(i: usize, a: &BigRational, b: &BigRational) -> Result<bool> {
    let f = mixed_poly(i, a, b)?;
    match f.degree() {
        None => Ok(true),
        Some(0) => Ok(false),
        Some(_) => Ok(discriminant(&f)?.is_zero()),
    }
}

/// Reduced fractions of height at most `h`, in increasing order.
pub fn fractions_of_height(h: u64) -> Vec<BigRational> {
    let hb = h as i64;
    let mut v: Vec<BigRational> = (1..=hb)
        .flat_map(|q| (-hb..=hb).map(move |p| (p, q)))
        .filter(|&(p, q)| num_integer::Integer::gcd(&p, &q) == 1)
        .map(|(p, q)| BigRational::new(p.into(), q.into()))
        .collect();
    v.sort();
    v.dedup();
    v
}

/// All points with `H(a), H(b) <= h`, sorted by `(a, b)`.
///
/// Every `a` of height at most `h` is tried; the rational roots of
/// `disc_in_b` are filtered by height. A value of `a` whose discriminant
/// vanishes identically is an error, since it would put the whole line on
/// the curve.
pub fn rational_point_search(i: usize, h: u64) -> Result<Vec<CurvePoint>> {
    check_i(i)?;
    if h < 1 {
        return Err(Error::precondition("height bound must be at least 1"));
    }
    let hb = BigInt::from(h);
    let rows: Vec<Result<Vec<CurvePoint>>> = fractions_of_height(h)
        .into_par_iter()
        .map(|a| {
            let d = disc_in_b(i, &a)?;
            if d.poly.is_zero() {
                return Err(Error::inconsistency(format!("discriminant vanishes identically at a = {a}")));
            }
            let mut out = Vec::new();
            for (b, _) in rational_roots(&d.poly.to_primitive_int()) {
                if height(&b) <= hb {
                    if !on_disc_curve(i, &a, &b)? && d.degenerate.is_none() {
                        return Err(Error::inconsistency(format!("({a}, {b}) is a root of disc_in_b but not on the curve")));
                    }
                    out.push(CurvePoint { a: a.clone(), b, degenerate_branch: d.degenerate.is_some() });
                }
            }
            out.sort_by(|p, q| p.b.cmp(&q.b));
            Ok(out)
        })
        .collect();
    let mut all = Vec::new();
    for r in rows {
        all.extend(r?);
    }
    all.sort_by(|p, q| match p.a.cmp(&q.a) {
        Ordering::Equal => p.b.cmp(&q.b),
        o => o,
    });
    Ok(all)
}

/// For `i = 3`, `(a, b) -> (1/a, -b/a)` maps the curve to itself. Returns
/// the points whose image fails to lie on the curve.
pub fn involution_failures(points: &[CurvePoint]) -> Result<Vec<CurvePoint>> {
    let mut bad = Vec::new();
    for p in points.iter().filter(|p| !p.a.is_zero()) {
        let a = p.a.recip();
        let b = -&p.b / &p.a;
        if !on_disc_curve(3, &a, &b)? {
            bad.push(p.clone());
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn r(n: i64) -> BigRational {
        rat(n, 1)
    }

    #[test]
    fn mixed_examples() {
        let f = mixed_poly(3, &r(1), &r(1)).unwrap();
        let x = |c: i64| RatPoly::new(vec![r(c), r(1)]);
        let expected = &(&(&x(1) * &x(3)) * &x(2).pow(2)) * &RatPoly::constant(r(2));
        assert_eq!(f, expected);
        assert!(mixed_poly(4, &r(-1), &r(-4)).unwrap().is_zero());
        let f = mixed_poly(3, &r(1), &r(-3)).unwrap();
        assert_eq!(f, RatPoly::new(vec![r(0), r(0), r(22), r(0), r(2)]));
        assert!(mixed_poly(5, &r(1), &r(1)).is_err());
    }

    #[test]
    fn interpolation_matches_direct_discriminant() {
        for (i, a) in [(3, rat(2, 1)), (4, rat(1, 4)), (3, rat(-5, 3)), (4, rat(-1, 1))] {
            let d = disc_in_b(i, &a).unwrap();
            for b in [rat(7, 2), rat(-11, 5), rat(9, 1)] {
                let f = mixed_poly(i, &a, &b).unwrap();
                assert_eq!(d.poly.eval(&b), discriminant(&f).unwrap(), "i={i} a={a} b={b}");
            }
        }
    }

    #[test]
    fn disc_roots_examples() {
        let d = disc_in_b(3, &r(1)).unwrap();
        assert!(d.poly.eval(&r(1)).is_zero() && d.poly.eval(&r(-3)).is_zero());
        let d = disc_in_b(3, &r(3)).unwrap();
        assert!(d.poly.eval(&r(-1)).is_zero() && d.poly.eval(&r(7)).is_zero());
        let d = disc_in_b(4, &r(-1)).unwrap();
        assert!(d.degenerate.is_some());
        for b in [-8, -6, 0] {
            assert!(d.poly.eval(&r(b)).is_zero(), "b = {b}");
        }
        // The displayed (-1, 2) gives 30(x^4 - 4x^3 + 21x^2 - 34x + 24), which is square-free.
        assert!(!d.poly.eval(&r(2)).is_zero());
        assert!(d.poly.eval(&r(-2)).is_zero());
    }

    #[test]
    fn height_one_search() {
        let pts = rational_point_search(3, 1).unwrap();
        let positive: Vec<_> = pts.iter().filter(|p| p.a.is_positive()).map(|p| (p.a.clone(), p.b.clone())).collect();
        // (1, -1) is (1, 1) after x -> x - 1: p_3(x) + p_3(x - 1) = 2x(x + 1)^2(x + 2).
        assert_eq!(positive, vec![(r(1), r(-1)), (r(1), r(1))]);
        assert!(involution_failures(&pts).unwrap().is_empty());
    }
}
