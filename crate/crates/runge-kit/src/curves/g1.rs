//! The factor `G_1` of the `x`-discriminant of `F_{a,b,4}`.

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{interpolate, mixed_poly};
use crate::error::{Error, Result};
use crate::exact::{discriminant, rat, RatPoly};

/// Polynomial in `(a, b)` stored as coefficients of `b^k`, each a
/// polynomial in `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPoly {
    c: Vec<RatPoly>,
}

impl BiPoly {
    pub fn new(mut c: Vec<RatPoly>) -> Self {
        while c.last().is_some_and(|p| p.is_zero()) {
            c.pop();
        }
        BiPoly { c }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree_b(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn degree_a(&self) -> Option<usize> {
        self.c.iter().filter_map(|p| p.degree()).max()
    }

    pub fn eval(&self, a: &BigRational, b: &BigRational) -> BigRational {
        self.c.iter().rev().fold(BigRational::zero(), |acc, p| acc * b + p.eval(a))
    }

    pub fn mul(&self, other: &BiPoly) -> BiPoly {
        if self.is_zero() || other.is_zero() {
            return BiPoly::new(Vec::new());
        }
        let mut c = vec![RatPoly::zero(); self.c.len() + other.c.len() - 1];
        for (i, p) in self.c.iter().enumerate() {
            for (j, q) in other.c.iter().enumerate() {
                c[i + j] = &c[i + j] + &(p * q);
            }
        }
        BiPoly::new(c)
    }

    /// Division in `Q[a][b]` by a divisor whose leading `b`-coefficient is a
    /// nonzero constant.
    pub fn div_rem(&self, d: &BiPoly) -> Result<(BiPoly, BiPoly)> {
        let db = d.degree_b().ok_or_else(|| Error::precondition("division by zero"))?;
        let lead = &d.c[db];
        if !lead.is_constant() {
            return Err(Error::precondition("leading b-coefficient of the divisor must be constant"));
        }
        let inv = lead.coeff(0).recip();
        let mut r = self.c.clone();
        let mut q = vec![RatPoly::zero(); r.len().saturating_sub(db).max(1)];
        while r.len() > db && !r.is_empty() {
            let top = r.len() - 1;
            let t = r[top].scale(&inv);
            let shift = top - db;
            for (k, dk) in d.c.iter().enumerate() {
                r[shift + k] = &r[shift + k] - &(&t * dk);
            }
            q[shift] = t;
            while r.last().is_some_and(|p| p.is_zero()) {
                r.pop();
            }
        }
        Ok((BiPoly::new(q), BiPoly::new(r)))
    }

    /// `sum c_ij u^i v^j` with `u = a + a0`, `v = b + b0`.
    pub fn from_shifted(terms: &[(i64, usize, usize)], a0: i64, b0: i64) -> BiPoly {
        let u = RatPoly::new(vec![rat(a0, 1), BigRational::one()]);
        let v = RatPoly::new(vec![rat(b0, 1), BigRational::one()]);
        let mut acc = BiPoly::new(Vec::new());
        for &(c, i, j) in terms {
            let ua = u.pow(i as u32).scale(&rat(c, 1));
            let vb: Vec<RatPoly> = v.pow(j as u32).coeffs().iter().map(|x| ua.scale(x)).collect();
            acc = acc.add(&BiPoly::new(vb));
        }
        acc
    }

    pub fn add(&self, other: &BiPoly) -> BiPoly {
        let n = self.c.len().max(other.c.len());
        let get = |v: &Vec<RatPoly>, k: usize| v.get(k).cloned().unwrap_or_else(RatPoly::zero);
        BiPoly::new((0..n).map(|k| &get(&self.c, k) + &get(&other.c, k)).collect())
    }
}

/// `G_1 = 24u^4 - 100u^3 v + 105u^2 v^2 - 40u v^3 + 5v^4`, `u = a + 1`, `v = b + 4`.
pub fn g1_poly() -> BiPoly {
    BiPoly::from_shifted(&[(24, 4, 0), (-100, 3, 1), (105, 2, 2), (-40, 1, 3), (5, 0, 4)], 1, 4)
}

#[derive(Clone, Debug, Serialize)]
pub struct G1Report {
    /// Degrees of the discriminant in `a` and in `b`.
    pub disc_degree: (usize, usize),
    /// Largest `k` with `G_1^k` dividing the discriminant.
    pub multiplicity: u32,
    /// Degrees of `Disc / G_1^multiplicity` in `a` and in `b`.
    pub cofactor_degree: (usize, usize),
    /// The discriminant and `G_1` vanish at `(a, b) = (-1, -4)`.
    pub vanishes_at_degenerate_point: bool,
    /// `Disc(0, 0) = G_1(0, 0)^k G_2(0, 0)` read off the factorization.
    pub origin_consistent: bool,
    /// Interpolated discriminant equals the direct one at off-grid points.
    pub off_grid_agreement: bool,
    pub passed: bool,
}

const GRID: i64 = 23;

/// Interpolates `Disc_x F_{a,b,4}` on a grid beyond its degree bound of 20
/// in each variable, then divides by `G_1` as often as possible.
pub fn g1_check() -> Result<G1Report> {
    let grid: Vec<BigRational> = (0..).map(|k: i64| if k % 2 == 0 { k / 2 } else { -(k + 1) / 2 })
        .filter(|&k| k != -1)
        .take(GRID as usize)
        .map(|k| rat(k, 1))
        .collect();
    // For each a on the grid, the discriminant as a polynomial in b.
    let mut rows = Vec::with_capacity(grid.len());
    for a in &grid {
        let ys: Vec<BigRational> =
            grid.iter().map(|b| discriminant(&mixed_poly(4, a, b)?)).collect::<Result<_>>()?;
        rows.push(interpolate(&grid, &ys));
    }
    let top = rows.iter().filter_map(|p| p.degree()).max().unwrap_or(0);
    let coeffs: Vec<RatPoly> = (0..=top)
        .map(|k| {
            let ys: Vec<BigRational> = rows.iter().map(|p| p.coeff(k)).collect();
            interpolate(&grid, &ys)
        })
        .collect();
    let disc = BiPoly::new(coeffs);

    let probe = [(rat(7, 3), rat(-5, 2)), (rat(31, 1), rat(-29, 1))];
    let off_grid_agreement = probe.iter().all(|(a, b)| {
        mixed_poly(4, a, b).and_then(|f| discriminant(&f)).is_ok_and(|d| d == disc.eval(a, b))
    });

    let g1 = g1_poly();
    let mut cofactor = disc.clone();
    let mut multiplicity = 0;
    loop {
        let (q, r) = cofactor.div_rem(&g1)?;
        if !r.is_zero() {
            break;
        }
        cofactor = q;
        multiplicity += 1;
    }
    let deg = |p: &BiPoly| (p.degree_a().unwrap_or(0), p.degree_b().unwrap_or(0));
    let (m1, m4) = (rat(-1, 1), rat(-4, 1));
    let vanishes_at_degenerate_point = disc.eval(&m1, &m4).is_zero() && g1.eval(&m1, &m4).is_zero();
    let zero = BigRational::zero();
    let origin_consistent = disc.eval(&zero, &zero)
        == num_traits::pow(g1.eval(&zero, &zero), multiplicity as usize) * cofactor.eval(&zero, &zero);
    let cofactor_degree = deg(&cofactor);
    let passed = multiplicity >= 1
        && cofactor_degree == (12, 12)
        && vanishes_at_degenerate_point
        && origin_consistent
        && off_grid_agreement;
    Ok(G1Report {
        disc_degree: deg(&disc),
        multiplicity,
        cofactor_degree,
        vanishes_at_degenerate_point,
        origin_consistent,
        off_grid_agreement,
        passed,
    })
}
