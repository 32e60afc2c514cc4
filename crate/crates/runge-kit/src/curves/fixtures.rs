//! Displayed rational points and known solutions, one record per point.

use std::collections::BTreeMap;
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::on_disc_curve;
use crate::error::{Error, Result};
use crate::exact::perfect_power;
use crate::family::{g_poly, Tuple};

const BUNDLED: &str = include_str!("../../data/point_fixtures.jsonl");

/// A claimed point, transcribed verbatim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Fixture {
    /// `(x, y)` on `y^2 = g_T(x)`.
    RationalPoint {
        n: usize,
        tuple: Vec<usize>,
        #[serde(with = "crate::records::rat")]
        x: BigRational,
        #[serde(with = "crate::records::rat")]
        y: BigRational,
        anchor: String,
    },
    /// `g_T(x)` is a positive `m`-th power.
    PowerValue { m: u32, n: usize, tuple: Vec<usize>, #[serde(with = "crate::records::dec")] x: BigInt, anchor: String },
    /// `(a, b)` on `Disc_x(p_i(x) + p_i(ax + b)) = 0`.
    DiscPoint {
        i: usize,
        #[serde(with = "crate::records::rat")]
        a: BigRational,
        #[serde(with = "crate::records::rat")]
        b: BigRational,
        anchor: String,
    },
}

impl Fixture {
    pub fn anchor(&self) -> &str {
        match self {
            Fixture::RationalPoint { anchor, .. } | Fixture::PowerValue { anchor, .. } | Fixture::DiscPoint { anchor, .. } => anchor,
        }
    }

    fn describe(&self) -> String {
        match self {
            Fixture::RationalPoint { x, y, .. } => format!("({x}, {y})"),
            Fixture::PowerValue { m, n, tuple, x, .. } => format!("x={x} [{m}, {n}, {:?}]", tuple),
            Fixture::DiscPoint { a, b, .. } => format!("(a, b) = ({a}, {b})"),
        }
    }

    fn verify(&self) -> Result<(bool, String)> {
        Ok(match self {
            Fixture::RationalPoint { n, tuple, x, y, .. } => {
                let g = g_poly(*n, &Tuple::new(tuple.clone(), *n)?)?;
                let v = g.eval_rat(x);
                if y * y == v {
                    (true, format!("g_T(x) = {v}"))
                } else if let Some(w) = weighted_reading(x, y).filter(|w| w * w == v) {
                    (true, format!("g_T(x) = {v}; read as (X : Y : Z) with y = Y/Z^3 = {w}"))
                } else {
                    (false, format!("g_T(x) = {v}"))
                }
            }
            Fixture::PowerValue { m, n, tuple, x, .. } => {
                let v = g_poly(*n, &Tuple::new(tuple.clone(), *n)?)?.eval(x);
                match perfect_power(&v, *m).filter(|y| y.is_positive()) {
                    Some(y) => (true, format!("g_T(x) = {v} = {y}^{m}")),
                    None => (false, format!("g_T(x) = {v} is not a positive {m}-th power")),
                }
            }
            Fixture::DiscPoint { i, a, b, .. } => {
                let ok = on_disc_curve(*i, a, b)?;
                (ok, if ok { "F has a repeated root".into() } else { "F is square-free".into() })
            }
        })
    }
}

/// Genus-two points are often printed in weighted coordinates `(X : Y : Z)`
/// with `x = X/Z` and `y = Y/Z^3`, showing `Y/Z` in the `y` slot. When `y`
/// shares the denominator `Z > 1` of `x`, this returns `Y/Z^3`.
pub fn weighted_reading(x: &BigRational, y: &BigRational) -> Option<BigRational> {
    let z = x.denom();
    if z.is_one() || y.denom() != z {
        return None;
    }
    Some(BigRational::new(y.numer().clone(), z * z * z))
}

pub fn load_fixtures(path: impl AsRef<Path>) -> Result<Vec<Fixture>> {
    parse(&std::fs::read_to_string(path)?)
}

/// The fixture file shipped with the crate.
pub fn bundled_fixtures() -> Vec<Fixture> {
    parse(BUNDLED).expect("bundled fixtures parse")
}

fn parse(text: &str) -> Result<Vec<Fixture>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(k, l)| serde_json::from_str(l).map_err(|e| Error::Record { line: k + 1, message: e.to_string() }))
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct PointCheck {
    pub anchor: String,
    pub point: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct PointTableReport {
    pub checks: Vec<PointCheck>,
    /// Per anchor: (points, passed).
    pub by_anchor: BTreeMap<String, (usize, usize)>,
    /// Disagreements between a stated count and the displayed points.
    pub notes: Vec<String>,
}

impl PointTableReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PointCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// Whether every point under anchors starting with `prefix` verifies.
    pub fn passed_under(&self, prefix: &str) -> bool {
        self.checks.iter().filter(|c| c.anchor.starts_with(prefix)).all(|c| c.passed)
    }
}

/// Verifies every fixture point. Completeness of the displayed sets is not
/// checked.
pub fn point_table_verify(fixtures: &[Fixture]) -> Result<PointTableReport> {
    let mut checks = Vec::with_capacity(fixtures.len());
    let mut by_anchor: BTreeMap<String, (usize, usize)> = BTreeMap::new();
    for f in fixtures {
        let (passed, detail) = f.verify()?;
        let e = by_anchor.entry(f.anchor().to_string()).or_default();
        e.0 += 1;
        e.1 += usize::from(passed);
        checks.push(PointCheck { anchor: f.anchor().to_string(), point: f.describe(), passed, detail });
    }
    let mut notes = Vec::new();
    let disc4 = fixtures.iter().filter(|f| matches!(f, Fixture::DiscPoint { i: 4, .. })).count();
    if disc4 != 0 && disc4 != 16 {
        notes.push(format!("i=4 curve: 16 rational points are stated, {disc4} are displayed"));
    }
    Ok(PointTableReport { checks, by_anchor, notes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn displayed_examples() {
        let pt = |tuple: Vec<usize>, x, y| Fixture::RationalPoint { n: 5, tuple, x, y, anchor: "t".into() };
        for (t, x, y) in [(vec![4], rat(-12, 7), rat(720, 7)), (vec![2, 3, 4], rat(-38, 11), rat(1368, 11)), (vec![2], rat(2, 3), rat(460, 3))] {
            let (ok, detail) = pt(t.clone(), x.clone(), y.clone()).verify().unwrap();
            assert!(ok && detail.contains("Y/Z^3"), "{detail}");
            let w = weighted_reading(&x, &y).unwrap();
            let (ok, detail) = pt(t, x, w).verify().unwrap();
            assert!(ok && !detail.contains("Y/Z^3"));
        }
        assert_eq!(weighted_reading(&rat(2, 3), &rat(460, 3)), Some(rat(460, 27)));
        assert!(!pt(vec![0, 1, 2, 3], rat(-4, 1), rat(0, 1)).verify().unwrap().0);
        assert!(pt(vec![3], rat(-9, 1), rat(252, 1)).verify().unwrap().0);
    }

    #[test]
    fn bundled_file_round_trips() {
        let fx = bundled_fixtures();
        assert_eq!(fx.len(), 101);
        let line = serde_json::to_string(&fx[0]).unwrap();
        assert_eq!(serde_json::from_str::<Fixture>(&line).unwrap(), fx[0]);
    }
}
