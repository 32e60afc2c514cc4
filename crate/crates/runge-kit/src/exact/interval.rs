//! Closed integer intervals with an explicit empty value.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

/// `[lo, hi]` over the integers, or empty.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum IntInterval {
    Empty,
    Range { lo: BigInt, hi: BigInt },
}

impl IntInterval {
    /// `[lo, hi]`, empty when `lo > hi`.
    pub fn new(lo: BigInt, hi: BigInt) -> Self {
        if lo > hi {
            IntInterval::Empty
        } else {
            IntInterval::Range { lo, hi }
        }
    }

    pub fn from_i64(lo: i64, hi: i64) -> Self {
        Self::new(lo.into(), hi.into())
    }

    pub fn point(x: BigInt) -> Self {
        Self::new(x.clone(), x)
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, IntInterval::Empty)
    }

    pub fn bounds(&self) -> Option<(&BigInt, &BigInt)> {
        match self {
            IntInterval::Empty => None,
            IntInterval::Range { lo, hi } => Some((lo, hi)),
        }
    }

    pub fn lo(&self) -> Option<&BigInt> {
        self.bounds().map(|b| b.0)
    }

    pub fn hi(&self) -> Option<&BigInt> {
        self.bounds().map(|b| b.1)
    }

    /// Number of integers in the interval.
    pub fn len(&self) -> BigInt {
        match self {
            IntInterval::Empty => BigInt::from(0),
            IntInterval::Range { lo, hi } => hi - lo + BigInt::one(),
        }
    }

    pub fn contains(&self, x: &BigInt) -> bool {
        self.bounds().is_some_and(|(lo, hi)| lo <= x && x <= hi)
    }

    /// Smallest interval containing both.
    pub fn hull(&self, other: &IntInterval) -> IntInterval {
        match (self.bounds(), other.bounds()) {
            (None, _) => other.clone(),
            (_, None) => self.clone(),
            (Some((a, b)), Some((c, d))) => IntInterval::new(a.min(c).clone(), b.max(d).clone()),
        }
    }

    pub fn intersect(&self, other: &IntInterval) -> IntInterval {
        match (self.bounds(), other.bounds()) {
            (Some((a, b)), Some((c, d))) => IntInterval::new(a.max(c).clone(), b.min(d).clone()),
            _ => IntInterval::Empty,
        }
    }

    pub fn is_subset_of(&self, other: &IntInterval) -> bool {
        match (self.bounds(), other.bounds()) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some((a, b)), Some((c, d))) => c <= a && b <= d,
        }
    }

    /// Endpoints as machine integers when both fit.
    pub fn to_i64(&self) -> Option<(i64, i64)> {
        use num_traits::ToPrimitive;
        let (lo, hi) = self.bounds()?;
        Some((lo.to_i64()?, hi.to_i64()?))
    }
}

impl fmt::Display for IntInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntInterval::Empty => write!(f, "[]"),
            IntInterval::Range { lo, hi } => write!(f, "[{lo}, {hi}]"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hull_and_length() {
        let a = IntInterval::from_i64(-68, 10);
        let b = IntInterval::from_i64(-1009045, 0);
        assert_eq!(a.hull(&b), IntInterval::from_i64(-1009045, 10));
        assert_eq!(IntInterval::from_i64(3, 2), IntInterval::Empty);
        assert_eq!(IntInterval::Empty.len(), BigInt::from(0));
        assert_eq!(a.len(), BigInt::from(79));
        assert_eq!(IntInterval::Empty.hull(&a), a);
        assert!(a.intersect(&IntInterval::from_i64(11, 12)).is_empty());
    }
}
