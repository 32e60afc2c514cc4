//! Integer roots and perfect-power detection.

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Floor of the `n`-th root of a nonnegative integer, and whether it is exact.
pub fn int_nth_root(x: &BigInt, n: u32) -> Result<(BigInt, bool)> {
    if n == 0 {
        return Err(Error::precondition("int_nth_root: n must be positive"));
    }
    if x.is_negative() {
        return Err(Error::precondition("int_nth_root: x must be nonnegative"));
    }
    let r = nth_root_floor(x.magnitude(), n);
    let exact = pow_eq(&r, n, x.magnitude());
    Ok((BigInt::from(r), exact))
}

/// Returns `y` with `y^m = x`, or `None`.
///
/// For even `m` the nonnegative root is returned and the caller owns the
/// sign expansion. For odd `m` the root carries the sign of `x`.
pub fn perfect_power_test(x: &BigInt, m: u32) -> Result<Option<BigInt>> {
    if m < 2 {
        return Err(Error::precondition("perfect_power_test: m must be at least 2"));
    }
    Ok(perfect_power(x, m))
}

/// Infallible core of [`perfect_power_test`]; `m` must be at least 2.
pub fn perfect_power(x: &BigInt, m: u32) -> Option<BigInt> {
    debug_assert!(m >= 2);
    if x.is_negative() && m % 2 == 0 {
        return None;
    }
    let mag = x.magnitude();
    if m == 2 && !maybe_square(mag) {
        return None;
    }
    let r = nth_root_floor(mag, m);
    if !pow_eq(&r, m, mag) {
        return None;
    }
    let r = BigInt::from(r);
    Some(if x.is_negative() { -r } else { r })
}

/// All `(m, y)` with `2 <= m <= m_max` and `y^m = x`.
///
/// Nonnegative roots for even `m`, signed roots for odd `m`. The values
/// 0 and ±1 are powers for every exponent, so `m_max` bounds the output.
pub fn power_roots(x: &BigInt, m_max: u32) -> Vec<(u32, BigInt)> {
    let mut out = Vec::new();
    if m_max < 2 {
        return out;
    }
    if x.magnitude() <= &BigUint::one() {
        for m in 2..=m_max {
            if x.is_negative() && m % 2 == 0 {
                continue;
            }
            out.push((m, x.clone()));
        }
        return out;
    }
    let (base, e) = maximal_power(x.magnitude());
    for m in 2..=m_max.min(e) {
        if e % m != 0 {
            continue;
        }
        if x.is_negative() && m % 2 == 0 {
            continue;
        }
        let y = BigInt::from(num_traits::pow(base.clone(), (e / m) as usize));
        out.push((m, if x.is_negative() { -y } else { y }));
    }
    out
}

/// Writes `x = base^e` with `e` maximal. Requires `x >= 2`.
pub fn maximal_power(x: &BigUint) -> (BigUint, u32) {
    let mut base = x.clone();
    let mut e = 1u32;
    let mut q = 2u32;
    while u64::from(q) < base.bits() {
        if let Some(r) = exact_root(&base, q) {
            base = r;
            e *= q;
            continue;
        }
        q = next_prime_u32(q);
    }
    (base, e)
}

fn exact_root(x: &BigUint, q: u32) -> Option<BigUint> {
    if q == 2 && !maybe_square(x) {
        return None;
    }
    let r = nth_root_floor(x, q);
    pow_eq(&r, q, x).then_some(r)
}

fn next_prime_u32(mut q: u32) -> u32 {
    loop {
        q += 1;
        if (2..q).take_while(|d| d * d <= q).all(|d| q % d != 0) {
            return q;
        }
    }
}

/// Floor `n`-th root with a native fast path for values below 2^127.
pub fn nth_root_floor(x: &BigUint, n: u32) -> BigUint {
    if n == 1 {
        return x.clone();
    }
    if let Some(v) = x.to_u128() {
        return BigUint::from(nth_root_u128(v, n));
    }
    x.nth_root(n)
}

fn pow_eq(r: &BigUint, n: u32, x: &BigUint) -> bool {
    if let (Some(r), Some(x)) = (r.to_u128(), x.to_u128()) {
        return checked_pow_u128(r, n) == Some(x);
    }
    num_traits::pow(r.clone(), n as usize) == *x
}

/// `r^n`, or `None` on overflow.
pub fn checked_pow_u128(r: u128, n: u32) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..n {
        acc = acc.checked_mul(r)?;
    }
    Some(acc)
}

/// Floor of the square root of a `u128`.
pub fn isqrt_u128(v: u128) -> u128 {
    nth_root_u128(v, 2)
}

/// Floor of the `n`-th root of a `u128`.
pub fn nth_root_u128(v: u128, n: u32) -> u128 {
    if v < 2 || n == 1 {
        return v;
    }
    if n >= 128 {
        return 1;
    }
    let mut r = (v as f64).powf(1.0 / f64::from(n)) as u128;
    while checked_pow_u128(r, n).is_none_or(|p| p > v) {
        r -= 1;
    }
    while checked_pow_u128(r + 1, n).is_some_and(|p| p <= v) {
        r += 1;
    }
    r
}

const SQUARE_MODULI: [u32; 4] = [64, 63, 65, 11];

fn square_tables() -> &'static [Vec<bool>; 4] {
    static TABLES: OnceLock<[Vec<bool>; 4]> = OnceLock::new();
    TABLES.get_or_init(|| {
        SQUARE_MODULI.map(|m| {
            let mut t = vec![false; m as usize];
            for r in 0..m {
                t[((r * r) % m) as usize] = true;
            }
            t
        })
    })
}

/// Cheap residue filter: `false` proves `x` is not a square.
pub fn maybe_square(x: &BigUint) -> bool {
    const M: u32 = 64 * 63 * 65 * 11;
    let r = (x % M).to_u32().unwrap_or(0);
    square_tables().iter().zip(SQUARE_MODULI).all(|(t, m)| t[(r % m) as usize])
}

/// Cheap residue filter for native values.
pub fn maybe_square_u128(x: u128) -> bool {
    square_tables().iter().zip(SQUARE_MODULI).all(|(t, m)| t[(x % u128::from(m)) as usize])
}

pub(crate) fn sign_of(x: &BigInt) -> i32 {
    match x.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Smallest `c >= 0` with `c^e >= m`, for `m >= 0`.
pub(crate) fn ceil_nth_root(m: &BigInt, e: u32) -> BigInt {
    if m.is_zero() || m.is_negative() {
        return BigInt::zero();
    }
    let below: BigInt = m - 1u32;
    BigInt::from(nth_root_floor(below.magnitude(), e)) + 1u32
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn roots_of_small_values() {
        assert_eq!(int_nth_root(&bi(8), 3).unwrap(), (bi(2), true));
        assert_eq!(int_nth_root(&bi(10), 2).unwrap(), (bi(3), false));
        assert_eq!(int_nth_root(&bi(63504), 2).unwrap(), (bi(252), true));
        assert!(int_nth_root(&bi(-1), 2).is_err());
        assert!(int_nth_root(&bi(4), 0).is_err());
    }

    #[test]
    fn signed_power_detection() {
        assert_eq!(perfect_power_test(&bi(121), 2).unwrap(), Some(bi(11)));
        assert_eq!(perfect_power_test(&bi(-125), 3).unwrap(), Some(bi(-5)));
        assert_eq!(perfect_power_test(&bi(-4), 2).unwrap(), None);
        assert!(perfect_power_test(&bi(4), 1).is_err());
    }

    #[test]
    fn big_values_use_the_arbitrary_precision_path() {
        let y = BigInt::from(10u32).pow(40) + 7u32;
        let x = y.pow(3);
        assert_eq!(perfect_power(&x, 3), Some(y.clone()));
        assert_eq!(perfect_power(&(x + 1u32), 3), None);
    }

    #[test]
    fn all_exponents_of_a_power() {
        let got = power_roots(&bi(64), 8);
        assert_eq!(got, vec![(2, bi(8)), (3, bi(4)), (6, bi(2))]);
        assert_eq!(power_roots(&bi(-125), 5), vec![(3, bi(-5))]);
        assert_eq!(power_roots(&bi(1), 3), vec![(2, bi(1)), (3, bi(1))]);
        assert_eq!(power_roots(&bi(-1), 4), vec![(3, bi(-1))]);
    }

    #[test]
    fn native_roots_agree_at_edges() {
        for v in [0u128, 1, 2, 3, 4, 15, 16, 17, u64::MAX as u128, u128::MAX] {
            let r = isqrt_u128(v);
            assert!(r * r <= v);
            assert!((r + 1).checked_mul(r + 1).is_none_or(|s| s > v));
        }
        assert_eq!(nth_root_u128(1 << 90, 3), 1 << 30);
    }

    #[test]
    fn ceiling_roots() {
        assert_eq!(ceil_nth_root(&bi(27), 3), bi(3));
        assert_eq!(ceil_nth_root(&bi(28), 3), bi(4));
        assert_eq!(ceil_nth_root(&bi(1), 4), bi(1));
        assert_eq!(ceil_nth_root(&bi(0), 4), bi(0));
    }
}
