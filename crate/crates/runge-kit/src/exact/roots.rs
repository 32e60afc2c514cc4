//! Integer and rational roots by p-adic lifting.
//!
//! A square-free polynomial is reduced modulo a prime `p` that keeps it
//! square-free; every integer root reduces to a simple root mod `p`, lifts
//! uniquely by Newton iteration to `p^(2^k) > 2B` for a root bound `B`, and is
//! then confirmed by exact evaluation. Multiplicities come from repeated
//! synthetic division of the input.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::algebra::squarefree_part;
use super::poly::IntPoly;
use super::sturm::cauchy_bound;

/// Roots with multiplicities, ascending.
pub type RootMultiset<T> = Vec<(T, u32)>;

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn primes_from(start: u64) -> impl Iterator<Item = u64> {
    (start..).filter(|&n| is_prime(n))
}

fn reduce(f: &IntPoly, p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let mut v: Vec<u64> = f.coeffs().iter().map(|c| c.mod_floor(&pb).to_u64().expect("reduced")).collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn rem_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let inv = pow_mod(b[db], p - 2, p);
    while r.len() > db {
        let c = r[r.len() - 1] * inv % p;
        let shift = r.len() - 1 - db;
        for (j, &bj) in b.iter().enumerate() {
            r[shift + j] = (r[shift + j] + p - c * bj % p) % p;
        }
        while r.last() == Some(&0) {
            r.pop();
        }
    }
    r
}

fn gcd_degree_mod(a: &[u64], b: &[u64], p: u64) -> usize {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    while !b.is_empty() {
        let r = rem_mod(&a, &b, p);
        a = b;
        b = r;
    }
    a.len().saturating_sub(1)
}

fn derivative_mod(a: &[u64], p: u64) -> Vec<u64> {
    let mut d: Vec<u64> = a.iter().enumerate().skip(1).map(|(i, &c)| (i as u64 % p) * c % p).collect();
    while d.last() == Some(&0) {
        d.pop();
    }
    d
}

/// Whether `f` stays square-free of full degree modulo `p`.
pub(crate) fn squarefree_mod(f: &IntPoly, p: u64) -> bool {
    let fp = reduce(f, p);
    if fp.len() != f.coeffs().len() {
        return false;
    }
    let d = derivative_mod(&fp, p);
    !d.is_empty() && gcd_degree_mod(&fp, &d, p) == 0
}

fn roots_mod(fp: &[u64], p: u64) -> Vec<u64> {
    (0..p)
        .filter(|&r| fp.iter().rev().fold(0u64, |acc, &c| (acc * r + c) % p) == 0)
        .collect()
}

fn lift(f: &IntPoly, df: &IntPoly, r0: u64, p: u64, target: &BigInt) -> (BigInt, BigInt) {
    let mut m = BigInt::from(p);
    let mut r = BigInt::from(r0);
    while &m <= target {
        let m2 = &m * &m;
        let fr = f.eval(&r).mod_floor(&m2);
        let dfr = df.eval(&r).mod_floor(&m2);
        let inv = dfr.extended_gcd(&m2).x.mod_floor(&m2);
        r = (r - fr * inv).mod_floor(&m2);
        m = m2;
    }
    (r, m)
}

fn squarefree_integer_roots(sf: &IntPoly) -> Vec<BigInt> {
    let c0 = sf.coeff(0).abs();
    let bound = cauchy_bound(sf).min(c0);
    let target = &bound * 2u32;
    let p = primes_from(1009).find(|&p| squarefree_mod(sf, p)).expect("some prime keeps f square-free");
    let df = sf.derivative();
    let half = |m: &BigInt| m >> 1u32;
    let mut out = Vec::new();
    for r0 in roots_mod(&reduce(sf, p), p) {
        let (r, m) = lift(sf, &df, r0, p, &target);
        let r = if r > half(&m) { r - &m } else { r };
        if r.abs() <= bound && sf.eval(&r).is_zero() {
            out.push(r);
        }
    }
    out
}

/// Every integer root of `f` with its multiplicity, ascending.
pub fn integer_roots(f: &IntPoly) -> RootMultiset<BigInt> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let zeros = f.coeffs().iter().take_while(|c| c.is_zero()).count();
    let g = IntPoly::new(f.coeffs()[zeros..].to_vec());
    if zeros > 0 {
        out.push((BigInt::zero(), zeros as u32));
    }
    if g.degree().unwrap_or(0) == 0 {
        return out;
    }
    let candidates = if g.degree() == Some(1) {
        let (b, a) = (g.coeff(0), g.coeff(1));
        if (&b % &a).is_zero() {
            vec![-(b / a)]
        } else {
            vec![]
        }
    } else {
        let sf = if squarefree_mod(&g, 1009) || squarefree_mod(&g, 1013) {
            g.primitive_part()
        } else {
            squarefree_part(&g)
        };
        squarefree_integer_roots(&sf)
    };
    for r in candidates {
        let mut k = 0u32;
        let mut h = g.clone();
        while let Some(q) = h.deflate(&r) {
            k += 1;
            h = q;
        }
        if k > 0 {
            out.push((r, k));
        }
    }
    out.sort();
    out
}

/// Every rational root of `f` with its multiplicity, ascending.
///
/// Uses the monic transform `lc^(d-1) f(y / lc)`, whose integer roots `y`
/// give the rational roots `y / lc`.
pub fn rational_roots(f: &IntPoly) -> RootMultiset<BigRational> {
    let Some(d) = f.degree().filter(|&d| d >= 1) else { return Vec::new() };
    let f = f.primitive_part();
    let lc = f.lc().expect("nonzero").clone();
    if lc.is_one() {
        return integer_roots(&f).into_iter().map(|(r, k)| (BigRational::from_integer(r), k)).collect();
    }
    let mut g = Vec::with_capacity(d + 1);
    let mut scale = BigInt::one();
    for i in (0..d).rev() {
        g.push(f.coeff(i) * &scale);
        scale *= &lc;
    }
    g.reverse();
    g.push(BigInt::one());
    let mut out: Vec<_> = integer_roots(&IntPoly::new(g))
        .into_iter()
        .map(|(y, k)| (BigRational::new(y, lc.clone()), k))
        .collect();
    out.sort();
    out
}
