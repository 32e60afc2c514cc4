//! The polynomials `p_a`, the index sets `A_n` and the equations `y^m = g_T(x)`.
//!
//! `p_a(x) = x(x+1)...(x+a)`, and for a strictly increasing tuple
//! `T = (a_1, ..., a_k)` of elements of `{0, ..., n-1}`,
//! `g_T = p_n + p_{a_1} + ... + p_{a_k}`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{integer_roots, poly_gcd, product_poly, squarefree_decomposition, IntPoly, SquarefreeDecomposition};

/// A strictly increasing tuple of nonnegative integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Tuple(Vec<usize>);

impl Tuple {
    /// Validates `entries` as an element of `A_n`.
    pub fn new(entries: Vec<usize>, n: usize) -> Result<Self> {
        let t = Tuple(entries);
        t.check(n)?;
        Ok(t)
    }

    /// A tuple without a context bound; only strict monotonicity is checked.
    pub fn unbounded(entries: Vec<usize>) -> Result<Self> {
        Self::new(entries, usize::MAX)
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if self.0.is_empty() {
            return Err(Error::precondition("tuple must be nonempty"));
        }
        if self.0.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::precondition(format!("tuple {self} is not strictly increasing")));
        }
        if *self.0.last().expect("nonempty") >= n {
            return Err(Error::precondition(format!("tuple {self} has an entry >= n = {n}")));
        }
        Ok(())
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Bit `a` set for every entry `a`.
    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &a| m | (1 << a))
    }

    pub fn from_mask(mask: u64) -> Tuple {
        Tuple((0..64).filter(|a| mask >> a & 1 == 1).collect())
    }
}

impl fmt::Display for Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Tuple {
    type Err = Error;

    /// Accepts `2,3,4` or `(2,3,4)`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let entries = body
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| Error::precondition(format!("bad tuple entry {p:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Tuple::unbounded(entries)
    }
}

/// Lexicographic walk over the nonempty subsets of `{0, ..., n-1}`.
pub struct TupleIter {
    n: usize,
    stack: Vec<usize>,
    started: bool,
}

impl Iterator for TupleIter {
    type Item = Tuple;

    fn next(&mut self) -> Option<Tuple> {
        if !self.started {
            self.started = true;
            if self.n == 0 {
                return None;
            }
            self.stack.push(0);
            return Some(Tuple(self.stack.clone()));
        }
        let last = *self.stack.last()?;
        if last + 1 < self.n {
            self.stack.push(last + 1);
        } else {
            self.stack.pop();
            *self.stack.last_mut()? += 1;
        }
        Some(Tuple(self.stack.clone()))
    }
}

/// All `2^n - 1` elements of `A_n` in lexicographic order.
pub fn enumerate_tuples(n: usize) -> TupleIter {
    TupleIter { n, stack: Vec::with_capacity(n), started: false }
}

/// `g_T = p_n + sum p_{a_i}`.
pub fn g_poly(n: usize, t: &Tuple) -> Result<IntPoly> {
    t.check(n)?;
    Ok(t.entries().iter().fold(product_poly(n), |acc, &a| &acc + &product_poly(a)))
}

/// Products `p_0, ..., p_n` computed once, for callers building many `g_T`.
pub struct ProductTable {
    polys: Vec<IntPoly>,
}

impl ProductTable {
    pub fn new(n: usize) -> Self {
        let mut polys = Vec::with_capacity(n + 1);
        let mut acc = IntPoly::x();
        polys.push(acc.clone());
        for i in 1..=n {
            acc = &acc * &IntPoly::linear(BigInt::from(i));
            polys.push(acc.clone());
        }
        ProductTable { polys }
    }

    pub fn p(&self, a: usize) -> &IntPoly {
        &self.polys[a]
    }

    pub fn g(&self, n: usize, t: &Tuple) -> IntPoly {
        t.entries().iter().fold(self.polys[n].clone(), |acc, &a| &acc + &self.polys[a])
    }
}

/// `g_T = p_{a_1} * h_T` with `h_T = 1 + g_{T'}(x + a_1 + 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cofactor {
    pub p_a1: IntPoly,
    pub h: IntPoly,
    /// Entries `a_i - a_1 - 1` for `i >= 2`; empty when `T` has one entry.
    pub t_prime: Vec<usize>,
    /// `n - a_1 - 1`, the context of `T'`.
    pub n_prime: usize,
}

pub fn cofactor_h(n: usize, t: &Tuple) -> Result<Cofactor> {
    t.check(n)?;
    let a1 = t.first();
    if a1 == 0 {
        return Err(Error::precondition("cofactor_h needs a_1 >= 1"));
    }
    let n_prime = n - a1 - 1;
    let t_prime: Vec<usize> = t.entries()[1..].iter().map(|a| a - a1 - 1).collect();
    let inner = t_prime.iter().fold(product_poly(n_prime), |acc, &a| &acc + &product_poly(a));
    let h = &IntPoly::one() + &inner.shift(&BigInt::from(a1 + 1));
    let p_a1 = product_poly(a1);
    let g = g_poly(n, t)?;
    if &p_a1 * &h != g {
        return Err(Error::inconsistency(format!("g_T != p_a1 * h_T for n={n}, T={t}")));
    }
    Ok(Cofactor { p_a1, h, t_prime, n_prime })
}

/// Outcome of the computational checks of the factorization lemma.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Lemma3Report {
    pub n: usize,
    pub tuples_checked: usize,
    /// `(T, h_T(0) mod 4, h_T(-1) mod 4)` for tuples starting `(1, 3)` with the rest `>= 5`.
    pub mod4_residues: Vec<(Tuple, u32, u32)>,
    /// Tuples from `mod4_residues` where a residue differs from 3.
    pub mod4_exceptions: Vec<Tuple>,
    /// Checks that failed; expected to stay empty.
    pub failures: Vec<String>,
}

impl Lemma3Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn mod4(v: &BigInt) -> u32 {
    use num_integer::Integer;
    use num_traits::ToPrimitive;
    v.mod_floor(&BigInt::from(4)).to_u32().expect("small")
}

pub fn lemma3_verify(n: usize) -> Result<Lemma3Report> {
    if n < 2 {
        return Err(Error::precondition("lemma3_verify needs n >= 2"));
    }
    let mut report = Lemma3Report { n, ..Default::default() };
    for t in enumerate_tuples(n).filter(|t| t.first() >= 1) {
        report.tuples_checked += 1;
        let c = cofactor_h(n, &t)?;
        let a1 = t.first() as i64;
        for x0 in -a1..=0 {
            if !c.h.eval_i64(x0).is_positive() {
                report.failures.push(format!("T={t}: h_T({x0}) <= 0"));
            }
        }
        let e = t.entries();
        if e.len() >= 2 && e[0] == 1 && e[1] == 3 && e[2..].iter().all(|&a| a >= 5) {
            let (r0, r1) = (mod4(&c.h.eval_i64(0)), mod4(&c.h.eval_i64(-1)));
            report.mod4_residues.push((t.clone(), r0, r1));
            if r0 != 3 || r1 != 3 {
                report.mod4_exceptions.push(t.clone());
            }
        }
        let g = g_poly(n, &t)?;
        for s in [-1i64, 1] {
            let shifted = &g + &IntPoly::constant(BigInt::from(s));
            if !integer_roots(&shifted).is_empty() {
                report.failures.push(format!("T={t}: g_T = {} has an integer solution", -s));
            }
        }
    }
    Ok(report)
}

/// The three shapes of repeated factor predicted for `g_T`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RepeatedFactorFamily {
    /// `T = (n-4)`: `(x^2 + (2n-3)x + n^2-3n+1)^2 | g_T`.
    QuadraticSquared,
    /// `T = (n-3, n-2)`: `(x+n-1)^3 | g_T`.
    LinearCubed,
    /// `T = (n-2, n-1)`: `(x+n)^2 | g_T`.
    LinearSquared,
}

impl RepeatedFactorFamily {
    /// The family member in `A_n`, if `n` is large enough.
    pub fn tuple(self, n: usize) -> Option<Tuple> {
        let e = match self {
            Self::QuadraticSquared if n >= 4 => vec![n - 4],
            Self::LinearCubed if n >= 3 => vec![n - 3, n - 2],
            Self::LinearSquared if n >= 2 => vec![n - 2, n - 1],
            _ => return None,
        };
        Some(Tuple(e))
    }

    /// The predicted repeated factor, raised to its power.
    pub fn divisor(self, n: usize) -> IntPoly {
        let n = n as i64;
        match self {
            Self::QuadraticSquared => IntPoly::from_i64s(&[n * n - 3 * n + 1, 2 * n - 3, 1]).pow(2),
            Self::LinearCubed => IntPoly::from_i64s(&[n - 1, 1]).pow(3),
            Self::LinearSquared => IntPoly::from_i64s(&[n, 1]).pow(2),
        }
    }

    pub const ALL: [RepeatedFactorFamily; 3] = [Self::QuadraticSquared, Self::LinearCubed, Self::LinearSquared];

    pub fn classify(n: usize, t: &Tuple) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.tuple(n).as_ref() == Some(t))
    }
}

/// One tuple whose `g_T` has a repeated root.
#[derive(Clone, Debug, Serialize)]
pub struct MultipleRootEntry {
    pub n: usize,
    pub tuple: Tuple,
    pub decomposition: SquarefreeDecomposition,
    pub family: Option<RepeatedFactorFamily>,
    /// The predicted factor divides `g_T`.
    pub divisibility: bool,
    /// The quotient by the predicted factor is square-free.
    pub cofactor_squarefree: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct MultipleRootScan {
    pub n_max: usize,
    pub tuples_scanned: u64,
    pub entries: Vec<MultipleRootEntry>,
    /// Flagged tuples outside the three families, or family members whose
    /// divisibility or cofactor check failed.
    pub counterexamples: Vec<(usize, Tuple)>,
    /// Family members that were not flagged.
    pub missing: Vec<(usize, Tuple)>,
}

impl MultipleRootScan {
    /// True when the scan matches the predicted families exactly up to `n_max`.
    pub fn verified(&self) -> bool {
        self.counterexamples.is_empty() && self.missing.is_empty()
    }
}

/// Prime used by the modular square-freeness filter.
const SCAN_PRIME: u64 = 2_147_483_629;

fn reduce_mod(f: &IntPoly) -> Vec<u64> {
    use num_integer::Integer;
    use num_traits::ToPrimitive;
    let p = BigInt::from(SCAN_PRIME);
    f.coeffs().iter().map(|c| c.mod_floor(&p).to_u64().expect("reduced")).collect()
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Degree of gcd(a, b) over F_p by pseudo-remainders (no inversions).
fn gcd_degree(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    let p = SCAN_PRIME;
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let db = b.len() - 1;
        let lb = b[db];
        while a.len() > db {
            let la = a[a.len() - 1];
            let shift = a.len() - 1 - db;
            for v in a.iter_mut() {
                *v = *v * lb % p;
            }
            for (j, &bj) in b.iter().enumerate() {
                a[shift + j] = (a[shift + j] + p - la * bj % p) % p;
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

fn derivative_mod(a: &[u64]) -> Vec<u64> {
    a.iter().enumerate().skip(1).map(|(i, &c)| (i as u64) * c % SCAN_PRIME).collect()
}

/// Reports every `T` in `A_n`, `n <= n_max`, for which `g_T` has a repeated root.
///
/// A modular gcd certifies square-freeness for almost every tuple; the few
/// that survive the filter are decided exactly.
pub fn multiple_root_scan(n_max: usize) -> Result<MultipleRootScan> {
    if n_max < 2 {
        return Err(Error::precondition("multiple_root_scan needs n_max >= 2"));
    }
    if n_max > 40 {
        return Err(Error::precondition("multiple_root_scan supports n_max <= 40"));
    }
    let mut scan = MultipleRootScan {
        n_max,
        tuples_scanned: 0,
        entries: Vec::new(),
        counterexamples: Vec::new(),
        missing: Vec::new(),
    };
    for n in 2..=n_max {
        let table = ProductTable::new(n);
        let reduced: Vec<Vec<u64>> = (0..=n).map(|a| reduce_mod(table.p(a))).collect();
        let total = (1u64 << n) - 1;
        let mut suspects: Vec<u64> = (1..total as usize + 1)
            .into_par_iter()
            .map(|m| m as u64)
            .with_min_len(1024)
            .filter(|&mask| {
                let mut g = reduced[n].clone();
                for a in 0..n {
                    if mask >> a & 1 == 1 {
                        for (gi, ci) in g.iter_mut().zip(&reduced[a]) {
                            *gi = (*gi + ci) % SCAN_PRIME;
                        }
                    }
                }
                let d = derivative_mod(&g);
                gcd_degree(g, d) > 0
            })
            .collect();
        scan.tuples_scanned += total;
        let mut flagged: Vec<Tuple> = Vec::new();
        suspects.sort_unstable();
        for mask in suspects {
            let t = Tuple::from_mask(mask);
            let g = table.g(n, &t);
            let d = squarefree_decomposition(&g)?;
            if d.factors.iter().all(|(_, k)| *k == 1) {
                continue;
            }
            let family = RepeatedFactorFamily::classify(n, &t);
            let (divisibility, cofactor_squarefree) = match family {
                Some(f) => match g.exact_div(&f.divisor(n)) {
                    Ok(cof) => {
                        let gcd = poly_gcd(&cof, &cof.derivative())?;
                        (true, gcd.degree() == Some(0))
                    }
                    Err(_) => (false, false),
                },
                None => (false, false),
            };
            if !(divisibility && cofactor_squarefree) {
                scan.counterexamples.push((n, t.clone()));
            }
            flagged.push(t.clone());
            scan.entries.push(MultipleRootEntry { n, tuple: t, decomposition: d, family, divisibility, cofactor_squarefree });
        }
        for f in RepeatedFactorFamily::ALL {
            if let Some(t) = f.tuple(n) {
                if !flagged.contains(&t) {
                    scan.missing.push((n, t));
                }
            }
        }
    }
    scan.entries.sort_by(|a, b| (a.n, &a.tuple).cmp(&(b.n, &b.tuple)));
    Ok(scan)
}

/// Genus of `y^2 = f(x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Genus {
    pub genus: u32,
    /// `f` is a constant times a square, so the curve is not hyperelliptic.
    pub degenerate: bool,
}

pub fn hyperelliptic_genus(f: &IntPoly) -> Result<Genus> {
    let d = squarefree_decomposition(f)?;
    let odd_degree: usize = d.factors.iter().filter(|(_, k)| k % 2 == 1).map(|(p, _)| p.degree().unwrap_or(0)).sum();
    if odd_degree == 0 {
        return Ok(Genus { genus: 0, degenerate: true });
    }
    Ok(Genus { genus: ((odd_degree - 1) / 2) as u32, degenerate: false })
}

/// `prod_{i=0}^{a} (p(x+i) + q)`.
pub fn progression_product(p: i64, q: i64, a: usize) -> IntPoly {
    (0..=a as i64).fold(IntPoly::one(), |acc, i| &acc * &IntPoly::from_i64s(&[p * i + q, p]))
}

/// `P_{p,q,n} + sum P_{p,q,a_i}` with `P_{p,q,a} = prod_{i=0}^{a} (p(x+i) + q)`.
pub fn general_product_poly(p: i64, q: i64, n: usize, t: &Tuple) -> Result<IntPoly> {
    if p <= 0 || q.abs() >= p {
        return Err(Error::precondition(format!("general_product_poly needs p > 0 and |q| < p, got p={p}, q={q}")));
    }
    t.check(n)?;
    Ok(t.entries().iter().fold(progression_product(p, q, n), |acc, &a| &acc + &progression_product(p, q, a)))
}

/// One equation `y^m = f(x)`, optionally tagged with the `(n, T)` it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquationInstance {
    pub m: u32,
    pub f: IntPoly,
    pub origin: Option<(usize, Tuple)>,
}

impl EquationInstance {
    pub fn raw(m: u32, f: IntPoly) -> Result<Self> {
        if m < 2 {
            return Err(Error::precondition("exponent m must be at least 2"));
        }
        if f.is_zero() {
            return Err(Error::precondition("f must be nonzero"));
        }
        Ok(EquationInstance { m, f, origin: None })
    }

    pub fn family(m: u32, n: usize, t: Tuple) -> Result<Self> {
        let f = g_poly(n, &t)?;
        let mut e = Self::raw(m, f)?;
        e.origin = Some((n, t));
        Ok(e)
    }
}

impl fmt::Display for EquationInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.origin {
            Some((n, t)) => write!(f, "y^{} = g_T(x), n={n}, T={t}", self.m),
            None => write!(f, "y^{} = {}", self.m, self.f),
        }
    }
}
