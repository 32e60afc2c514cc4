//! Acceptance suite: one PASS/FAIL line per criterion, with wall time and limit.
//!
//! Runs without the libtest harness so every line is printed. The long
//! searches at bound 10^5 for criteria 6 and 7 run only when the binary is
//! given `--include-ignored` (or `--ignored`), e.g.
//! `cargo test --release --test acceptance -- --include-ignored`.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use runge_kit::curves::{bundled_fixtures, g1_check, identity_suite, point_table_verify, rational_point_search, Fixture};
use runge_kit::exact::{integer_roots, product_poly, rat, real_root_hull, IntInterval, IntPoly};
use runge_kit::family::{enumerate_tuples, g_poly, multiple_root_scan, EquationInstance, Tuple};
use runge_kit::pell::{cubic_sum_solution, fibonacci_family, verify_congruences};
use runge_kit::runge::{reduction_schedule, round_significant, runge_solve_with, HullMode, RungeSetup, SolveOptions};
use runge_kit::search::{additive_count, additive_search, bounded_search, positive_x_scan, Exclusions};

type Outcome = Result<String, String>;

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Duration,
    run: fn(bool) -> Outcome,
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let long = args.iter().any(|a| a == "--include-ignored" || a == "--ignored");
    let filter: Vec<&String> = args.iter().filter(|a| !a.starts_with('-')).collect();
    let criteria = [
        Criterion { id: 1, title: "Runge oracle equivalence, (m, n) = (2, 5)", limit: mins(5), run: c1_oracle_equivalence },
        Criterion { id: 2, title: "worked example n = 13", limit: mins(10), run: c2_worked_example },
        Criterion { id: 3, title: "reduction neutrality", limit: mins(2), run: c3_reduction_neutrality },
        Criterion { id: 4, title: "(m, n) = (5, 3) bounded search", limit: mins(1), run: c4_fallback_search },
        Criterion { id: 5, title: "(m, n) = (15, 14), T = (10,11,12,13)", limit: mins(5), run: c5_only_trivial },
        Criterion { id: 6, title: "additive cubic search", limit: mins(45), run: c6_additive_cubes },
        Criterion { id: 7, title: "additive square count", limit: mins(45), run: c7_additive_squares },
        Criterion { id: 8, title: "Pell cubic-sum families", limit: mins(1), run: c8_pell_families },
        Criterion { id: 9, title: "congruence suite", limit: mins(2), run: c9_congruences },
        Criterion { id: 10, title: "repeated-root scan n <= 20", limit: mins(5), run: c10_repeated_roots },
        Criterion { id: 11, title: "identity suite k <= 25", limit: mins(1), run: c11_identities },
        Criterion { id: 12, title: "point tables", limit: mins(10), run: c12_point_tables },
        Criterion { id: 13, title: "discriminant curves", limit: mins(5), run: c13_disc_curves },
        Criterion { id: 14, title: "determinism under 1 and 8 workers", limit: mins(10), run: c14_determinism },
    ];
    let mut failed = Vec::new();
    for c in criteria.iter().filter(|c| filter.is_empty() || filter.iter().any(|f| c.id.to_string() == **f)) {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(|| (c.run)(long)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(d) if took > c.limit => Err(format!("{d}; exceeded the time limit")),
            o => o,
        };
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        println!("criterion {:>2} {tag} [{:.1}s / {}s] {}: {detail}", c.id, took.as_secs_f64(), c.limit.as_secs(), c.title);
        if outcome.is_err() {
            failed.push(c.id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all criteria passed");
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}

fn mins(m: u64) -> Duration {
    Duration::from_secs(60 * m)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn tuple(v: &[usize], n: usize) -> Tuple {
    Tuple::new(v.to_vec(), n).unwrap()
}

fn bi(v: i64) -> BigInt {
    BigInt::from(v)
}

// ---------------------------------------------------------------- 1

const RANGE: i64 = 1_000_000;

fn square_residues(m: u64) -> Vec<bool> {
    let mut t = vec![false; m as usize];
    for r in 0..m {
        t[(r * r % m) as usize] = true;
    }
    t
}

/// Exact square root of a nonnegative i128, if it has one.
fn square_root(v: i128, filters: &[(u64, Vec<bool>)]) -> Option<i128> {
    if v < 0 {
        return None;
    }
    let u = v as u128;
    if !filters.iter().all(|(m, t)| t[(u % u128::from(*m)) as usize]) {
        return None;
    }
    let mut r = (u as f64).sqrt() as u128;
    while r * r > u {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= u {
        r += 1;
    }
    (r * r == u).then_some(r as i128)
}

/// For every mask of `{0..n-1}`, the solutions of `y^2 = p_n(x) + sum p_a(x)`
/// with `|x| <= RANGE`, from direct products of consecutive integers.
fn brute_force_squares(n: usize) -> Vec<BTreeSet<(BigInt, BigInt)>> {
    let filters: Vec<(u64, Vec<bool>)> = [64u64, 63, 65, 11].iter().map(|&m| (m, square_residues(m))).collect();
    let masks = (1usize << n) - 1;
    let rows: Vec<Vec<(usize, i64, i128)>> = (-RANGE..=RANGE)
        .into_par_iter()
        .map(|x| {
            let mut p = Vec::with_capacity(n + 1);
            let mut acc: i128 = 1;
            for i in 0..=n {
                acc *= i128::from(x) + i as i128;
                p.push(acc);
            }
            let mut hits = Vec::new();
            for mask in 1..=masks {
                let v = (0..n).filter(|a| mask >> a & 1 == 1).fold(p[n], |s, a| s + p[a]);
                if let Some(y) = square_root(v, &filters) {
                    hits.push((mask, x, y));
                }
            }
            hits
        })
        .collect();
    let mut out = vec![BTreeSet::new(); masks + 1];
    for (mask, x, y) in rows.into_iter().flatten() {
        out[mask].insert((bi(x), BigInt::from(y)));
        out[mask].insert((bi(x), -BigInt::from(y)));
    }
    out
}

/// Independent check that no solution with `|x| > RANGE` escapes the report:
/// outside the enumerated region the two outer offset polynomials have no
/// real roots and opposite signs, which forces `D y = +-(DQ + k)` for some
/// `-k1 < k < k2`; the integer roots of those offsets are then all accounted for.
fn certify_tail(g: &IntPoly, pairs: &BTreeSet<(BigInt, BigInt)>, used: &runge_kit::runge::Bounding) -> Result<(), String> {
    let setup = RungeSetup::new(g, 2).map_err(|e| e.to_string())?;
    let (lo, hi) = used.region.bounds().ok_or("empty region")?;
    let outer = [setup.offset(&-&used.k1), setup.offset(&used.k2)];
    for p in &outer {
        if p.degree().unwrap_or(0) >= 1 {
            let h = real_root_hull(p).map_err(|e| e.to_string())?;
            ensure(h.is_subset_of(&used.region), || format!("offset roots {h} leave the region"))?;
        }
    }
    for x in [lo - 1, hi + 1] {
        let (a, b) = (outer[0].eval(&x), outer[1].eval(&x));
        ensure(!a.is_zero() && !b.is_zero() && a.signum() != b.signum(), || format!("no sandwich at x = {x}"))?;
    }
    let mut k = -&used.k1 + 1;
    while k < used.k2 {
        let off = setup.offset(&k);
        ensure(!off.is_zero(), || format!("offset {k} vanishes identically"))?;
        for (r, _) in integer_roots(&off) {
            let v = g.eval(&r);
            if let Some(y) = runge_kit::exact::perfect_power(&v, 2) {
                ensure(pairs.contains(&(r.clone(), y.clone())) && pairs.contains(&(r.clone(), -&y)), || {
                    format!("offset {k} root x = {r} is missing")
                })?;
            }
        }
        k += 1;
    }
    // Any part of the region beyond the brute-force range is checked here.
    let beyond: Vec<i64> = {
        let (lo, hi) = used.region.to_i64().ok_or("region too wide")?;
        ensure(hi - lo < 50_000_000, || "region too wide to recheck".into())?;
        (lo..-RANGE).chain((RANGE + 1)..=hi).collect()
    };
    for x in beyond {
        let v = g.eval(&bi(x));
        if let Some(y) = runge_kit::exact::perfect_power(&v, 2) {
            ensure(pairs.contains(&(bi(x), y)), || format!("x = {x} beyond the range is missing"))?;
        }
    }
    Ok(())
}

fn c1_oracle_equivalence(_: bool) -> Outcome {
    let n = 5;
    let oracle = brute_force_squares(n);
    let mut total = 0;
    for t in enumerate_tuples(n) {
        let inst = EquationInstance::family(2, n, t.clone()).map_err(|e| e.to_string())?;
        let report = runge_solve_with(&inst, SolveOptions::default()).map_err(|e| e.to_string())?;
        let all: BTreeSet<(BigInt, BigInt)> = report.pairs().into_iter().collect();
        let inside: BTreeSet<(BigInt, BigInt)> = all.iter().filter(|(x, _)| x.abs() <= bi(RANGE)).cloned().collect();
        let want = &oracle[t.mask() as usize];
        ensure(&inside == want, || format!("T={t}: solver {inside:?} vs brute force {want:?}"))?;
        let g = g_poly(n, &t).unwrap();
        certify_tail(&g, &all, &report.used).map_err(|e| format!("T={t}: {e}"))?;
        total += all.len();
    }
    Ok(format!("31 tuples agree on |x| <= 10^6 ({total} solutions), tails certified"))
}

// ---------------------------------------------------------------- 2

fn c2_worked_example(_: bool) -> Outcome {
    let t = tuple(&[2, 3, 4, 5, 7, 9, 10, 12], 13);
    let setup = RungeSetup::new(&g_poly(13, &t).unwrap(), 2).map_err(|e| e.to_string())?;
    let q = &setup.rp.q;
    let lead = [(7, rat(1, 1)), (6, rat(46, 1)), (5, rat(1693, 2)), (4, rat(15931, 2))];
    for (k, c) in &lead {
        ensure(q.degree() == Some(7) && &q.coeff(*k) == c, || format!("coefficient of x^{k} is {}", q.coeff(*k)))?;
    }
    ensure(setup.rp.d == bi(16), || format!("D = {}", setup.rp.d))?;
    let s = reduction_schedule(&setup, HullMode::RootBound).map_err(|e| e.to_string())?;
    let (a, b) = s.initial.i1.bounds().ok_or("I1 empty")?;
    let (c, d) = s.initial.i2.bounds().ok_or("I2 empty")?;
    ensure(*a == bi(-68) && round_significant(b, 4) == bi(2_018_000), || format!("I1 = [{a}, {b}]"))?;
    ensure(round_significant(c, 3) == bi(-1_010_000) && d.is_zero(), || format!("I2 = [{c}, {d}]"))?;
    ensure(s.initial.subequation_count == bi(3_026_952), || format!("initial count {}", s.initial.subequation_count))?;
    ensure(s.last.k1 == bi(851) && s.iterations1 == 23, || format!("k1 = {} in {} steps", s.last.k1, s.iterations1))?;
    ensure(s.last.k2 == bi(620) && s.iterations2 == 20, || format!("k2 = {} in {} steps", s.last.k2, s.iterations2))?;
    ensure(s.last.i1 == IntInterval::from_i64(-69, 2280), || format!("final I1 {}", s.last.i1))?;
    ensure(s.last.i2 == IntInterval::from_i64(-1674, 0), || format!("final I2 {}", s.last.i2))?;
    ensure(s.last.subequation_count < bi(6000), || format!("final count {}", s.last.subequation_count))?;
    Ok(format!(
        "D = 16, I1 = [{a}, {b}], I2 = [{c}, {d}], count {} -> {}, k1 = 851/23, k2 = 620/20",
        s.initial.subequation_count, s.last.subequation_count
    ))
}

// ---------------------------------------------------------------- 3

fn c3_reduction_neutrality(_: bool) -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_2024);
    let mut with_solutions = 0;
    for i in 0..20 {
        // Half are q^2 + r, which tend to have solutions; half are arbitrary
        // with small coefficients, since the unreduced run enumerates an
        // interval that grows with them.
        let f = if i % 2 == 0 {
            let q = IntPoly::from_i64s(&[rng.gen_range(-30..=30), rng.gen_range(-30..=30), rng.gen_range(-30..=30), 1]);
            let r = IntPoly::from_i64s(&[rng.gen_range(-99..=99), rng.gen_range(-99..=99), rng.gen_range(-9..=9)]);
            &q.pow(2) + &r
        } else {
            let mut c: Vec<i64> = (0..6).map(|_| rng.gen_range(-20..=20)).collect();
            c.push(1);
            IntPoly::from_i64s(&c)
        };
        let inst = EquationInstance::raw(2, f.clone()).map_err(|e| e.to_string())?;
        let a = runge_solve_with(&inst, SolveOptions::default()).map_err(|e| e.to_string())?;
        let b = runge_solve_with(&inst, SolveOptions { reduce: false, ..SolveOptions::default() }).map_err(|e| e.to_string())?;
        ensure(a.pairs() == b.pairs(), || format!("f = {f}: {:?} vs {:?}", a.pairs(), b.pairs()))?;
        with_solutions += usize::from(!a.solutions.is_empty());
    }
    Ok(format!("20 degree-6 instances agree ({with_solutions} with solutions)"))
}

// ---------------------------------------------------------------- 4

fn c4_fallback_search(_: bool) -> Outcome {
    let found: BTreeSet<(i64, i64)> = bounded_search(5, 3, 10_000)
        .map_err(|e| e.to_string())?
        .into_iter()
        .filter(|s| !s.y.is_zero())
        .map(|s| (i64::try_from(&s.x).unwrap(), i64::try_from(&s.y).unwrap()))
        .collect();
    let expected: BTreeSet<(i64, i64)> = [(-8, -2), (-8, 12), (-5, -5), (-4, 2), (-1, -1)].into_iter().collect();
    ensure(found == expected, || format!("found {found:?}, expected {expected:?}"))?;
    Ok(format!("{found:?}"))
}

// ---------------------------------------------------------------- 5

fn c5_only_trivial(_: bool) -> Outcome {
    let t = tuple(&[10, 11, 12, 13], 14);
    let g = g_poly(14, &t).unwrap();
    let inst = EquationInstance::family(15, 14, t).map_err(|e| e.to_string())?;
    let r = runge_solve_with(&inst, SolveOptions::default()).map_err(|e| e.to_string())?;
    let nonzero: Vec<_> = r.solutions.iter().filter(|s| !s.y.is_zero()).map(|s| (s.x.to_string(), s.y.to_string())).collect();
    ensure(nonzero.is_empty(), || format!("solutions with y != 0: {nonzero:?}"))?;
    let xs: BTreeSet<BigInt> = r.solutions.iter().map(|s| s.x.clone()).collect();
    let zeros: BTreeSet<BigInt> = (-200..=200).map(bi).filter(|x| g.eval(x).is_zero()).collect();
    ensure(xs == zeros, || format!("y = 0 set {xs:?} vs roots {zeros:?}"))?;
    Ok(format!("{} solutions, all with y = 0", r.solutions.len()))
}

// ---------------------------------------------------------------- 6

fn cube_pairs(bound: u64) -> Result<Vec<(u64, u64, BigInt)>, String> {
    let sols = additive_search(2, 2, 3, bound, Exclusions::NONTRIVIAL).map_err(|e| e.to_string())?;
    for s in &sols {
        let v = product_poly(2).eval(&BigInt::from(s.x)) + product_poly(2).eval(&BigInt::from(s.y));
        ensure(s.z.pow(3) == v, || format!("({}, {}) z = {} fails", s.x, s.y, s.z))?;
    }
    Ok(sols.into_iter().map(|s| (s.x, s.y, s.z)).collect())
}

fn c6_additive_cubes(long: bool) -> Outcome {
    let short: Vec<(u64, u64)> = cube_pairs(2500)?.into_iter().map(|(x, y, _)| (x, y)).collect();
    let five = vec![(97, 277), (176, 551), (263, 1104), (495, 503), (1244, 2472)];
    ensure(short == five, || format!("bound 2500: {short:?}"))?;
    if !long {
        return Ok("bound 2500 gives the 5 pairs; bound 10^5 skipped (opt in with --include-ignored)".into());
    }
    let started = Instant::now();
    let full: Vec<(u64, u64)> = cube_pairs(100_000)?.into_iter().map(|(x, y, _)| (x, y)).collect();
    let ten = vec![
        (97, 277),
        (176, 551),
        (263, 1104),
        (495, 503),
        (1244, 2472),
        (3986, 31706),
        (4505, 12781),
        (24047, 30599),
        (26642, 40684),
        (94743, 96255),
    ];
    ensure(full == ten, || format!("bound 10^5: {full:?}"))?;
    Ok(format!("bound 2500 gives the 5 pairs; bound 10^5 gives the 10 pairs in {:.1}s", started.elapsed().as_secs_f64()))
}

// ---------------------------------------------------------------- 7

fn c7_additive_squares(long: bool) -> Outcome {
    let bound = 1000u64;
    let got = additive_count(2, 2, 2, bound).map_err(|e| e.to_string())?;
    let p2 = |t: u64| t * (t + 1) * (t + 2);
    let mut naive = 0u64;
    for x in 1..=bound {
        for y in x..=bound {
            let v = p2(x) + p2(y);
            let r = (v as f64).sqrt() as u64;
            naive += u64::from((r.saturating_sub(1)..=r + 1).any(|s| s * s == v));
        }
    }
    ensure(got == naive, || format!("bound 1000: {got} vs naive {naive}"))?;
    if !long {
        return Ok(format!("bound 1000: {got} = naive; bound 10^5 skipped (opt in with --include-ignored)"));
    }
    let started = Instant::now();
    let full = additive_count(2, 2, 2, 100_000).map_err(|e| e.to_string())?;
    ensure(full == 619, || format!("bound 10^5: {full}"))?;
    Ok(format!("bound 1000: {got} = naive; bound 10^5: 619 in {:.1}s", started.elapsed().as_secs_f64()))
}

// ---------------------------------------------------------------- 8

fn tp(terms: &[(i64, usize)]) -> IntPoly {
    let deg = terms.iter().map(|t| t.1).max().unwrap();
    let mut c = vec![0i64; deg + 1];
    for &(v, k) in terms {
        c[k] += v;
    }
    IntPoly::from_i64s(&c)
}

fn c8_pell_families(_: bool) -> Outcome {
    for n in 0..=5 {
        let f = cubic_sum_solution(n).map_err(|e| format!("n={n}: {e}"))?;
        f.check().map_err(|e| e.to_string())?;
        for t in [-3i64, -1, 2, 5] {
            let (x, y, z) = (f.x.eval_i64(t), f.y.eval_i64(t), f.z.eval_i64(t));
            let p2 = |v: &BigInt| v * (v + 1) * (v + 2);
            ensure(&z * &z * &z == p2(&x) + p2(&y), || format!("n={n}, t={t}: z^3 != p2(x) + p2(y)"))?;
        }
    }
    let six = |p: IntPoly, k: i64| p.scale(&bi(k));
    let f1 = cubic_sum_solution(1).unwrap();
    let f2 = cubic_sum_solution(2).unwrap();
    let shown = [
        ("x1", &f1.x, six(tp(&[(1296, 9), (216, 6), (-9, 3), (-1, 0)]), 2)),
        ("y1", &f1.y, six(tp(&[(1296, 9), (-216, 6), (-9, 3), (1, 0)]), -2)),
        ("z1", &f1.z, six(tp(&[(432, 8), (-1, 2)]), 6)),
        ("x2", &f2.x, six(tp(&[(186624, 15), (31104, 12), (-2160, 9), (-216, 6), (5, 3)]), 6)),
        ("y2", &f2.y, six(tp(&[(186624, 15), (-31104, 12), (-2160, 9), (216, 6), (5, 3)]), -6)),
        ("z2", &f2.z, six(tp(&[(186624, 14), (-1296, 8), (1, 2)]), 6)),
    ];
    for (name, got, want) in &shown {
        ensure(*got == want, || format!("{name} = {got}, displayed {want}"))?;
    }
    Ok("n <= 5 verified; x1, y1, z1, x2, y2, z2 match".into())
}

// ---------------------------------------------------------------- 9

fn c9_congruences(_: bool) -> Outcome {
    let r = verify_congruences(8).map_err(|e| e.to_string())?;
    let bad: Vec<usize> = r.rows.iter().filter(|row| !row.passed()).map(|row| row.n).collect();
    ensure(r.passed(), || format!("rows failing: {bad:?}"))?;
    Ok(format!("n <= 8 pass; printed U_n closed form fails at n = {:?}", r.printed_u_form_failures))
}

// ---------------------------------------------------------------- 10

fn c10_repeated_roots(_: bool) -> Outcome {
    let s = multiple_root_scan(20).map_err(|e| e.to_string())?;
    ensure(s.verified(), || format!("counterexamples {:?}, missing {:?}", s.counterexamples, s.missing))?;
    let all_in_families = s.entries.iter().all(|e| e.family.is_some() && e.divisibility && e.cofactor_squarefree);
    ensure(all_in_families, || "an entry lies outside the three families".into())?;
    Ok(format!("{} tuples scanned, {} with repeated roots, all in the three families", s.tuples_scanned, s.entries.len()))
}

// ---------------------------------------------------------------- 11

fn c11_identities(_: bool) -> Outcome {
    let r = identity_suite(25).map_err(|e| e.to_string())?;
    let off: Vec<String> =
        r.checks.iter().filter(|c| c.holds != c.expected).map(|c| format!("{} (k={:?})", c.name, c.k)).collect();
    ensure(off.is_empty(), || format!("unexpected outcomes: {off:?}"))?;
    let corrected = r.checks.iter().filter(|c| c.name.contains("(x+4k+1)^2") && c.holds).count();
    ensure(corrected == 25, || format!("corrected identity holds for {corrected} of 25 k"))?;
    ensure(r.printed_form_failures == (1..=25).collect::<Vec<_>>(), || format!("printed form failures {:?}", r.printed_form_failures))?;
    Ok(format!("{} checks as expected; printed (x+1)^2 form fails for k = 1..25", r.checks.len()))
}

// ---------------------------------------------------------------- 12

fn c12_point_tables(_: bool) -> Outcome {
    let fixtures = bundled_fixtures();
    let report = point_table_verify(&fixtures).map_err(|e| e.to_string())?;
    let hits = positive_x_scan(4, 14, 0).map_err(|e| e.to_string())?;
    let found: BTreeSet<(i64, u32, usize, Vec<usize>)> = hits.iter().map(|h| (h.x, h.m, h.n, h.tuple.entries().to_vec())).collect();
    let mut rows = 0;
    let mut missing = Vec::new();
    for f in &fixtures {
        if let Fixture::PowerValue { m, n, tuple, x, anchor } = f {
            if anchor.starts_with("table:positive-x-solutions") {
                rows += 1;
                let key = (i64::try_from(x).unwrap(), *m, *n, tuple.clone());
                if !found.contains(&key) {
                    missing.push(key);
                }
            }
        }
    }
    let failures: Vec<String> = report.failures().map(|c| format!("{} {} ({})", c.anchor, c.point, c.detail)).collect();
    let scan = format!("positive_x_scan rediscovers {} of {rows} table rows", rows - missing.len());
    if failures.is_empty() && missing.is_empty() {
        Ok(format!("{} points verify; {scan}", report.checks.len()))
    } else {
        Err(format!(
            "{} of {} points fail: [{}]; {scan}{}",
            failures.len(),
            report.checks.len(),
            failures.join("; "),
            if missing.is_empty() { String::new() } else { format!(", missing {missing:?}") }
        ))
    }
}

// ---------------------------------------------------------------- 13

fn c13_disc_curves(_: bool) -> Outcome {
    let pts: BTreeSet<(BigRational, BigRational)> =
        rational_point_search(3, 10).map_err(|e| e.to_string())?.into_iter().map(|p| (p.a, p.b)).collect();
    let shown: Vec<(BigRational, BigRational)> = bundled_fixtures()
        .into_iter()
        .filter_map(|f| match f {
            Fixture::DiscPoint { i: 3, a, b, .. } => Some((a, b)),
            _ => None,
        })
        .collect();
    ensure(shown.len() == 6, || format!("{} displayed i=3 pairs", shown.len()))?;
    let missing: Vec<String> = shown.iter().filter(|p| !pts.contains(p)).map(|(a, b)| format!("({a}, {b})")).collect();
    ensure(missing.is_empty(), || format!("height-10 search misses {missing:?}"))?;
    let g1 = g1_check().map_err(|e| e.to_string())?;
    ensure(g1.passed && g1.multiplicity >= 1 && g1.cofactor_degree == (12, 12), || format!("{g1:?}"))?;
    for n in 1..=10u64 {
        let (x, z) = fibonacci_family(n).map_err(|e| e.to_string())?;
        let p4 = |v: &BigInt| (0..=4).fold(BigInt::from(1), |acc, i| acc * (v + i));
        ensure(&z * &z == p4(&x) + p4(&-&x), || format!("Fibonacci family n={n} fails"))?;
    }
    Ok(format!(
        "{} points at height 10 include the 6 shown; G1^{} divides, cofactor degree {:?}; Fibonacci n <= 10 verify",
        pts.len(),
        g1.multiplicity,
        g1.cofactor_degree
    ))
}

// ---------------------------------------------------------------- 14

fn cli(jobs: &str, args: &[&str]) -> Result<Vec<u8>, String> {
    let mut full = vec!["--jobs", jobs];
    full.extend_from_slice(args);
    let o = Command::new(env!("CARGO_BIN_EXE_runge-kit"))
        .args(&full)
        .env_remove("RUNGE_KIT_JOBS")
        .output()
        .map_err(|e| e.to_string())?;
    // Criterion 4 fails on content, not on the run, so any clean exit counts.
    ensure(o.status.success(), || format!("{args:?} exited with {:?}", o.status.code()))?;
    ensure(!o.stdout.is_empty(), || format!("{args:?} wrote nothing"))?;
    Ok(o.stdout)
}

fn c14_determinism(_: bool) -> Outcome {
    let runs: [(&str, &[&str]); 3] = [
        ("1", &["batch", "--m", "2", "--n", "5"]),
        ("4", &["search", "bounded", "--m", "5", "--n", "3", "--x-bound", "10000"]),
        ("6", &["search", "additive", "--arities", "2,2", "--m", "3", "--bound", "2500", "--exclude-trivial", "--strict"]),
    ];
    let mut sizes = Vec::new();
    for (id, args) in runs {
        let one = cli("1", args)?;
        let eight = cli("8", args)?;
        ensure(one == eight, || format!("criterion {id} output differs between 1 and 8 workers"))?;
        sizes.push(format!("{id}: {} bytes", one.len()));
    }
    Ok(format!("identical JSONL ({})", sizes.join(", ")))
}
