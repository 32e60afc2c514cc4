//! Structure of g_T: genus, repeated roots and the factorization lemma.

use runge_kit::family::{cofactor_h, enumerate_tuples, g_poly, hyperelliptic_genus, lemma3_verify, multiple_root_scan, Tuple};

fn main() -> runge_kit::Result<()> {
    let n = 5;
    println!("A_{n} has {} tuples", enumerate_tuples(n).count());
    for t in enumerate_tuples(n).take(6) {
        let g = g_poly(n, &t)?;
        println!("  T={t:<12} genus {}  g_T = {g}", hyperelliptic_genus(&g)?.genus);
    }

    let t = Tuple::new(vec![1, 3, 5], 7)?;
    let c = cofactor_h(7, &t)?;
    println!("\nn=7, T={t}: g_T = p_{} * h_T with h_T = {}", t.first(), c.h);

    let r = lemma3_verify(7)?;
    println!("\nfactorization checks, n=7: {} tuples, {} failures", r.tuples_checked, r.failures.len());
    for (t, a, b) in &r.mod4_residues {
        println!("  T={t}: h_T(0) = {a} mod 4, h_T(-1) = {b} mod 4");
    }

    let scan = multiple_root_scan(12)?;
    println!("\nrepeated roots for n <= 12 ({} tuples scanned):", scan.tuples_scanned);
    for e in &scan.entries {
        println!("  n={:>2} T={:<10} {:?}", e.n, e.tuple.to_string(), e.family);
    }
    println!("matches the three families: {}", scan.verified());
    Ok(())
}
