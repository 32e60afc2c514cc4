//! Perfect powers among g_T(x) at small x, and the brute-force fallback for
//! exponents where Runge's method does not apply.

use runge_kit::search::{bounded_search, negative_x_scan, positive_x_scan};

fn main() -> runge_kit::Result<()> {
    println!("positive x <= 4, n <= 10:");
    for h in positive_x_scan(4, 10, 0)? {
        println!("  g_T({}) = {}^{}  [n={}, T={}]", h.x, h.y, h.m, h.n, h.tuple);
    }

    println!("\nnegative x >= -30 with a perfect power for some n <= 8:");
    for mem in negative_x_scan(-30, 8, 0)? {
        let w = &mem.witnesses[0];
        println!(
            "  x={:>4}  witnesses: {:<4} e.g. n={} T={} gives {}^{}",
            mem.x,
            mem.witnesses.len(),
            w.n,
            w.tuple,
            w.y,
            w.m
        );
    }

    println!("\ny^5 = g_T(x) with y != 0, n = 3, |x| <= 10^4:");
    for s in bounded_search(5, 3, 10_000)?.iter().filter(|s| s.y.bits() > 0) {
        let (n, t) = s.origin.as_ref().expect("family origin");
        println!("  ({}, {})  n={n} T={t}", s.x, s.y);
    }
    Ok(())
}
