//! Nontrivial solutions of z^3 = p_2(x) + p_2(y), and the number of
//! solutions of z^2 = p_2(x) + p_2(y).
//!
//! cargo run --release --example additive_search -- 2500

use std::time::Instant;

use runge_kit::search::{additive_count, additive_search, Exclusions};

fn main() -> runge_kit::Result<()> {
    let bound: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2500);

    let start = Instant::now();
    let cubes = additive_search(2, 2, 3, bound, Exclusions::NONTRIVIAL)?;
    println!("z^3 = p2(x) + p2(y), 0 < x < y <= {bound}, trivial family removed:");
    for s in &cubes {
        println!("  ({}, {})  z = {}", s.x, s.y, s.z);
    }
    println!("  [{:.1?}]", start.elapsed());

    let start = Instant::now();
    let squares = additive_count(2, 2, 2, bound)?;
    println!("z^2 = p2(x) + p2(y), 1 <= x <= y <= {bound}: {squares} solutions [{:.1?}]", start.elapsed());
    Ok(())
}
