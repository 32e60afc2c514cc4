//! Pairs (a, b) for which p_i(x) + p_i(ax + b) has a repeated root.
//!
//! cargo run --release --example disc_curves -- 10

use num_traits::One;
use runge_kit::curves::{disc_in_b, g1_check, involution_failures, rational_point_search};
use runge_kit::exact::rat;

fn main() -> runge_kit::Result<()> {
    let h: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);

    let d = disc_in_b(3, &rat(3, 1))?;
    println!("i=3, a=3: Disc_x as a polynomial in b of degree {}", d.poly.degree().unwrap_or(0));

    let pts = rational_point_search(3, h)?;
    println!("\ni=3, height <= {h}: {} points", pts.len());
    for p in &pts {
        println!("  ({}, {}){}", p.a, p.b, if p.degenerate_branch { "  [leading coefficient vanishes]" } else { "" });
    }
    let bad = involution_failures(&pts)?;
    println!("(a, b) -> (1/a, -b/a) stays on the curve for every point with a != 0: {}", bad.is_empty());

    let pts = rational_point_search(4, 4)?;
    println!("\ni=4, height <= 4: {} points", pts.len());
    for p in pts.iter().filter(|p| !p.a.is_one()) {
        println!("  ({}, {})", p.a, p.b);
    }

    let g1 = g1_check()?;
    println!(
        "\ni=4 discriminant: degree {:?}, G1^{} divides it, cofactor degree {:?}",
        g1.disc_degree, g1.multiplicity, g1.cofactor_degree
    );
    Ok(())
}
