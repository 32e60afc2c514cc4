//! The exact layer on its own: products of consecutive integers, square-free
//! decomposition, discriminants, root hulls and perfect powers.

use num_bigint::BigInt;
use runge_kit::exact::{
    discriminant_int, integer_roots, perfect_power, power_roots, product_poly, rational_roots, real_root_hull,
    squarefree_decomposition, IntPoly,
};

fn main() -> runge_kit::Result<()> {
    let p4 = product_poly(4);
    println!("p_4(x) = {p4}");
    println!("p_4(1) = {}", p4.eval(&BigInt::from(1)));

    // (x + 1)^2 (x - 2)^3 (x + 5)
    let f = &(&IntPoly::from_i64s(&[1, 1]).pow(2) * &IntPoly::from_i64s(&[-2, 1]).pow(3)) * &IntPoly::from_i64s(&[5, 1]);
    println!("\nf = {f}");
    let d = squarefree_decomposition(&f)?;
    for (factor, k) in &d.factors {
        println!("  ({factor})^{k}");
    }
    println!("  integer roots: {:?}", integer_roots(&f));
    println!("  discriminant:  {}", discriminant_int(&f)?);
    println!("  root hull:     {}", real_root_hull(&f)?);

    println!();
    let g = IntPoly::from_i64s(&[-1, 0, 6]); // 6x^2 - 1 has no rational roots
    let h = IntPoly::from_i64s(&[-2, 1, 3]); // 3x^2 + x - 2 = (3x - 2)(x + 1)
    for p in [&g, &h] {
        let roots: Vec<String> = rational_roots(p).iter().map(|(r, k)| format!("{r} (multiplicity {k})")).collect();
        println!("rational roots of {p}: {roots:?}");
    }

    let big = BigInt::from(3).pow(40);
    println!("\n3^40 = {big}");
    println!("  as a 5th power: {:?}", perfect_power(&big, 5));
    println!("  all exponents up to 40: {:?}", power_roots(&big, 40).iter().map(|(m, _)| *m).collect::<Vec<_>>());
    Ok(())
}
