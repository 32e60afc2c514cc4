//! Pell streams and the solution families built from them.

use num_bigint::BigInt;
use runge_kit::pell::{
    conic_to_pell, cubic_sum_solution, fibonacci_family, odd_m_family, p3_neighbor_solutions, verify_congruences,
    ASequence, PellStream,
};

fn main() -> runge_kit::Result<()> {
    let mut s = PellStream::from_i64(2, 1, (3, 2), (3, 2))?;
    println!("X^2 - 2Z^2 = 1: {:?}", s.take(5)?.iter().map(|(x, z)| format!("({x}, {z})")).collect::<Vec<_>>());

    println!("\nz^3 = p_2(x) + p_2(y) over Z[t]:");
    for n in 0..2 {
        let f = cubic_sum_solution(n)?;
        println!("  n={n}: x = {}", f.x.display_in("t"));
        println!("       y = {}", f.y.display_in("t"));
        println!("       z = {}", f.z.display_in("t"));
    }

    println!("\nA_n: {:?}", ASequence::default().take(6).collect::<Vec<_>>());
    let r = verify_congruences(6)?;
    println!("congruences for n <= 6: {}", if r.passed() { "hold" } else { "FAIL" });
    println!("printed U_n closed form fails at n = {:?}", r.printed_u_form_failures);

    println!("\nz^2 = p_4(x) + p_4(-x) from Fibonacci and Lucas numbers:");
    for n in 1..=5 {
        let (x, z) = fibonacci_family(n)?;
        println!("  x = {x}, z = {z}");
    }

    println!("\nz^m = p_1(x) + p_1(y):");
    for m in [3, 5, 7] {
        let (x, y, z) = odd_m_family(m, &BigInt::from(3))?;
        println!("  m={m}, t=3: ({x}, {y}, {z})");
    }

    let c = conic_to_pell(&2.into(), &41.into(), &30.into(), &1.into())?;
    println!("\nconic reduced to X^2 - {} V^2 = {}", c.a, c.b);
    println!("z^2 = p_3(x) + p_3(x+1):");
    for (x, z) in p3_neighbor_solutions(5)? {
        println!("  x = {x}, z = {z}");
    }
    Ok(())
}
