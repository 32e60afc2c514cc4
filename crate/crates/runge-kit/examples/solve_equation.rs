//! Complete integral solutions of y^m = f(x) by Runge's method.
//!
//! cargo run --release --example solve_equation

use runge_kit::exact::IntPoly;
use runge_kit::family::{EquationInstance, Tuple};
use runge_kit::runge::{runge_solve, runge_solve_with, SolveOptions};

fn show(title: &str, report: &runge_kit::runge::EquationReport) {
    println!("{title}");
    println!("  D = {}, Q = {}", report.root_part.d, report.root_part.q);
    println!("  region {} ({} subequations)", report.used.region, report.used.subequation_count);
    for s in &report.solutions {
        println!("  ({}, {})  via {:?}", s.x, s.y, s.channel);
    }
}

fn main() -> runge_kit::Result<()> {
    // y^2 = g_(3)(x) = p_5(x) + p_3(x)
    let inst = EquationInstance::family(2, 5, Tuple::new(vec![3], 5)?)?;
    let report = runge_solve_with(&inst, SolveOptions::default())?;
    show(&inst.to_string(), &report);

    // y^2 = x^4 + 2x^3 + 2x^2 + 7, where (x^2 + x)^2 is close
    let f = IntPoly::from_i64s(&[7, 0, 2, 2, 1]);
    show(&format!("y^2 = {f}"), &runge_solve(2, &f)?);

    // y^3 = p_5(x) + p_0(x) + p_2(x): gcd(3, 6) = 3
    let inst = EquationInstance::family(3, 5, Tuple::new(vec![0, 2], 5)?)?;
    show(&inst.to_string(), &runge_solve_with(&inst, SolveOptions::default())?);

    // gcd(3, 4) = 1: Runge's method does not apply
    let inst = EquationInstance::family(3, 3, Tuple::new(vec![0, 1], 3)?)?;
    match runge_solve_with(&inst, SolveOptions::default()) {
        Err(e) => println!("{inst}: {e} (exit code {})", e.exit_code()),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
