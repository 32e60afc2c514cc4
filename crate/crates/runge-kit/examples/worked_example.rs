//! The degree-14 instance n = 13, T = (2,3,4,5,7,9,10,12), traced through the
//! interval reduction.

use runge_kit::family::{g_poly, Tuple};
use runge_kit::runge::{approx, reduction_schedule, round_significant, HullMode, RungeSetup};

fn main() -> runge_kit::Result<()> {
    let t = Tuple::new(vec![2, 3, 4, 5, 7, 9, 10, 12], 13)?;
    let g = g_poly(13, &t)?;
    let setup = RungeSetup::new(&g, 2)?;
    println!("g_T = {g}");
    println!("P_T = {}", setup.rp.q);
    println!("D   = {}", setup.rp.d);

    let r = reduction_schedule(&setup, HullMode::RootBound)?;
    let init = &r.initial;
    println!("\nk1 = k2 = 1");
    println!("  I_a = {}   upper end ~ {:.4e}", init.i1, approx(init.i1.hi().expect("nonempty")));
    println!("  I_b = {}   lower end ~ {}", init.i2, round_significant(init.i2.lo().expect("nonempty"), 3));
    println!("  subequations: {}", init.subequation_count);

    println!("\nsteps s1 = {}, s2 = {}", r.step1, r.step2);
    println!("k1 = {} after {} steps, k2 = {} after {} steps", r.last.k1, r.iterations1, r.last.k2, r.iterations2);
    println!("  I_1 = {}", r.last.i1);
    println!("  I_2 = {}", r.last.i2);
    println!("  subequations: {}", r.last.subequation_count);
    Ok(())
}
