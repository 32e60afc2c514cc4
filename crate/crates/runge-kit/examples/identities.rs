//! Polynomial identities among the p_a, checked symbolically.

use runge_kit::curves::identity_suite;

fn main() -> runge_kit::Result<()> {
    let r = identity_suite(3)?;
    for c in &r.checks {
        let k = c.k.map(|k| format!(" k={k}")).unwrap_or_default();
        let mark = if c.holds == c.expected { "ok " } else { "BAD" };
        println!("{mark} {}{k}: holds = {}", c.name, c.holds);
    }
    println!("\nprinted (x+1)^2 form fails at k = {:?}", r.printed_form_failures);
    println!("all as expected: {}", r.passed());
    Ok(())
}
