//! Every displayed point from the bundled fixture file, checked on its curve.

use runge_kit::curves::{bundled_fixtures, point_table_verify};

fn main() -> runge_kit::Result<()> {
    let report = point_table_verify(&bundled_fixtures())?;
    for (anchor, (n, ok)) in &report.by_anchor {
        println!("{ok:>3}/{n:<3} {anchor}");
    }
    for note in &report.notes {
        println!("note: {note}");
    }
    println!();
    for c in report.checks.iter().filter(|c| c.detail.contains("Y/Z^3")).take(3) {
        println!("weighted: {} {}", c.point, c.detail);
    }
    for c in report.failures() {
        println!("FAIL {} {}: {}", c.anchor, c.point, c.detail);
    }
    Ok(())
}
