//! Every equation y^2 = g_T(x) with T in A_5, written as JSON lines.
//!
//! cargo run --release --example batch_a5 > a5.jsonl

use std::io::Write;

use runge_kit::records::{write_jsonl, RecordKind, ResultRecord};
use runge_kit::runge::{batch_solve, SolveOptions};

fn main() -> runge_kit::Result<()> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let mut nontrivial = Vec::new();
    batch_solve(2, 5, 0..31, SolveOptions::default(), |(t, r)| {
        let report = r.map_err(runge_kit::Error::inconsistency)?;
        for s in report.solutions.iter().filter(|s| s.y.sign() != num_bigint::Sign::NoSign) {
            nontrivial.push(format!("T={t}: ({}, {})", s.x, s.y));
        }
        let rec = ResultRecord::new(RecordKind::Report, format!("runge/batch:m=2,n=5,T={t}"), &report)?;
        write_jsonl(&mut out, &rec)
    })?;
    out.flush()?;
    eprintln!("solutions with y != 0:");
    for line in nontrivial {
        eprintln!("  {line}");
    }
    Ok(())
}
