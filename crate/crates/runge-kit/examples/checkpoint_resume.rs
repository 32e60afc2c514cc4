//! An interrupted search picked up from its checkpoint produces the same
//! bytes as a run that was never interrupted.
//!
//! cargo run --release --example checkpoint_resume -- /tmp/ckpt-demo

use std::path::PathBuf;

use runge_kit::search::{run_with_checkpoint, Exclusions, RunOptions, SearchTask, TaskKind};

fn main() -> runge_kit::Result<()> {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| std::env::temp_dir().join("runge-kit-ckpt-demo"));
    std::fs::create_dir_all(&dir)?;
    let task = SearchTask::new(TaskKind::AdditiveTwoVar { a1: 2, a2: 2, m: 3, bound: 3000, exclusions: Exclusions::NONTRIVIAL })?;
    println!("task {}", task.id);

    let mut once = RunOptions::new(dir.join("once.jsonl"), dir.join("once.ckpt.json"));
    once.block = 100;
    let full = run_with_checkpoint(&task, &once)?;
    println!("one shot:  {} records, digest {}", full.count, &full.digest[..16]);

    let mut parts = RunOptions::new(dir.join("parts.jsonl"), dir.join("parts.ckpt.json"));
    parts.block = 100;
    parts.stop_after = Some(700);
    let mut r = run_with_checkpoint(&task, &parts)?;
    println!("session 1: stopped after x = {:?}, {} records so far", r.cursor, r.count);
    parts.resume = true;
    let mut session = 1;
    while !r.complete {
        session += 1;
        r = run_with_checkpoint(&task, &parts)?;
        println!("session {session}: cursor {:?}, {} records", r.cursor, r.count);
    }

    let a = std::fs::read(&once.output)?;
    let b = std::fs::read(&parts.output)?;
    println!("identical output: {}", a == b);
    Ok(())
}
