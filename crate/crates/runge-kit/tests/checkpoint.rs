//! Interrupted and resumed searches must write exactly what a single run writes.

use std::fs;
use std::io::Write;
use std::path::Path;

use runge_kit::search::{run_with_checkpoint, Checkpoint, Exclusions, RunOptions, SearchTask, TaskKind};
use runge_kit::Error;

fn tasks() -> Vec<SearchTask> {
    [
        TaskKind::AdditiveTwoVar { a1: 2, a2: 2, m: 3, bound: 1300, exclusions: Exclusions::NONTRIVIAL },
        TaskKind::AdditiveTwoVar { a1: 2, a2: 2, m: 2, bound: 600, exclusions: Exclusions::NONE },
        TaskKind::NegativeX { x_min: -60, n_max: 8, m_max: 0 },
        TaskKind::PositiveX { x_max: 4, n_max: 9, m_max: 0 },
        TaskKind::BoundedEquation { m: 5, n: 3, x_bound: 300 },
    ]
    .into_iter()
    .map(|k| SearchTask::new(k).unwrap())
    .collect()
}

fn options(dir: &Path, tag: &str) -> RunOptions {
    let mut o = RunOptions::new(dir.join(format!("{tag}.jsonl")), dir.join(format!("{tag}.ckpt.json")));
    o.block = 4;
    o
}

fn one_shot(task: &SearchTask, dir: &Path) -> Vec<u8> {
    let o = options(dir, "whole");
    let r = run_with_checkpoint(task, &o).unwrap();
    assert!(r.complete);
    fs::read(&o.output).unwrap()
}

/// Runs `task` in slices of `step` outer indices, resuming each time.
fn in_slices(task: &SearchTask, dir: &Path, step: u64) -> (Vec<u8>, usize) {
    let mut o = options(dir, "sliced");
    o.block = 1;
    o.stop_after = Some(step);
    let mut sessions = 0;
    loop {
        let r = run_with_checkpoint(task, &o).unwrap();
        sessions += 1;
        o.resume = true;
        if r.complete {
            return (fs::read(&o.output).unwrap(), sessions);
        }
    }
}

#[test]
fn resumed_output_is_byte_identical() {
    for task in tasks() {
        let dir = tempfile::tempdir().unwrap();
        let whole = one_shot(&task, dir.path());
        let (lo, hi) = task.outer_range();
        let span = (hi - lo + 1) as u64;
        let (sliced, sessions) = in_slices(&task, dir.path(), (span / 5).max(1));
        assert!(sessions > 1, "{}", task.id);
        assert_eq!(sliced, whole, "{}", task.id);
    }
}

#[test]
fn partial_tail_after_a_crash_is_discarded() {
    let task = &tasks()[0];
    let dir = tempfile::tempdir().unwrap();
    let whole = one_shot(task, dir.path());
    let mut o = options(dir.path(), "crash");
    o.stop_after = Some(300);
    run_with_checkpoint(task, &o).unwrap();
    // Bytes written after the last checkpoint, as if the process died mid-line.
    fs::OpenOptions::new().append(true).open(&o.output).unwrap().write_all(b"{\"kind\":\"solu").unwrap();
    o.stop_after = None;
    o.resume = true;
    let r = run_with_checkpoint(task, &o).unwrap();
    assert!(r.complete && r.resumed);
    assert_eq!(fs::read(&o.output).unwrap(), whole);
}

#[test]
fn resuming_a_finished_run_changes_nothing() {
    let task = &tasks()[2];
    let dir = tempfile::tempdir().unwrap();
    let whole = one_shot(task, dir.path());
    let mut o = options(dir.path(), "whole");
    o.resume = true;
    let r = run_with_checkpoint(task, &o).unwrap();
    assert!(r.complete);
    assert_eq!(fs::read(&o.output).unwrap(), whole);
}

fn interrupted(dir: &Path) -> (SearchTask, RunOptions) {
    let task = tasks()[1].clone();
    let mut o = options(dir, "bad");
    o.stop_after = Some(100);
    run_with_checkpoint(&task, &o).unwrap();
    o.resume = true;
    o.stop_after = None;
    (task, o)
}

#[test]
fn corrupt_checkpoint_is_refused() {
    let dir = tempfile::tempdir().unwrap();
    let (task, o) = interrupted(dir.path());
    fs::write(&o.checkpoint, "{\"task_id\": 7").unwrap();
    assert!(matches!(run_with_checkpoint(&task, &o), Err(Error::Checkpoint(_))));
}

#[test]
fn missing_checkpoint_is_refused() {
    let dir = tempfile::tempdir().unwrap();
    let (task, o) = interrupted(dir.path());
    fs::remove_file(&o.checkpoint).unwrap();
    assert!(matches!(run_with_checkpoint(&task, &o), Err(Error::Checkpoint(_))));
}

#[test]
fn edited_output_is_refused() {
    let dir = tempfile::tempdir().unwrap();
    let (task, o) = interrupted(dir.path());
    let mut bytes = fs::read(&o.output).unwrap();
    assert!(!bytes.is_empty());
    let k = bytes.iter().position(|b| b.is_ascii_digit()).unwrap();
    bytes[k] = if bytes[k] == b'9' { b'8' } else { bytes[k] + 1 };
    fs::write(&o.output, bytes).unwrap();
    assert!(matches!(run_with_checkpoint(&task, &o), Err(Error::Checkpoint(_))));
}

#[test]
fn truncated_output_is_refused() {
    let dir = tempfile::tempdir().unwrap();
    let (task, o) = interrupted(dir.path());
    let len = fs::metadata(&o.output).unwrap().len();
    fs::OpenOptions::new().write(true).open(&o.output).unwrap().set_len(len / 2).unwrap();
    assert!(matches!(run_with_checkpoint(&task, &o), Err(Error::Checkpoint(_))));
}

#[test]
fn checkpoint_for_other_parameters_is_refused() {
    let dir = tempfile::tempdir().unwrap();
    let (_, o) = interrupted(dir.path());
    let other = SearchTask::new(TaskKind::AdditiveTwoVar {
        a1: 2,
        a2: 2,
        m: 2,
        bound: 601,
        exclusions: Exclusions::NONE,
    })
    .unwrap();
    assert!(matches!(run_with_checkpoint(&other, &o), Err(Error::Checkpoint(_))));

    // Same id, different stored parameters.
    let (task, _) = interrupted(dir.path());
    let mut cp = Checkpoint::load(&o.checkpoint).unwrap();
    cp.task = TaskKind::NegativeX { x_min: -5, n_max: 3, m_max: 3 };
    cp.store(&o.checkpoint).unwrap();
    assert!(matches!(run_with_checkpoint(&task, &o), Err(Error::Checkpoint(_))));
}

#[test]
fn worker_count_does_not_change_output() {
    for task in tasks() {
        let mut outputs = Vec::new();
        for threads in [1, 2, 8] {
            let dir = tempfile::tempdir().unwrap();
            let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
            let bytes = pool.install(|| one_shot(&task, dir.path()));
            outputs.push(bytes);
        }
        assert!(outputs.windows(2).all(|w| w[0] == w[1]), "{}", task.id);
    }
}
