//! Prints every subalgorithm call and return made while computing the system
//! of a problem file (default: the bundled `{a x^2, b y^2}`).
//!
//! `cargo run --example trace [problem-file]`

use cisys::cli::{compute, parse_problem};
use cisys::engine::{TraceEvent, TraceKind};

fn main() {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}")),
        None => include_str!("problems/example2.txt").to_string(),
    };
    let p = parse_problem(&text).unwrap_or_else(|e| panic!("{e}"));
    let mut calls = 0;
    let mut sink = |e: &TraceEvent| {
        calls += usize::from(e.kind == TraceKind::Call);
        println!("{e}");
    };
    let (cells, _) = compute(&p, true, Some(&mut sink));
    println!("{calls} calls, {} cells", cells.len());
}
