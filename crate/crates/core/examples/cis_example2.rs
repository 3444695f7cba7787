//! Comprehensive involutive system of `{a x^2, b y^2}` with cell table.
//!
//! `cargo run --example cis_example2`

use cisys::cli::{compute, parse_problem, render_report};

fn main() {
    let p = parse_problem(include_str!("problems/example2.txt")).expect("valid problem");
    let (cells, stats) = compute(&p, true, None);
    print!("{}", render_report(&p, &cells, stats, true).to_text());

    let names = p.names();
    for (i, c) in cells.iter().enumerate() {
        let [n, w] = names.spec(&c.spec);
        println!("cell {}: N = {n}, W = {w}, {} basis element(s)", i + 1, c.basis.len());
    }
}
