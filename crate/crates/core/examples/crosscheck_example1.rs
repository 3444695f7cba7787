//! Computes the system for `{a x^2 y - y^3, b x + y^2}` and checks each cell
//! at sampled parameter values: the specialized basis must be a minimal
//! involutive basis generating the specialized ideal.
//!
//! `cargo run --example crosscheck_example1`

use cisys::cli::{compute, parse_problem, verify_cells};
use cisys::polyalg::rat;
use cisys::verify::{reference_groebner, satisfies_spec, specialize};

fn main() {
    let p = parse_problem(include_str!("problems/example1.txt")).expect("valid problem");
    let (cells, _) = compute(&p, true, None);
    let names = p.names();
    for (i, c) in cells.iter().enumerate() {
        let [n, w] = names.spec(&c.spec);
        println!("{}: {} with N = {n}, W = {w}", i + 1, names.polys(&c.basis));
    }

    let report = verify_cells(&p, &cells, 20, 1);
    print!("{}", report.to_text());

    // one concrete point: a = 0, b = 2
    let pt = [rat(0), rat(2)];
    let cell = cells.iter().find(|c| satisfies_spec(&pt, &c.spec)).expect("cells cover the parameter space");
    let spec: Vec<_> = cell.basis.iter().map(|g| specialize(g, &pt)).collect();
    let gb = reference_groebner(&spec, &p.order_vars);
    let shown: Vec<String> = gb.iter().map(|g| g.fmt_with(&p.vars)).collect();
    println!("reduced Groebner basis at a = 0, b = 2: {{{}}}", shown.join(", "));
}
