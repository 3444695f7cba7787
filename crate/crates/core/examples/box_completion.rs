//! Completion of a minimal Gröbner basis by the multiples needed to make it
//! involutive, without any reduction.
//!
//! `cargo run --example box_completion`

use cisys::cli::parse_problem;
use cisys::involution::prop1_completion;
use cisys::polyalg::rat;
use cisys::verify::{is_involutive_basis, specialize};

fn main() {
    let p = parse_problem(include_str!("problems/example2.txt")).expect("valid problem");
    let names = p.names();
    let g = prop1_completion(&p.generators, &p.division).expect("minimal input");
    println!("input      {}", names.polys(&p.generators));
    println!("completion {}", names.polys(&g));

    // away from a = 0 and b = 0 the completion is an involutive basis
    let pt = [rat(3), rat(-2)];
    let mut spec: Vec<_> = g.iter().map(|f| specialize(f, &pt).monic()).collect();
    spec.sort_by(|a, b| p.order_vars.compare(b.lm().unwrap(), a.lm().unwrap()));
    spec.dedup();
    println!("involutive at a = 3, b = -2: {}", is_involutive_basis(&spec, &p.division));

    // a basis that is not minimal is rejected
    let mut redundant = p.generators.clone();
    redundant.push(p.generators[0].mul_var(1));
    match prop1_completion(&redundant, &p.division) {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("rejected: {e}"),
    }
}
