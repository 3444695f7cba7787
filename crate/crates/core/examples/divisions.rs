//! Nonmultiplicative variables under pairwise divisions, compared with the
//! classical definition of Janet's division.
//!
//! `cargo run --example divisions`

use cisys::involution::{nm_set, BoxOrientation, DivisionSpec, VarSet};
use cisys::verify::janet_classical;
use cisys::{Exponent, MonomialOrdering};

const VARS: [&str; 3] = ["x", "y", "z"];

fn show(u: &Exponent) -> String {
    u.fmt_with(&VARS.map(String::from))
}

fn vars(s: VarSet) -> String {
    let v: Vec<&str> = s.iter().map(|i| VARS[i]).collect();
    format!("{{{}}}", v.join(", "))
}

fn main() {
    let set: Vec<Exponent> = [[2, 0, 0], [1, 1, 0], [0, 2, 1], [1, 0, 2], [0, 0, 3]].map(|e| Exponent::new(e.to_vec())).to_vec();
    let classical = janet_classical(&set);
    let divisions = [
        ("janet", DivisionSpec::janet(3)),
        ("janet reversed", DivisionSpec::janet_reversed(3)),
        ("pair y,z,x degrevlex inverse", DivisionSpec::new(vec![1, 2, 0], MonomialOrdering::degrevlex(3), BoxOrientation::Inverse).unwrap()),
    ];
    let mut head = format!("{:<8} {:<10}", "u", "classical");
    for (name, _) in &divisions {
        head += &format!(" {name:<28}");
    }
    println!("{}", head.trim_end());
    for (u, c) in set.iter().zip(&classical) {
        let mut row = format!("{:<8} {:<10}", show(u), vars(*c));
        for (_, d) in &divisions {
            row += &format!(" {:<28}", vars(nm_set(u, &set, d).unwrap()));
        }
        println!("{}", row.trim_end());
    }
}
