//! Involutive bases of an ideal over Q under several divisions. All of them
//! are Gröbner bases of the same ideal, so their reduced forms agree.
//!
//! `cargo run --example involutive_basis`

use cisys::cli::{parse_poly, Ring};
use cisys::involution::{gbi, nm_set, BoxOrientation, DivisionSpec};
use cisys::verify::{is_minimal_involutive_basis, reference_groebner};
use cisys::{Exponent, MonomialOrdering, QPoly};

fn main() {
    let vars: Vec<String> = ["x", "y", "z"].map(String::from).to_vec();
    let xord = MonomialOrdering::lex(3);
    let aord = MonomialOrdering::lex(0);
    let ring = Ring { params: &[], vars: &vars, xord: &xord, aord: &aord };
    let f: Vec<QPoly> = ["x^2 - y*z", "x*y - z^2", "y^2 - x*z"]
        .iter()
        .map(|s| parse_poly(s, &ring).unwrap().to_qpoly().unwrap())
        .collect();

    let divisions = [
        ("janet", DivisionSpec::janet(3)),
        ("janet, reversed", DivisionSpec::janet_reversed(3)),
        ("pairwise z,y,x / degrevlex inverse", DivisionSpec::new(vec![2, 1, 0], MonomialOrdering::degrevlex(3), BoxOrientation::Inverse).unwrap()),
    ];
    let reduced = reference_groebner(&f, &xord);
    for (name, d) in &divisions {
        let g = gbi(&f, d);
        let lms: Vec<Exponent> = g.iter().map(|p| p.lm().unwrap().clone()).collect();
        println!("{name}: {} elements, minimal involutive: {}", g.len(), is_minimal_involutive_basis(&g, d));
        for (p, u) in g.iter().zip(&lms) {
            let nm = nm_set(u, &lms, d).unwrap();
            let nm: Vec<&str> = nm.iter().map(|i| vars[i].as_str()).collect();
            println!("  {:<24} nonmultiplicative {{{}}}", p.fmt_with(&vars), nm.join(", "));
        }
        assert_eq!(reference_groebner(&g, &xord), reduced);
    }
}
