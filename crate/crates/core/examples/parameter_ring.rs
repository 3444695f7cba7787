//! Operations on condition polynomials in Q[a, b]: square-free factor sets,
//! reduced Gröbner bases, radical membership and specification
//! normalization.
//!
//! `cargo run --example parameter_ring`

use cisys::engine::{canspec, decide, Decision, Specification};
use cisys::paramring::{buchberger_reduced, facvar, gcd, radical_member};
use cisys::{MonomialOrdering, QPoly};

fn main() {
    let ord = MonomialOrdering::lex(2);
    let names: Vec<String> = vec!["a".into(), "b".into()];
    let show = |p: &QPoly| p.fmt_with(&names);
    let list = |ps: &[QPoly]| ps.iter().map(&show).collect::<Vec<_>>().join(", ");
    let a = QPoly::var(&ord, 0);
    let b = QPoly::var(&ord, 1);
    let one = QPoly::one(&ord);

    // a^3 b^2 (a - b)^2 (a + 1)
    let p = a.pow(3).mul(&b.pow(2)).mul(&a.sub(&b).pow(2)).mul(&a.add(&one));
    println!("facvar({}) = {{{}}}", show(&p), list(&facvar(&p).unwrap()));
    println!("gcd = {}", show(&gcd(&p, &a.pow(2).sub(&b.pow(2)))));

    let n = buchberger_reduced(&[a.pow(2).sub(&b), a.mul(&b).sub(&one)], &ord);
    println!("N = {{{}}}", list(&n));
    for h in [a.pow(3).sub(&one), a.sub(&b), b.pow(3).sub(&one)] {
        println!("  {} in radical(N): {}", show(&h), radical_member(&h, &n));
    }

    let spec = Specification::new(vec![a.mul(&b)], vec![a.clone()]);
    let (ok, s) = canspec(&spec, &ord);
    println!("canspec(N = {{a*b}}, W = {{a}}) -> consistent {ok}, N = {{{}}}, W = {{{}}}", list(&s.null), list(&s.nonnull));
    for c in [a.add(&one), b.add(&one), a.mul(&b)] {
        let d = match decide(&c, &s.null, &s.nonnull) {
            Decision::Null => "null".to_string(),
            Decision::Nonnull => "nonnull".to_string(),
            Decision::Undecided(f) => format!("undecided, branch on {}", show(&f)),
        };
        println!("  {}: {d}", show(&c));
    }
}
