#![allow(dead_code)]

mod run;
#[allow(unused_imports)]
pub use run::{fixture, run_cli};

use cisys::cli::{parse_problem, ProblemFile};
use cisys::polyalg::{rat, rat_frac};
use cisys::Rational;
use proptest::prelude::*;

pub fn problem(text: &str) -> ProblemFile {
    parse_problem(text).unwrap_or_else(|e| panic!("{e}\n{text}"))
}

pub fn example1() -> ProblemFile {
    problem(include_str!("../../examples/problems/example1.txt"))
}

pub fn example2() -> ProblemFile {
    problem(include_str!("../../examples/problems/example2.txt"))
}

/// Coordinates biased towards zero and small values so degenerate cells get hit.
pub fn grid_value(k: u8) -> Rational {
    match k % 8 {
        0 | 1 => rat(0),
        2 => rat(1),
        3 => rat(-1),
        4 => rat(2),
        5 => rat(-3),
        6 => rat_frac(1, 2),
        _ => rat_frac(-2, 3),
    }
}

const COEFFS: &[&str] = &["1", "2", "-1", "a", "b", "a - b", "a + 1"];

/// One term `coeff*x^i*y^j`.
pub fn term() -> impl Strategy<Value = String> {
    (0..COEFFS.len(), 0u32..3, 0u32..3).prop_map(|(c, i, j)| format!("({})*x^{i}*y^{j}", COEFFS[c]))
}

pub fn generator() -> impl Strategy<Value = String> {
    proptest::collection::vec(term(), 1..4).prop_map(|ts| ts.join(" + "))
}

/// Problem text with two parameters and two variables.
pub fn param_problem() -> impl Strategy<Value = String> {
    proptest::collection::vec(generator(), 1..3)
        .prop_map(|gs| format!("params: a, b\nvars: x, y\norder_vars: lex(x, y)\norder_params: lex(a, b)\ngenerators: {}\n", gs.join(", ")))
}

// ---- seeded generators for the counted suites ----

use cisys::involution::{nm_set, BoxOrientation, DivisionSpec, VarSet};
use cisys::{Exponent, MonomialOrdering, OrderKind, QPoly};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn random_exponent<R: Rng>(rng: &mut R, n: usize, maxdeg: u32) -> Exponent {
    let d = rng.gen_range(0..=maxdeg);
    let mut e = vec![0u32; n];
    for _ in 0..d {
        e[rng.gen_range(0..n)] += 1;
    }
    Exponent::new(e)
}

/// Distinct monomials, none equal to 1.
pub fn random_monomial_set<R: Rng>(rng: &mut R, n: usize, size: usize) -> Vec<Exponent> {
    let mut out: Vec<Exponent> = Vec::new();
    let mut tries = 0;
    while out.len() < size && tries < 200 {
        tries += 1;
        let e = random_exponent(rng, n, 4);
        if !e.is_one() && !out.contains(&e) {
            out.push(e);
        }
    }
    out
}

pub fn random_ordering<R: Rng>(rng: &mut R, n: usize) -> MonomialOrdering {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let kind = if rng.gen_bool(0.5) { OrderKind::Lex } else { OrderKind::DegRevLex };
    MonomialOrdering::with_permutation(kind, perm).unwrap()
}

pub fn random_division<R: Rng>(rng: &mut R, n: usize) -> DivisionSpec {
    let mut rho: Vec<usize> = (0..n).collect();
    rho.shuffle(rng);
    let orient = if rng.gen_bool(0.5) { BoxOrientation::Admissible } else { BoxOrientation::Inverse };
    DivisionSpec::new(rho, random_ordering(rng, n), orient).unwrap()
}

pub fn random_qpoly<R: Rng>(rng: &mut R, ord: &MonomialOrdering, maxdeg: u32, maxterms: usize) -> QPoly {
    loop {
        let k = rng.gen_range(1..=maxterms);
        let terms = (0..k).map(|_| {
            let c = rng.gen_range(-3i64..=3);
            (random_exponent(rng, ord.nvars(), maxdeg), rat(if c == 0 { 1 } else { c }))
        });
        let f = QPoly::from_terms(ord, terms.collect::<Vec<_>>());
        if !f.is_zero() && !f.is_constant() {
            return f;
        }
    }
}

/// A non-parametric ideal with `n <= 3`, at most 4 generators of degree at most 4.
pub fn random_ideal<R: Rng>(rng: &mut R) -> (MonomialOrdering, Vec<QPoly>) {
    let n = rng.gen_range(1..=3);
    let ord = random_ordering(rng, n);
    let k = rng.gen_range(1..=4);
    let f = (0..k).map(|_| random_qpoly(rng, &ord, 4, 3)).collect();
    (ord, f)
}

fn monomials_in(s: VarSet) -> impl Fn(&Exponent, &Exponent) -> bool {
    move |w, u| w.is_divisible_by(u) && (0..w.len()).all(|i| s.contains(i) || w.deg(i) == u.deg(i))
}

/// Whether `u*K[mu]` and `v*K[mv]` share a monomial.
pub fn cones_meet(u: &Exponent, mu: VarSet, v: &Exponent, mv: VarSet) -> bool {
    (0..u.len()).all(|i| match (mu.contains(i), mv.contains(i)) {
        (false, false) => u.deg(i) == v.deg(i),
        (false, true) => u.deg(i) >= v.deg(i),
        (true, false) => v.deg(i) >= u.deg(i),
        (true, true) => true,
    })
}

/// The three defining properties of an involutive division on one set.
pub fn check_division_axioms<R: Rng>(rng: &mut R, set: &[Exponent], d: &DivisionSpec) -> Result<(), String> {
    let n = d.nvars();
    let m: Vec<VarSet> = set.iter().map(|u| nm_set(u, set, d).unwrap().complement(n)).collect();
    for (i, u) in set.iter().enumerate() {
        for (j, v) in set.iter().enumerate() {
            let in_u = monomials_in(m[i])(v, u);
            let in_v = monomials_in(m[j])(u, v);
            if cones_meet(u, m[i], v, m[j]) && !in_u && !in_v {
                return Err(format!("axiom 1: cones of {u:?} and {v:?} meet in {set:?}"));
            }
            if in_u && !m[j].is_subset(m[i]) {
                return Err(format!("axiom 2: {v:?} in cone of {u:?} in {set:?}"));
            }
        }
        let sub: Vec<Exponent> = set.iter().filter(|w| *w == u || rng.gen_bool(0.5)).cloned().collect();
        let ms = nm_set(u, &sub, d).unwrap().complement(n);
        if !m[i].is_subset(ms) {
            return Err(format!("axiom 3: {u:?} in {sub:?} within {set:?}"));
        }
    }
    Ok(())
}

/// Radical membership by searching `h^k` in the ideal for `k <= kmax`.
pub fn power_search(h: &QPoly, gens: &[QPoly], kmax: u32) -> bool {
    let ord = MonomialOrdering::degrevlex(h.nvars());
    let gens: Vec<QPoly> = gens.iter().map(|g| g.with_ordering(&ord)).collect();
    let h = h.with_ordering(&ord);
    let gb = cisys::verify::reference_groebner(&gens, &ord);
    let mut p = h.reduce_by_set(&gb);
    for _ in 0..kmax {
        if p.is_zero() {
            return true;
        }
        p = p.mul(&h).reduce_by_set(&gb);
    }
    p.is_zero()
}
