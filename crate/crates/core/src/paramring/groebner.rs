use std::cmp::Ordering;

use super::factor::{gcd, squarefree_part};
use crate::polyalg::{Exponent, MonomialOrdering, QPoly};

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Exponent,
}

/// S-polynomial of two nonzero polynomials over `Q`.
pub fn s_polynomial(f: &QPoly, g: &QPoly) -> QPoly {
    let (fl, fc) = f.leading_term().expect("nonzero");
    let (gl, gc) = g.leading_term().expect("nonzero");
    let l = fl.lcm(gl);
    let mf = l.quotient(fl).expect("lcm");
    let mg = l.quotient(gl).expect("lcm");
    f.mul_term(&mf, &fc.recip()).sub(&g.mul_term(&mg, &gc.recip()))
}

/// Reduced Gröbner basis of `<F>` under `ord`, sorted by increasing leading
/// monomial. Zero generators are ignored; the unit ideal gives `{1}`.
///
/// Pairs are processed smallest-lcm first (ties by insertion) and skipped by
/// the coprime-lcm and chain criteria.
pub fn buchberger_reduced(input: &[QPoly], ord: &MonomialOrdering) -> Vec<QPoly> {
    let mut basis: Vec<QPoly> = Vec::new();
    for f in input {
        let f = f.with_ordering(ord);
        if f.is_zero() {
            continue;
        }
        if f.is_constant() {
            return vec![QPoly::one(ord)];
        }
        if !basis.contains(&f.monic()) {
            basis.push(f.monic());
        }
    }
    let mut pending: Vec<Pair> = Vec::new();
    // done[i][j] for i < j: pair already treated or discarded
    let mut done: Vec<Vec<bool>> = Vec::new();
    for j in 0..basis.len() {
        done.push(vec![false; j]);
        for i in 0..j {
            pending.push(make_pair(&basis, i, j));
        }
    }

    while !pending.is_empty() {
        let pos = select_pair(&pending, ord);
        let pair = pending.remove(pos);
        let (i, j) = (pair.i, pair.j);
        done[j][i] = true;
        let (li, lj) = (basis[i].lm().unwrap(), basis[j].lm().unwrap());
        if li.is_coprime(lj) {
            continue;
        }
        if chain_criterion(&basis, &done, &pair) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j]);
        let r = s.reduce_by_set(&basis);
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return vec![QPoly::one(ord)];
        }
        let k = basis.len();
        basis.push(r.monic());
        done.push(vec![false; k]);
        for i in 0..k {
            pending.push(make_pair(&basis, i, k));
        }
    }
    reduce_basis(basis, ord)
}

fn make_pair(basis: &[QPoly], i: usize, j: usize) -> Pair {
    let lcm = basis[i].lm().unwrap().lcm(basis[j].lm().unwrap());
    Pair { i, j, lcm }
}

fn select_pair(pending: &[Pair], ord: &MonomialOrdering) -> usize {
    let mut best = 0;
    for (k, p) in pending.iter().enumerate().skip(1) {
        let b = &pending[best];
        let o = ord.compare(&p.lcm, &b.lcm).then_with(|| (p.j, p.i).cmp(&(b.j, b.i)));
        if o == Ordering::Less {
            best = k;
        }
    }
    best
}

fn chain_criterion(basis: &[QPoly], done: &[Vec<bool>], pair: &Pair) -> bool {
    let is_done = |a: usize, b: usize| if a < b { done[b][a] } else { done[a][b] };
    (0..basis.len()).any(|k| {
        k != pair.i
            && k != pair.j
            && pair.lcm.is_divisible_by(basis[k].lm().unwrap())
            && is_done(pair.i, k)
            && is_done(pair.j, k)
    })
}

/// Minimal, monic, interreduced basis from any Gröbner basis.
pub(crate) fn reduce_basis(mut basis: Vec<QPoly>, ord: &MonomialOrdering) -> Vec<QPoly> {
    basis.sort_by(|a, b| ord.compare(a.lm().unwrap(), b.lm().unwrap()));
    let mut minimal: Vec<QPoly> = Vec::new();
    for g in basis {
        let lm = g.lm().unwrap();
        if !minimal.iter().any(|h| lm.is_divisible_by(h.lm().unwrap())) {
            minimal.push(g);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<QPoly> = minimal.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, g)| g.clone()).collect();
        let g = &minimal[k];
        let head = g.leading_term().map(|(e, c)| QPoly::monomial(ord, e.clone(), c.clone())).unwrap();
        let tail = g.sub(&head).reduce_by_set(&others);
        out.push(head.add(&tail).monic());
    }
    out
}

/// `h` in the ideal of a Gröbner basis `G`.
pub fn ideal_member(h: &QPoly, gb: &[QPoly]) -> bool {
    h.with_ordering(gb.first().map_or(h.ordering(), |g| g.ordering())).reduce_by_set(gb).is_zero()
}

/// `h` in the radical of `<N>`, via `1 in <N, 1 - t h>` with a fresh last
/// indeterminate `t`.
pub fn radical_member(h: &QPoly, n: &[QPoly]) -> bool {
    product_in_radical(std::slice::from_ref(h), n)
}

/// Whether `h1 h2 ... hk` lies in the radical of `<n>`, tested as
/// `1 in <n, 1 - t1 h1, ..., 1 - tk hk>` under degrevlex, one new
/// indeterminate per factor. An empty product is 1.
pub fn product_in_radical(hs: &[QPoly], n: &[QPoly]) -> bool {
    let Some(m) = hs.iter().chain(n).map(|p| p.nvars()).next() else { return false };
    if hs.iter().any(|h| h.is_zero()) {
        return true;
    }
    // the answer does not depend on the ordering; lex bases can be far larger
    let ord = MonomialOrdering::degrevlex(m);
    let gb = buchberger_reduced(n, &ord);
    if gb.iter().any(|g| g.is_one()) {
        return true;
    }
    if gb.is_empty() {
        return hs.is_empty();
    }
    let hs: Vec<QPoly> = hs.iter().map(|h| h.with_ordering(&ord).reduce_by_set(&gb)).collect();
    if hs.iter().any(|h| h.is_zero()) {
        return true;
    }
    let hs: Vec<QPoly> = hs.into_iter().filter(|h| !h.is_constant()).collect();
    if let [n] = gb.as_slice() {
        // principal: every factor of the square-free part must divide some h
        let mut r = squarefree_part(n).expect("nonzero");
        for h in &hs {
            loop {
                let g = gcd(&r, h);
                if g.is_constant() {
                    break;
                }
                r = r.exact_div(&g).expect("gcd divides");
            }
        }
        return r.is_constant();
    }
    let ext = MonomialOrdering::degrevlex(m + hs.len());
    let mut gens: Vec<QPoly> = gb.iter().map(|g| g.embed(&ext)).collect();
    for (k, h) in hs.iter().enumerate() {
        let t = QPoly::var(&ext, m + k);
        gens.push(QPoly::one(&ext).sub(&t.mul(&h.embed(&ext))));
    }
    buchberger_reduced(&gens, &ext).iter().any(|g| g.is_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{rat, OrderKind};
    use num_traits::One;
    use proptest::prelude::*;

    fn ab() -> MonomialOrdering {
        MonomialOrdering::lex(2)
    }
    fn a() -> QPoly {
        QPoly::var(&ab(), 0)
    }
    fn b() -> QPoly {
        QPoly::var(&ab(), 1)
    }
    fn c(n: i64) -> QPoly {
        QPoly::constant(&ab(), rat(n))
    }

    #[test]
    fn buchberger_examples() {
        // {a^2 - a, a}: the S-pair closure leaves {a}
        assert_eq!(buchberger_reduced(&[&(&a() * &a()) - &a(), a()], &ab()), vec![a()]);
        assert!(buchberger_reduced(&[], &ab()).is_empty());
        assert_eq!(buchberger_reduced(&[a(), &a() - &c(1)], &ab()), vec![c(1)]);
        assert!(buchberger_reduced(&[c(0), c(0)], &ab()).is_empty());
    }

    #[test]
    fn membership_examples() {
        assert!(ideal_member(&(&a() * &b()), &[a()]));
        assert!(!ideal_member(&b(), &[a()]));
        assert!(ideal_member(&c(0), &[a()]));
        assert!(ideal_member(&c(0), &[]));
    }

    #[test]
    fn radical_examples() {
        assert!(radical_member(&a(), &[&a() * &a()]));
        assert!(!radical_member(&a(), &[b()]));
        let a2b = &(&a() * &a()) * &b();
        assert!(radical_member(&(&a() * &b()), &[a2b]));
        assert!(!radical_member(&c(3), &[]));
        assert!(radical_member(&c(3), &[c(1)]));
    }

    fn arb_poly(deg: u32) -> impl Strategy<Value = QPoly> {
        proptest::collection::vec(((0u32..=deg, 0u32..=deg), -3i64..4), 1..4).prop_map(|ts| {
            QPoly::from_terms(&ab(), ts.into_iter().map(|((i, j), c)| (Exponent::new(vec![i, j]), rat(c))))
        })
    }

    fn satisfies_buchberger_criterion(gb: &[QPoly]) -> bool {
        for i in 0..gb.len() {
            for j in i + 1..gb.len() {
                if !s_polynomial(&gb[i], &gb[j]).reduce_by_set(gb).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn output_is_reduced_groebner(fs in proptest::collection::vec(arb_poly(2), 0..4), drl in any::<bool>()) {
            let ord = if drl { MonomialOrdering::new(OrderKind::DegRevLex, 2) } else { ab() };
            let gb = buchberger_reduced(&fs, &ord);
            prop_assert!(satisfies_buchberger_criterion(&gb));
            for f in &fs {
                prop_assert!(ideal_member(&f.with_ordering(&ord), &gb));
            }
            for g in &gb {
                prop_assert!(g.lc().unwrap().is_one());
            }
            // input order and duplicates do not matter
            let mut rev: Vec<QPoly> = fs.iter().rev().cloned().collect();
            rev.extend(fs.iter().cloned());
            prop_assert_eq!(buchberger_reduced(&rev, &ord), gb);
        }
    }
}
