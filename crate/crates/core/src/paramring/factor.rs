use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::polyalg::{Exponent, MonomialOrdering, QPoly, Rational};
use num_traits::One;

/// Monic greatest common divisor in `Q[a]`; `gcd(0, 0) = 0`.
///
/// Recursive: split off contents with respect to the first indeterminate
/// present, then run a primitive pseudo-remainder sequence in it.
pub fn gcd(f: &QPoly, g: &QPoly) -> QPoly {
    gcd_rec(f, g).monic()
}

fn gcd_rec(f: &QPoly, g: &QPoly) -> QPoly {
    let ord = f.ordering();
    if f.is_zero() {
        return g.clone();
    }
    if g.is_zero() {
        return f.clone();
    }
    if f.is_constant() || g.is_constant() {
        return QPoly::one(ord);
    }
    if f.len() == 1 {
        return monomial_gcd(f.lm().unwrap(), g, ord);
    }
    if g.len() == 1 {
        return monomial_gcd(g.lm().unwrap(), f, ord);
    }
    let v = f.support().into_iter().chain(g.support()).min().expect("nonconstant");
    let (cf, cg) = (content_in(f, v), content_in(g, v));
    let c = gcd_rec(&cf, &cg);
    let mut a = f.exact_div(&cf).expect("content divides");
    let mut b = g.exact_div(&cg).expect("content divides");
    if a.degree_in(v) < b.degree_in(v) {
        std::mem::swap(&mut a, &mut b);
    }
    match image_degree(&a, &b, v) {
        Some(0) => return c,
        Some(d) if d == b.degree_in(v) && a.exact_div(&b).is_ok() => return c.mul(&b),
        _ => {}
    }
    while !b.is_zero() && b.degree_in(v) > 0 {
        let r = pseudo_rem(&a, &b, v);
        a = b;
        b = if r.is_zero() { r } else { r.exact_div(&content_in(&r, v)).expect("content divides") };
    }
    if !b.is_zero() {
        return c;
    }
    c.mul(&a)
}

/// Degree in `x_v` of the gcd of the images of `a` and `b` with every other
/// indeterminate set to a small integer at which neither leading coefficient
/// in `x_v` vanishes: an upper bound for the degree of the true gcd.
fn image_degree(a: &QPoly, b: &QPoly, v: usize) -> Option<u32> {
    let others: Vec<usize> = a.support().into_iter().chain(b.support()).filter(|&i| i != v).collect();
    if others.is_empty() || a.degree_in(v) == 0 || b.degree_in(v) == 0 {
        return None;
    }
    let (la, lb) = (coeffs_in(a, v).pop().unwrap(), coeffs_in(b, v).pop().unwrap());
    for shift in 1..=4i64 {
        let point: Vec<(usize, Rational)> =
            others.iter().enumerate().map(|(k, &i)| (i, Rational::from_integer((shift * (k as i64 + 2) - 5).into()))).collect();
        let at = |p: &QPoly| point.iter().fold(p.clone(), |q, (i, x)| q.substitute(*i, x));
        if at(&la).is_zero() || at(&lb).is_zero() {
            continue;
        }
        return Some(gcd_rec(&at(a), &at(b)).degree_in(v));
    }
    None
}

/// Coefficients of `p` as a polynomial in `x_v`, indexed by degree.
fn coeffs_in(p: &QPoly, v: usize) -> Vec<QPoly> {
    let ord = p.ordering();
    let mut cs: Vec<Vec<(Exponent, Rational)>> = vec![Vec::new(); p.degree_in(v) as usize + 1];
    for (e, c) in p.terms() {
        let mut ex = e.as_slice().to_vec();
        let k = std::mem::take(&mut ex[v]);
        cs[k as usize].push((Exponent::new(ex), c.clone()));
    }
    cs.into_iter().map(|t| QPoly::from_terms(ord, t)).collect()
}

/// Remainder of `lc(b)^k a` on division by `b` in `x_v`, coefficients
/// kept polynomial.
fn pseudo_rem(a: &QPoly, b: &QPoly, v: usize) -> QPoly {
    let db = b.degree_in(v);
    let lb = coeffs_in(b, v).pop().expect("nonzero");
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lr = coeffs_in(&r, v).pop().expect("nonzero");
        let mut shift = vec![0; r.nvars()];
        shift[v] = dr - db;
        r = r.mul(&lb).sub(&b.mul(&lr).mul_term(&Exponent::new(shift), &Rational::one()));
        r = r.primitive();
    }
    r
}

fn monomial_gcd(m: &Exponent, g: &QPoly, ord: &MonomialOrdering) -> QPoly {
    let mut e = m.clone();
    for (t, _) in g.terms() {
        e = e.gcd(t);
    }
    QPoly::monomial(ord, e, Rational::one())
}

/// Product of the distinct irreducible factors of `p`, made monic.
pub fn squarefree_part(p: &QPoly) -> Result<QPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Ok(QPoly::one(p.ordering()));
    }
    let mut d = p.clone();
    for i in p.support() {
        d = gcd(&d, &p.derivative(i));
        if d.is_constant() {
            break;
        }
    }

    Ok(p.exact_div(&d).expect("gcd divides").monic())
}

/// Square-free, pairwise coprime, monic factors whose product has the same
/// zero set as `p`, in increasing order. Constants are dropped.
///
/// The split uses contents with respect to each parameter, multiplicity
/// layers of the square-free decomposition, and gcd refinement between the
/// pieces. It does not attempt irreducible factorization.
pub fn facvar(p: &QPoly) -> Result<Vec<QPoly>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut pieces = Vec::new();
    for c in content_split(p) {
        pieces.extend(multiplicity_layers(&c));
    }
    Ok(coprime_basis(pieces))
}

/// Joint factor set of several polynomials, refined to be pairwise coprime.
/// Zero inputs are skipped.
pub fn facvar_set(ps: &[QPoly]) -> Vec<QPoly> {
    let mut all = Vec::new();
    for p in ps.iter().filter(|p| !p.is_zero()) {
        all.extend(facvar(p).expect("nonzero"));
    }
    coprime_basis(all)
}

/// Splits the factors against the reference polynomials until no factor has a
/// proper nontrivial common divisor with any reference.
pub fn refine_against(factors: Vec<QPoly>, refs: &[QPoly]) -> Vec<QPoly> {
    let mut work = factors;
    let mut out: Vec<QPoly> = Vec::new();
    while let Some(f) = work.pop() {
        let split = refs.iter().find_map(|r| {
            let g = gcd(&f, r);
            (!g.is_constant() && g != f).then_some(g)
        });
        match split {
            Some(g) => {
                let rest = f.exact_div(&g).expect("gcd divides").monic();
                work.push(g);
                if !rest.is_constant() {
                    work.push(rest);
                }
            }
            None => {
                if !out.contains(&f) {
                    out.push(f);
                }
            }
        }
    }
    sort_factors(&mut out);
    out
}

/// Recursive split by the content with respect to each indeterminate.
fn content_split(p: &QPoly) -> Vec<QPoly> {
    if p.is_constant() {
        return Vec::new();
    }
    for i in p.support() {
        let c = content_in(p, i);
        if !c.is_constant() {
            let rest = p.exact_div(&c).expect("content divides");
            let mut v = content_split(&c);
            v.extend(content_split(&rest));
            return v;
        }
    }
    vec![p.monic()]
}

/// Gcd of the coefficients of `p` seen as a polynomial in `x_i`, monic.
fn content_in(p: &QPoly, i: usize) -> QPoly {
    let mut g = QPoly::zero(p.ordering());
    for c in coeffs_in(p, i).into_iter().rev().filter(|c| !c.is_zero()) {
        g = gcd_rec(&g, &c).monic();
        if g.is_constant() {
            break;
        }
    }
    g
}

/// `w_k / w_{k+1}` where `w_k` is the square-free part of what remains after
/// dividing out `w_1 .. w_{k-1}`: the product of the factors of multiplicity
/// exactly `k`.
fn multiplicity_layers(p: &QPoly) -> Vec<QPoly> {
    let mut layers = Vec::new();
    let mut q = p.clone();
    let mut prev: Option<QPoly> = None;
    while !q.is_constant() {
        let w = squarefree_part(&q).expect("nonzero");
        q = q.exact_div(&w).expect("square-free part divides");
        if let Some(pw) = prev {
            let layer = pw.exact_div(&w).expect("layers are nested");
            if !layer.is_constant() {
                layers.push(layer.monic());
            }
        }
        prev = Some(w);
    }
    if let Some(pw) = prev {
        layers.push(pw);
    }
    layers
}

/// Pairwise coprime refinement (a gcd-free basis), monic and sorted.
pub fn coprime_basis(items: Vec<QPoly>) -> Vec<QPoly> {
    let mut v: Vec<QPoly> = items.into_iter().filter(|p| !p.is_constant()).map(|p| p.monic()).collect();
    'outer: loop {
        v.dedup();
        sort_factors(&mut v);
        v.dedup();
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                let g = gcd(&v[i], &v[j]);
                if g.is_constant() {
                    continue;
                }
                let (fi, fj) = (v[i].clone(), v[j].clone());
                v.remove(j);
                v.remove(i);
                for h in [fi.exact_div(&g).unwrap(), fj.exact_div(&g).unwrap(), g] {
                    if !h.is_constant() {
                        v.push(h.monic());
                    }
                }
                continue 'outer;
            }
        }
        return v;
    }
}

/// Increasing order by leading monomial, then by the remaining terms.
pub fn sort_factors(v: &mut [QPoly]) {
    v.sort_by(compare_polys);
}

fn compare_polys(a: &QPoly, b: &QPoly) -> Ordering {
    let ord = a.ordering();
    for (ta, tb) in a.terms().iter().zip(b.terms()) {
        let o = ord.compare(&ta.0, &tb.0).then_with(|| ta.1.cmp(&tb.1));
        if o != Ordering::Equal {
            return o;
        }
    }
    a.len().cmp(&b.len())
}
