//! Independent checks: specialization at parameter points, the involutive
//! basis test from the nonmultiplicative prolongations, Gröbner-basis and
//! ideal-equality tests, a classical Janet partition and a point sampler.
//!
//! Nothing here calls the completion code, the criteria or the division
//! bookkeeping of [`crate::involution`]; only the polynomial arithmetic is
//! shared.
//!
//! ```
//! use cisys::verify::is_groebner_basis;
//! use cisys::{Exponent, MonomialOrdering, QPoly, polyalg::rat};
//!
//! let o = MonomialOrdering::lex(2);
//! let y3 = QPoly::monomial(&o, Exponent::new(vec![0, 3]), rat(1));
//! let g = QPoly::from_terms(&o, [(Exponent::new(vec![1, 0]), rat(2)), (Exponent::new(vec![0, 2]), rat(1))]);
//! assert!(is_groebner_basis(&[y3, g]));
//! ```

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::engine::{Cell, Specification};
use crate::involution::{BoxOrientation, DivisionSpec, VarSet};
use crate::polyalg::{Exponent, MonomialOrdering, ParamPoly, QPoly, Rational};

/// Image of `f` under the evaluation `a = point`.
pub fn specialize(f: &ParamPoly, point: &[Rational]) -> QPoly {
    f.specialize(point)
}

/// All null conditions vanish and no nonnull condition does.
pub fn satisfies_spec(point: &[Rational], spec: &Specification) -> bool {
    spec.null.iter().all(|p| p.eval(point).is_zero()) && spec.nonnull.iter().all(|q| !q.eval(point).is_zero())
}

/// Nonmultiplicative sets straight from the pairwise rule, element by
/// element. `None` if two monomials coincide.
pub fn pairwise_nm(set: &[Exponent], d: &DivisionSpec) -> Option<Vec<VarSet>> {
    let cmp = |u: &Exponent, v: &Exponent| {
        let o = d.box_order().compare(u, v);
        match d.orientation() {
            BoxOrientation::Admissible => o,
            BoxOrientation::Inverse => o.reverse(),
        }
    };
    let mut out = Vec::with_capacity(set.len());
    for u in set {
        let mut nm = VarSet::EMPTY;
        for v in set {
            match cmp(u, v) {
                Ordering::Equal if u == v => continue,
                Ordering::Equal => return None,
                Ordering::Greater => {}
                Ordering::Less if u.is_divisible_by(v) => {}
                Ordering::Less => {
                    let i = d.rho().iter().copied().find(|&j| u.deg(j) < v.deg(j)).expect("v does not divide u");
                    nm.insert(i);
                }
            }
        }
        out.push(nm);
    }
    Some(out)
}

/// Janet's original partition, with `x1` as the first variable: `x_i` is
/// multiplicative for `u` when `deg_i(u)` is maximal among the elements of
/// `U` that agree with `u` in `x1..x(i-1)`.
pub fn janet_classical(set: &[Exponent]) -> Vec<VarSet> {
    let n = set.first().map_or(0, |u| u.len());
    set.iter()
        .map(|u| {
            let mut nm = VarSet::EMPTY;
            for i in 0..n {
                let top = set
                    .iter()
                    .filter(|v| (0..i).all(|j| v.deg(j) == u.deg(j)))
                    .map(|v| v.deg(i))
                    .max()
                    .unwrap();
                if u.deg(i) < top {
                    nm.insert(i);
                }
            }
            nm
        })
        .collect()
}

fn inv_divides(u: &Exponent, nm: VarSet, t: &Exponent) -> bool {
    match t.quotient(u) {
        Some(q) => q.support().all(|i| !nm.contains(i)),
        None => false,
    }
}

/// Full involutive normal form, every term reduced.
pub fn involutive_nf(f: &QPoly, g: &[QPoly], d: &DivisionSpec) -> Option<QPoly> {
    let lms: Vec<Exponent> = g.iter().map(|p| p.lm().cloned()).collect::<Option<_>>()?;
    let nm = pairwise_nm(&lms, d)?;
    let mut h = f.clone();
    let mut r = QPoly::zero(f.ordering());
    while let Some((t, c)) = h.terms().first().cloned() {
        match (0..g.len()).find(|&k| inv_divides(&lms[k], nm[k], &t)) {
            Some(k) => {
                let q = t.quotient(&lms[k]).unwrap();
                h = h.sub(&g[k].mul_term(&q, &(&c / g[k].lc().unwrap())));
            }
            None => {
                let m = QPoly::monomial(f.ordering(), t, c);
                r = r.add(&m);
                h = h.sub(&m);
            }
        }
    }
    Some(r)
}

/// Every nonmultiplicative prolongation `x g` has involutive normal form 0.
/// Requires nonzero elements with distinct leading monomials.
pub fn is_involutive_basis(g: &[QPoly], d: &DivisionSpec) -> bool {
    if g.iter().any(|p| p.is_zero()) {
        return false;
    }
    let lms: Vec<Exponent> = g.iter().map(|p| p.lm().unwrap().clone()).collect();
    let Some(nm) = pairwise_nm(&lms, d) else { return false };
    for (k, p) in g.iter().enumerate() {
        for x in nm[k].iter() {
            let xp = p.mul_term(&Exponent::var(p.nvars(), x), &Rational::from_integer(1.into()));
            match involutive_nf(&xp, g, d) {
                Some(r) if r.is_zero() => {}
                _ => return false,
            }
        }
    }
    true
}

/// Minimal involutive basis of its ideal: involutive, and no element can be
/// dropped without losing that property or the ideal.
pub fn is_minimal_involutive_basis(g: &[QPoly], d: &DivisionSpec) -> bool {
    if !is_involutive_basis(g, d) {
        return false;
    }
    (0..g.len()).all(|k| {
        let rest: Vec<QPoly> = g.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, p)| p.clone()).collect();
        !(is_involutive_basis(&rest, d) && same_ideal(&rest, g))
    })
}

fn s_poly(f: &QPoly, g: &QPoly) -> QPoly {
    let (fl, fc) = f.leading_term().unwrap();
    let (gl, gc) = g.leading_term().unwrap();
    let l = fl.lcm(gl);
    f.mul_term(&l.quotient(fl).unwrap(), &fc.recip()).sub(&g.mul_term(&l.quotient(gl).unwrap(), &gc.recip()))
}

/// Every S-polynomial reduces to zero by ordinary division.
pub fn is_groebner_basis(g: &[QPoly]) -> bool {
    let g: Vec<QPoly> = g.iter().filter(|p| !p.is_zero()).cloned().collect();
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            if !s_poly(&g[i], &g[j]).reduce_by_set(&g).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Reduced Gröbner basis by the plain Buchberger closure (all pairs, no
/// criteria), monic and sorted by increasing leading monomial.
pub fn reference_groebner(f: &[QPoly], ord: &MonomialOrdering) -> Vec<QPoly> {
    let mut g: Vec<QPoly> = f.iter().map(|p| p.with_ordering(ord)).filter(|p| !p.is_zero()).collect();
    let mut pairs: Vec<(usize, usize)> = (0..g.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    while let Some((i, j)) = pairs.pop() {
        let r = s_poly(&g[i], &g[j]).reduce_by_set(&g);
        if !r.is_zero() {
            let k = g.len();
            g.push(r);
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    g.sort_by(|a, b| ord.compare(a.lm().unwrap(), b.lm().unwrap()));
    let mut min: Vec<QPoly> = Vec::new();
    for p in g {
        if !min.iter().any(|q| p.lm().unwrap().is_divisible_by(q.lm().unwrap())) {
            min.push(p);
        }
    }
    (0..min.len())
        .map(|k| {
            let others: Vec<QPoly> = min.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, p)| p.clone()).collect();
            let (e, c) = min[k].leading_term().unwrap();
            let head = QPoly::monomial(ord, e.clone(), c.clone());
            head.add(&min[k].sub(&head).reduce_by_set(&others)).monic()
        })
        .collect()
}

/// `<F> = <G>` by mutual reduction against reference bases.
pub fn same_ideal(f: &[QPoly], g: &[QPoly]) -> bool {
    let Some(ord) = f.iter().chain(g).map(|p| p.ordering().clone()).next() else { return true };
    let gf = reference_groebner(f, &ord);
    let gg = reference_groebner(g, &ord);
    g.iter().all(|p| p.reduce_by_set(&gf).is_zero()) && f.iter().all(|p| p.reduce_by_set(&gg).is_zero())
}

/// Uniform rational in `[-5, 5]` with denominator at most 4.
pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    let d: i64 = rng.gen_range(1..=4);
    let n: i64 = rng.gen_range(-5 * d..=5 * d);
    Rational::new(n.into(), d.into())
}

/// A rational point satisfying `spec`, found by solving the null conditions
/// one variable at a time (linear ones directly, others by rational roots)
/// and drawing the remaining coordinates at random. `None` after `tries`
/// failed attempts.
pub fn sample_point<R: Rng>(spec: &Specification, nparams: usize, rng: &mut R, tries: usize) -> Option<Vec<Rational>> {
    (0..tries).find_map(|_| {
        let p = try_point(spec, nparams, rng)?;
        satisfies_spec(&p, spec).then_some(p)
    })
}

fn substitute_all(p: &QPoly, vals: &[Option<Rational>]) -> QPoly {
    let mut q = p.clone();
    for (i, v) in vals.iter().enumerate() {
        if let Some(v) = v {
            q = q.substitute(i, v);
        }
    }
    q
}

fn try_point<R: Rng>(spec: &Specification, m: usize, rng: &mut R) -> Option<Vec<Rational>> {
    let mut vals: Vec<Option<Rational>> = vec![None; m];
    loop {
        let eqs: Vec<QPoly> = spec.null.iter().map(|g| substitute_all(g, &vals)).filter(|g| !g.is_zero()).collect();
        if eqs.iter().any(|e| e.is_constant()) {
            return None;
        }
        let Some(first) = eqs.first() else { break };
        let (e, v) = eqs
            .iter()
            .find_map(|e| e.support().into_iter().find(|&v| e.degree_in(v) == 1).map(|v| (e, v)))
            .unwrap_or_else(|| (first, first.support()[0]));
        for w in e.support() {
            if w != v {
                vals[w] = Some(random_rational(rng));
            }
        }
        let u = substitute_all(e, &vals);
        let roots = rational_roots(&u, v)?;
        vals[v] = Some(roots[rng.gen_range(0..roots.len())].clone());
    }
    Some(vals.into_iter().map(|v| v.unwrap_or_else(|| random_rational(rng))).collect())
}

/// Rational roots of a polynomial in the single indeterminate `x_v`.
fn rational_roots(u: &QPoly, v: usize) -> Option<Vec<Rational>> {
    let deg = u.degree_in(v) as usize;
    if deg == 0 {
        return None;
    }
    let mut coeffs = vec![Rational::zero(); deg + 1];
    for (e, c) in u.terms() {
        coeffs[e.deg(v) as usize] = c.clone();
    }
    if deg == 1 {
        return Some(vec![-&coeffs[0] / &coeffs[1]]);
    }
    let lcm = coeffs.iter().fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let low = ints.iter().position(|c| !c.is_zero()).unwrap();
    let mut roots = Vec::new();
    if low > 0 {
        roots.push(Rational::zero());
    }
    let divisors = |n: &BigInt| -> Option<Vec<i64>> {
        let n = n.abs().to_i64().filter(|&n| n <= 1_000_000)?;
        Some((1..=n).filter(|d| n % d == 0).collect())
    };
    for p in divisors(&ints[low])? {
        for q in divisors(&ints[deg])? {
            for s in [1i64, -1] {
                let r = Rational::new((s * p).into(), q.into());
                if !roots.contains(&r) && u.substitute(v, &r).is_zero() {
                    roots.push(r);
                }
            }
        }
    }
    (!roots.is_empty()).then_some(roots)
}

/// Checks a cell at one point: the specialized basis must be a minimal
/// involutive basis of the specialized input ideal.
pub fn check_cell_at(cell: &Cell, input: &[ParamPoly], d: &DivisionSpec, point: &[Rational]) -> Result<(), String> {
    if !satisfies_spec(point, &cell.spec) {
        return Err("point outside the cell".into());
    }
    let g: Vec<QPoly> = cell.basis.iter().map(|p| specialize(p, point).monic()).collect();
    let f: Vec<QPoly> = input.iter().map(|p| specialize(p, point)).filter(|p| !p.is_zero()).collect();
    if g.iter().any(|p| p.is_zero()) {
        return Err("a basis element vanishes".into());
    }
    if !is_involutive_basis(&g, d) {
        return Err("not involutive".into());
    }
    if !same_ideal(&f, &g) {
        return Err("ideal differs".into());
    }
    if !is_minimal_involutive_basis(&g, d) {
        return Err("not minimal".into());
    }
    Ok(())
}
