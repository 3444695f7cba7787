use std::cmp::Ordering;

use super::division::{DivisionSpec, NMPartition, VarSet};
use super::normal_form::tail_nf_with;
use crate::polyalg::{Exponent, MonomialOrdering, QPoly};

/// Bookkeeping record of the completion: the polynomial, its ancestor and
/// the nonmultiplicative variables already used for prolongations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triple<P> {
    pub poly: P,
    pub anc: P,
    pub nm_used: VarSet,
}

impl<P: Clone> Triple<P> {
    /// A polynomial that is its own ancestor.
    pub fn root(poly: P) -> Self {
        Triple { anc: poly.clone(), poly, nm_used: VarSet::EMPTY }
    }
}

/// Involutive form of Buchberger's criteria for the prolongation `p` whose
/// head is involutively divisible by the head of `g`: true when
/// `LM(anc p) * LM(anc g) = LM(p)` or `lcm(LM(anc p), LM(anc g))` is a proper
/// divisor of `LM(p)`.
pub fn criteria(lm_p: &Exponent, lm_anc_p: &Exponent, lm_anc_g: &Exponent) -> bool {
    if lm_anc_p.mul(lm_anc_g) == *lm_p {
        return true;
    }
    let l = lm_anc_p.lcm(lm_anc_g);
    lm_p.is_divisible_by(&l) && l != *lm_p
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GbiOptions {
    pub criteria: bool,
}

impl Default for GbiOptions {
    fn default() -> Self {
        GbiOptions { criteria: true }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GbiStats {
    pub reductions: usize,
    pub criteria_hits: usize,
    pub prolongations: usize,
}

/// Minimal monic involutively autoreduced basis of `<F>` over `Q`, sorted by
/// decreasing leading monomial.
pub fn gbi(f: &[QPoly], d: &DivisionSpec) -> Vec<QPoly> {
    gbi_with(f, d, GbiOptions::default()).0
}

pub fn gbi_with(input: &[QPoly], d: &DivisionSpec, opts: GbiOptions) -> (Vec<QPoly>, GbiStats) {
    let mut stats = GbiStats::default();
    let mut items: Vec<QPoly> = input.iter().filter(|p| !p.is_zero()).map(|p| p.monic()).collect();
    if items.is_empty() {
        return (Vec::new(), stats);
    }
    let ord = items[0].ordering().clone();
    if items.iter().any(|p| p.is_constant()) {
        return (vec![QPoly::one(&ord)], stats);
    }
    let mut seq = 0usize;
    let mut queue: Vec<(usize, Triple<QPoly>)> = Vec::new();
    let first = select_smallest(&items.iter().map(|p| p.lm().unwrap().clone()).collect::<Vec<_>>(), &ord);
    let mut basis = vec![Triple::root(items.remove(first))];
    for p in items {
        queue.push((seq, Triple::root(p)));
        seq += 1;
    }

    while !queue.is_empty() {
        queue = head_reduce(&basis, queue, d, &ord, opts, &mut stats);
        if queue.is_empty() {
            break;
        }
        let lms: Vec<Exponent> = queue.iter().map(|(_, t)| t.poly.lm().unwrap().clone()).collect();
        let (_, p) = queue.remove(select_smallest_seq(&lms, &queue, &ord));
        let plm = p.poly.lm().unwrap().clone();
        if plm == *p.anc.lm().unwrap() {
            let mut k = 0;
            while k < basis.len() {
                let qlm = basis[k].poly.lm().unwrap();
                if qlm.is_divisible_by(&plm) && *qlm != plm {
                    queue.push((seq, basis.remove(k)));
                    seq += 1;
                } else {
                    k += 1;
                }
            }
        }
        let polys: Vec<QPoly> = basis.iter().map(|t| t.poly.clone()).collect();
        let part = d.partition(&lm_list(&polys));
        let h = tail_nf_with(&p.poly, &polys, &part).monic();
        basis.push(Triple { poly: h, anc: p.anc, nm_used: p.nm_used });

        let part = d.partition(&lm_list(&basis.iter().map(|t| t.poly.clone()).collect::<Vec<_>>()));
        for (k, q) in basis.iter_mut().enumerate() {
            let nm = part.nonmultiplicative(k);
            for x in nm.difference(q.nm_used).iter() {
                queue.push((seq, Triple { poly: q.poly.mul_var(x), anc: q.anc.clone(), nm_used: VarSet::EMPTY }));
                seq += 1;
                stats.prolongations += 1;
                q.nm_used = q.nm_used.intersection(nm).union(VarSet::singleton(x));
            }
        }
    }
    (autoreduce(basis.into_iter().map(|t| t.poly).collect(), d, &ord), stats)
}

fn lm_list(polys: &[QPoly]) -> Vec<Exponent> {
    polys.iter().map(|p| p.lm().unwrap().clone()).collect()
}

fn select_smallest(lms: &[Exponent], ord: &MonomialOrdering) -> usize {
    let mut best = 0;
    for k in 1..lms.len() {
        if ord.compare(&lms[k], &lms[best]) == Ordering::Less {
            best = k;
        }
    }
    best
}

fn select_smallest_seq<T>(lms: &[Exponent], queue: &[(usize, T)], ord: &MonomialOrdering) -> usize {
    let mut best = 0;
    for k in 1..lms.len() {
        let o = ord.compare(&lms[k], &lms[best]).then(queue[k].0.cmp(&queue[best].0));
        if o == Ordering::Less {
            best = k;
        }
    }
    best
}

fn head_reduce(
    basis: &[Triple<QPoly>],
    queue: Vec<(usize, Triple<QPoly>)>,
    d: &DivisionSpec,
    ord: &MonomialOrdering,
    opts: GbiOptions,
    stats: &mut GbiStats,
) -> Vec<(usize, Triple<QPoly>)> {
    let polys: Vec<QPoly> = basis.iter().map(|t| t.poly.clone()).collect();
    let part = d.partition(&lm_list(&polys));
    let mut pending = queue;
    pending.reverse();
    let mut out = Vec::new();
    while let Some((s, p)) = pending.pop() {
        let h = head_normal_form(&p, basis, &part, ord, opts, stats);
        if !h.is_zero() {
            if h.lm() != p.poly.lm() {
                out.push((s, Triple::root(h.monic())));
            } else {
                out.push((s, p));
            }
        } else if p.poly.lm() == p.anc.lm() {
            // an equal polynomial may still sit in the basis with its own prolongations
            pending.retain(|(_, q)| q.anc != p.poly || basis.iter().any(|b| b.anc.lm() == q.anc.lm()));
        }
    }
    out
}

fn head_normal_form(
    p: &Triple<QPoly>,
    basis: &[Triple<QPoly>],
    part: &NMPartition,
    ord: &MonomialOrdering,
    opts: GbiOptions,
    stats: &mut GbiStats,
) -> QPoly {
    let mut h = p.poly.clone();
    let lm = h.lm().unwrap().clone();
    let Some(k) = part.inv_divisor(&lm, ord) else { return h };
    if opts.criteria && lm != *p.anc.lm().unwrap() && criteria(&lm, p.anc.lm().unwrap(), basis[k].anc.lm().unwrap()) {
        stats.criteria_hits += 1;
        return QPoly::zero(ord);
    }
    while let Some((hl, hc)) = h.terms().first().cloned() {
        let Some(k) = part.inv_divisor(&hl, ord) else { break };
        let g = &basis[k].poly;
        let (glm, glc) = g.leading_term().unwrap();
        h = h.sub(&g.mul_term(&hl.quotient(glm).unwrap(), &(&hc / glc)));
        stats.reductions += 1;
    }
    h
}

/// Tail-reduces every element against the whole set and sorts by decreasing
/// leading monomial. Leading monomials are unchanged.
fn autoreduce(polys: Vec<QPoly>, d: &DivisionSpec, ord: &MonomialOrdering) -> Vec<QPoly> {
    let part = d.partition(&lm_list(&polys));
    let mut out: Vec<QPoly> = polys.iter().map(|p| tail_nf_with(p, &polys, &part).monic()).collect();
    out.sort_by(|a, b| ord.compare(b.lm().unwrap(), a.lm().unwrap()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::rat;

    fn xy() -> MonomialOrdering {
        MonomialOrdering::lex(2)
    }
    fn m(i: u32, j: u32) -> QPoly {
        QPoly::monomial(&xy(), Exponent::new(vec![i, j]), rat(1))
    }
    fn e(v: &[u32]) -> Exponent {
        Exponent::from(v)
    }

    #[test]
    fn gbi_examples() {
        let d = DivisionSpec::janet(2);
        assert_eq!(gbi(&[m(2, 0), m(0, 2)], &d), vec![m(2, 0), m(1, 2), m(0, 2)]);
        assert_eq!(gbi(&[m(1, 0), m(0, 1)], &d), vec![m(1, 0), m(0, 1)]);
        assert!(gbi(&[], &d).is_empty());
        assert_eq!(gbi(&[m(1, 0), QPoly::constant(&xy(), rat(3))], &d), vec![QPoly::one(&xy())]);
    }

    #[test]
    fn criteria_examples() {
        // b x^2 y^2 with ancestor b y^2, divisor a x^2 with ancestor a x^2
        assert!(criteria(&e(&[2, 2]), &e(&[0, 2]), &e(&[2, 0])));
        // lcm equal to the head is not a proper divisor
        assert!(!criteria(&e(&[1, 2]), &e(&[1, 2]), &e(&[0, 1])));
        // same ancestor u = x: u * u = x^2 differs from x y, but lcm(u, u) = x
        // properly divides x y
        assert!(criteria(&e(&[1, 1]), &e(&[1, 0]), &e(&[1, 0])));
        assert!(!criteria(&e(&[1, 1]), &e(&[1, 1]), &e(&[1, 1])));
    }

    #[test]
    fn criteria_do_not_change_the_basis() {
        let d = DivisionSpec::janet(2);
        let f = vec![m(2, 1).sub(&m(0, 3)), m(1, 0).add(&m(0, 2))];
        let (with, s1) = gbi_with(&f, &d, GbiOptions { criteria: true });
        let (without, s2) = gbi_with(&f, &d, GbiOptions { criteria: false });
        assert_eq!(with, without);
        assert_eq!(s2.criteria_hits, 0);
        assert!(s1.prolongations > 0);
    }
}
