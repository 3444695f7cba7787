use std::cmp::Ordering;

use super::spec::{decide, Decision, Specification};
use super::{Engine, PTriple};
use crate::involution::{criteria, NMPartition, Triple, VarSet};
use crate::paramring::buchberger_reduced;
use crate::polyalg::{Exponent, ParamPoly, ParamScalar};

pub(super) enum Outcome {
    Done { basis: Vec<PTriple>, spec: Specification },
    /// `p` has a leading coefficient that needs a case split; `basis` and
    /// `pending` are the state to resume from.
    Branch { p: PTriple, basis: Vec<PTriple>, spec: Specification, pending: Vec<PTriple> },
}

/// Queue entries carry an insertion number used to break ties.
type Queue = Vec<(usize, PTriple)>;

enum Head {
    Done(ParamPoly),
    Undecided(ParamPoly),
}

/// Outcome of checking a queue element's leading coefficient before it is
/// moved into the basis.
enum Check {
    Ready(PTriple),
    Stripped(ParamPoly),
    Undecided(PTriple),
}

fn lm(p: &PTriple) -> &Exponent {
    p.poly.lm().expect("nonzero triple")
}

/// One reduction step cancelling the term `c x^e` of `h`, where
/// `x^e = m LM(g)`: `h - (c / lc(g)) m g` when the division is exact in
/// `Q[a]`, else the fraction-free `lc(g) h - c m g`.
fn reduce_step(h: &ParamPoly, e: &Exponent, g: &ParamPoly, spec: &Specification) -> ParamPoly {
    let c = h.coeff(e).expect("term present").clone();
    let (glm, glc) = g.leading_data().expect("nonzero divisor");
    let m = e.quotient(glm).expect("divisor");
    let r = match c.exact_div(glc) {
        Ok(q) => h.sub(&g.mul_term(&m, &q)),
        Err(_) => h.scale(glc).sub(&g.mul_term(&m, &c)),
    };
    strip_nonnull_content(&r.reduce_coeffs(&spec.null), &spec.nonnull)
}

/// Divides out of the coefficients every power of a nonnull condition that
/// they share, then the numeric content. The ideal is unchanged at every
/// point of the cell.
fn strip_nonnull_content(h: &ParamPoly, w: &[ParamScalar]) -> ParamPoly {
    let mut h = h.clone();
    for f in w.iter().filter(|f| !f.is_constant()) {
        while !h.is_zero() && h.terms().iter().all(|(_, c)| c.exact_div(f).is_ok()) {
            h = h.map_coeffs(|c| c.exact_div(f).expect("checked"));
        }
    }
    h.primitive()
}

impl Engine<'_> {
    fn partition(&self, t: &[PTriple]) -> NMPartition {
        let lms: Vec<Exponent> = t.iter().map(|q| lm(q).clone()).collect();
        self.division.partition(&lms)
    }

    /// Parametric completion. With `pending` empty the basis is a fresh set
    /// of generators; otherwise it is a partial involutive basis and
    /// `pending` the queue to resume from.
    pub(super) fn gbi_param(&mut self, basis: Vec<PTriple>, mut spec: Specification, pending: Vec<PTriple>) -> Outcome {
        if self.tracing() {
            let [n, w] = self.names.spec(&spec);
            let args = vec![self.names.triple_polys(&basis), n, w, self.names.triple_polys(&pending)];
            self.call("GBI", args);
        } else {
            self.depth += 1;
        }
        let out = self.gbi_inner(basis, &mut spec, pending);
        if self.tracing() {
            let [n, w] = self.names.spec(match &out {
                Outcome::Done { spec, .. } | Outcome::Branch { spec, .. } => spec,
            });
            let fields = match &out {
                Outcome::Done { basis, .. } => {
                    let g = if basis.is_empty() { "{0}".into() } else { self.names.triple_polys(basis) };
                    vec!["true".into(), "0".into(), g, n, w]
                }
                Outcome::Branch { p, basis, pending, .. } => vec![
                    "false".into(),
                    self.names.triple(p),
                    self.names.triple_polys(basis),
                    n,
                    w,
                    self.names.triple_polys(pending),
                ],
            };
            self.ret(fields);
        }
        self.depth -= 1;
        out
    }

    fn gbi_inner(&mut self, basis: Vec<PTriple>, spec: &mut Specification, pending: Vec<PTriple>) -> Outcome {
        let mut seq = 0usize;
        let mut t: Vec<PTriple>;
        let mut q: Queue;
        if pending.is_empty() {
            let mut b = number(basis, &mut seq);
            loop {
                if b.is_empty() {
                    return Outcome::Done { basis: Vec::new(), spec: spec.clone() };
                }
                let (_, first) = b.remove(self.select(&b));
                match self.check(first, spec) {
                    Check::Ready(p) => {
                        t = vec![p];
                        q = b;
                        break;
                    }
                    Check::Stripped(f) => {
                        if !f.is_zero() {
                            b.push((seq, Triple::root(f)));
                            seq += 1;
                        }
                    }
                    Check::Undecided(p) => {
                        return Outcome::Branch { p, basis: Vec::new(), spec: spec.clone(), pending: strip_seq(b) };
                    }
                }
            }
        } else {
            t = basis;
            q = number(pending, &mut seq);
        }
        self.note_state(&t, &q);

        while !q.is_empty() {
            match self.head_reduce(&t, spec, q) {
                Ok(next) => q = next,
                Err((p, rest)) => {
                    return Outcome::Branch { p, basis: t, spec: spec.clone(), pending: strip_seq(rest) };
                }
            }
            if q.is_empty() {
                break;
            }
            let (_, p) = q.remove(self.select(&q));
            let p = match self.check(p, spec) {
                Check::Ready(p) => p,
                Check::Stripped(f) => {
                    if !f.is_zero() {
                        q.push((seq, Triple::root(f)));
                        seq += 1;
                    }
                    continue;
                }
                Check::Undecided(p) => {
                    return Outcome::Branch { p, basis: t, spec: spec.clone(), pending: strip_seq(q) };
                }
            };
            if self.tracing() {
                self.note("p", vec![self.names.triple(&p)]);
                self.note("Q", vec![self.names.polys(q.iter().map(|(_, t)| &t.poly))]);
            }
            let plm = lm(&p).clone();
            if Some(&plm) == p.anc.lm() {
                let mut k = 0;
                while k < t.len() {
                    if lm(&t[k]).is_divisible_by(&plm) && *lm(&t[k]) != plm {
                        q.push((seq, t.remove(k)));
                        seq += 1;
                    } else {
                        k += 1;
                    }
                }
            }
            let h = self.tail_normal_form(&p, &t, spec);
            t.push(Triple { poly: h, anc: p.anc, nm_used: p.nm_used });

            let part = self.partition(&t);
            for (k, g) in t.iter_mut().enumerate() {
                let nm = part.nonmultiplicative(k);
                for x in nm.difference(g.nm_used).iter() {
                    q.push((seq, Triple { poly: g.poly.mul_var(x), anc: g.anc.clone(), nm_used: VarSet::EMPTY }));
                    seq += 1;
                    g.nm_used = g.nm_used.intersection(nm).union(VarSet::singleton(x));
                }
            }
            self.note_state(&t, &q);
        }
        Outcome::Done { basis: t, spec: spec.clone() }
    }

    fn note_state(&mut self, t: &[PTriple], q: &Queue) {
        if self.tracing() {
            self.note("T", vec![self.names.triple_polys(t)]);
            self.note("Q", vec![self.names.polys(q.iter().map(|(_, t)| &t.poly))]);
        }
    }

    /// Smallest leading monomial, ties by insertion.
    fn select(&self, q: &Queue) -> usize {
        let mut best = 0;
        for k in 1..q.len() {
            let o = self.xord.compare(lm(&q[k].1), lm(&q[best].1)).then(q[k].0.cmp(&q[best].0));
            if o == Ordering::Less {
                best = k;
            }
        }
        best
    }

    /// Makes sure the leading coefficient of a triple about to enter the
    /// basis is decided. Null leading terms are stripped and recorded in `N`.
    fn check(&mut self, p: PTriple, spec: &mut Specification) -> Check {
        let mut f = p.poly.clone();
        let mut stripped = false;
        while let Some(lc) = f.lc() {
            match decide(lc, &spec.null, &spec.nonnull) {
                Decision::Nonnull => break,
                Decision::Undecided(_) => {
                    return if stripped { Check::Undecided(Triple::root(f)) } else { Check::Undecided(p) };
                }
                Decision::Null => {
                    let mut gens = spec.null.clone();
                    gens.push(lc.clone());
                    spec.null = buchberger_reduced(&gens, &self.aord);
                    f = f.drop_leading_term();
                    stripped = true;
                }
            }
        }
        if stripped {
            Check::Stripped(f.reduce_coeffs(&spec.null).primitive())
        } else {
            Check::Ready(p)
        }
    }

    /// Head-reduces every queue element modulo the basis. Elements that
    /// vanish are dropped together with the pending prolongations of the
    /// element itself. Fails with the partially reduced triple when a new
    /// leading coefficient cannot be decided.
    #[allow(clippy::result_large_err)]
    fn head_reduce(&mut self, t: &[PTriple], spec: &mut Specification, q: Queue) -> Result<Queue, (PTriple, Queue)> {
        if self.tracing() {
            let [n, w] = self.names.spec(spec);
            let args = vec![self.names.triple_polys(t), n, w, self.names.polys(q.iter().map(|(_, t)| &t.poly))];
            self.call("HeadReduce", args);
        } else {
            self.depth += 1;
        }
        let part = self.partition(t);
        let mut pending = q;
        pending.reverse();
        let mut out: Queue = Vec::new();
        let mut failed = None;
        while let Some((s, p)) = pending.pop() {
            match self.head_normal_form(&p, t, &part, spec) {
                Head::Undecided(h) => {
                    let p = if h.lm() == p.poly.lm() { Triple { poly: h, ..p } } else { Triple::root(h) };
                    pending.reverse();
                    out.append(&mut pending);
                    failed = Some(p);
                    break;
                }
                Head::Done(h) if !h.is_zero() => {
                    if h.lm() != p.poly.lm() {
                        out.push((s, Triple::root(h)));
                    } else {
                        out.push((s, p));
                    }
                }
                Head::Done(_) => {
                    if p.poly.lm() == p.anc.lm() {
                        // an equal polynomial may still sit in the basis with its own prolongations
                        pending.retain(|(_, r)| r.anc != p.poly || t.iter().any(|b| b.anc.lm() == r.anc.lm()));
                    }
                }
            }
        }
        if self.tracing() {
            let [n, w] = self.names.spec(spec);
            let queue = self.names.polys(out.iter().map(|(_, t)| &t.poly));
            let fields = match &failed {
                None => vec!["true".into(), "0".into(), "T".into(), n, w, queue],
                Some(p) => vec!["false".into(), self.names.triple(p), "T".into(), n, w, queue],
            };
            self.ret(fields);
        }
        self.depth -= 1;
        match failed {
            None => Ok(out),
            Some(p) => Err((p, out)),
        }
    }

    fn head_normal_form(&mut self, p: &PTriple, t: &[PTriple], part: &NMPartition, spec: &mut Specification) -> Head {
        if self.tracing() {
            let [n, w] = self.names.spec(spec);
            let args = vec![self.names.triple(p), "T".into(), n, w];
            self.call("HeadNormalForm", args);
        } else {
            self.depth += 1;
        }
        let r = self.head_nf_inner(p, t, part, spec);
        if self.tracing() {
            let [n, w] = self.names.spec(spec);
            let fields = match &r {
                Head::Done(h) => vec!["true".into(), self.names.poly(h), "T".into(), n, w],
                Head::Undecided(h) => vec!["false".into(), self.names.poly(h), "T".into(), n, w],
            };
            self.ret(fields);
        }
        self.depth -= 1;
        r
    }

    fn head_nf_inner(&mut self, p: &PTriple, t: &[PTriple], part: &NMPartition, spec: &mut Specification) -> Head {
        let mut h = p.poly.clone();
        let Some(hlm) = h.lm().cloned() else { return Head::Done(h) };
        let Some(k) = part.inv_divisor(&hlm, &self.xord) else { return Head::Done(h) };
        let anc_lm = p.anc.lm().expect("nonzero ancestor");
        if self.opts.criteria && hlm != *anc_lm && criteria(&hlm, anc_lm, t[k].anc.lm().expect("nonzero ancestor")) {
            self.stats.criteria_hits += 1;
            return Head::Done(ParamPoly::zero(&self.xord, &self.aord));
        }
        while let Some(hlm) = h.lm().cloned() {
            let Some(k) = part.inv_divisor(&hlm, &self.xord) else { break };
            h = reduce_step(&h, &hlm, &t[k].poly, spec);
            self.stats.reductions += 1;
            let nc = self.newcond(&h, spec);
            *spec = nc.spec;
            if nc.cd.is_some() {
                return Head::Undecided(nc.poly);
            }
            h = nc.poly;
        }
        Head::Done(h)
    }

    pub(super) fn tail_normal_form(&mut self, p: &PTriple, t: &[PTriple], spec: &Specification) -> ParamPoly {
        if self.tracing() {
            let args = vec![self.names.triple(p), self.names.triple_polys(t)];
            self.call("TailNormalForm", args);
        } else {
            self.depth += 1;
        }
        let part = self.partition(t);
        let h = self.tail_reduce(&p.poly, t, &part, spec);
        if self.tracing() {
            self.ret(vec![self.names.poly(&h)]);
        }
        self.depth -= 1;
        h
    }

    fn tail_reduce(&mut self, f: &ParamPoly, t: &[PTriple], part: &NMPartition, spec: &Specification) -> ParamPoly {
        let mut h = f.clone();
        let mut pos = 1;
        while pos < h.len() {
            let e = h.terms()[pos].0.clone();
            match part.inv_divisor(&e, &self.xord) {
                Some(k) => {
                    h = reduce_step(&h, &e, &t[k].poly, spec);
                    self.stats.reductions += 1;
                    pos = 1;
                }
                None => pos += 1,
            }
        }
        h
    }

    /// Output form of a completed basis: tails reduced against the final
    /// set, coefficients reduced modulo `N`, integer-primitive, sorted by
    /// decreasing leading monomial.
    pub(super) fn finish(&mut self, t: Vec<PTriple>, spec: &Specification) -> Vec<ParamPoly> {
        let part = self.partition(&t);
        let mut out: Vec<ParamPoly> =
            t.iter().map(|q| self.tail_reduce(&q.poly, &t, &part, spec).reduce_coeffs(&spec.null).primitive()).collect();
        out.sort_by(|a, b| self.xord.compare(b.lm().unwrap(), a.lm().unwrap()));
        // a term free of x with a nonnull coefficient generates the unit ideal
        if let Some(unit) = out.iter().find(|f| f.lm().is_some_and(|e| e.is_one())) {
            let one = ParamPoly::term(&self.xord, &self.aord, unit.lm().unwrap().clone(), ParamScalar::one(&self.aord));
            return vec![one];
        }
        out
    }
}

fn number(items: Vec<PTriple>, seq: &mut usize) -> Queue {
    items
        .into_iter()
        .map(|t| {
            *seq += 1;
            (*seq - 1, t)
        })
        .collect()
}

fn strip_seq(q: Queue) -> Vec<PTriple> {
    q.into_iter().map(|(_, t)| t).collect()
}
