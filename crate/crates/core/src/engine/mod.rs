//! Comprehensive involutive systems: specifications, condition discovery,
//! the parametric completion and the depth-first branching driver.
//!
//! ```
//! use cisys::engine::cominvsys;
//! use cisys::involution::DivisionSpec;
//! use cisys::{Exponent, MonomialOrdering, ParamPoly, QPoly};
//!
//! let (xo, ao) = (MonomialOrdering::lex(2), MonomialOrdering::lex(2));
//! let a = QPoly::var(&ao, 0);
//! let b = QPoly::var(&ao, 1);
//! let f = vec![
//!     ParamPoly::term(&xo, &ao, Exponent::new(vec![2, 0]), a),
//!     ParamPoly::term(&xo, &ao, Exponent::new(vec![0, 2]), b),
//! ];
//! let cells = cominvsys(&f, &DivisionSpec::janet(2), &xo, &ao);
//! assert_eq!(cells.len(), 4);
//! assert_eq!(cells[0].basis.len(), 3);
//! ```

mod complete;
mod spec;
mod trace;

use crate::involution::{DivisionSpec, Triple};
use crate::polyalg::{MonomialOrdering, ParamPoly, ParamScalar};

pub use spec::{canspec, decide, newcond, Decision, NewCond, Specification};
pub use trace::{Names, TraceEvent, TraceKind};

use complete::Outcome;

pub type PTriple = Triple<ParamPoly>;

/// One member of a comprehensive involutive system: a basis valid at every
/// parameter point satisfying the specification. An empty basis stands for
/// the zero ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub basis: Vec<ParamPoly>,
    pub spec: Specification,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EngineOptions {
    pub criteria: bool,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions { criteria: true }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EngineStats {
    pub branches: usize,
    pub incompatible: usize,
    pub reductions: usize,
    pub criteria_hits: usize,
    pub restarts: usize,
}

/// Partial state after the leading coefficients of the first generators
/// have been decided.
#[derive(Debug, Clone)]
struct Seed {
    basis: Vec<PTriple>,
    spec: Specification,
}

#[derive(Debug, Clone, Copy)]
enum Mode {
    Seed { index: usize, last: bool },
    Resume,
}

/// The branching driver. Holds orderings, the division, options, counters
/// and an optional trace sink.
pub struct Engine<'s> {
    xord: MonomialOrdering,
    aord: MonomialOrdering,
    division: DivisionSpec,
    opts: EngineOptions,
    names: Names,
    stats: EngineStats,
    sink: Option<&'s mut dyn FnMut(&TraceEvent)>,
    depth: usize,
    cells: Vec<Cell>,
}

impl<'s> Engine<'s> {
    pub fn new(xord: &MonomialOrdering, aord: &MonomialOrdering, division: &DivisionSpec) -> Self {
        Engine {
            xord: xord.clone(),
            aord: aord.clone(),
            division: division.clone(),
            opts: EngineOptions::default(),
            names: Names::generic(aord.nvars(), xord.nvars()),
            stats: EngineStats::default(),
            sink: None,
            depth: 0,
            cells: Vec::new(),
        }
    }

    pub fn options(mut self, opts: EngineOptions) -> Self {
        self.opts = opts;
        self
    }

    pub fn names(mut self, names: Names) -> Self {
        self.names = names;
        self
    }

    pub fn trace(mut self, sink: &'s mut dyn FnMut(&TraceEvent)) -> Self {
        self.sink = Some(sink);
        self
    }

    pub fn stats(&self) -> EngineStats {
        self.stats
    }

    /// Runs the whole computation; cells come out in depth-first order with
    /// the nonnull branch explored first.
    pub fn run(&mut self, f: &[ParamPoly]) -> Vec<Cell> {
        self.cells.clear();
        let f: Vec<ParamPoly> = f.iter().filter(|p| !p.is_zero()).cloned().collect();
        let args = vec![self.names.polys(&f)];
        self.call("ComInvSys", args);
        if f.is_empty() {
            self.emit(Vec::new(), Specification::default());
        } else {
            let basis: Vec<PTriple> = f.iter().map(|p| Triple::root(p.clone())).collect();
            let mut level = vec![Seed { basis, spec: Specification::default() }];
            for index in 0..f.len() {
                let last = index + 1 == f.len();
                let mut next = Vec::new();
                for s in level {
                    let p = s.basis[index].clone();
                    self.branch(p, s.basis, s.spec, Vec::new(), Mode::Seed { index, last }, &mut next);
                }
                level = next;
            }
        }
        self.ret(vec![format!("{} cells", self.cells.len())]);
        self.depth -= 1;
        std::mem::take(&mut self.cells)
    }

    fn branch(
        &mut self,
        p: PTriple,
        basis: Vec<PTriple>,
        spec: Specification,
        pending: Vec<PTriple>,
        mode: Mode,
        acc: &mut Vec<Seed>,
    ) {
        self.stats.branches += 1;
        let [n, w] = self.names.spec(&spec);
        let args = vec![self.names.triple(&p), self.names.triple_polys(&basis), n, w, self.names.triple_polys(&pending)];
        self.call("Branch", args);
        let (ok, spec) = canspec(&spec, &self.aord);
        if !ok {
            self.stats.incompatible += 1;
            self.note("incompatible", vec![self.names.spec(&spec).join(", ")]);
            self.depth -= 1;
            return;
        }
        let nc = self.newcond(&p.poly, &spec);
        let p = retarget(p, nc.poly, &nc.spec.null);
        let spec = nc.spec;
        match (nc.cd, mode) {
            (Some(c), _) => {
                self.branch(p.clone(), basis.clone(), spec.with_nonnull(&c), pending.clone(), mode, acc);
                self.branch(p, basis, spec.with_null(&c), pending, mode, acc);
            }
            (None, Mode::Seed { index, last }) => {
                let mut basis = basis;
                basis[index] = p;
                let basis: Vec<PTriple> = basis.into_iter().map(|t| reduce_triple(t, &spec.null)).collect();
                if last {
                    let basis = basis.into_iter().filter(|t| !t.poly.is_zero()).collect();
                    self.complete(basis, spec, Vec::new(), acc);
                } else {
                    acc.push(Seed { basis, spec });
                }
            }
            (None, Mode::Resume) => self.resume(p, basis, spec, pending, acc),
        }
        self.depth -= 1;
    }

    /// Re-enters the completion after a branch point. If reducing the
    /// partial basis modulo the new null conditions changes any leading
    /// monomial, the completion restarts from the surviving polynomials.
    fn resume(&mut self, p: PTriple, t: Vec<PTriple>, spec: Specification, pending: Vec<PTriple>, acc: &mut Vec<Seed>) {
        let n = &spec.null;
        let reduced: Vec<PTriple> = t.iter().map(|q| reduce_triple(q.clone(), n)).collect();
        let stable = t.iter().zip(&reduced).all(|(q, r)| q.poly.lm() == r.poly.lm() && q.anc.lm() == r.anc.lm());
        let mut queue: Vec<PTriple> = pending
            .into_iter()
            .map(|q| {
                let r = reduce_triple(q.clone(), n);
                if r.poly.lm() == q.poly.lm() && r.anc.lm() == q.anc.lm() {
                    r
                } else {
                    Triple::root(r.poly)
                }
            })
            .filter(|q| !q.poly.is_zero())
            .collect();
        if !p.poly.is_zero() {
            queue.push(p);
        }
        if !stable {
            self.stats.restarts += 1;
            let all = reduced.into_iter().chain(queue).filter(|q| !q.poly.is_zero()).map(|q| Triple::root(q.poly)).collect();
            self.complete(all, spec, Vec::new(), acc);
        } else if queue.is_empty() {
            let polys = self.finish(reduced, &spec);
            self.emit(polys, spec);
        } else {
            self.complete(reduced, spec, queue, acc);
        }
    }

    fn complete(&mut self, basis: Vec<PTriple>, spec: Specification, pending: Vec<PTriple>, acc: &mut Vec<Seed>) {
        match self.gbi_param(basis, spec, pending) {
            Outcome::Done { basis, spec } => {
                let polys = self.finish(basis, &spec);
                self.emit(polys, spec);
            }
            Outcome::Branch { p, basis, spec, pending } => self.branch(p, basis, spec, pending, Mode::Resume, acc),
        }
    }

    fn emit(&mut self, basis: Vec<ParamPoly>, spec: Specification) {
        let cell = Cell { basis, spec };
        self.cells.push(cell);
        if self.sink.is_some() {
            let list: Vec<String> = self.cells.iter().map(|c| self.render_cell(c)).collect();
            self.note("List", list);
        }
    }

    fn render_cell(&self, c: &Cell) -> String {
        let b = if c.basis.is_empty() { "{0}".to_string() } else { self.names.polys(&c.basis) };
        let [n, w] = self.names.spec(&c.spec);
        format!("({b}, {n}, {w})")
    }

    pub(crate) fn newcond(&mut self, f: &ParamPoly, spec: &Specification) -> NewCond {
        let [n, w] = self.names.spec(spec);
        self.call("NewCond", vec![self.names.poly(f), n, w]);
        let r = newcond(f, spec);
        if self.sink.is_some() {
            let cd = self.names.conds(r.cd.as_slice());
            let [n, w] = self.names.spec(&r.spec);
            self.ret(vec![cd, self.names.poly(&r.poly), n, w]);
        }
        self.depth -= 1;
        r
    }

    fn event(&mut self, kind: TraceKind, name: &'static str, fields: Vec<String>) {
        let depth = self.depth;
        if let Some(sink) = self.sink.as_mut() {
            sink(&TraceEvent { depth, kind, name, fields });
        }
    }

    /// Opens a call; the matching `depth -= 1` is done by the caller.
    pub(crate) fn call(&mut self, name: &'static str, fields: Vec<String>) {
        self.event(TraceKind::Call, name, fields);
        self.depth += 1;
    }

    pub(crate) fn ret(&mut self, fields: Vec<String>) {
        self.event(TraceKind::Return, "", fields);
    }

    pub(crate) fn note(&mut self, name: &'static str, fields: Vec<String>) {
        self.event(TraceKind::Note, name, fields);
    }

    pub(crate) fn tracing(&self) -> bool {
        self.sink.is_some()
    }
}

/// Coefficients of polynomial and ancestor reduced modulo `N`.
fn reduce_triple(t: PTriple, n: &[ParamScalar]) -> PTriple {
    if n.is_empty() {
        return t;
    }
    Triple { poly: t.poly.reduce_coeffs(n), anc: t.anc.reduce_coeffs(n), nm_used: t.nm_used }
}

/// The triple after its polynomial was replaced by the output of
/// [`newcond`]: the ancestor is kept while the leading monomial is, and the
/// polynomial becomes its own ancestor otherwise.
fn retarget(p: PTriple, f: ParamPoly, n: &[ParamScalar]) -> PTriple {
    if f.lm() == p.poly.lm() {
        let anc = p.anc.reduce_coeffs(n);
        if anc.lm() == p.anc.lm() {
            return Triple { poly: f, anc, nm_used: p.nm_used };
        }
    }
    Triple::root(f)
}

/// Comprehensive involutive system of `F` with default options.
pub fn cominvsys(f: &[ParamPoly], d: &DivisionSpec, xord: &MonomialOrdering, aord: &MonomialOrdering) -> Vec<Cell> {
    Engine::new(xord, aord, d).run(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{Exponent, QPoly};

    fn ords() -> (MonomialOrdering, MonomialOrdering) {
        (MonomialOrdering::lex(2), MonomialOrdering::lex(2))
    }
    fn names() -> Names {
        Names::new(vec!["a".into(), "b".into()], vec!["x".into(), "y".into()])
    }
    fn term(c: ParamScalar, i: u32, j: u32) -> ParamPoly {
        let (xo, ao) = ords();
        ParamPoly::term(&xo, &ao, Exponent::new(vec![i, j]), c)
    }
    fn par(k: usize) -> ParamScalar {
        QPoly::var(&ords().1, k)
    }
    fn one() -> ParamScalar {
        QPoly::one(&ords().1)
    }
    fn render(cells: &[Cell]) -> Vec<String> {
        let n = names();
        cells
            .iter()
            .map(|c| {
                let b = if c.basis.is_empty() { "{0}".to_string() } else { n.polys(&c.basis) };
                let [nn, w] = n.spec(&c.spec);
                format!("{b} {nn} {w}")
            })
            .collect()
    }

    #[test]
    fn example_two_cells() {
        let (xo, ao) = ords();
        let f = vec![term(par(0), 2, 0), term(par(1), 0, 2)];
        let cells = cominvsys(&f, &DivisionSpec::janet(2), &xo, &ao);
        assert_eq!(
            render(&cells),
            vec![
                "{a*x^2, b*x*y^2, b*y^2} {} {a, b}",
                "{a*x^2} {b} {a}",
                "{b*y^2} {a} {b}",
                "{0} {a, b} {}",
            ]
        );
    }

    #[test]
    fn parameter_free_input_gives_one_cell() {
        let (xo, ao) = ords();
        let f = vec![term(one(), 1, 0), term(one(), 0, 1)];
        let cells = cominvsys(&f, &DivisionSpec::janet(2), &xo, &ao);
        assert_eq!(render(&cells), vec!["{x, y} {} {}"]);
        assert_eq!(render(&cominvsys(&[], &DivisionSpec::janet(2), &xo, &ao)), vec!["{0} {} {}"]);
    }

    #[test]
    fn undecided_coefficient_after_reduction() {
        // a x - 1, b x - 1: the reduction produces (a - b) as a new condition
        let (xo, ao) = ords();
        let f = vec![term(par(0), 1, 0).sub(&term(one(), 0, 0)), term(par(1), 1, 0).sub(&term(one(), 0, 0))];
        let mut engine = Engine::new(&xo, &ao, &DivisionSpec::janet(2)).names(names());
        let cells = engine.run(&f);
        assert!(engine.stats().branches > 4);
        assert!(cells.iter().any(|c| c.spec.nonnull.iter().any(|w| *w == par(0).sub(&par(1)))));
    }
}
