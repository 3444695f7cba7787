use std::fmt;

use serde::Serialize;

use super::spec::Specification;
use crate::involution::{Triple, VarSet};
use crate::paramring::sort_factors;
use crate::polyalg::{ParamPoly, ParamScalar};

/// Parameter and variable names used when rendering polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Names {
    pub params: Vec<String>,
    pub vars: Vec<String>,
}

impl Names {
    pub fn new(params: Vec<String>, vars: Vec<String>) -> Self {
        Names { params, vars }
    }

    /// `a1..am` and `x1..xn`.
    pub fn generic(m: usize, n: usize) -> Self {
        Names {
            params: (1..=m).map(|i| format!("a{i}")).collect(),
            vars: (1..=n).map(|i| format!("x{i}")).collect(),
        }
    }

    pub fn poly(&self, f: &ParamPoly) -> String {
        f.fmt_with(&self.params, &self.vars)
    }

    pub fn scalar(&self, c: &ParamScalar) -> String {
        c.fmt_with(&self.params)
    }

    /// Conditions, largest first.
    pub fn cond_list(&self, cs: &[ParamScalar]) -> Vec<String> {
        let mut v = cs.to_vec();
        sort_factors(&mut v);
        v.iter().rev().map(|c| self.scalar(c)).collect()
    }

    pub fn conds(&self, cs: &[ParamScalar]) -> String {
        format!("{{{}}}", self.cond_list(cs).join(", "))
    }

    pub fn polys<'a, I: IntoIterator<Item = &'a ParamPoly>>(&self, fs: I) -> String {
        let v: Vec<String> = fs.into_iter().map(|f| self.poly(f)).collect();
        format!("{{{}}}", v.join(", "))
    }

    pub fn varset(&self, s: VarSet) -> String {
        let v: Vec<&str> = s.iter().map(|i| self.vars[i].as_str()).collect();
        format!("{{{}}}", v.join(", "))
    }

    pub fn triple(&self, t: &Triple<ParamPoly>) -> String {
        format!("[{}, {}, {}]", self.poly(&t.poly), self.poly(&t.anc), self.varset(t.nm_used))
    }

    pub fn triple_polys(&self, ts: &[Triple<ParamPoly>]) -> String {
        self.polys(ts.iter().map(|t| &t.poly))
    }

    pub fn spec(&self, s: &Specification) -> [String; 2] {
        [self.conds(&s.null), self.conds(&s.nonnull)]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TraceKind {
    Call,
    Return,
    Note,
}

/// One line of an execution trace: a subalgorithm entry with its arguments,
/// its return value, or an assignment inside a subalgorithm. `fields` holds
/// the rendered arguments or result components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceEvent {
    pub depth: usize,
    pub kind: TraceKind,
    pub name: &'static str,
    pub fields: Vec<String>,
}

impl fmt::Display for TraceEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pad = "  ".repeat(self.depth);
        match self.kind {
            TraceKind::Call => write!(f, "{pad}→ {}({})", self.name, self.fields.join(", ")),
            TraceKind::Return => write!(f, "{pad}= ({})", self.fields.join(", ")),
            TraceKind::Note => write!(f, "{pad}{} := {}", self.name, self.fields.join(", ")),
        }
    }
}
