use serde::{Deserialize, Serialize};

use super::problem::ProblemFile;
use crate::engine::{Cell, EngineStats, Names};

pub const SCHEMA: &str = "cisys.report/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellReport {
    pub basis: Vec<String>,
    pub null: Vec<String>,
    pub nonnull: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsReport {
    pub branches: usize,
    pub incompatible: usize,
    pub reductions: usize,
    pub criteria_hits: usize,
    pub restarts: usize,
}

impl From<EngineStats> for StatsReport {
    fn from(s: EngineStats) -> Self {
        StatsReport {
            branches: s.branches,
            incompatible: s.incompatible,
            reductions: s.reductions,
            criteria_hits: s.criteria_hits,
            restarts: s.restarts,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub params: Vec<String>,
    pub vars: Vec<String>,
    pub order_vars: String,
    pub order_params: String,
    pub division: String,
    pub criteria: bool,
    pub engine_version: String,
    pub stats: StatsReport,
}

/// A comprehensive involutive system in printable form. Condition sets are
/// listed largest first; an empty basis is the zero ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CisReport {
    pub schema: String,
    pub meta: Meta,
    pub cells: Vec<CellReport>,
}

pub fn cell_report(c: &Cell, names: &Names) -> CellReport {
    CellReport {
        basis: c.basis.iter().map(|g| names.poly(g)).collect(),
        null: names.cond_list(&c.spec.null),
        nonnull: names.cond_list(&c.spec.nonnull),
    }
}

pub fn render_report(p: &ProblemFile, cells: &[Cell], stats: EngineStats, criteria: bool) -> CisReport {
    let names = p.names();
    CisReport {
        schema: SCHEMA.into(),
        meta: Meta {
            params: p.params.clone(),
            vars: p.vars.clone(),
            order_vars: p.order_vars_string(),
            order_params: p.order_params_string(),
            division: p.division_string(),
            criteria,
            engine_version: env!("CARGO_PKG_VERSION").into(),
            stats: stats.into(),
        },
        cells: cells.iter().map(|c| cell_report(c, &names)).collect(),
    }
}

fn braces(v: &[String], empty: &str) -> String {
    if v.is_empty() {
        empty.into()
    } else {
        format!("{{{}}}", v.join(", "))
    }
}

/// Rows padded to common column widths.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (k, c) in r.iter().enumerate() {
            w[k] = w[k].max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let v: Vec<String> = cells.iter().enumerate().map(|(k, c)| format!("{c:<width$}", width = w[k])).collect();
        v.join(" | ").trim_end().to_string() + "\n"
    };
    let sep: Vec<String> = w.iter().map(|&n| "-".repeat(n)).collect();
    let mut s = line(header.to_vec()) + &sep.join("-+-") + "\n";
    for r in rows {
        s += &line(r.iter().map(|c| c.as_str()).collect());
    }
    s
}

impl CisReport {
    pub fn to_text(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .cells
            .iter()
            .enumerate()
            .map(|(i, c)| vec![(i + 1).to_string(), braces(&c.basis, "{0}"), braces(&c.null, "{}"), braces(&c.nonnull, "{}")])
            .collect();
        let m = &self.meta;
        format!(
            "{}\nvars {} params {} division {} criteria {}\nbranches {} incompatible {} reductions {} criteria hits {} restarts {}\n",
            table(&["#", "basis", "null", "nonnull"], &rows).trim_end(),
            m.order_vars,
            m.order_params,
            m.division,
            if m.criteria { "on" } else { "off" },
            m.stats.branches,
            m.stats.incompatible,
            m.stats.reductions,
            m.stats.criteria_hits,
            m.stats.restarts,
        )
    }
}

/// Outcome of checking one cell at sampled points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellCheck {
    pub cell: usize,
    pub sampled: usize,
    pub passed: usize,
    pub failures: Vec<PointFailure>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointFailure {
    pub point: Vec<String>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub schema: String,
    pub seed: u64,
    pub samples: usize,
    pub cells: Vec<CellCheck>,
    pub failures: usize,
}

impl VerifyReport {
    pub fn to_text(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .cells
            .iter()
            .map(|c| {
                let status = match (c.sampled, c.failures.is_empty()) {
                    (0, _) => "no rational point found".to_string(),
                    (_, true) => "ok".to_string(),
                    (_, false) => format!("FAIL at ({}): {}", c.failures[0].point.join(", "), c.failures[0].reason),
                };
                vec![c.cell.to_string(), format!("{}/{}", c.passed, c.sampled), status]
            })
            .collect();
        format!("{}failures {}\n", table(&["cell", "passed", "status"], &rows), self.failures)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_alignment() {
        let t = table(&["#", "basis"], &[vec!["1".into(), "{x}".into()], vec!["10".into(), "{y^2}".into()]]);
        assert_eq!(t, "#  | basis\n---+------\n1  | {x}\n10 | {y^2}\n");
    }
}
