//! Command-line driver: problem files in, reports out.
//!
//! Exit status is 0 on success, 1 for usage and parse errors and 2 when
//! `verify` finds a failing point.

mod problem;
mod report;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{rngs::StdRng, SeedableRng};
use serde::Serialize;

use crate::engine::{Cell, Engine, EngineOptions, TraceEvent};
use crate::involution::prop1_completion;
use crate::verify::{check_cell_at, sample_point, satisfies_spec};

pub use problem::{division_string, ordering_string, parse_poly, parse_poly_at, parse_problem, ParseError, ProblemFile, Ring};
pub use report::{cell_report, render_report, table, CellCheck, CellReport, CisReport, Meta, PointFailure, StatsReport, VerifyReport, SCHEMA};

#[derive(Debug, Parser)]
#[command(name = "cisys", version, about = "Comprehensive involutive systems of parametric polynomial ideals")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute a comprehensive involutive system.
    Compute(Common),
    /// Box completion of a minimal Gröbner basis.
    Complete(Common),
    /// Check every cell at sampled parameter points.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Points per cell.
        #[arg(long, default_value_t = 25)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Compute with one line per subalgorithm call and return.
    Trace(Common),
}

#[derive(Debug, Args)]
struct Common {
    /// Problem file, `-` for standard input.
    file: PathBuf,
    /// Overrides the division of the problem file.
    #[arg(long)]
    division: Option<String>,
    #[arg(long, value_enum, default_value_t = Toggle::On)]
    criteria: Toggle,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    output: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Toggle {
    On,
    Off,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// Runs the engine on a parsed problem.
pub fn compute(p: &ProblemFile, criteria: bool, sink: Option<&mut dyn FnMut(&TraceEvent)>) -> (Vec<Cell>, crate::engine::EngineStats) {
    let mut e = Engine::new(&p.order_vars, &p.order_params, &p.division).options(EngineOptions { criteria }).names(p.names());
    if let Some(s) = sink {
        e = e.trace(s);
    }
    let cells = e.run(&p.generators);
    (cells, e.stats())
}

/// Samples up to `samples` points per cell and checks each with the
/// independent oracles. A point lying in more or fewer than one cell is a
/// failure.
pub fn verify_cells(p: &ProblemFile, cells: &[Cell], samples: usize, seed: u64) -> VerifyReport {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut checks = Vec::new();
    for (i, c) in cells.iter().enumerate() {
        let mut ck = CellCheck { cell: i + 1, sampled: 0, passed: 0, failures: Vec::new() };
        for _ in 0..samples {
            let Some(pt) = sample_point(&c.spec, p.params.len(), &mut rng, 100) else { break };
            ck.sampled += 1;
            let hits = cells.iter().filter(|d| satisfies_spec(&pt, &d.spec)).count();
            let res = if hits != 1 { Err(format!("point lies in {hits} cells")) } else { check_cell_at(c, &p.generators, &p.division, &pt) };
            match res {
                Ok(()) => ck.passed += 1,
                Err(reason) => ck.failures.push(PointFailure { point: pt.iter().map(|r| r.to_string()).collect(), reason }),
            }
        }
        checks.push(ck);
    }
    let failures = checks.iter().map(|c| c.failures.len()).sum();
    VerifyReport { schema: "cisys.verify/1".into(), seed, samples, cells: checks, failures }
}

#[derive(Serialize)]
struct CompletionReport<'a> {
    schema: &'a str,
    basis: Vec<String>,
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn load(c: &Common) -> Result<ProblemFile, String> {
    let mut text = String::new();
    let r = if c.file.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(&c.file).map(|t| text = t)
    };
    r.map_err(|e| format!("{}: {e}", c.file.display()))?;
    let mut p = parse_problem(&text).map_err(|e| format!("{}: {e}", c.file.display()))?;
    if let Some(d) = &c.division {
        let probe = format!("vars: {}\ndivision: {d}\n", p.vars.join(", "));
        p.division = parse_problem(&probe).map_err(|e| format!("--division: {}", e.msg))?.division;
    }
    Ok(p)
}

/// Parses `args` (program name first) and runs the subcommand, writing
/// results to `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{}", e.render()) } else { write!(out, "{}", e.render()) };
            return code;
        }
    };
    let common = match &cli.cmd {
        Command::Compute(c) | Command::Complete(c) | Command::Trace(c) => c,
        Command::Verify { common, .. } => common,
    };
    let p = match load(common) {
        Ok(p) => p,
        Err(m) => {
            let _ = writeln!(err, "error: {m}");
            return 1;
        }
    };
    let criteria = common.criteria == Toggle::On;
    let text = common.output == Format::Text;
    let (body, code) = match &cli.cmd {
        Command::Compute(_) => {
            let (cells, stats) = compute(&p, criteria, None);
            let r = render_report(&p, &cells, stats, criteria);
            (if text { r.to_text() } else { json(&r) }, 0)
        }
        Command::Complete(_) => match prop1_completion(&p.generators, &p.division) {
            Ok(g) => {
                let names = p.names();
                let basis: Vec<String> = g.iter().map(|f| names.poly(f)).collect();
                if text {
                    (basis.join("\n") + "\n", 0)
                } else {
                    (json(&CompletionReport { schema: "cisys.completion/1", basis }), 0)
                }
            }
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return 1;
            }
        },
        Command::Verify { samples, seed, .. } => {
            let (cells, _) = compute(&p, criteria, None);
            let r = verify_cells(&p, &cells, *samples, *seed);
            let code = if r.failures == 0 { 0 } else { 2 };
            (if text { r.to_text() } else { json(&r) }, code)
        }
        Command::Trace(_) if text => {
            let mut ok = true;
            let mut sink = |e: &TraceEvent| ok &= writeln!(out, "{e}").is_ok();
            compute(&p, criteria, Some(&mut sink));
            (String::new(), if ok { 0 } else { 1 })
        }
        Command::Trace(_) => {
            let mut events = Vec::new();
            let mut sink = |e: &TraceEvent| events.push(e.clone());
            compute(&p, criteria, Some(&mut sink));
            (json(&events), 0)
        }
    };
    if out.write_all(body.as_bytes()).is_err() {
        return 1;
    }
    code
}
