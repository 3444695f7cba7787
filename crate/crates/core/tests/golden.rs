mod common;

use cisys::cli::{parse_poly, parse_problem, CisReport, Ring};
use cisys::Exponent;
use common::*;

fn golden(name: &str) -> String {
    std::fs::read_to_string(fixture(&format!("tests/golden/{name}"))).unwrap()
}

#[test]
fn example2_trace_matches_golden() {
    let (code, out, _) = run_cli(&["trace", &fixture("examples/problems/example2.txt"), "--output", "text"]);
    assert_eq!(code, 0);
    assert_eq!(out, golden("example2.trace"));
}

#[test]
fn compute_reports_match_golden() {
    for name in ["example1", "example2"] {
        let (code, out, err) = run_cli(&["compute", &fixture(&format!("examples/problems/{name}.txt"))]);
        assert_eq!(code, 0, "{err}");
        assert_eq!(out, golden(&format!("{name}.json")), "{name}");
    }
}

#[test]
fn reports_are_deterministic() {
    let file = fixture("examples/problems/example1.txt");
    let first = run_cli(&["compute", &file]);
    for _ in 0..3 {
        assert_eq!(run_cli(&["compute", &file]), first);
    }
}

/// Every polynomial printed in a report parses back to a polynomial that prints the same.
#[test]
fn report_polynomials_round_trip() {
    for name in ["example1", "example2"] {
        let r: CisReport = serde_json::from_str(&golden(&format!("{name}.json"))).unwrap();
        let p = parse_problem(&std::fs::read_to_string(fixture(&format!("examples/problems/{name}.txt"))).unwrap()).unwrap();
        let ring = Ring { params: &p.params, vars: &p.vars, xord: &p.order_vars, aord: &p.order_params };
        let names = p.names();
        for c in &r.cells {
            for s in &c.basis {
                assert_eq!(&names.poly(&parse_poly(s, &ring).unwrap()), s);
            }
            for s in c.null.iter().chain(&c.nonnull) {
                let q = parse_poly(s, &ring).unwrap();
                assert_eq!(q.len(), 1);
                let c = q.coeff(&Exponent::one(p.vars.len())).unwrap();
                assert_eq!(&names.scalar(c), s);
            }
        }
    }
}

#[test]
fn problem_files_round_trip() {
    for name in ["example1", "example2"] {
        let p = parse_problem(&std::fs::read_to_string(fixture(&format!("examples/problems/{name}.txt"))).unwrap()).unwrap();
        let text = p.to_string();
        let q = parse_problem(&text).unwrap();
        assert_eq!(p, q);
        assert_eq!(q.to_string(), text);
    }
}
