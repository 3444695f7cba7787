mod common;

use cisys::cli::{compute, parse_problem};
use cisys::engine::Cell;
use cisys::involution::{gbi, DivisionSpec};
use cisys::verify::{check_cell_at, satisfies_spec};
use cisys::{QPoly, Rational};
use common::*;
use proptest::prelude::*;
use proptest::test_runner::RngSeed;

fn cells_at<'c>(cells: &'c [Cell], pt: &[Rational]) -> Vec<&'c Cell> {
    cells.iter().filter(|c| satisfies_spec(pt, &c.spec)).collect()
}

/// Every grid point lies in exactly one cell and that cell's basis is a
/// minimal involutive basis of the specialized ideal there.
fn check_grid(text: &str, points: usize) -> Result<(), TestCaseError> {
    check_grid_with(text, points, true)
}

fn check_grid_with(text: &str, points: usize, criteria: bool) -> Result<(), TestCaseError> {
    let p = parse_problem(text).unwrap();
    let (cells, _) = compute(&p, criteria, None);
    for k in 0..points {
        let pt = [grid_value(k as u8), grid_value((k / 8) as u8)];
        let hit = cells_at(&cells, &pt);
        prop_assert_eq!(hit.len(), 1, "{} cells at {:?}\n{}", hit.len(), pt, text);
        if let Err(e) = check_cell_at(hit[0], &p.generators, &p.division, &pt) {
            return Err(TestCaseError::fail(format!("{e} at {pt:?}\n{text}")));
        }
    }
    Ok(())
}

#[test]
fn examples_partition_and_soundness_on_grid() {
    for p in [include_str!("../examples/problems/example1.txt"), include_str!("../examples/problems/example2.txt")] {
        check_grid(p, 256).unwrap();
    }
}

#[test]
fn janet_reversed_and_degrevlex_instances() {
    let texts = [
        "params: a, b\nvars: x, y\norder_vars: degrevlex(x, y)\ngenerators: a*x^2*y - y^3, b*x + y^2",
        "params: a, b\nvars: x, y\ndivision: pair:y,x:lex(y,x):adm\ngenerators: a*x^2*y - y^3, b*x + y^2",
        "params: a, b\nvars: x, y\ngenerators: a*x - 1, b*x - 1",
        "params: a, b\nvars: x, y\ngenerators: a*x^2 + b*y, (a - b)*x*y + y^2",
    ];
    for t in texts {
        check_grid(t, 64).unwrap();
    }
}

#[test]
fn parameter_free_input_matches_gbi() {
    let texts = [
        "vars: x, y\ngenerators: x^2 - y, x*y - 1",
        "vars: x, y, z\ngenerators: x*y - z, y*z - x, x*z - y",
        "vars: x, y\ngenerators: x^2, y^2",
    ];
    for t in texts {
        let p = parse_problem(t).unwrap();
        let (cells, _) = compute(&p, true, None);
        assert_eq!(cells.len(), 1);
        let mut got: Vec<QPoly> = cells[0].basis.iter().map(|g| g.to_qpoly().unwrap().monic()).collect();
        let f: Vec<QPoly> = p.generators.iter().map(|g| g.to_qpoly().unwrap()).collect();
        let mut want = gbi(&f, &DivisionSpec::janet(p.vars.len()));
        got.sort_by(|a, b| p.order_vars.compare(a.lm().unwrap(), b.lm().unwrap()));
        want.sort_by(|a, b| p.order_vars.compare(a.lm().unwrap(), b.lm().unwrap()));
        assert_eq!(got, want, "{t}");
    }
}

proptest! {
    // fixed seed: some random systems branch heavily and the run time must stay bounded
    #![proptest_config(ProptestConfig { cases: 48, rng_seed: RngSeed::Fixed(0x5eed), ..ProptestConfig::default() })]

    #[test]
    fn random_systems_are_sound(text in param_problem()) {
        check_grid(&text, 40)?;
    }

    // Without the criteria more branches may be opened, so the cells can differ;
    // both systems must still be sound.
    #[test]
    fn criteria_off_is_sound(text in param_problem()) {
        check_grid_with(&text, 40, false)?;
    }
}
