use super::division::DivisionSpec;
use crate::error::{Error, Result};
use crate::polyalg::{Exponent, ParamPoly};

/// Box completion of a minimal Gröbner basis: every `m * g` with
/// `deg_i(m) <= h_i - deg_i(LM(g))`, where `h_i` is the largest degree of
/// `x_i` among the leading monomials. Repeated products are kept once.
/// Sorted by decreasing leading monomial, ties by input position.
///
/// The division is accepted for interface symmetry; the box itself does not
/// depend on it.
pub fn prop1_completion(g: &[ParamPoly], d: &DivisionSpec) -> Result<Vec<ParamPoly>> {
    let g: Vec<&ParamPoly> = g.iter().filter(|p| !p.is_zero()).collect();
    let Some(first) = g.first() else { return Ok(Vec::new()) };
    let n = first.nvars();
    if d.nvars() != n {
        return Err(Error::DimensionMismatch { expected: n, found: d.nvars() });
    }
    let lms: Vec<&Exponent> = g.iter().map(|p| p.lm().unwrap()).collect();
    for (i, u) in lms.iter().enumerate() {
        for (j, v) in lms.iter().enumerate() {
            if i != j && u.is_divisible_by(v) {
                return Err(Error::NotMinimal { divisor: j, multiple: i });
            }
        }
    }
    let h: Vec<u32> = (0..n).map(|i| lms.iter().map(|u| u.deg(i)).max().unwrap()).collect();

    let mut out: Vec<(Exponent, usize, ParamPoly)> = Vec::new();
    for (k, p) in g.iter().enumerate() {
        let bound: Vec<u32> = (0..n).map(|i| h[i] - lms[k].deg(i)).collect();
        for m in box_monomials(&bound) {
            let q = p.mul_monomial(&m);
            if !out.iter().any(|(_, _, r)| *r == q) {
                out.push((q.lm().unwrap().clone(), k, q));
            }
        }
    }
    let xord = first.var_order().clone();
    out.sort_by(|a, b| xord.compare(&b.0, &a.0).then(a.1.cmp(&b.1)));
    Ok(out.into_iter().map(|(_, _, q)| q).collect())
}

/// All exponent vectors componentwise below `bound`.
fn box_monomials(bound: &[u32]) -> Vec<Exponent> {
    let mut out = vec![Vec::new()];
    for &b in bound {
        out = out.into_iter().flat_map(|v: Vec<u32>| (0..=b).map(move |e| [v.clone(), vec![e]].concat())).collect();
    }
    out.into_iter().map(Exponent::new).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{rat, MonomialOrdering, QPoly};

    fn xord() -> MonomialOrdering {
        MonomialOrdering::lex(2)
    }
    fn aord() -> MonomialOrdering {
        MonomialOrdering::lex(2)
    }
    // c * x^i y^j with c a single parameter (or 1 when `par` is None)
    fn t(par: Option<usize>, i: u32, j: u32) -> ParamPoly {
        let c = match par {
            Some(k) => QPoly::var(&aord(), k),
            None => QPoly::one(&aord()),
        };
        ParamPoly::term(&xord(), &aord(), Exponent::new(vec![i, j]), c)
    }

    #[test]
    fn example_two_box() {
        let (a, b) = (Some(0), Some(1));
        let got = prop1_completion(&[t(a, 2, 0), t(b, 0, 2)], &DivisionSpec::janet(2)).unwrap();
        let want = vec![t(a, 2, 2), t(b, 2, 2), t(a, 2, 1), t(a, 2, 0), t(b, 1, 2), t(b, 0, 2)];
        assert_eq!(got, want);
    }

    #[test]
    fn small_boxes() {
        let one = ParamPoly::term(&MonomialOrdering::lex(1), &aord(), Exponent::new(vec![1]), QPoly::one(&aord()));
        assert_eq!(prop1_completion(std::slice::from_ref(&one), &DivisionSpec::janet(1)).unwrap(), vec![one]);
        let got = prop1_completion(&[t(None, 1, 0), t(None, 0, 1)], &DivisionSpec::janet(2)).unwrap();
        assert_eq!(got, vec![t(None, 1, 1), t(None, 1, 0), t(None, 0, 1)]);
    }

    #[test]
    fn rejects_non_minimal() {
        let r = prop1_completion(&[t(None, 1, 0), t(None, 2, 0)], &DivisionSpec::janet(2));
        assert_eq!(r, Err(Error::NotMinimal { divisor: 0, multiple: 1 }));
        let c = ParamPoly::term(&xord(), &aord(), Exponent::new(vec![1, 1]), QPoly::constant(&aord(), rat(2)));
        assert!(prop1_completion(&[c], &DivisionSpec::janet(2)).is_ok());
    }
}
