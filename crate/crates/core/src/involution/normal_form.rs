use super::division::{DivisionSpec, NMPartition};
use crate::polyalg::{Exponent, QPoly};

fn lms(g: &[QPoly]) -> Vec<Exponent> {
    g.iter().map(|p| p.lm().expect("nonzero basis element").clone()).collect()
}

/// Cancels the leading term by involutive divisors until the head is
/// irreducible or the polynomial vanishes.
pub fn inv_head_nf(f: &QPoly, g: &[QPoly], d: &DivisionSpec) -> QPoly {
    let part = d.partition(&lms(g));
    head_nf_with(f, g, &part)
}

fn head_nf_with(f: &QPoly, g: &[QPoly], part: &NMPartition) -> QPoly {
    let ord = f.ordering().clone();
    let mut h = f.clone();
    while let Some((lm, lc)) = h.terms().first().cloned() {
        let Some(k) = part.inv_divisor(&lm, &ord) else { break };
        let (glm, glc) = g[k].leading_term().unwrap();
        let m = lm.quotient(glm).unwrap();
        h = h.sub(&g[k].mul_term(&m, &(&lc / glc)));
    }
    h
}

/// Involutive reduction of every non-leading term.
pub fn inv_tail_nf(f: &QPoly, g: &[QPoly], d: &DivisionSpec) -> QPoly {
    let part = d.partition(&lms(g));
    tail_nf_with(f, g, &part)
}

pub(super) fn tail_nf_with(f: &QPoly, g: &[QPoly], part: &NMPartition) -> QPoly {
    if f.is_zero() {
        return f.clone();
    }
    let ord = f.ordering().clone();
    let mut h = f.clone();
    // index of the first term not yet known to be irreducible
    let mut pos = 1;
    while pos < h.len() {
        let (t, c) = h.terms()[pos].clone();
        match part.inv_divisor(&t, &ord) {
            Some(k) => {
                let (glm, glc) = g[k].leading_term().unwrap();
                let m = t.quotient(glm).unwrap();
                h = h.sub(&g[k].mul_term(&m, &(&c / glc)));
                // terms above t are untouched, so resume at the same rank
            }
            None => pos += 1,
        }
    }
    h
}

/// Full involutive normal form: head reduction followed by tail reduction.
pub fn inv_nf(f: &QPoly, g: &[QPoly], d: &DivisionSpec) -> QPoly {
    let part = d.partition(&lms(g));
    tail_nf_with(&head_nf_with(f, g, &part), g, &part)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{rat, MonomialOrdering};
    use proptest::prelude::*;

    fn xy() -> MonomialOrdering {
        MonomialOrdering::lex(2)
    }
    fn m(i: u32, j: u32) -> QPoly {
        QPoly::monomial(&xy(), Exponent::new(vec![i, j]), rat(1))
    }

    #[test]
    fn head_examples() {
        let d = DivisionSpec::janet(2);
        let g = vec![m(2, 0), m(0, 2), m(1, 2)];
        assert!(inv_head_nf(&m(2, 2), &g, &d).is_zero());
        // x*y is not involutively reducible modulo {x^2, y^2, x y^2}
        assert_eq!(inv_head_nf(&m(1, 1), &g, &d), m(1, 1));
        assert!(inv_head_nf(&QPoly::zero(&xy()), &g, &d).is_zero());
    }

    #[test]
    fn tail_examples() {
        let d = DivisionSpec::janet(2);
        let g = vec![m(2, 0), m(0, 2), m(1, 2)];
        // x^3 + x^2 y^2 in lex has head x^3; the tail term cancels
        let f = m(3, 0).add(&m(2, 2));
        assert_eq!(inv_tail_nf(&f, &g, &d), m(3, 0));
        let f = m(1, 0).add(&m(0, 1));
        assert_eq!(inv_tail_nf(&f, &g, &d), f);
        assert!(inv_tail_nf(&QPoly::zero(&xy()), &g, &d).is_zero());
    }

    proptest! {
        // nf differs from the input by an explicit combination of basis elements
        #[test]
        fn nf_stays_in_coset(cs in proptest::collection::vec((0u32..4, 0u32..4, -3i64..4), 1..5)) {
            let d = DivisionSpec::janet(2);
            let g = vec![m(2, 0).sub(&m(0, 1)), m(0, 2), m(1, 2)];
            let f = QPoly::from_terms(&xy(), cs.into_iter().map(|(i, j, c)| (Exponent::new(vec![i, j]), rat(c))));
            let r = inv_nf(&f, &g, &d);
            let diff = f.sub(&r);
            // `g` is a Gröbner basis of its ideal, so ordinary division decides membership
            let gb = crate::paramring::buchberger_reduced(&g, &xy());
            prop_assert!(diff.reduce_by_set(&gb).is_zero());
            let part = d.partition(&lms(&g));
            for (t, _) in r.terms() {
                prop_assert!(part.inv_divisor(t, &xy()).is_none());
            }
        }
    }
}
