use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::Exponent;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    DegRevLex,
}

/// An admissible monomial ordering: `lex` or `degrevlex` with respect to a
/// variable precedence `x_{perm[0]} > x_{perm[1]} > ...`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrdering {
    kind: OrderKind,
    perm: Arc<[usize]>,
}

impl MonomialOrdering {
    /// Ordering whose precedence follows the declaration order of the variables.
    pub fn new(kind: OrderKind, nvars: usize) -> Self {
        MonomialOrdering { kind, perm: (0..nvars).collect::<Vec<_>>().into() }
    }

    pub fn lex(nvars: usize) -> Self {
        Self::new(OrderKind::Lex, nvars)
    }

    pub fn degrevlex(nvars: usize) -> Self {
        Self::new(OrderKind::DegRevLex, nvars)
    }

    /// `perm[k]` is the index of the variable with the `k`-th highest precedence.
    pub fn with_permutation(kind: OrderKind, perm: Vec<usize>) -> Result<Self> {
        check_permutation(&perm)?;
        Ok(MonomialOrdering { kind, perm: perm.into() })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    pub fn nvars(&self) -> usize {
        self.perm.len()
    }

    /// Same ordering on a ring with one more indeterminate, which receives the
    /// lowest precedence.
    pub fn append_lowest(&self) -> Self {
        let mut p = self.perm.to_vec();
        p.push(p.len());
        MonomialOrdering { kind: self.kind, perm: p.into() }
    }

    /// Compares two exponents of matching length.
    pub fn compare(&self, a: &Exponent, b: &Exponent) -> Ordering {
        debug_assert_eq!(a.len(), self.nvars());
        debug_assert_eq!(b.len(), self.nvars());
        let (a, b) = (a.as_slice(), b.as_slice());
        match self.kind {
            OrderKind::Lex => {
                for &i in self.perm.iter() {
                    match a[i].cmp(&b[i]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            OrderKind::DegRevLex => {
                let da: u32 = a.iter().sum();
                let db: u32 = b.iter().sum();
                if da != db {
                    return da.cmp(&db);
                }
                // the lowest-precedence differing variable decides; a larger
                // exponent there makes the monomial smaller
                for &i in self.perm.iter().rev() {
                    match a[i].cmp(&b[i]) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }

    /// Checked variant of [`compare`](Self::compare).
    pub fn try_compare(&self, a: &Exponent, b: &Exponent) -> Result<Ordering> {
        a.check_len(self.nvars())?;
        b.check_len(self.nvars())?;
        Ok(self.compare(a, b))
    }
}

impl fmt::Debug for MonomialOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{:?}", self.kind, self.perm)
    }
}

pub(crate) fn check_permutation(perm: &[usize]) -> Result<()> {
    let mut seen = vec![false; perm.len()];
    for &p in perm {
        if p >= perm.len() || seen[p] {
            return Err(Error::InvalidPermutation(perm.len()));
        }
        seen[p] = true;
    }
    Ok(())
}

/// Block ordering on `K[a, x]`: the `x` part decides, the `a` part breaks ties.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EliminationOrdering {
    pub var_order: MonomialOrdering,
    pub param_order: MonomialOrdering,
}

impl EliminationOrdering {
    pub fn new(var_order: MonomialOrdering, param_order: MonomialOrdering) -> Self {
        EliminationOrdering { var_order, param_order }
    }

    pub fn compare(&self, p1: (&Exponent, &Exponent), p2: (&Exponent, &Exponent)) -> Ordering {
        self.var_order
            .compare(p1.0, p2.0)
            .then_with(|| self.param_order.compare(p1.1, p2.1))
    }

    pub fn try_compare(
        &self,
        p1: (&Exponent, &Exponent),
        p2: (&Exponent, &Exponent),
    ) -> Result<Ordering> {
        let x = self.var_order.try_compare(p1.0, p2.0)?;
        let a = self.param_order.try_compare(p1.1, p2.1)?;
        Ok(x.then(a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn e(v: &[u32]) -> Exponent {
        Exponent::from(v)
    }

    #[test]
    fn lex_example() {
        let lex = MonomialOrdering::lex(2);
        assert_eq!(lex.compare(&e(&[2, 1]), &e(&[1, 3])), Ordering::Greater);
        assert_eq!(lex.compare(&e(&[1, 3]), &e(&[1, 3])), Ordering::Equal);
    }

    #[test]
    fn degrevlex_example() {
        let drl = MonomialOrdering::degrevlex(2);
        assert_eq!(drl.compare(&e(&[2, 1]), &e(&[1, 2])), Ordering::Greater);
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let lex = MonomialOrdering::lex(2);
        assert_eq!(
            lex.try_compare(&e(&[1, 0, 0]), &e(&[1, 0])),
            Err(Error::DimensionMismatch { expected: 2, found: 3 })
        );
    }

    #[test]
    fn bad_permutation() {
        assert!(MonomialOrdering::with_permutation(OrderKind::Lex, vec![0, 0]).is_err());
        assert!(MonomialOrdering::with_permutation(OrderKind::Lex, vec![1, 2]).is_err());
    }

    // Textual rules: a < b under lex iff the leftmost nonzero entry of b - a is
    // positive; under degrevlex iff deg a < deg b, or the degrees agree and the
    // rightmost nonzero entry of b - a is negative.
    fn textual_less(kind: OrderKind, a: &[u32], b: &[u32]) -> bool {
        let diff: Vec<i64> = a.iter().zip(b).map(|(x, y)| *y as i64 - *x as i64).collect();
        match kind {
            OrderKind::Lex => diff.iter().find(|d| **d != 0).is_some_and(|d| *d > 0),
            OrderKind::DegRevLex => {
                let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
                da < db || (da == db && diff.iter().rev().find(|d| **d != 0).is_some_and(|d| *d < 0))
            }
        }
    }

    #[test]
    fn textual_rule_agrees_up_to_degree_three() {
        let mut monos = Vec::new();
        for i in 0..=3u32 {
            for j in 0..=3 - i {
                for k in 0..=3 - i - j {
                    monos.push(vec![i, j, k]);
                }
            }
        }
        for kind in [OrderKind::Lex, OrderKind::DegRevLex] {
            let ord = MonomialOrdering::new(kind, 3);
            for a in &monos {
                for b in &monos {
                    let expect = if a == b {
                        Ordering::Equal
                    } else if textual_less(kind, a, b) {
                        Ordering::Less
                    } else {
                        Ordering::Greater
                    };
                    assert_eq!(ord.compare(&e(a), &e(b)), expect, "{kind:?} {a:?} {b:?}");
                }
            }
        }
    }

    #[test]
    fn elimination_examples() {
        let el = EliminationOrdering::new(MonomialOrdering::lex(1), MonomialOrdering::lex(2));
        // (x, a^2) vs (x^2, 1)
        assert_eq!(el.compare((&e(&[1]), &e(&[2, 0])), (&e(&[2]), &e(&[0, 0]))), Ordering::Less);
        // (x, a) vs (x, b)
        assert_eq!(el.compare((&e(&[1]), &e(&[1, 0])), (&e(&[1]), &e(&[0, 1]))), Ordering::Greater);
        assert_eq!(el.compare((&e(&[0]), &e(&[1, 0])), (&e(&[0]), &e(&[1, 0]))), Ordering::Equal);
    }

    fn arb_ordering(n: usize) -> impl Strategy<Value = MonomialOrdering> {
        (prop_oneof![Just(OrderKind::Lex), Just(OrderKind::DegRevLex)], Just((0..n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|(k, p)| MonomialOrdering::with_permutation(k, p).unwrap())
    }

    fn arb_exp(n: usize) -> impl Strategy<Value = Exponent> {
        proptest::collection::vec(0u32..5, n).prop_map(Exponent::new)
    }

    proptest! {
        #[test]
        fn admissible(ord in arb_ordering(4), a in arb_exp(4), b in arb_exp(4), t in arb_exp(4)) {
            let o = ord.compare(&a, &b);
            prop_assert_eq!(ord.compare(&a.mul(&t), &b.mul(&t)), o);
            if !a.is_one() {
                prop_assert_eq!(ord.compare(&a, &Exponent::one(4)), Ordering::Greater);
            }
        }

        #[test]
        fn total_order(ord in arb_ordering(3), a in arb_exp(3), b in arb_exp(3), c in arb_exp(3)) {
            prop_assert_eq!(ord.compare(&a, &b), ord.compare(&b, &a).reverse());
            prop_assert_eq!(ord.compare(&a, &b) == Ordering::Equal, a == b);
            if ord.compare(&a, &b) != Ordering::Greater && ord.compare(&b, &c) != Ordering::Greater {
                prop_assert_ne!(ord.compare(&a, &c), Ordering::Greater);
            }
        }

        #[test]
        fn elimination_restricts_to_blocks(
            xo in arb_ordering(2), ao in arb_ordering(2),
            x1 in arb_exp(2), x2 in arb_exp(2), a1 in arb_exp(2), a2 in arb_exp(2),
        ) {
            let el = EliminationOrdering::new(xo.clone(), ao.clone());
            let one = Exponent::one(2);
            prop_assert_eq!(el.compare((&x1, &one), (&x2, &one)), xo.compare(&x1, &x2));
            prop_assert_eq!(el.compare((&one, &a1), (&one, &a2)), ao.compare(&a1, &a2));
        }
    }
}
