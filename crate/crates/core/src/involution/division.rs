use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::polyalg::{check_permutation, Exponent, MonomialOrdering};

/// Small set of variable indices (at most 64 variables).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VarSet(u64);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn singleton(i: usize) -> Self {
        VarSet(1 << i)
    }

    pub fn all(n: usize) -> Self {
        if n == 64 {
            VarSet(u64::MAX)
        } else {
            VarSet((1 << n) - 1)
        }
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn union(self, o: VarSet) -> VarSet {
        VarSet(self.0 | o.0)
    }

    pub fn intersection(self, o: VarSet) -> VarSet {
        VarSet(self.0 & o.0)
    }

    pub fn difference(self, o: VarSet) -> VarSet {
        VarSet(self.0 & !o.0)
    }

    pub fn complement(self, n: usize) -> VarSet {
        VarSet(!self.0 & VarSet::all(n).0)
    }

    pub fn is_subset(self, o: VarSet) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.contains(i))
    }

    /// Indices occurring in a monomial.
    pub fn support_of(e: &Exponent) -> VarSet {
        let mut s = VarSet::EMPTY;
        for i in e.support() {
            s.insert(i);
        }
        s
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VarSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VarSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

/// Whether the box ordering is an admissible ordering or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoxOrientation {
    Admissible,
    Inverse,
}

/// An involutive division of the pairwise class, fixed by a permutation
/// `rho` of the variable indices and a total monomial ordering (the "box"
/// ordering) that is admissible or the inverse of an admissible one.
///
/// For a pair `u != v` the nonmultiplicative set of `u` is empty when `u`
/// is above `v` in the box ordering, or below it but divisible by `v`;
/// otherwise it is the single variable `x_{rho(i)}` with `i` the first
/// position at which `u` has a smaller exponent than `v`. The set for
/// `u` in `U` is the union over all other elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DivisionSpec {
    rho: Vec<usize>,
    box_order: MonomialOrdering,
    orientation: BoxOrientation,
}

impl DivisionSpec {
    pub fn new(rho: Vec<usize>, box_order: MonomialOrdering, orientation: BoxOrientation) -> Result<Self> {
        check_permutation(&rho)?;
        if rho.len() != box_order.nvars() {
            return Err(Error::DimensionMismatch { expected: rho.len(), found: box_order.nvars() });
        }
        Ok(DivisionSpec { rho, box_order, orientation })
    }

    /// Janet division: identity permutation and `lex` with `x1 > .. > xn`.
    pub fn janet(n: usize) -> Self {
        DivisionSpec { rho: (0..n).collect(), box_order: MonomialOrdering::lex(n), orientation: BoxOrientation::Admissible }
    }

    /// The partition used by Janet himself: `lex` with the reversed permutation.
    pub fn janet_reversed(n: usize) -> Self {
        DivisionSpec { rho: (0..n).rev().collect(), box_order: MonomialOrdering::lex(n), orientation: BoxOrientation::Admissible }
    }

    pub fn nvars(&self) -> usize {
        self.rho.len()
    }

    pub fn rho(&self) -> &[usize] {
        &self.rho
    }

    pub fn box_order(&self) -> &MonomialOrdering {
        &self.box_order
    }

    pub fn orientation(&self) -> BoxOrientation {
        self.orientation
    }

    /// `Greater` when `u` is above `v` in the box ordering.
    pub fn box_compare(&self, u: &Exponent, v: &Exponent) -> Ordering {
        let o = self.box_order.compare(u, v);
        match self.orientation {
            BoxOrientation::Admissible => o,
            BoxOrientation::Inverse => o.reverse(),
        }
    }

    /// Nonmultiplicative variable of `u` relative to `v` alone (at most one).
    pub fn nm_pair(&self, u: &Exponent, v: &Exponent) -> Result<Option<usize>> {
        match self.box_compare(u, v) {
            Ordering::Equal => Err(Error::SelfPair),
            Ordering::Greater => Ok(None),
            Ordering::Less if u.is_divisible_by(v) => Ok(None),
            Ordering::Less => Ok(self
                .rho
                .iter()
                .copied()
                .find(|&r| u.deg(r) < v.deg(r))),
        }
    }

    /// Nonmultiplicative variables of `u` with respect to the set `U`.
    pub fn nm_set(&self, u: &Exponent, set: &[Exponent]) -> Result<VarSet> {
        if !set.contains(u) {
            return Err(Error::NotAMember);
        }
        Ok(self.nm_unchecked(u, set))
    }

    fn nm_unchecked(&self, u: &Exponent, set: &[Exponent]) -> VarSet {
        let mut nm = VarSet::EMPTY;
        for v in set.iter().filter(|v| *v != u) {
            if let Ok(Some(i)) = self.nm_pair(u, v) {
                nm.insert(i);
            }
        }
        nm
    }

    /// Nonmultiplicative sets of every element of `U`.
    pub fn partition(&self, set: &[Exponent]) -> NMPartition {
        NMPartition { monomials: set.to_vec(), nm: set.iter().map(|u| self.nm_unchecked(u, set)).collect(), nvars: self.nvars() }
    }

    /// Some involutive divisor of `t` in `U`, the largest under `ord` when
    /// several exist.
    pub fn inv_divisor(&self, t: &Exponent, set: &[Exponent], ord: &MonomialOrdering) -> Option<usize> {
        self.partition(set).inv_divisor(t, ord)
    }
}

/// Multiplicative/nonmultiplicative split of the variables for each element
/// of a finite monomial set.
#[derive(Debug, Clone)]
pub struct NMPartition {
    monomials: Vec<Exponent>,
    nm: Vec<VarSet>,
    nvars: usize,
}

impl NMPartition {
    pub fn monomials(&self) -> &[Exponent] {
        &self.monomials
    }

    pub fn nonmultiplicative(&self, k: usize) -> VarSet {
        self.nm[k]
    }

    pub fn multiplicative(&self, k: usize) -> VarSet {
        self.nm[k].complement(self.nvars)
    }

    /// `u_k |_L t`: `u_k` divides `t` and the quotient only involves
    /// multiplicative variables of `u_k`.
    pub fn involutively_divides(&self, k: usize, t: &Exponent) -> bool {
        match t.quotient(&self.monomials[k]) {
            Some(q) => VarSet::support_of(&q).intersection(self.nm[k]).is_empty(),
            None => false,
        }
    }

    pub fn inv_divisor(&self, t: &Exponent, ord: &MonomialOrdering) -> Option<usize> {
        let mut best: Option<usize> = None;
        for k in 0..self.monomials.len() {
            if self.involutively_divides(k, t)
                && best.is_none_or(|b| ord.compare(&self.monomials[k], &self.monomials[b]) == Ordering::Greater)
            {
                best = Some(k);
            }
        }
        best
    }
}

/// Free-function forms of the division primitives.
pub fn nm_pair(u: &Exponent, v: &Exponent, d: &DivisionSpec) -> Result<Option<usize>> {
    d.nm_pair(u, v)
}

pub fn nm_set(u: &Exponent, set: &[Exponent], d: &DivisionSpec) -> Result<VarSet> {
    d.nm_set(u, set)
}

pub fn inv_divisor<'a>(t: &Exponent, set: &'a [Exponent], d: &DivisionSpec, ord: &MonomialOrdering) -> Option<&'a Exponent> {
    d.inv_divisor(t, set, ord).map(|k| &set[k])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::OrderKind;
    use proptest::prelude::*;

    fn e(v: &[u32]) -> Exponent {
        Exponent::from(v)
    }

    const X: usize = 0;

    #[test]
    fn janet_pair_examples() {
        let d = DivisionSpec::janet(2);
        // y^2 against x^2, x^2 against y^2, x y^2 against x^2
        assert_eq!(nm_pair(&e(&[0, 2]), &e(&[2, 0]), &d), Ok(Some(X)));
        assert_eq!(nm_pair(&e(&[2, 0]), &e(&[0, 2]), &d), Ok(None));
        assert_eq!(nm_pair(&e(&[1, 2]), &e(&[2, 0]), &d), Ok(Some(X)));
        assert_eq!(nm_pair(&e(&[1, 2]), &e(&[1, 2]), &d), Err(Error::SelfPair));
    }

    #[test]
    fn janet_set_examples() {
        let d = DivisionSpec::janet(2);
        let u = vec![e(&[2, 0]), e(&[0, 2])];
        assert_eq!(nm_set(&e(&[0, 2]), &u, &d), Ok(VarSet::singleton(X)));
        assert_eq!(nm_set(&e(&[2, 0]), &u, &d), Ok(VarSet::EMPTY));
        assert_eq!(nm_set(&e(&[2, 0]), &[e(&[2, 0])], &d), Ok(VarSet::EMPTY));
        let u3 = vec![e(&[2, 0]), e(&[0, 2]), e(&[1, 2])];
        assert_eq!(nm_set(&e(&[1, 2]), &u3, &d), Ok(VarSet::singleton(X)));
        assert_eq!(nm_set(&e(&[1, 1]), &u3, &d), Err(Error::NotAMember));
    }

    #[test]
    fn inv_divisor_examples() {
        let d = DivisionSpec::janet(2);
        let ord = MonomialOrdering::lex(2);
        let u3 = vec![e(&[2, 0]), e(&[0, 2]), e(&[1, 2])];
        assert_eq!(inv_divisor(&e(&[2, 2]), &u3, &d, &ord), Some(&e(&[2, 0])));
        assert_eq!(inv_divisor(&e(&[0, 0]), &u3, &d, &ord), None);
        assert_eq!(inv_divisor(&e(&[1, 2]), &u3, &d, &ord), Some(&e(&[1, 2])));
        // x y^2 is a multiple of y^2 through the nonmultiplicative x only
        assert_eq!(inv_divisor(&e(&[1, 3]), &u3, &d, &ord), Some(&e(&[1, 2])));
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(DivisionSpec::new(vec![0, 0], MonomialOrdering::lex(2), BoxOrientation::Admissible).is_err());
        assert!(DivisionSpec::new(vec![0, 1], MonomialOrdering::lex(3), BoxOrientation::Admissible).is_err());
    }

    #[test]
    fn varset_ops() {
        let s: VarSet = [0, 2].into_iter().collect();
        assert_eq!(s.len(), 2);
        assert_eq!(s.complement(3), VarSet::singleton(1));
        assert!(VarSet::singleton(2).is_subset(s));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 2]);
    }

    proptest! {
        #[test]
        fn partition_agrees_with_nm_set(set in proptest::collection::btree_set(proptest::collection::vec(0u32..3, 3), 1..6), inv in any::<bool>()) {
            let set: Vec<Exponent> = set.into_iter().map(Exponent::new).collect();
            let d = DivisionSpec::new(vec![2, 0, 1], MonomialOrdering::new(OrderKind::DegRevLex, 3),
                if inv { BoxOrientation::Inverse } else { BoxOrientation::Admissible }).unwrap();
            let p = d.partition(&set);
            for (k, u) in set.iter().enumerate() {
                prop_assert_eq!(p.nonmultiplicative(k), d.nm_set(u, &set).unwrap());
                prop_assert!(p.involutively_divides(k, u));
            }
        }
    }
}
