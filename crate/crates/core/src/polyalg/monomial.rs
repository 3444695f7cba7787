use std::fmt;

use crate::error::{Error, Result};

/// Dense exponent vector `(e1, .., en)` of a monomial in `n` indeterminates.
///
/// The derived `Ord` is plain lexicographic comparison of the raw vectors and
/// exists only so exponents can live in ordered containers. Monomial orderings
/// are provided by [`MonomialOrdering`](super::MonomialOrdering).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exponent(Box<[u32]>);

impl Exponent {
    pub fn new(exps: Vec<u32>) -> Self {
        Exponent(exps.into_boxed_slice())
    }

    /// The monomial `1` in `n` indeterminates.
    pub fn one(n: usize) -> Self {
        Exponent(vec![0; n].into_boxed_slice())
    }

    /// The indeterminate `x_i` in a ring of `n` indeterminates.
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Exponent(e.into_boxed_slice())
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// `deg_i` of the monomial.
    #[inline]
    pub fn deg(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn check_len(&self, n: usize) -> Result<()> {
        if self.len() == n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: n, found: self.len() })
        }
    }

    pub fn mul(&self, other: &Exponent) -> Exponent {
        debug_assert_eq!(self.len(), other.len());
        Exponent(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    /// `self * x_i`.
    pub fn mul_var(&self, i: usize) -> Exponent {
        let mut e = self.0.clone();
        e[i] += 1;
        Exponent(e)
    }

    /// `other | self` componentwise.
    pub fn is_divisible_by(&self, other: &Exponent) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a >= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn quotient(&self, other: &Exponent) -> Option<Exponent> {
        if self.len() != other.len() || !self.is_divisible_by(other) {
            return None;
        }
        Some(Exponent(self.0.iter().zip(other.0.iter()).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.min(b)).collect())
    }

    /// True when the two monomials share no variable.
    pub fn is_coprime(&self, other: &Exponent) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of the variables occurring in the monomial.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, _)| i)
    }

    /// Appends `k` zero exponents.
    pub fn extend(&self, k: usize) -> Exponent {
        let mut v = self.0.to_vec();
        v.extend(std::iter::repeat_n(0, k));
        Exponent::new(v)
    }

    /// Renders with the given names, `1` for the unit monomial.
    pub fn fmt_with(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, &e)| {
                let name = names.get(i).cloned().unwrap_or_else(|| format!("v{i}"));
                if e == 1 {
                    name
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Debug for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<u32>> for Exponent {
    fn from(v: Vec<u32>) -> Self {
        Exponent::new(v)
    }
}

impl From<&[u32]> for Exponent {
    fn from(v: &[u32]) -> Self {
        Exponent(v.into())
    }
}

/// `m1 / m2` if `m2 | m1`, `None` otherwise.
pub fn monomial_quotient(m1: &Exponent, m2: &Exponent) -> Option<Exponent> {
    m1.quotient(m2)
}
