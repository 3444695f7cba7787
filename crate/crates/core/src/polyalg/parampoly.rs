use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_traits::{One, Signed, Zero};

use super::qpoly::{integer_normalizer, push_signed, term_body};
use super::{EliminationOrdering, Exponent, MonomialOrdering, ParamScalar, QPoly, Rational};
use crate::error::{Error, Result};

/// Polynomial in `Q[a][x]`: a sorted map from `x`-monomials to nonzero
/// `Q[a]` coefficients, largest `x`-monomial first.
///
/// Read through the elimination ordering, the leading `x`-monomial dominates
/// and the coefficient orders the `a`-part, so `LM`/`LC` here are the ones of
/// the block ordering restricted to the variable block.
#[derive(Clone)]
pub struct ParamPoly {
    xord: MonomialOrdering,
    aord: MonomialOrdering,
    terms: Vec<(Exponent, ParamScalar)>,
}

impl ParamPoly {
    pub fn zero(xord: &MonomialOrdering, aord: &MonomialOrdering) -> Self {
        ParamPoly { xord: xord.clone(), aord: aord.clone(), terms: Vec::new() }
    }

    pub fn term(xord: &MonomialOrdering, aord: &MonomialOrdering, e: Exponent, c: ParamScalar) -> Self {
        let mut p = Self::zero(xord, aord);
        if !c.is_zero() {
            p.terms.push((e, c));
        }
        p
    }

    pub fn from_terms<I>(xord: &MonomialOrdering, aord: &MonomialOrdering, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, ParamScalar)>,
    {
        let mut v: Vec<(Exponent, ParamScalar)> = Vec::new();
        let mut sorted: Vec<(Exponent, ParamScalar)> = terms.into_iter().collect();
        sorted.sort_by(|a, b| xord.compare(&b.0, &a.0));
        for (e, c) in sorted {
            match v.last_mut() {
                Some((le, lc)) if *le == e => *lc = lc.add(&c),
                _ => v.push((e, c)),
            }
        }
        v.retain(|(_, c)| !c.is_zero());
        ParamPoly { xord: xord.clone(), aord: aord.clone(), terms: v }
    }

    /// Builds from `(x-exponent, a-exponent, coefficient)` triples.
    pub fn from_flat_terms<I>(xord: &MonomialOrdering, aord: &MonomialOrdering, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, Exponent, Rational)>,
    {
        Self::from_terms(
            xord,
            aord,
            terms.into_iter().map(|(xe, ae, c)| (xe, QPoly::monomial(aord, ae, c))),
        )
    }

    /// Lifts a polynomial in the variables alone (constant coefficients).
    pub fn from_qpoly(f: &QPoly, aord: &MonomialOrdering) -> Self {
        let xord = f.ordering().clone();
        let terms = f.terms().iter().map(|(e, c)| (e.clone(), QPoly::constant(aord, c.clone()))).collect();
        ParamPoly { xord, aord: aord.clone(), terms }
    }

    pub fn var_order(&self) -> &MonomialOrdering {
        &self.xord
    }

    pub fn param_order(&self) -> &MonomialOrdering {
        &self.aord
    }

    pub fn elimination_order(&self) -> EliminationOrdering {
        EliminationOrdering::new(self.xord.clone(), self.aord.clone())
    }

    pub fn nvars(&self) -> usize {
        self.xord.nvars()
    }

    pub fn nparams(&self) -> usize {
        self.aord.nvars()
    }

    pub fn terms(&self) -> &[(Exponent, ParamScalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> Option<&Exponent> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn lc(&self) -> Option<&ParamScalar> {
        self.terms.first().map(|t| &t.1)
    }

    /// `(LM, LC)` of a nonzero polynomial; `LT = LC * LM`.
    pub fn leading_data(&self) -> Result<(&Exponent, &ParamScalar)> {
        self.terms.first().map(|(e, c)| (e, c)).ok_or(Error::NoLeadingTerm)
    }

    pub fn leading_term(&self) -> ParamPoly {
        ParamPoly { xord: self.xord.clone(), aord: self.aord.clone(), terms: self.terms.iter().take(1).cloned().collect() }
    }

    /// `f - LT(f)`.
    pub fn drop_leading_term(&self) -> ParamPoly {
        ParamPoly { xord: self.xord.clone(), aord: self.aord.clone(), terms: self.terms.iter().skip(1).cloned().collect() }
    }

    pub fn coeff(&self, e: &Exponent) -> Option<&ParamScalar> {
        self.terms
            .binary_search_by(|(m, _)| self.xord.compare(e, m))
            .ok()
            .map(|i| &self.terms[i].1)
    }

    fn merge(&self, other: &ParamPoly, negate_other: bool) -> ParamPoly {
        debug_assert_eq!(self.nvars(), other.nvars());
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (a, b) = (&self.terms, &other.terms);
        let (mut i, mut j) = (0, 0);
        let sgn = |c: &ParamScalar| if negate_other { c.neg() } else { c.clone() };
        while i < a.len() && j < b.len() {
            match self.xord.compare(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), sgn(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { a[i].1.sub(&b[j].1) } else { a[i].1.add(&b[j].1) };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(e, c)| (e.clone(), sgn(c))));
        ParamPoly { xord: self.xord.clone(), aord: self.aord.clone(), terms: out }
    }

    pub fn add(&self, other: &ParamPoly) -> ParamPoly {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &ParamPoly) -> ParamPoly {
        self.merge(other, true)
    }

    pub fn neg(&self) -> ParamPoly {
        self.map_coeffs(|c| c.neg())
    }

    /// Multiplication by `c * x^e` with `c` in `Q[a]`.
    pub fn mul_term(&self, e: &Exponent, c: &ParamScalar) -> ParamPoly {
        if c.is_zero() {
            return ParamPoly::zero(&self.xord, &self.aord);
        }
        ParamPoly {
            xord: self.xord.clone(),
            aord: self.aord.clone(),
            terms: self.terms.iter().map(|(m, d)| (m.mul(e), d.mul(c))).collect(),
        }
    }

    pub fn mul_monomial(&self, e: &Exponent) -> ParamPoly {
        ParamPoly {
            xord: self.xord.clone(),
            aord: self.aord.clone(),
            terms: self.terms.iter().map(|(m, d)| (m.mul(e), d.clone())).collect(),
        }
    }

    /// `x_i * self`.
    pub fn mul_var(&self, i: usize) -> ParamPoly {
        ParamPoly {
            xord: self.xord.clone(),
            aord: self.aord.clone(),
            terms: self.terms.iter().map(|(m, d)| (m.mul_var(i), d.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &ParamScalar) -> ParamPoly {
        self.map_coeffs(|d| d.mul(c))
    }

    pub fn scale_rational(&self, c: &Rational) -> ParamPoly {
        self.map_coeffs(|d| d.scale(c))
    }

    /// Applies `f` to every coefficient, dropping the ones that become zero.
    pub fn map_coeffs<F: FnMut(&ParamScalar) -> ParamScalar>(&self, mut f: F) -> ParamPoly {
        let terms = self
            .terms
            .iter()
            .filter_map(|(e, c)| {
                let d = f(c);
                (!d.is_zero()).then(|| (e.clone(), d))
            })
            .collect();
        ParamPoly { xord: self.xord.clone(), aord: self.aord.clone(), terms }
    }

    /// Coefficientwise remainder modulo a set of parameter polynomials.
    pub fn reduce_coeffs(&self, n: &[ParamScalar]) -> ParamPoly {
        if n.is_empty() {
            return self.clone();
        }
        self.map_coeffs(|c| c.reduce_by_set(n))
    }

    /// Specialization of every coefficient at a parameter point.
    pub fn specialize(&self, point: &[Rational]) -> QPoly {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), c.eval(point)));
        QPoly::from_terms(&self.xord, terms)
    }

    /// Drops the parameters of a parameter-free polynomial.
    pub fn to_qpoly(&self) -> Option<QPoly> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            terms.push((e.clone(), c.as_constant()?));
        }
        Some(QPoly::from_sorted_unchecked(&self.xord, terms))
    }

    /// All rational coefficients of all terms.
    fn rational_coeffs(&self) -> impl Iterator<Item = &Rational> {
        self.terms.iter().flat_map(|(_, c)| c.terms().iter().map(|(_, r)| r))
    }

    /// Makes every rational coefficient an integer with overall gcd 1 and a
    /// positive leading integer coefficient. Only rational scalars are
    /// removed; a content in `Q[a]` is kept since it may vanish under
    /// specialization.
    pub fn primitive(&self) -> ParamPoly {
        match integer_normalizer(self.rational_coeffs()) {
            Some(s) if !s.is_one() => self.scale_rational(&s),
            _ => self.clone(),
        }
    }

    /// Monic over `Q` when the leading coefficient is a rational constant.
    pub fn monic_if_constant_lc(&self) -> ParamPoly {
        match self.lc().and_then(|c| c.as_constant()) {
            Some(c) if !c.is_zero() && !c.is_one() => self.scale_rational(&c.recip()),
            _ => self.clone(),
        }
    }

    /// Canonical rendering in the block ordering: all `(x, a)` terms in
    /// decreasing order, parameters printed before variables.
    pub fn fmt_with(&self, param_names: &[String], var_names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        let mut first = true;
        for (xe, c) in &self.terms {
            for (ae, r) in c.terms() {
                let unit = xe.is_one() && ae.is_one();
                let mono = match (ae.is_one(), xe.is_one()) {
                    (true, _) => xe.fmt_with(var_names),
                    (false, true) => ae.fmt_with(param_names),
                    (false, false) => format!("{}*{}", ae.fmt_with(param_names), xe.fmt_with(var_names)),
                };
                push_signed(&mut s, first, r.is_negative(), &term_body(r.abs(), mono, unit));
                first = false;
            }
        }
        s
    }
}

impl PartialEq for ParamPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for ParamPoly {}

impl Hash for ParamPoly {
    fn hash<H: Hasher>(&self, state: &mut H) {
        for (e, c) in &self.terms {
            e.hash(state);
            c.hash(state);
        }
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = (0..self.nparams()).map(|i| format!("a{i}")).collect();
        let v: Vec<String> = (0..self.nvars()).map(|i| format!("x{i}")).collect();
        write!(f, "{}", self.fmt_with(&p, &v))
    }
}

/// `(LM, LC, LT)` of a nonzero parametric polynomial.
pub fn leading_data(f: &ParamPoly) -> Result<(Exponent, ParamScalar, ParamPoly)> {
    let (lm, lc) = f.leading_data()?;
    Ok((lm.clone(), lc.clone(), f.leading_term()))
}
