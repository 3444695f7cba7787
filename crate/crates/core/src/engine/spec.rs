use crate::paramring::{buchberger_reduced, facvar, facvar_set, product_in_radical, radical_member, refine_against, sort_factors};
use crate::polyalg::{MonomialOrdering, ParamPoly, ParamScalar};

/// Null conditions `N` (all vanish) and nonnull conditions `W` (none
/// vanishes) on the parameters.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Specification {
    pub null: Vec<ParamScalar>,
    pub nonnull: Vec<ParamScalar>,
}

impl Specification {
    pub fn new(null: Vec<ParamScalar>, nonnull: Vec<ParamScalar>) -> Self {
        Specification { null, nonnull }
    }

    /// Adds a nonnull condition.
    pub fn with_nonnull(&self, c: &ParamScalar) -> Self {
        let mut s = self.clone();
        s.nonnull.push(c.clone());
        s
    }

    /// Adds a null condition. `N` is brought back to a reduced basis by the
    /// next [`canspec`].
    pub fn with_null(&self, c: &ParamScalar) -> Self {
        let mut s = self.clone();
        s.null.push(c.clone());
        s
    }
}

/// Status of a leading coefficient under a specification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    /// Vanishes wherever `N` does.
    Null,
    /// Every factor is known to be nonzero.
    Nonnull,
    /// Carries the smallest factor that is neither.
    Undecided(ParamScalar),
}

/// `f` divides some element of `w`, so `f` cannot vanish where `w` does not.
fn known_nonnull(f: &ParamScalar, w: &[ParamScalar]) -> bool {
    w.iter().any(|q| q.exact_div(f).is_ok())
}

/// `f` has no common zero with `N`.
fn coprime_to_null(f: &ParamScalar, n: &[ParamScalar]) -> bool {
    if n.is_empty() {
        return false;
    }
    let mut gens = n.to_vec();
    gens.push(f.clone());
    buchberger_reduced(&gens, f.ordering()).iter().any(|g| g.is_constant())
}

/// Classifies `c` under `(N, W)`; `N` must be a Gröbner basis.
pub fn decide(c: &ParamScalar, n: &[ParamScalar], w: &[ParamScalar]) -> Decision {
    if radical_member(c, n) {
        return Decision::Null;
    }
    let reduced = c.reduce_by_set(n);
    let factors = refine_against(facvar(&reduced).expect("nonzero"), w);
    match factors.into_iter().find(|f| !known_nonnull(f, w) && !coprime_to_null(f, n)) {
        Some(f) => Decision::Undecided(f),
        None => Decision::Nonnull,
    }
}

/// Normalizes a specification. Returns `false` (with `N' = {1}`) when the
/// product of `W` vanishes wherever `N` does. Otherwise `N'` is a reduced
/// Gröbner basis whose elements have no factor known to be nonnull, and `W'`
/// is the coprime factor set of `W` reduced modulo `N'`.
pub fn canspec(spec: &Specification, aord: &MonomialOrdering) -> (bool, Specification) {
    let mut n = buchberger_reduced(&spec.null, aord);
    let reduce = |w: &[ParamScalar], n: &[ParamScalar]| -> Vec<ParamScalar> {
        w.iter().map(|q| q.with_ordering(aord).reduce_by_set(n)).collect()
    };
    let mut w = facvar_set(&reduce(&spec.nonnull, &n));
    let given: Vec<ParamScalar> = spec.nonnull.iter().map(|q| q.with_ordering(aord)).collect();
    if product_in_radical(&given, &n) {
        // some element may have reduced to zero; report the factors as given
        return (false, Specification::new(vec![ParamScalar::one(aord)], facvar_set(&spec.nonnull)));
    }
    loop {
        let mut stripped = Vec::with_capacity(n.len());
        for g in &n {
            let kept = refine_against(facvar(g).expect("basis elements are nonzero"), &w)
                .into_iter()
                .filter(|f| !known_nonnull(f, &w))
                .fold(ParamScalar::one(aord), |acc, f| acc.mul(&f));
            stripped.push(kept);
        }
        let next = buchberger_reduced(&stripped, aord);
        if next == n {
            break;
        }
        n = next;
        w = facvar_set(&reduce(&w, &n));
        if n.iter().any(|g| g.is_one()) {
            return (false, Specification::new(n, w));
        }
    }
    sort_factors(&mut w);
    (true, Specification::new(n, w))
}

/// Result of [`newcond`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewCond {
    /// One undecided factor of the surviving leading coefficient.
    pub cd: Option<ParamScalar>,
    pub poly: ParamPoly,
    pub spec: Specification,
}

/// Strips leading terms whose coefficients vanish under `N` (adding each such
/// coefficient to `N`), reduces the survivor modulo `N'` and reports an
/// undecided factor of its leading coefficient, if any.
pub fn newcond(f: &ParamPoly, spec: &Specification) -> NewCond {
    let aord = f.param_order();
    let mut n = spec.null.clone();
    let mut g = f.clone();
    let mut cd = None;
    while let Some(lc) = g.lc() {
        match decide(lc, &n, &spec.nonnull) {
            Decision::Null => {
                let mut gens = n.clone();
                gens.push(lc.clone());
                n = buchberger_reduced(&gens, aord);
                g = g.drop_leading_term();
            }
            Decision::Nonnull => break,
            Decision::Undecided(c) => {
                cd = Some(c);
                break;
            }
        }
    }
    let poly = g.reduce_coeffs(&n).primitive();
    let nonnull = spec.nonnull.iter().map(|w| w.reduce_by_set(&n)).filter(|w| !w.is_zero()).collect();
    NewCond { cd, poly, spec: Specification::new(n, nonnull) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{rat, Exponent, QPoly};

    fn ab() -> MonomialOrdering {
        MonomialOrdering::lex(2)
    }
    fn a() -> ParamScalar {
        QPoly::var(&ab(), 0)
    }
    fn b() -> ParamScalar {
        QPoly::var(&ab(), 1)
    }
    fn poly(c: ParamScalar, i: u32, j: u32) -> ParamPoly {
        ParamPoly::term(&MonomialOrdering::lex(2), &ab(), Exponent::new(vec![i, j]), c)
    }

    #[test]
    fn canspec_examples() {
        let (ok, s) = canspec(&Specification::new(vec![a()], vec![a()]), &ab());
        assert!(!ok);
        assert_eq!(s.null, vec![QPoly::one(&ab())]);
        assert_eq!(s.nonnull, vec![a()]);

        let (ok, s) = canspec(&Specification::new(vec![], vec![a(), b()]), &ab());
        assert!(ok);
        assert_eq!(s, Specification::new(vec![], vec![b(), a()]));

        let (ok, s) = canspec(&Specification::new(vec![a().mul(&b())], vec![a()]), &ab());
        assert!(ok);
        assert_eq!(s, Specification::new(vec![b()], vec![a()]));
    }

    #[test]
    fn canspec_reduces_nonnull_modulo_null() {
        // W = {a + b} with N = {b} becomes W = {a}
        let (ok, s) = canspec(&Specification::new(vec![b()], vec![a().add(&b())]), &ab());
        assert!(ok);
        assert_eq!(s, Specification::new(vec![b()], vec![a()]));
        let (ok, _) = canspec(&Specification::new(vec![a().sub(&b())], vec![a().mul(&a()).sub(&b().mul(&b()))]), &ab());
        assert!(!ok);
    }

    #[test]
    fn decide_uses_common_zeros_with_null() {
        // a + 1 cannot vanish where a does; b can
        let one = ParamScalar::one(&ab());
        assert_eq!(decide(&a().add(&one), &[a()], &[]), Decision::Nonnull);
        assert_eq!(decide(&b(), &[a()], &[]), Decision::Undecided(b()));
        assert_eq!(decide(&a().add(&one), &[], &[]), Decision::Undecided(a().add(&one)));
        let n = buchberger_reduced(&[a().mul(&a()).sub(&one), b()], &ab());
        assert_eq!(decide(&a().add(&b()).add(&rat_c(2)), &n, &[]), Decision::Nonnull);
        assert_eq!(decide(&a().add(&one), &n, &[]), Decision::Undecided(a().add(&one)));
    }

    fn rat_c(k: i64) -> ParamScalar {
        QPoly::constant(&ab(), rat(k))
    }

    #[test]
    fn newcond_examples() {
        let r = newcond(&poly(a(), 2, 0), &Specification::default());
        assert_eq!(r.cd, Some(a()));
        assert_eq!(r.poly, poly(a(), 2, 0));
        assert_eq!(r.spec, Specification::default());

        let r = newcond(&poly(b(), 0, 2), &Specification::new(vec![], vec![a(), b()]));
        assert_eq!(r.cd, None);
        assert_eq!(r.poly, poly(b(), 0, 2));

        let r = newcond(&poly(b(), 0, 2), &Specification::new(vec![b()], vec![a()]));
        assert_eq!(r.cd, None);
        assert!(r.poly.is_zero());
        assert_eq!(r.spec, Specification::new(vec![b()], vec![a()]));
    }

    #[test]
    fn newcond_strips_and_picks_smallest_factor() {
        // (a b) x + y with N = {a}: the x term drops, y survives
        let f = poly(a().mul(&b()), 1, 0).add(&poly(ParamScalar::one(&ab()), 0, 1));
        let r = newcond(&f, &Specification::new(vec![a()], vec![]));
        assert_eq!(r.poly, poly(ParamScalar::one(&ab()), 0, 1));
        assert_eq!(r.cd, None);
        // (a b) x: both factors undecided, b is the smaller one
        let r = newcond(&poly(a().mul(&b()), 1, 0), &Specification::default());
        assert_eq!(r.cd, Some(b()));
        // 3 x: a unit
        let r = newcond(&poly(QPoly::constant(&ab(), rat(3)), 1, 0), &Specification::default());
        assert_eq!(r.cd, None);
        assert_eq!(r.poly, poly(ParamScalar::one(&ab()), 1, 0));
    }
}
