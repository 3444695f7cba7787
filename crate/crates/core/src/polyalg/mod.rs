//! Exact rational scalars, exponent-vector monomials, monomial orderings and
//! polynomial arithmetic over `Q[a]` and `Q[a][x]`.

mod monomial;
mod ordering;
mod parampoly;
mod qpoly;

pub use monomial::{monomial_quotient, Exponent};
pub use ordering::{EliminationOrdering, MonomialOrdering, OrderKind};
pub use parampoly::{leading_data, ParamPoly};
pub use qpoly::{rat, rat_frac, ParamScalar, QPoly, Rational};

pub(crate) use ordering::check_permutation;
