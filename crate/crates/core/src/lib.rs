//! Comprehensive involutive systems for parametric polynomial ideals.
//!
//! Given polynomials in `Q[a][x]` whose coefficients depend on parameters
//! `a = a1..am`, the engine partitions the parameter space into cells described
//! by null/nonnull conditions and computes, for each cell, a minimal involutive
//! basis (which is also a Gröbner basis) valid at every parameter value in
//! that cell.
//!
//! Module map:
//!
//! - [`polyalg`]: exact rationals, monomials, orderings, `Q[a]` and `Q[a][x]`.
//! - [`paramring`]: Gröbner bases, radical membership and square-free factor
//!   extraction in the parameter ring.
//! - [`involution`]: involutive divisions, involutive normal forms, the
//!   non-parametric completion algorithm and the box completion of a Gröbner
//!   basis.
//! - [`engine`]: specifications, condition discovery, the parametric completion
//!   and the branching driver producing the cells.
//! - [`verify`]: independent oracles used by the test suites and `cisys verify`.
//! - [`cli`]: problem files, reports, traces and the command-line driver.

pub mod cli;
pub mod engine;
pub mod error;
pub mod involution;
pub mod paramring;
pub mod polyalg;
pub mod verify;

pub use error::{Error, Result};
pub use polyalg::{
    EliminationOrdering, Exponent, MonomialOrdering, OrderKind, ParamPoly, ParamScalar, QPoly,
    Rational,
};
