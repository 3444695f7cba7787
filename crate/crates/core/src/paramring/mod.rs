//! Gröbner-basis toolkit for the parameter ring `Q[a]`: reduced bases,
//! ideal and radical membership, gcds and square-free factor extraction.

mod factor;
mod groebner;

pub use factor::{coprime_basis, facvar, facvar_set, gcd, refine_against, sort_factors, squarefree_part};
pub use groebner::{buchberger_reduced, ideal_member, product_in_radical, radical_member, s_polynomial};

