//! Involutive divisions of the pairwise class, involutive normal forms,
//! completion to an involutive basis over `Q` and the box completion of a
//! Gröbner basis.

mod completion;
mod division;
mod gbi;
mod normal_form;

pub use completion::prop1_completion;
pub use division::{inv_divisor, nm_pair, nm_set, BoxOrientation, DivisionSpec, NMPartition, VarSet};
pub use gbi::{criteria, gbi, gbi_with, GbiOptions, GbiStats, Triple};
pub use normal_form::{inv_head_nf, inv_nf, inv_tail_nf};

