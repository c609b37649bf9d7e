//! Exact polynomials: univariate characteristic polynomials and multilinear
//! tree enumerators.

mod multi;
mod uni;
mod weighted;

pub use multi::{Monomial, MultiPoly, VarTable};
pub use uni::UniPoly;
pub use weighted::{weighted_laplacian_charpoly, weighted_pdet, weighted_principal_pdet};
