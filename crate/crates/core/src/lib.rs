//! Exact pseudodeterminants of integer matrices, cellular spanning trees with
//! torsion, and self-dual cell balls.

pub mod cli;
pub mod complex;
pub mod error;
pub mod families;
pub mod linalg;
pub mod orientation;
pub mod poly;
pub mod report;
pub mod selfdual;
pub mod suite;
pub mod trees;

pub use error::{Error, Result};
