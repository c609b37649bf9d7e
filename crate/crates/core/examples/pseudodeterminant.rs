//! Pseudodeterminants of singular integer matrices.
//!
//! Run with `cargo run --example pseudodeterminant`.

use pdetlab::linalg::{binet_cauchy_pdet, charpoly_unsigned, pdet, rank, IntMatrix};

fn main() -> pdetlab::Result<()> {
    // boundary of a triangle: three vertices, three edges
    let b = IntMatrix::from_rows(&[[-1, 0, 1], [1, -1, 0], [0, 1, -1]])?;
    let lap = b.try_mul(&b.transpose())?;

    println!("rank ∂ = {}", rank(&b));
    println!("det(t + ∂∂ᵗ) = {}", charpoly_unsigned(&lap)?);
    println!("pdet(∂∂ᵗ) = {}", pdet(&lap)?);
    println!("by the basis expansion: {}", binet_cauchy_pdet(&b));

    // pdet of the zero matrix is 1; nilpotent matrices also give 1
    let nil = IntMatrix::from_rows(&[[0, 5], [0, 0]])?;
    println!("pdet(0) = {}, pdet(nilpotent) = {}", pdet(&IntMatrix::zeros(3, 3))?, pdet(&nil)?);

    // a large symmetric example goes through the multimodular route
    let n = 40;
    let path = IntMatrix::from_fn(n, n, |i, j| match i.abs_diff(j) {
        0 => if i == 0 || i == n - 1 { 1 } else { 2 }.into(),
        1 => (-1).into(),
        _ => 0.into(),
    });
    println!("pdet of the {n}-vertex path Laplacian = {} (n vertices × 1 spanning tree)", pdet(&path)?);
    Ok(())
}
