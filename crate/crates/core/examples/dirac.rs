//! The Dirac operator ∂ + ∂ᵗ on all cells at once.

use pdetlab::complex::CellComplex;
use pdetlab::families::{polygon, simplex, simplex_skeleton};
use pdetlab::orientation::{dirac_pdet_pair, dirac_squares_to_laplacian};

fn main() -> pdetlab::Result<()> {
    let point = CellComplex::builder().cell("v", 0, &[]).build()?;
    let complexes = [
        ("point", point),
        ("pentagon", polygon(5)?.into_complex()),
        ("6-simplex", simplex(7)?.into_complex()),
        ("2-skeleton on 6 vertices", simplex_skeleton(6, 2)?),
    ];
    for (name, c) in &complexes {
        let (d, lap) = dirac_pdet_pair(c)?;
        println!(
            "{name}: D² = ∂∂ᵗ + ∂ᵗ∂: {}, pdet D = {d}, pdet(∂∂ᵗ) = {lap}",
            dirac_squares_to_laplacian(c)
        );
    }
    Ok(())
}
