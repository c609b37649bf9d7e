//! Weighted pseudodeterminants as polynomials in cell variables.

use pdetlab::families::polygon;
use pdetlab::poly::{weighted_pdet, VarTable};

fn main() -> pdetlab::Result<()> {
    let square = polygon(4)?;
    let c = square.complex();
    let b = c.boundary_matrix(1)?;
    let (n, m) = (b.rows(), b.cols());

    let names: Vec<String> = c
        .dim_range(0)
        .map(|i| format!("x_{}", c.cell(i).id()))
        .chain(c.dim_range(1).map(|i| format!("y_{}", c.cell(i).id())))
        .collect();
    let vars = VarTable::new(names);
    let x: Vec<usize> = (0..n).collect();
    let y: Vec<usize> = (n..n + m).collect();

    let w = weighted_pdet(&b, &x, &y)?;
    println!("pdet(X∂Y∂ᵗ) = {}", w.render(&vars));
    println!("at all ones: {}", w.eval_ones());

    // toggling the vertex variables turns each term into (vertex) × (spanning tree)
    let flipped = w.complement_transform(&x);
    println!("x-complemented: {}", flipped.render(&vars));
    Ok(())
}
