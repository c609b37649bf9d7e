//! Characteristic polynomials of the symmetric simplex boundary.

use pdetlab::orientation::simplex_spectrum_check;

fn main() -> pdetlab::Result<()> {
    for k in 1..=4 {
        let r = simplex_spectrum_check(k)?;
        println!("n = {}, B = {}, C = {}", r.n, r.b, r.c);
        println!("  det(t + ∂∂ᵗ) = {}", r.laplacian);
        println!("  det(t − ∂)   = {}", r.signed);
        println!("  matches: {}", r.holds());
    }
    Ok(())
}
