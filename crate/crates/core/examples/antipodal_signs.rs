//! Reorienting middle cells so that the boundary matrix becomes symmetric
//! or skew-symmetric, and the square root it then takes.

use pdetlab::families::{polygon, simplex};
use pdetlab::orientation::{pair_middle_boundary, sign_solve, verify_square_root_theorem};
use pdetlab::trees::DEFAULT_BUDGET;

fn main() -> pdetlab::Result<()> {
    let cases = [
        ("triangle", polygon(3)?),
        ("square", polygon(4)?),
        ("pentagon", polygon(5)?),
        ("hexagon", polygon(6)?),
        ("4-simplex", simplex(5)?),
    ];
    for (name, s) in &cases {
        let paired = pair_middle_boundary(s)?;
        match sign_solve(&paired) {
            Ok(signs) => {
                let r = verify_square_root_theorem(s, &signs, paired.size() <= 10, DEFAULT_BUDGET)?;
                println!("{name}: signs {}", signs.to_json());
                println!("  pdet(∂) = {}, τ = {}, pdet(∂∂ᵗ) = {}", r.pdet, r.tau_k, r.laplacian_pdet);
                if let Some(w) = &r.weighted {
                    println!("  weighted identity holds up to sign {}: {}", w.sign, w.holds());
                }
            }
            Err(why) => println!("{name}: no signs work: {why}"),
        }
    }
    Ok(())
}
