//! Self-dual complexes: Alexander duals of trees, equal tree counts in
//! complementary dimensions, and the perfect square in even dimension.

use pdetlab::families::{diminished_trapezohedron, polygon, pyramid, simplex};
use pdetlab::selfdual::{perfect_square_check, verify_tree_duality};
use pdetlab::trees::{enumerate_trees, DEFAULT_BUDGET};

fn main() -> pdetlab::Result<()> {
    let s = polygon(5)?;
    let c = s.complex();
    let tree = &enumerate_trees(c, 0, DEFAULT_BUDGET)?[0];
    let sub = tree.subcomplex(c);
    println!("0-tree {:?} has dual {:?}", sub.ids(), s.alexander_dual(&sub)?.ids());

    let structures = [
        ("pentagon", polygon(5)?),
        ("3-simplex", simplex(4)?),
        ("pyramid over a hexagon", pyramid(&polygon(6)?)?),
        ("diminished trapezohedron", diminished_trapezohedron(4)?),
    ];
    for (name, s) in &structures {
        assert!(s.validate().is_empty());
        let d = s.ball_dim();
        for i in 0..d {
            let r = verify_tree_duality(s, i, DEFAULT_BUDGET)?;
            println!(
                "{name}: τ{} = {} over {} trees, τ{} = {} over {} trees, holds: {}",
                r.i, r.tau_i, r.trees_i, r.j, r.tau_j, r.trees_j, r.holds()
            );
        }
        if d % 2 == 0 {
            let sq = perfect_square_check(s, true, DEFAULT_BUDGET)?;
            println!("{name}: middle pdet {} = ({:?})², τ = {}", sq.pdet, sq.root, sq.tau_k);
        }
    }
    Ok(())
}
