//! Cellular spanning trees and their torsion.
//!
//! The 2-skeleton of the 5-simplex has 2-trees whose first homology is
//! finite but not trivial (triangulated projective planes).

use pdetlab::families::simplex_skeleton;
use pdetlab::trees::{enumerate_trees, tau_via_pdet_chain, DEFAULT_BUDGET};
use std::collections::BTreeMap;

fn main() -> pdetlab::Result<()> {
    let c = simplex_skeleton(6, 2)?;
    let trees = enumerate_trees(&c, 2, DEFAULT_BUDGET)?;

    let mut by_torsion: BTreeMap<String, usize> = BTreeMap::new();
    for t in &trees {
        *by_torsion.entry(t.torsion.to_string()).or_default() += 1;
    }
    println!("{} 2-trees, counted by |H̃₁(T)|: {by_torsion:?}", trees.len());

    let projective = trees.iter().find(|t| t.torsion == 2.into()).expect("exists");
    println!("one with torsion 2: {}", projective.to_json_line(&c));

    let weighted_count: num_bigint::BigInt = trees.iter().map(|t| &t.torsion * &t.torsion).sum();
    println!("Σ|H̃₁(T)|² = {weighted_count}, from Laplacians = {}", tau_via_pdet_chain(&c, 2)?);
    Ok(())
}
