use std::collections::HashMap;

use num_bigint::BigInt;

use super::SelfDual;
use crate::complex::Subcomplex;
use crate::error::{Error, Result};
use crate::linalg::IndexSet;
use crate::poly::{weighted_pdet, MultiPoly, VarTable};
use crate::trees::{enumerate_trees, laplacian_pdet, tau_via_pdet_chain, weigh_trees};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityReport {
    pub i: i32,
    pub j: i32,
    pub trees_i: usize,
    pub trees_j: usize,
    pub tau_i: BigInt,
    pub tau_j: BigInt,
    /// `τᵢ(S, x) = x^[n] τⱼ(S, x⁻¹)` with each `j`-cell `σ` labelled like the
    /// `i`-cell `α(σ)`.
    pub weighted_holds: bool,
    /// Per-tree problems: dual not a tree, torsion mismatch, or
    /// `(T∨)∨ ≠ α⁻²(T)`.
    pub failures: Vec<String>,
}

impl DualityReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty() && self.tau_i == self.tau_j && self.weighted_holds
    }
}

/// For every `i`-tree `T`, checks that `T∨` is a `j`-tree with the same
/// torsion order (`i + j = d − 1`) and that `(T∨)∨ = α⁻²(T)`; also compares
/// the enumerators, plain and weighted.
pub fn verify_tree_duality(s: &SelfDual, i: i32, budget: u128) -> Result<DualityReport> {
    let c = s.complex();
    let d = s.ball_dim();
    let j = d - 1 - i;
    if i < 0 || j < 0 {
        return Err(Error::DimOutOfRange {
            dim: i,
            min: 0,
            max: d - 1,
        });
    }
    let trees_i = enumerate_trees(c, i, budget)?;
    let trees_j = if j == i { trees_i.clone() } else { enumerate_trees(c, j, budget)? };
    let by_facets: HashMap<&IndexSet, &BigInt> = trees_j.iter().map(|t| (&t.facets, &t.torsion)).collect();
    let inv = s.inverse();
    let inv2: Vec<usize> = (0..c.len()).map(|x| inv[inv[x]]).collect();

    let mut failures = Vec::new();
    for t in &trees_i {
        let sub = t.subcomplex(c);
        let dual = s.alexander_dual(&sub)?;
        let name = || format!("{:?}", t.facet_ids(c));
        let skeleton_ok = Subcomplex::skeleton(c, j - 1).is_subset_of(&dual) && dual.is_subset_of(&Subcomplex::skeleton(c, j));
        let facets = IndexSet::new(dual.positions(j))?;
        match (skeleton_ok, by_facets.get(&facets)) {
            (true, Some(&tor)) if *tor == t.torsion => {}
            (true, Some(&tor)) => failures.push(format!("tree {}: torsion {} but dual torsion {tor}", name(), t.torsion)),
            _ => failures.push(format!("tree {}: dual {:?} is not a {j}-tree", name(), dual.ids())),
        }
        let back = s.alexander_dual(&dual)?;
        if back != sub.map(&inv2) {
            failures.push(format!("tree {}: (T∨)∨ differs from α⁻²(T)", name()));
        }
    }

    let ri = c.dim_range(i);
    let rj = c.dim_range(j);
    let x_i: Vec<usize> = (0..ri.len()).collect();
    let x_j: Vec<usize> = rj.clone().map(|cell| s.apply(cell) - ri.start).collect();
    let lhs = weigh_trees(&trees_i, &x_i)?;
    let rhs = weigh_trees(&trees_j, &x_j)?.complement_transform(&x_i);
    let sq = |ts: &[crate::trees::TreeRecord]| -> BigInt { ts.iter().map(|t| &t.torsion * &t.torsion).sum() };

    Ok(DualityReport {
        i,
        j,
        trees_i: trees_i.len(),
        trees_j: trees_j.len(),
        tau_i: sq(&trees_i),
        tau_j: sq(&trees_j),
        weighted_holds: lhs == rhs,
        failures,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerfectSquareReport {
    pub k: i32,
    pub pdet: BigInt,
    /// Integer square root, when `pdet` is a perfect square.
    pub root: Option<BigInt>,
    pub tau_k: BigInt,
    pub weighted: Option<WeightedSquare>,
}

/// `pdet(X∂Y∂ᵗ)` against `τₖ(S, x) τₖ(S, y)`, with `x` on the `(k−1)`-cells,
/// the `k`-cell `σ` carrying the `x` of `α⁻¹(σ)` and its own `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedSquare {
    pub vars: VarTable,
    pub lhs: MultiPoly,
    pub rhs: MultiPoly,
}

impl PerfectSquareReport {
    pub fn holds(&self) -> bool {
        self.root.as_ref() == Some(&self.tau_k) && self.weighted.as_ref().is_none_or(|w| w.lhs == w.rhs)
    }
}

/// For `d = 2k`: `pdet(∂ₖ∂ₖᵗ) = τₖ²`, with `τₖ` from the pdet chain. The
/// weighted form enumerates `k`-trees and is skipped when `with_weights` is
/// false.
pub fn perfect_square_check(s: &SelfDual, with_weights: bool, budget: u128) -> Result<PerfectSquareReport> {
    let d = s.ball_dim();
    if d % 2 != 0 || d < 0 {
        return Err(Error::OddDimension(d.unsigned_abs() as usize));
    }
    let k = d / 2;
    let c = s.complex();
    let b = c.boundary_matrix(k)?;
    let p = laplacian_pdet(&b);
    let r = p.sqrt();
    let root = (&r * &r == p).then_some(r);
    let tau_k = tau_via_pdet_chain(c, k)?;

    let weighted = if with_weights {
        let (n, m) = (b.rows(), b.cols());
        let x: Vec<usize> = (0..n).collect();
        let y: Vec<usize> = (n..n + m).collect();
        let lhs = weighted_pdet(&b, &x, &y)?;
        let trees = enumerate_trees(c, k, budget)?;
        let inv = s.inverse();
        let below = c.dim_range(k - 1).start;
        let x_on_k: Vec<usize> = c.dim_range(k).map(|cell| inv[cell] - below).collect();
        let rhs = weigh_trees(&trees, &x_on_k)?.try_mul(&weigh_trees(&trees, &y)?)?;
        Some(WeightedSquare {
            vars: VarTable::xy(n, m),
            lhs,
            rhs,
        })
    } else {
        None
    };
    Ok(PerfectSquareReport {
        k,
        pdet: p,
        root,
        tau_k,
        weighted,
    })
}
