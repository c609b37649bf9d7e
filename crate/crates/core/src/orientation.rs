//! Orienting the middle cells of a self-dual `2k`-ball so that the paired
//! boundary becomes symmetric or skew-symmetric, plus the Dirac operator
//! and the checks built on both.

use std::collections::VecDeque;
use std::fmt;

use indexmap::IndexMap;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::complex::CellComplex;
use crate::error::{Error, Result};
use crate::linalg::{binomial, charpoly_signed, charpoly_unsigned, pdet, Combinations, IntMatrix};
use crate::poly::{weighted_principal_pdet, MultiPoly, UniPoly, VarTable};
use crate::selfdual::SelfDual;
use crate::trees::{enumerate_trees, tau_chain, weigh_trees};

/// `∂ₖ` made square: column `j` is the `k`-cell `τⱼ` and row `j` is the
/// `(k−1)`-cell paired with it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairedMatrix {
    pub k: i32,
    pub matrix: IntMatrix,
    pub col_ids: Vec<String>,
    pub row_ids: Vec<String>,
}

impl PairedMatrix {
    pub fn size(&self) -> usize {
        self.matrix.rows()
    }

    /// The matrix with column `j` multiplied by `signs[j]`.
    pub fn signed(&self, signs: &SignVector) -> Result<IntMatrix> {
        let s = signs.in_order(&self.col_ids)?;
        Ok(self.matrix.scale_columns(&s))
    }

    /// `Bᵗ = (−1)ᵏ B`.
    pub fn has_parity(m: &IntMatrix, k: i32) -> bool {
        if k % 2 == 0 {
            m.is_symmetric()
        } else {
            m.is_skew_symmetric()
        }
    }
}

/// Rows of `∂ₖ` reordered so that row `j` is `α(τⱼ)`.
pub fn pair_middle_boundary(s: &SelfDual) -> Result<PairedMatrix> {
    let d = s.ball_dim();
    if d < 0 || d % 2 != 0 {
        return Err(Error::OddDimension(d.unsigned_abs() as usize));
    }
    let k = d / 2;
    let c = s.complex();
    let b = c.boundary_matrix(k)?;
    let cols = c.dim_range(k);
    let rows = c.dim_range(k - 1);
    let mut order = Vec::with_capacity(cols.len());
    for tau in cols.clone() {
        let a = s.apply(tau);
        if !rows.contains(&a) {
            return Err(Error::WrongCellDim {
                cell: c.cell(a).id().to_string(),
                got: c.cell(a).dim(),
                expected: k - 1,
            });
        }
        order.push(a - rows.start);
    }
    let col_order: Vec<usize> = (0..cols.len()).collect();
    Ok(PairedMatrix {
        k,
        matrix: b.permuted(&order, &col_order),
        col_ids: c.ids(cols.clone()),
        row_ids: c.ids(order.iter().map(|&r| rows.start + r)),
    })
}

/// A sign per `k`-cell, keyed by cell id. Serializes as `{"id": ±1, …}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SignVector(pub IndexMap<String, i64>);

impl SignVector {
    pub fn all_plus(ids: &[String]) -> Self {
        SignVector(ids.iter().map(|id| (id.clone(), 1)).collect())
    }

    pub fn get(&self, id: &str) -> Option<i64> {
        self.0.get(id).copied()
    }

    /// Signs listed in the order of `ids`; every id must be present with
    /// value ±1.
    pub fn in_order(&self, ids: &[String]) -> Result<Vec<i64>> {
        if self.0.len() != ids.len() {
            return Err(Error::DimensionMismatch(format!("{} signs for {} cells", self.0.len(), ids.len())));
        }
        ids.iter()
            .map(|id| match self.0.get(id) {
                Some(&s) if s == 1 || s == -1 => Ok(s),
                Some(&s) => Err(Error::Parse(format!("sign of `{id}` is {s}, expected ±1"))),
                None => Err(Error::UnknownCell(id.clone())),
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("sign maps serialize") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Why no column signs make the paired matrix (skew-)symmetric.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Infeasible {
    /// `k` odd and the diagonal entry at this cell is nonzero.
    NonzeroDiagonal { cell: String, entry: BigInt },
    /// `B[i,j]` and `B[j,i]` differ in absolute value.
    UnmatchedPair {
        cells: (String, String),
        entries: (BigInt, BigInt),
    },
    /// Constraints around this cycle multiply to `−1`.
    OddCycle { cells: Vec<String> },
}

impl fmt::Display for Infeasible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Infeasible::NonzeroDiagonal { cell, entry } => {
                write!(f, "diagonal entry {entry} at `{cell}` must vanish for skew-symmetry")
            }
            Infeasible::UnmatchedPair { cells, entries } => write!(
                f,
                "entries {} at (`{}`,`{}`) and {} at the transposed position cannot be matched by signs",
                entries.0, cells.0, cells.1, entries.1
            ),
            Infeasible::OddCycle { cells } => {
                write!(f, "sign constraints around the cycle {} are inconsistent", cells.join(" → "))
            }
        }
    }
}

/// Column signs `ε` with `(B·diag ε)ᵗ = (−1)ᵏ B·diag ε`.
///
/// Every off-diagonal pair `B[i,j]`, `B[j,i]` forces `εᵢεⱼ`; the constraints
/// are propagated breadth-first from `+1` at the first cell of each
/// component.
pub fn sign_solve(b: &PairedMatrix) -> std::result::Result<SignVector, Infeasible> {
    let m = &b.matrix;
    let n = b.size();
    let parity: i64 = if b.k % 2 == 0 { 1 } else { -1 };
    let id = |i: usize| b.col_ids[i].clone();

    let mut adj: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n];
    for i in 0..n {
        if parity < 0 && !m.get(i, i).is_zero() {
            return Err(Infeasible::NonzeroDiagonal {
                cell: id(i),
                entry: m.get(i, i).clone(),
            });
        }
        for j in i + 1..n {
            let (a, t) = (m.get(i, j), m.get(j, i));
            if a.is_zero() && t.is_zero() {
                continue;
            }
            if a.abs() != t.abs() {
                return Err(Infeasible::UnmatchedPair {
                    cells: (id(i), id(j)),
                    entries: (a.clone(), t.clone()),
                });
            }
            // B[j,i]·εᵢ = parity·B[i,j]·εⱼ
            let rel = if (a.sign() == t.sign()) == (parity > 0) { 1 } else { -1 };
            adj[i].push((j, rel));
            adj[j].push((i, rel));
        }
    }

    let mut eps = vec![0i64; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for root in 0..n {
        if eps[root] != 0 {
            continue;
        }
        eps[root] = 1;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &(v, rel) in &adj[u] {
                let want = eps[u] * rel;
                if eps[v] == 0 {
                    eps[v] = want;
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                } else if eps[v] != want {
                    let cycle = tree_cycle(u, v, &parent, &depth);
                    return Err(Infeasible::OddCycle {
                        cells: cycle.into_iter().map(id).collect(),
                    });
                }
            }
        }
    }
    Ok(SignVector(b.col_ids.iter().cloned().zip(eps).collect()))
}

/// The cycle formed by the BFS-tree paths from `u` and `v` plus the edge
/// `v–u`, starting and ending at `u`.
fn tree_cycle(u: usize, v: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    let (mut up, mut down) = (vec![a], vec![b]);
    while a != b {
        if depth[a] >= depth[b] {
            a = parent[a];
            up.push(a);
        } else {
            b = parent[b];
            down.push(b);
        }
    }
    down.pop();
    up.extend(down.into_iter().rev());
    up.push(u);
    up
}

fn subset_label(set: &[usize], n: usize) -> String {
    let labels: Vec<String> = set.iter().map(|v| (v + 1).to_string()).collect();
    labels.join(if n <= 9 { "" } else { "." })
}

/// `∂ₖ` of the simplex on `2k+1` vertices built straight from subsets:
/// column `σ` pairs with row `[n] ∖ σ` and is multiplied by `(−1)^‖σ‖`,
/// `‖σ‖` being the sum of its 1-based vertex labels.
pub fn simplex_symmetric_boundary(k: usize) -> Result<PairedMatrix> {
    if k == 0 {
        return Err(Error::InvalidFamily("the sign rule needs k ≥ 1".into()));
    }
    let n = 2 * k + 1;
    let cols: Vec<Vec<usize>> = Combinations::new(n, k + 1).map(|s| s.as_slice().to_vec()).collect();
    let rows: Vec<Vec<usize>> = Combinations::new(n, k + 1).map(|s| s.complement(n).as_slice().to_vec()).collect();
    let size = cols.len();
    let matrix = IntMatrix::from_fn(size, size, |i, j| {
        let (face, sigma) = (&rows[i], &cols[j]);
        if !face.iter().all(|v| sigma.contains(v)) {
            return BigInt::zero();
        }
        let pos = sigma.iter().position(|v| !face.contains(v)).expect("σ has one more vertex");
        let norm: usize = sigma.iter().map(|v| v + 1).sum();
        BigInt::from(if (pos + norm).is_multiple_of(2) { 1 } else { -1 })
    });
    Ok(PairedMatrix {
        k: k as i32,
        matrix,
        col_ids: cols.iter().map(|s| subset_label(s, n)).collect(),
        row_ids: rows.iter().map(|s| subset_label(s, n)).collect(),
    })
}

/// `(−1)^‖σ‖` for every `k`-cell of the simplex on `2k+1` vertices, keyed
/// like the cells of [`crate::families::simplex`].
pub fn simplex_sign_rule(k: usize) -> SignVector {
    let n = 2 * k + 1;
    SignVector(
        Combinations::new(n, k + 1)
            .map(|s| {
                let norm: usize = s.iter().map(|v| v + 1).sum();
                (subset_label(s.as_slice(), n), if norm.is_multiple_of(2) { 1 } else { -1 })
            })
            .collect(),
    )
}

/// `∂ + ∂ᵗ` over all cells, the empty cell included.
pub fn dirac_operator(c: &CellComplex) -> IntMatrix {
    let b = c.total_boundary();
    &b + &b.transpose()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareRootReport {
    pub k: i32,
    /// `pdet` of the signed paired matrix, sign kept.
    pub pdet: BigInt,
    pub tau_k: BigInt,
    pub tau_below: BigInt,
    /// `pdet(∂∂ᵗ)`, to be compared with `pdet(∂)²`.
    pub laplacian_pdet: BigInt,
    /// The signs give `∂ᵗ = (−1)ᵏ∂`.
    pub parity_holds: bool,
    pub weighted: Option<WeightedSquareRoot>,
}

impl SquareRootReport {
    pub fn holds(&self) -> bool {
        self.parity_holds
            && self.pdet.abs() == self.tau_k
            && self.tau_k == self.tau_below
            && self.laplacian_pdet == &self.pdet * &self.pdet
            && self.weighted.as_ref().is_none_or(|w| w.holds())
    }
}

/// `pdet(Y∂ᵗ)` against `τₖ(S, y)`, and `pdet(X∂)` against the complement of
/// `τₖ₋₁(S, x)`, with `xⱼ` on the row cell paired with column `j`. Both
/// sides are compared after multiplying the right by `sign`, the sign of
/// `pdet(∂)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedSquareRoot {
    pub sign: i64,
    pub y_vars: VarTable,
    pub y_lhs: MultiPoly,
    pub y_rhs: MultiPoly,
    pub x_vars: VarTable,
    pub x_lhs: MultiPoly,
    pub x_rhs: MultiPoly,
}

impl WeightedSquareRoot {
    pub fn holds(&self) -> bool {
        let s = BigInt::from(self.sign);
        self.y_lhs == self.y_rhs.scale(&s) && self.x_lhs == self.x_rhs.scale(&s)
    }
}

/// Compares the signed paired matrix with the tree enumerators. `τ`s come
/// from the pdet chain; the weighted forms enumerate trees and run only
/// when `with_weights` is set.
pub fn verify_square_root_theorem(
    s: &SelfDual,
    signs: &SignVector,
    with_weights: bool,
    budget: u128,
) -> Result<SquareRootReport> {
    let paired = pair_middle_boundary(s)?;
    let k = paired.k;
    let m = paired.signed(signs)?;
    let c = s.complex();
    let chain = tau_chain(c, k)?;
    let signed_pdet = pdet(&m)?;
    let (tau_k, tau_below) = (chain[chain.len() - 1].clone(), chain[chain.len() - 2].clone());

    let weighted = if with_weights {
        let f = paired.size();
        let vars: Vec<usize> = (0..f).collect();
        let y_lhs = weighted_principal_pdet(&m.transpose(), &vars)?;
        let y_rhs = weigh_trees(&enumerate_trees(c, k, budget)?, &vars)?;

        // variable j sits on the (k−1)-cell paired with column j
        let cols = c.dim_range(k).start;
        let inv = s.inverse();
        let x_of_cell: Vec<usize> = c.dim_range(k - 1).map(|cell| inv[cell] - cols).collect();
        let x_lhs = weighted_principal_pdet(&m, &vars)?;
        let x_rhs = weigh_trees(&enumerate_trees(c, k - 1, budget)?, &x_of_cell)?.complement_transform(&vars);
        Some(WeightedSquareRoot {
            sign: if signed_pdet.is_negative() { -1 } else { 1 },
            y_vars: VarTable::new(paired.col_ids.iter().map(|id| format!("y[{id}]")).collect()),
            y_lhs,
            y_rhs,
            x_vars: VarTable::new(paired.row_ids.iter().map(|id| format!("x[{id}]")).collect()),
            x_lhs,
            x_rhs,
        })
    } else {
        None
    };

    Ok(SquareRootReport {
        k,
        pdet: signed_pdet,
        tau_k,
        tau_below,
        laplacian_pdet: pdet(&m.gram())?,
        parity_holds: PairedMatrix::has_parity(&m, k),
        weighted,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumReport {
    pub k: usize,
    pub n: usize,
    pub b: usize,
    pub c: usize,
    pub laplacian: UniPoly,
    pub laplacian_expected: UniPoly,
    pub signed: UniPoly,
    pub signed_expected: UniPoly,
    pub trace: BigInt,
}

impl SpectrumReport {
    pub fn holds(&self) -> bool {
        self.laplacian == self.laplacian_expected && self.signed == self.signed_expected && self.trace.is_zero()
    }
}

/// Characteristic polynomials of the sign-rule boundary `∂` of the simplex
/// on `n = 2k+1` vertices: `det(t + ∂∂ᵗ) = tᴮ(t+n)ᶜ` and
/// `det(t − ∂) = tᴮ(t² ± n)^(C/2)`, `+` for odd `k`.
pub fn simplex_spectrum_check(k: usize) -> Result<SpectrumReport> {
    let p = simplex_symmetric_boundary(k)?;
    let n = 2 * k + 1;
    let b = binomial(n - 1, k + 1) as usize;
    let c = binomial(n - 1, k) as usize;
    let m = &p.matrix;
    let t = UniPoly::monomial(1);
    let n_big = BigInt::from(n);
    let shift = if k % 2 == 1 { n_big.clone() } else { -n_big.clone() };
    let quad = &(&t * &t) + &UniPoly::constant(shift);
    Ok(SpectrumReport {
        k,
        n,
        b,
        c,
        laplacian: charpoly_unsigned(&m.gram())?,
        laplacian_expected: &UniPoly::monomial(b) * &UniPoly::linear(n_big).pow(c as u32),
        signed: charpoly_signed(m)?,
        signed_expected: &UniPoly::monomial(b) * &quad.pow((c / 2) as u32),
        trace: m.trace(),
    })
}

/// `true` when `(∂+∂ᵗ)² = ∂∂ᵗ + ∂ᵗ∂` for the total boundary.
pub fn dirac_squares_to_laplacian(c: &CellComplex) -> bool {
    let b = c.total_boundary();
    let bt = b.transpose();
    let d = &b + &bt;
    &d * &d == &(&b * &bt) + &(&bt * &b)
}

/// `pdet(∂+∂ᵗ)² = pdet(∂∂ᵗ)²` for the total boundary; returns both pdets.
pub fn dirac_pdet_pair(c: &CellComplex) -> Result<(BigInt, BigInt)> {
    let b = c.total_boundary();
    Ok((pdet(&dirac_operator(c))?, pdet(&b.gram())?))
}
