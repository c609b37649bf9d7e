use num_bigint::BigInt;

use super::{CellComplex, Subcomplex};
use crate::error::{Error, Result};
use crate::linalg::{rank, smith_normal_form, IntMatrix};

/// A finitely generated abelian group `Z^free_rank ⊕ ⨁ Z/tᵢ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homology {
    pub free_rank: usize,
    /// Invariant factors greater than one, each dividing the next.
    pub torsion: Vec<BigInt>,
}

impl Homology {
    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Group order; `None` when the group is infinite.
    pub fn order(&self) -> Option<BigInt> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }
}

/// `∂ᵢ` restricted to the cells of `members` on both sides.
fn restricted_boundary(c: &CellComplex, members: &[bool], i: i32) -> IntMatrix {
    let rows: Vec<usize> = c.dim_range(i - 1).filter(|&r| members[r]).collect();
    let cols: Vec<usize> = c.dim_range(i).filter(|&k| members[k]).collect();
    let mut m = IntMatrix::zeros(rows.len(), cols.len());
    for (j, &k) in cols.iter().enumerate() {
        for &(f, coeff) in c.cell(k).boundary() {
            if let Ok(r) = rows.binary_search(&f) {
                let v = m.get(r, j) + coeff;
                m.set(r, j, v);
            }
        }
    }
    m
}

/// Homology in degree `i` of the chain complex spanned by an arbitrary set of
/// cells, with the boundary of the ambient complex restricted to it.
fn homology_of_cells(c: &CellComplex, members: &[bool], i: i32) -> Homology {
    let n = c.dim_range(i).filter(|&k| members[k]).count();
    let down = if i >= 0 { rank(&restricted_boundary(c, members, i)) } else { 0 };
    let up = if i < c.dim() {
        smith_normal_form(&restricted_boundary(c, members, i + 1))
    } else {
        smith_normal_form(&IntMatrix::zeros(n, 0))
    };
    Homology {
        free_rank: n - down - up.rank(),
        torsion: up.torsion(),
    }
}

/// `H̃ᵢ` of a subcomplex. Since the empty cell is part of every nonvoid
/// subcomplex this is reduced homology; the void selection has none.
pub fn reduced_homology(s: &Subcomplex<'_>, i: i32) -> Homology {
    homology_of_cells(s.complex(), s.members(), i)
}

/// `H̃ᵢ(T, T′)`, computed on the quotient chain complex spanned by `T ∖ T′`.
pub fn relative_homology(t: &Subcomplex<'_>, t_sub: &Subcomplex<'_>, i: i32) -> Result<Homology> {
    if !std::ptr::eq(t.complex(), t_sub.complex()) {
        return Err(Error::NotNested("subcomplexes of different complexes".into()));
    }
    if let Some(c) = t_sub.iter().find(|&c| !t.contains(c)) {
        return Err(Error::NotNested(t.complex().cell(c).id().to_string()));
    }
    let diff = t.difference(t_sub);
    Ok(homology_of_cells(t.complex(), diff.members(), i))
}

/// `|H̃ᵢ(T, T′)|`, or `None` when infinite.
pub fn relative_homology_order(t: &Subcomplex<'_>, t_sub: &Subcomplex<'_>, i: i32) -> Result<Option<BigInt>> {
    Ok(relative_homology(t, t_sub, i)?.order())
}

/// Fails with [`Error::NotAcyclic`] unless `H̃ⱼ(X) = 0` for `−1 ≤ j ≤ i`.
pub fn require_acyclic(c: &CellComplex, i: i32) -> Result<()> {
    for j in -1..=i.min(c.dim()) {
        if !c.reduced_homology(j).is_zero() {
            return Err(Error::NotAcyclic { required: i, dim: j });
        }
    }
    Ok(())
}

/// Compares `rank ∂ᵢ` with the alternating face count
/// `Σ_{j=−1}^{i−1} (−1)^{i−1−j} f_j`. Requires `X` to be `(i−1)`-acyclic.
pub fn rank_check(c: &CellComplex, i: i32) -> Result<bool> {
    require_acyclic(c, i - 1)?;
    let mut expected: i64 = 0;
    for j in -1..i {
        let sign = if (i - 1 - j) % 2 == 0 { 1 } else { -1 };
        expected += sign * c.f(j) as i64;
    }
    Ok(rank(&c.boundary_matrix(i)?) as i64 == expected)
}
