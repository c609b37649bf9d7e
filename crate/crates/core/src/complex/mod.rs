//! Finite graded cell complexes with signed incidence.
//!
//! Every complex carries one cell of dimension −1, the empty cell
//! [`EMPTY_CELL`], and every vertex has it as a facet with coefficient +1, so
//! boundary matrices are those of the augmented chain complex.

mod homology;
mod json;
mod subcomplex;

use std::collections::{BTreeMap, HashMap};
use std::ops::Range;

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

pub use homology::{rank_check, reduced_homology, relative_homology, relative_homology_order, require_acyclic, Homology};
pub use json::{CellEntry, ComplexFile};
pub use subcomplex::Subcomplex;

/// Id of the empty cell.
pub const EMPTY_CELL: &str = "∅";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    id: String,
    dim: i32,
    /// `(facet index, coefficient)`, in the order given.
    boundary: Vec<(usize, i64)>,
}

impl Cell {
    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn dim(&self) -> i32 {
        self.dim
    }

    pub fn boundary(&self) -> &[(usize, i64)] {
        &self.boundary
    }
}

/// Cells are stored graded by dimension and, within a dimension, in insertion
/// order. A cell's index is its position in that global order; the empty cell
/// is always index 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellComplex {
    cells: Vec<Cell>,
    /// `starts[d + 1]..starts[d + 2]` are the cells of dimension `d`.
    starts: Vec<usize>,
    index: HashMap<String, usize>,
    regular: bool,
}

/// `(id, dim, boundary)` as given to the builder.
type PendingCell = (String, i32, Vec<(String, i64)>);

#[derive(Clone, Debug, Default)]
pub struct ComplexBuilder {
    cells: Vec<PendingCell>,
    regular: bool,
}

impl ComplexBuilder {
    pub fn new() -> Self {
        ComplexBuilder::default()
    }

    pub fn regular(mut self, regular: bool) -> Self {
        self.regular = regular;
        self
    }

    /// Adds a cell of dimension `dim ≥ 0`. Vertices get `(∅, +1)` unless the
    /// boundary already mentions the empty cell.
    pub fn cell(&mut self, id: impl Into<String>, dim: i32, boundary: &[(&str, i64)]) -> &mut Self {
        let boundary = boundary.iter().map(|&(f, c)| (f.to_string(), c)).collect();
        self.cells.push((id.into(), dim, boundary));
        self
    }

    pub fn cell_owned(&mut self, id: String, dim: i32, boundary: Vec<(String, i64)>) -> &mut Self {
        self.cells.push((id, dim, boundary));
        self
    }

    /// Resolves ids and grades the cells, then runs [`CellComplex::validate`].
    pub fn build(&self) -> Result<CellComplex> {
        let c = self.build_unchecked()?;
        let problems = c.validate();
        if problems.is_empty() {
            Ok(c)
        } else {
            Err(Error::InvalidComplex(problems))
        }
    }

    /// Resolves ids and grades the cells without checking ∂² = 0, facet
    /// dimensions or regularity.
    pub fn build_unchecked(&self) -> Result<CellComplex> {
        let mut by_dim: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
        let max_dim = self.cells.iter().map(|c| c.1).max().unwrap_or(-1);
        for (k, (id, dim, _)) in self.cells.iter().enumerate() {
            if *dim < 0 {
                return Err(Error::DimOutOfRange {
                    dim: *dim,
                    min: 0,
                    max: max_dim,
                });
            }
            if id == EMPTY_CELL {
                return Err(Error::DuplicateCell(id.clone()));
            }
            by_dim.entry(*dim).or_default().push(k);
        }

        let mut order = vec![usize::MAX];
        let mut starts = vec![0, 1];
        for d in 0..=max_dim {
            order.extend(by_dim.get(&d).into_iter().flatten().copied());
            starts.push(order.len());
        }

        let mut index = HashMap::with_capacity(order.len());
        index.insert(EMPTY_CELL.to_string(), 0);
        for (pos, &k) in order.iter().enumerate().skip(1) {
            let id = &self.cells[k].0;
            if index.insert(id.clone(), pos).is_some() {
                return Err(Error::DuplicateCell(id.clone()));
            }
        }

        let mut cells = Vec::with_capacity(order.len());
        cells.push(Cell {
            id: EMPTY_CELL.to_string(),
            dim: -1,
            boundary: Vec::new(),
        });
        for &k in &order[1..] {
            let (id, dim, raw) = &self.cells[k];
            let mut boundary = Vec::with_capacity(raw.len() + 1);
            for (facet, coeff) in raw {
                let f = *index.get(facet).ok_or_else(|| Error::UnknownCell(facet.clone()))?;
                boundary.push((f, *coeff));
            }
            if *dim == 0 && !boundary.iter().any(|&(f, _)| f == 0) {
                boundary.push((0, 1));
            }
            cells.push(Cell {
                id: id.clone(),
                dim: *dim,
                boundary,
            });
        }
        Ok(CellComplex {
            cells,
            starts,
            index,
            regular: self.regular,
        })
    }
}

impl CellComplex {
    pub fn builder() -> ComplexBuilder {
        ComplexBuilder::new()
    }

    /// Top dimension; −1 for the complex holding only the empty cell.
    pub fn dim(&self) -> i32 {
        self.starts.len() as i32 - 3
    }

    pub fn is_regular(&self) -> bool {
        self.regular
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.len() <= 1
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell(&self, idx: usize) -> &Cell {
        &self.cells[idx]
    }

    pub fn find(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn index_of(&self, id: &str) -> Result<usize> {
        self.find(id).ok_or_else(|| Error::UnknownCell(id.to_string()))
    }

    /// Global index range of the cells of dimension `d` (empty outside
    /// `−1..=dim`).
    pub fn dim_range(&self, d: i32) -> Range<usize> {
        if d < -1 || d > self.dim() {
            return 0..0;
        }
        let k = (d + 1) as usize;
        self.starts[k]..self.starts[k + 1]
    }

    pub fn cells_of_dim(&self, d: i32) -> &[Cell] {
        &self.cells[self.dim_range(d)]
    }

    /// Number of cells of dimension `d`, with `f(−1) = 1`.
    pub fn f(&self, d: i32) -> usize {
        self.dim_range(d).len()
    }

    /// `(f₋₁, f₀, …, f_dim)`.
    pub fn f_vector(&self) -> Vec<usize> {
        (-1..=self.dim()).map(|d| self.f(d)).collect()
    }

    /// Position of a cell among the cells of its dimension, which is its row
    /// or column in the boundary matrices.
    pub fn position(&self, idx: usize) -> usize {
        idx - self.dim_range(self.cells[idx].dim).start
    }

    fn check_dim(&self, i: i32) -> Result<()> {
        if i < -1 || i > self.dim() {
            return Err(Error::DimOutOfRange {
                dim: i,
                min: -1,
                max: self.dim(),
            });
        }
        Ok(())
    }

    /// `∂ᵢ`: rows are the `(i−1)`-cells, columns the `i`-cells, both in stored
    /// order. `∂₀` is the all-ones augmentation row and `∂₋₁` is `0×1`.
    pub fn boundary_matrix(&self, i: i32) -> Result<IntMatrix> {
        self.check_dim(i)?;
        let rows = self.dim_range(i - 1);
        let cols = self.dim_range(i);
        let mut m = IntMatrix::zeros(rows.len(), cols.len());
        for (j, cell) in self.cells[cols].iter().enumerate() {
            for &(f, c) in &cell.boundary {
                if rows.contains(&f) {
                    let r = f - rows.start;
                    let v = m.get(r, j) + c;
                    m.set(r, j, v);
                }
            }
        }
        Ok(m)
    }

    /// The total boundary on all cells in stored order, square of size
    /// `len()`.
    pub fn total_boundary(&self) -> IntMatrix {
        let n = self.cells.len();
        let mut m = IntMatrix::zeros(n, n);
        for (j, cell) in self.cells.iter().enumerate() {
            for &(f, c) in &cell.boundary {
                let v = m.get(f, j) + c;
                m.set(f, j, v);
            }
        }
        m
    }

    /// Every violated structural invariant, naming the offending cell.
    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        for cell in &self.cells {
            for &(f, _) in &cell.boundary {
                let fd = self.cells[f].dim;
                if fd != cell.dim - 1 {
                    out.push(format!(
                        "cell `{}` (dim {}) lists facet `{}` of dim {}",
                        cell.id, cell.dim, self.cells[f].id, fd
                    ));
                }
            }
            if cell.dim == 0 {
                let aug: i64 = cell.boundary.iter().filter(|b| b.0 == 0).map(|b| b.1).sum();
                if aug != 1 {
                    out.push(format!(
                        "vertex `{}` has coefficient {aug} on the empty cell, expected 1",
                        cell.id
                    ));
                }
            }
            if self.regular {
                let mut seen = HashMap::new();
                for &(f, c) in &cell.boundary {
                    if c != 1 && c != -1 {
                        out.push(format!(
                            "regular complex: cell `{}` has coefficient {c} on `{}`",
                            cell.id, self.cells[f].id
                        ));
                    }
                    if seen.insert(f, ()).is_some() {
                        out.push(format!(
                            "regular complex: cell `{}` lists facet `{}` twice",
                            cell.id, self.cells[f].id
                        ));
                    }
                }
            }
            if cell.dim >= 1 {
                let mut acc: HashMap<usize, i64> = HashMap::new();
                for &(f, c) in &cell.boundary {
                    for &(g, c2) in &self.cells[f].boundary {
                        *acc.entry(g).or_default() += c * c2;
                    }
                }
                if acc.values().any(|&v| v != 0) {
                    out.push(format!("∂∂ is nonzero on cell `{}`", cell.id));
                }
            }
        }
        out
    }

    /// Facet indices of a cell, without coefficients.
    pub fn facets(&self, idx: usize) -> impl Iterator<Item = usize> + '_ {
        self.cells[idx].boundary.iter().map(|&(f, _)| f)
    }

    /// For each cell, the cells having it as a facet.
    pub fn cofacets(&self) -> Vec<Vec<usize>> {
        let mut up = vec![Vec::new(); self.cells.len()];
        for (j, cell) in self.cells.iter().enumerate() {
            for &(f, _) in &cell.boundary {
                if !up[f].contains(&j) {
                    up[f].push(j);
                }
            }
        }
        up
    }

    /// Ids of the given cell indices.
    pub fn ids(&self, cells: impl IntoIterator<Item = usize>) -> Vec<String> {
        cells.into_iter().map(|c| self.cells[c].id.clone()).collect()
    }

    pub fn reduced_homology(&self, i: i32) -> Homology {
        reduced_homology(&Subcomplex::full(self), i)
    }
}
