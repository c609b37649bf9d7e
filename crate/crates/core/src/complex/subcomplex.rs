use std::fmt;

use super::CellComplex;
use crate::error::{Error, Result};

/// A set of cells of a fixed complex. Constructors that promise a subcomplex
/// check closure under taking facets; [`Subcomplex::void`] holds no cells at
/// all, not even the empty cell.
#[derive(Clone)]
pub struct Subcomplex<'a> {
    complex: &'a CellComplex,
    members: Vec<bool>,
}

impl<'a> Subcomplex<'a> {
    pub fn full(complex: &'a CellComplex) -> Self {
        Subcomplex {
            complex,
            members: vec![true; complex.len()],
        }
    }

    pub fn void(complex: &'a CellComplex) -> Self {
        Subcomplex {
            complex,
            members: vec![false; complex.len()],
        }
    }

    /// All cells of dimension at most `i`; `i = −1` gives the empty cell only.
    pub fn skeleton(complex: &'a CellComplex, i: i32) -> Self {
        Subcomplex {
            complex,
            members: complex.cells().iter().map(|c| c.dim() <= i).collect(),
        }
    }

    /// The `(i−1)`-skeleton together with the chosen `i`-cells.
    pub fn restrict_columns(complex: &'a CellComplex, i: i32, chosen: &[&str]) -> Result<Self> {
        let mut s = Self::skeleton(complex, i - 1);
        for id in chosen {
            let idx = complex.index_of(id)?;
            let got = complex.cell(idx).dim();
            if got != i {
                return Err(Error::WrongCellDim {
                    cell: id.to_string(),
                    got,
                    expected: i,
                });
            }
            s.members[idx] = true;
        }
        Ok(s)
    }

    /// Like [`Subcomplex::restrict_columns`] with `i`-cells given by their
    /// positions among the `i`-cells.
    pub fn restrict_positions(complex: &'a CellComplex, i: i32, positions: &[usize]) -> Self {
        let mut s = Self::skeleton(complex, i - 1);
        let range = complex.dim_range(i);
        for &p in positions {
            s.members[range.start + p] = true;
        }
        s
    }

    /// An arbitrary cell set; use [`Subcomplex::check_closed`] to confirm it
    /// is a subcomplex.
    pub fn from_indices(complex: &'a CellComplex, cells: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::void(complex);
        for c in cells {
            s.members[c] = true;
        }
        s
    }

    /// The cells named by `ids`; fails unless they form a subcomplex.
    pub fn from_ids(complex: &'a CellComplex, ids: &[&str]) -> Result<Self> {
        let idx = ids.iter().map(|id| complex.index_of(id)).collect::<Result<Vec<_>>>()?;
        let s = Self::from_indices(complex, idx);
        s.check_closed()?;
        Ok(s)
    }

    /// Smallest subcomplex containing the given cells.
    pub fn closure(complex: &'a CellComplex, cells: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::void(complex);
        let mut stack: Vec<usize> = cells.into_iter().collect();
        while let Some(c) = stack.pop() {
            if !s.members[c] {
                s.members[c] = true;
                stack.extend(complex.facets(c));
            }
        }
        s
    }

    pub fn check_closed(&self) -> Result<()> {
        for c in self.iter() {
            for f in self.complex.facets(c) {
                if !self.members[f] {
                    return Err(Error::NotClosed {
                        cell: self.complex.cell(c).id().to_string(),
                        facet: self.complex.cell(f).id().to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn complex(&self) -> &'a CellComplex {
        self.complex
    }

    pub fn members(&self) -> &[bool] {
        &self.members
    }

    pub fn contains(&self, idx: usize) -> bool {
        self.members[idx]
    }

    pub fn insert(&mut self, idx: usize) {
        self.members[idx] = true;
    }

    pub fn remove(&mut self, idx: usize) {
        self.members[idx] = false;
    }

    /// Number of cells; `is_void` is the emptiness test, since the empty
    /// cell may itself be a member.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn is_void(&self) -> bool {
        !self.members.iter().any(|&m| m)
    }

    /// Included cell indices in stored order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i)
    }

    /// Positions (within dimension `d`) of the included `d`-cells.
    pub fn positions(&self, d: i32) -> Vec<usize> {
        let range = self.complex.dim_range(d);
        range.clone().filter(|&c| self.members[c]).map(|c| c - range.start).collect()
    }

    pub fn count(&self, d: i32) -> usize {
        self.complex.dim_range(d).filter(|&c| self.members[c]).count()
    }

    pub fn is_subset_of(&self, other: &Subcomplex<'_>) -> bool {
        self.members.iter().zip(&other.members).all(|(&a, &b)| !a || b)
    }

    /// Cells in `self` but not in `other`.
    pub fn difference(&self, other: &Subcomplex<'_>) -> Subcomplex<'a> {
        Subcomplex {
            complex: self.complex,
            members: self.members.iter().zip(&other.members).map(|(&a, &b)| a && !b).collect(),
        }
    }

    /// Image under a permutation of cell indices.
    pub fn map(&self, f: &[usize]) -> Subcomplex<'a> {
        Self::from_indices(self.complex, self.iter().map(|c| f[c]))
    }

    pub fn ids(&self) -> Vec<String> {
        self.complex.ids(self.iter())
    }
}

/// Equal when over the same complex (by address) with the same cells.
impl PartialEq for Subcomplex<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.complex, other.complex) && self.members == other.members
    }
}

impl Eq for Subcomplex<'_> {}

impl std::hash::Hash for Subcomplex<'_> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl fmt::Debug for Subcomplex<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.ids()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::tests::triangle_cycle;

    #[test]
    fn skeleton_and_columns() {
        let c = triangle_cycle();
        assert_eq!(Subcomplex::skeleton(&c, c.dim()), Subcomplex::full(&c));
        let t = Subcomplex::restrict_columns(&c, 1, &["e0", "e1"]).unwrap();
        assert_eq!(t.len(), 1 + 3 + 2);
        assert!(t.check_closed().is_ok());
        assert_eq!(t, Subcomplex::restrict_positions(&c, 1, &[0, 1]));
        assert!(Subcomplex::restrict_columns(&c, 1, &["v0"]).is_err());
        assert!(Subcomplex::restrict_columns(&c, 1, &["zz"]).is_err());
    }

    #[test]
    fn closure_checks() {
        let c = triangle_cycle();
        assert!(matches!(
            Subcomplex::from_ids(&c, &["∅", "v0", "e0"]),
            Err(Error::NotClosed { .. })
        ));
        let cl = Subcomplex::closure(&c, [c.index_of("e0").unwrap()]);
        assert_eq!(cl.ids(), vec!["∅", "v0", "v1", "e0"]);
        assert!(Subcomplex::void(&c).check_closed().is_ok());
    }
}
