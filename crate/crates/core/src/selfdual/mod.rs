//! Self-dual ball structures: a complex with an order-reversing bijection
//! `α` of its face poset (empty cell and top cell included).

mod verify;

use indexmap::IndexMap;

use crate::complex::{CellComplex, ComplexFile, Subcomplex};
use crate::error::{Error, Result};

pub use verify::{perfect_square_check, verify_tree_duality, DualityReport, PerfectSquareReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelfDual {
    complex: CellComplex,
    alpha: Vec<usize>,
    ball_dim: i32,
}

impl SelfDual {
    /// Validates the structure; diagnostics come back as
    /// [`Error::InvalidSelfDual`].
    pub fn new(complex: CellComplex, alpha: Vec<usize>, ball_dim: i32) -> Result<Self> {
        let s = Self::new_unchecked(complex, alpha, ball_dim);
        let problems = s.validate();
        if problems.is_empty() {
            Ok(s)
        } else {
            Err(Error::InvalidSelfDual(problems))
        }
    }

    /// Wraps without validation. `alpha` must still have one entry per cell.
    pub fn new_unchecked(complex: CellComplex, alpha: Vec<usize>, ball_dim: i32) -> Self {
        SelfDual {
            complex,
            alpha,
            ball_dim,
        }
    }

    /// `α` given by cell ids. A missing entry for the empty cell defaults to
    /// the unique top cell.
    pub fn from_ids(complex: CellComplex, map: &IndexMap<String, String>, ball_dim: i32) -> Result<Self> {
        let mut alpha = vec![usize::MAX; complex.len()];
        for (from, to) in map {
            alpha[complex.index_of(from)?] = complex.index_of(to)?;
        }
        if alpha[0] == usize::MAX {
            let top = complex.dim_range(ball_dim);
            if top.len() == 1 {
                alpha[0] = top.start;
            }
        }
        if let Some(c) = alpha.iter().position(|&a| a == usize::MAX) {
            return Err(Error::InvalidSelfDual(vec![format!(
                "α is undefined on `{}`",
                complex.cell(c).id()
            )]));
        }
        Self::new(complex, alpha, ball_dim)
    }

    pub fn complex(&self) -> &CellComplex {
        &self.complex
    }

    pub fn into_complex(self) -> CellComplex {
        self.complex
    }

    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }

    pub fn apply(&self, cell: usize) -> usize {
        self.alpha[cell]
    }

    pub fn inverse(&self) -> Vec<usize> {
        let mut inv = vec![0; self.alpha.len()];
        for (c, &a) in self.alpha.iter().enumerate() {
            inv[a] = c;
        }
        inv
    }

    pub fn ball_dim(&self) -> i32 {
        self.ball_dim
    }

    /// Every violated condition: regularity, bijectivity, complementary
    /// dimensions, order reversal on covers and on the full face order, and
    /// `α²` being an automorphism.
    pub fn validate(&self) -> Vec<String> {
        let c = &self.complex;
        let d = self.ball_dim;
        let n = c.len();
        let mut out = Vec::new();
        let name = |i: usize| c.cell(i).id().to_string();

        if !c.is_regular() {
            out.push("complex is not flagged regular".to_string());
        }
        if c.dim() != d || c.f(d) != 1 {
            out.push(format!("expected a single top cell of dimension {d}"));
        }
        if self.alpha.len() != n || self.alpha.iter().any(|&a| a >= n) {
            out.push(format!("α must map each of the {n} cells to a cell"));
            return out;
        }
        let mut hit = vec![false; n];
        for &a in &self.alpha {
            if std::mem::replace(&mut hit[a], true) {
                out.push(format!("α is not injective: `{}` is hit twice", name(a)));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for (s, &a) in self.alpha.iter().enumerate() {
            let expected = d - 1 - c.cell(s).dim();
            if c.cell(a).dim() != expected {
                out.push(format!(
                    "dim α(`{}`) = dim `{}` = {}, expected {expected}",
                    name(s),
                    name(a),
                    c.cell(a).dim()
                ));
            }
        }
        if !out.is_empty() {
            return out;
        }

        let ordered: Vec<(usize, usize)> = (0..n).flat_map(|t| c.facets(t).map(move |s| (s, t))).collect();
        let covers: std::collections::HashSet<(usize, usize)> = ordered.iter().copied().collect();
        for &(s, t) in &ordered {
            if !covers.contains(&(self.alpha[t], self.alpha[s])) {
                out.push(format!(
                    "α does not reverse `{}` ⊂ `{}`: `{}` is not a facet of `{}`",
                    name(s),
                    name(t),
                    name(self.alpha[t]),
                    name(self.alpha[s])
                ));
            }
            let (s2, t2) = (self.alpha[self.alpha[s]], self.alpha[self.alpha[t]]);
            if !covers.contains(&(s2, t2)) {
                out.push(format!(
                    "α² does not preserve `{}` ⊂ `{}`",
                    name(s),
                    name(t)
                ));
            }
        }
        if !out.is_empty() {
            return out;
        }

        let below = face_order(c);
        for s in 0..n {
            for t in 0..n {
                let fwd = below[t][s];
                let back = below[self.alpha[s]][self.alpha[t]];
                if fwd != back {
                    out.push(format!(
                        "α does not reverse the face order on `{}`, `{}`",
                        name(s),
                        name(t)
                    ));
                    return out;
                }
            }
        }
        out
    }

    /// `T∨ = {σ : α(σ) ∉ T}`.
    pub fn alexander_dual<'a>(&'a self, t: &Subcomplex<'_>) -> Result<Subcomplex<'a>> {
        if !std::ptr::eq(t.complex(), &self.complex) {
            return Err(Error::NotNested("subcomplex of a different complex".into()));
        }
        t.check_closed()?;
        let dual = Subcomplex::from_indices(
            &self.complex,
            (0..self.complex.len()).filter(|&s| !t.contains(self.alpha[s])),
        );
        dual.check_closed()?;
        Ok(dual)
    }

    pub fn to_file(&self) -> ComplexFile {
        let mut file = ComplexFile::from_complex(&self.complex);
        file.ball_dim = Some(self.ball_dim);
        file.alpha = Some(
            (1..self.complex.len())
                .map(|s| {
                    let id = |i: usize| self.complex.cell(i).id().to_string();
                    (id(s), id(self.alpha[s]))
                })
                .collect(),
        );
        file
    }

    pub fn to_json(&self) -> String {
        self.to_file().to_json()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file = ComplexFile::parse(text)?;
        match Self::from_file(&file)? {
            (_, Some(s)) => Ok(s),
            (_, None) => Err(Error::Parse("no \"alpha\" map or \"ball_dim\" in file".into())),
        }
    }

    /// The complex of a file, with its self-dual structure when the file
    /// carries `alpha` and `ball_dim`.
    pub fn from_file(file: &ComplexFile) -> Result<(CellComplex, Option<SelfDual>)> {
        let complex = file.to_complex()?;
        match (&file.alpha, file.ball_dim) {
            (Some(map), Some(d)) => {
                let s = Self::from_ids(complex.clone(), map, d)?;
                Ok((complex, Some(s)))
            }
            (None, None) => Ok((complex, None)),
            _ => Err(Error::Parse("\"alpha\" and \"ball_dim\" must be given together".into())),
        }
    }
}

/// `below[t][s]` is true when `s ⊆ t` in the face order.
fn face_order(c: &CellComplex) -> Vec<Vec<bool>> {
    let n = c.len();
    let mut below = vec![vec![false; n]; n];
    // cells are graded, so facets always come earlier
    for t in 0..n {
        below[t][t] = true;
        let facets: Vec<usize> = c.facets(t).collect();
        for f in facets {
            let (lo, hi) = below.split_at_mut(t);
            for (s, &b) in lo[f].iter().enumerate() {
                if b {
                    hi[0][s] = true;
                }
            }
        }
    }
    below
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{polygon, simplex};

    #[test]
    fn generated_structures_validate() {
        for n in 3..8 {
            assert!(polygon(n).unwrap().validate().is_empty(), "polygon {n}");
        }
        assert!(simplex(5).unwrap().validate().is_empty());
    }

    #[test]
    fn non_reversing_alpha_rejected() {
        let sq = polygon(4).unwrap();
        let mut alpha = sq.alpha().to_vec();
        // swap the images of two opposite vertices' edges
        let (a, b) = (sq.complex().index_of("v1").unwrap(), sq.complex().index_of("v2").unwrap());
        alpha.swap(a, b);
        let bad = SelfDual::new_unchecked(sq.complex().clone(), alpha, 2);
        let problems = bad.validate();
        assert!(!problems.is_empty());
        assert!(problems.iter().any(|p| p.contains("does not reverse")), "{problems:?}");
        assert_eq!(bad.validate(), problems);
    }

    #[test]
    fn alexander_dual_examples() {
        let p = polygon(5).unwrap();
        let c = p.complex();
        assert!(p.alexander_dual(&Subcomplex::full(c)).unwrap().is_void());
        assert_eq!(p.alexander_dual(&Subcomplex::void(c)).unwrap(), Subcomplex::full(c));
        let tree = Subcomplex::restrict_columns(c, 1, &["e1", "e2", "e3", "e4"]).unwrap();
        let dual = p.alexander_dual(&tree).unwrap();
        assert_eq!(dual.count(0), 1);
        assert_eq!(dual.len(), 2);
    }

    #[test]
    fn file_round_trip() {
        let s = simplex(4).unwrap();
        let text = s.to_json();
        let back = SelfDual::from_json(&text).unwrap();
        assert_eq!(back, s);
        assert_eq!(back.to_json(), text);
    }
}
