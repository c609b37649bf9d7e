//! The JSON complex file:
//! `{"cells":[{"id":"e12","dim":1,"boundary":[["v1",-1],["v2",1]]},…],"regular":true}`
//! optionally extended by `"ball_dim"` and an `"alpha"` map for self-dual
//! structures. The empty cell and the `(∅, +1)` vertex incidences are
//! implicit.

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use super::{CellComplex, EMPTY_CELL};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellEntry {
    pub id: String,
    pub dim: i32,
    #[serde(default)]
    pub boundary: Vec<(String, i64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
    pub cells: Vec<CellEntry>,
    #[serde(default)]
    pub regular: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ball_dim: Option<i32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<IndexMap<String, String>>,
}

impl ComplexFile {
    pub fn from_complex(c: &CellComplex) -> Self {
        let cells = c
            .cells()
            .iter()
            .skip(1)
            .map(|cell| CellEntry {
                id: cell.id().to_string(),
                dim: cell.dim(),
                boundary: cell
                    .boundary()
                    .iter()
                    .filter(|&&(f, k)| !(cell.dim() == 0 && f == 0 && k == 1))
                    .map(|&(f, k)| (c.cell(f).id().to_string(), k))
                    .collect(),
            })
            .collect();
        ComplexFile {
            cells,
            regular: c.is_regular(),
            ball_dim: None,
            alpha: None,
        }
    }

    /// Builds and validates the complex; diagnostics come back as
    /// [`Error::InvalidComplex`].
    pub fn to_complex(&self) -> Result<CellComplex> {
        let mut b = CellComplex::builder().regular(self.regular);
        for cell in &self.cells {
            if cell.id == EMPTY_CELL {
                return Err(Error::Parse(format!("the empty cell `{EMPTY_CELL}` is implicit")));
            }
            b.cell_owned(cell.id.clone(), cell.dim, cell.boundary.clone());
        }
        b.build()
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Pretty-printed JSON with a trailing newline; stable for a fixed cell
    /// order.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("complex file serializes");
        s.push('\n');
        s
    }
}

impl CellComplex {
    pub fn from_json(text: &str) -> Result<Self> {
        ComplexFile::parse(text)?.to_complex()
    }

    pub fn to_json(&self) -> String {
        ComplexFile::from_complex(self).to_json()
    }
}
