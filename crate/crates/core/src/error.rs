use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("index {index} out of range for dimension {bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("index set is not strictly increasing: {0:?}")]
    UnsortedIndexSet(Vec<usize>),

    #[error("polynomial is not multilinear: {0}")]
    NotMultilinear(String),

    #[error("cell dimension {dim} out of range {min}..={max}")]
    DimOutOfRange { dim: i32, min: i32, max: i32 },

    #[error("unknown cell id `{0}`")]
    UnknownCell(String),

    #[error("duplicate cell id `{0}`")]
    DuplicateCell(String),

    #[error("cell `{cell}` has dimension {got}, expected {expected}")]
    WrongCellDim { cell: String, got: i32, expected: i32 },

    #[error("selection is not a subcomplex: `{cell}` is included but its facet `{facet}` is not")]
    NotClosed { cell: String, facet: String },

    #[error("relative pair is invalid: cell `{0}` lies in the subcomplex but not in the ambient complex")]
    NotNested(String),

    #[error("complex is not {required}-acyclic: reduced homology in dimension {dim} is nonzero")]
    NotAcyclic { required: i32, dim: i32 },

    #[error("enumeration needs {subsets} subsets, budget is {budget}")]
    BudgetExceeded { subsets: u128, budget: u128 },

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("complex must be regular for this operation")]
    NotRegular,

    #[error("ball dimension {0} is odd; a middle boundary needs an even dimension")]
    OddDimension(usize),

    #[error("invalid self-dual structure: {}", .0.join("; "))]
    InvalidSelfDual(Vec<String>),

    #[error("invalid complex: {}", .0.join("; "))]
    InvalidComplex(Vec<String>),

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
