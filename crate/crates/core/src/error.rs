use thiserror::Error;

use crate::linalg::Polynomial;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("invalid algebra structure: {0}")]
    Structure(String),

    #[error("subspace is not an ideal: [{element}, basis vector {ideal_vector}] leaves it")]
    NotAnIdeal { element: String, ideal_vector: usize },

    #[error("subspace is not invariant under eps: basis vector {0} maps outside")]
    NotEpsInvariant(usize),

    #[error("subspace is not a subalgebra")]
    NotSubalgebra,

    #[error("subalgebra is not semisimple (Killing form of the restricted structure is degenerate)")]
    NotSemisimple,

    #[error("algebra is not solvable")]
    NotSolvable,

    #[error("input already carries a nonzero eps operator")]
    AlreadyDual,

    #[error("nilpotency index must be at least 2, got {0}")]
    InvalidNilpotencyIndex(usize),

    #[error("operation requires eps^2 = 0 (nilpotency index 2), got index {0}")]
    UnsupportedNilpotencyIndex(usize),

    #[error("matrices do not form a representation: bracket of basis pair ({0}, {1}) is not preserved")]
    NotRepresentation(usize, usize),

    #[error("unknown catalog entry: {0}")]
    UnknownCatalogEntry(String),

    #[error("matrix {index} is not nilpotent: characteristic polynomial of its realification is {char_poly}")]
    NotNilpotent { index: usize, char_poly: Polynomial },

    #[error("matrix is not D2-linear: {0}")]
    NotD2Linear(String),

    #[error("no common free eigenvector with eps-multiple eigenvalues found for the remaining rank-{0} block")]
    NoTriangularForm(usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("internal verification failed: {0}")]
    Verification(String),
}
