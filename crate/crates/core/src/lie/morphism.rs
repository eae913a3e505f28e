use super::LieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{is_zero_vector, sub_vectors, Matrix};

/// A candidate linear map between two algebras, as a `target.dim() × source.dim()` matrix.
#[derive(Clone, Debug)]
pub struct MorphismCheck<'a> {
    pub source: &'a LieAlgebra,
    pub target: &'a LieAlgebra,
    pub map: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismReport {
    pub is_morphism: bool,
    /// First basis pair `(i, j)` with `f[x_i, x_j] ≠ [f x_i, f x_j]`.
    pub bracket_witness: Option<(usize, usize)>,
    pub is_injective: bool,
    pub is_equivariant: bool,
    /// First basis index `j` with `f(ε x_j) ≠ ε f(x_j)`.
    pub eps_witness: Option<usize>,
}

/// Evaluates both sides of the homomorphism and equivariance identities on
/// all basis pairs.
pub fn verify_morphism(check: &MorphismCheck<'_>) -> Result<MorphismReport> {
    let (s, t, f) = (check.source, check.target, &check.map);
    if f.rows() != t.dim() || f.cols() != s.dim() {
        return Err(Error::DimensionMismatch {
            expected: t.dim() * s.dim(),
            found: f.rows() * f.cols(),
        });
    }
    let n = s.dim();
    let images: Vec<_> = (0..n).map(|j| f.column(j)).collect();
    let mut bracket_witness = None;
    'outer: for i in 0..n {
        for j in i + 1..n {
            let lhs = f.apply(&s.basis_bracket(i, j));
            let rhs = t.bracket_unchecked(&images[i], &images[j]);
            if !is_zero_vector(&sub_vectors(&lhs, &rhs)) {
                bracket_witness = Some((i, j));
                break 'outer;
            }
        }
    }
    let fe = f * &s.eps();
    let ef = &t.eps() * f;
    let eps_witness = (0..n).find(|&j| fe.column(j) != ef.column(j));
    Ok(MorphismReport {
        is_morphism: bracket_witness.is_none(),
        bracket_witness,
        is_injective: f.rank() == n,
        is_equivariant: eps_witness.is_none(),
        eps_witness,
    })
}
