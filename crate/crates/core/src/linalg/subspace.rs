use std::fmt;

use num_traits::Zero;

use super::{is_zero_vector, rref, zero_vector, Matrix, Rational, Vector};
use crate::error::{Error, Result};

/// A linear subspace of `ℚⁿ` in canonical form.
///
/// The basis is the nonzero part of the reduced row echelon form of any
/// spanning set, so two subspaces are equal exactly when their stored data
/// are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of a list of vectors of length `ambient`.
    pub fn span(ambient: usize, vectors: &[Vector]) -> Result<Self> {
        Ok(Self::from_row_space(&Matrix::from_rows(ambient, vectors)?))
    }

    /// Row space of a matrix.
    pub fn from_row_space(m: &Matrix) -> Self {
        let (r, pivots) = rref(m);
        let basis = r.submatrix(0..pivots.len(), 0..m.cols());
        Subspace {
            ambient: m.cols(),
            basis,
            pivots,
        }
    }

    /// Null space `{v : m v = 0}`.
    pub fn kernel_of(m: &Matrix) -> Self {
        let vs = m.kernel();
        Self::span(m.cols(), &vs).expect("kernel vectors have the column length")
    }

    /// Image `{m v : v ∈ self}`.
    pub fn image_under(&self, m: &Matrix) -> Result<Self> {
        self.check_ambient(m.cols())?;
        let vs: Vec<Vector> = self.basis_vectors().iter().map(|v| m.apply(v)).collect();
        Self::span(m.rows(), &vs)
    }

    /// Column space of a matrix.
    pub fn column_space(m: &Matrix) -> Self {
        Self::from_row_space(&m.transpose())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical basis matrix; rows are the basis vectors.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    /// `v` minus its component along the basis rows, read off at pivot columns.
    ///
    /// Zero exactly when `v` lies in the subspace. The result vanishes at
    /// every pivot column, so non-pivot coordinates give a canonical
    /// representative of `v` modulo the subspace.
    pub fn reduce(&self, v: &[Rational]) -> Vector {
        assert_eq!(v.len(), self.ambient);
        let mut r = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            if r[p].is_zero() {
                continue;
            }
            let c = -r[p].clone();
            super::axpy(&mut r, &c, self.basis.row(row));
        }
        r
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        v.len() == self.ambient && is_zero_vector(&self.reduce(v))
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Vector with the given coordinates in the canonical basis.
    pub fn combine(&self, coords: &[Rational]) -> Vector {
        assert_eq!(coords.len(), self.dim());
        let mut out = zero_vector(self.ambient);
        for (row, c) in coords.iter().enumerate() {
            super::axpy(&mut out, c, self.basis.row(row));
        }
        out
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && other.basis_vectors().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient)?;
        Ok(Self::from_row_space(&self.basis.vstack(&other.basis)))
    }

    /// Intersection, from the kernel of `[Uᵀ | -Vᵀ]`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient)?;
        let k = self.dim();
        let system = self.basis.transpose().hstack(&(-&other.basis.transpose()));
        let vs: Vec<Vector> = system
            .kernel()
            .into_iter()
            .map(|sol| self.combine(&sol[..k]))
            .collect();
        Self::span(self.ambient, &vs)
    }

    /// Standard basis indices complementing the pivots; the corresponding
    /// unit vectors span a complement of the subspace.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient).filter(|j| !self.pivots.contains(j)).collect()
    }

    /// Matrix whose rows are linear functionals vanishing exactly on the subspace.
    pub fn annihilator(&self) -> Matrix {
        let ks = self.basis.kernel();
        Matrix::from_rows(self.ambient, &ks).expect("kernel vectors have the ambient length")
    }

    pub(crate) fn check_ambient(&self, n: usize) -> Result<()> {
        if self.ambient == n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: n,
            })
        }
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{")?;
        for (i, v) in self.basis_vectors().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let parts: Vec<String> = v.iter().map(super::format_rational).collect();
            write!(f, "({})", parts.join(","))?;
        }
        write!(f, "}}")
    }
}
