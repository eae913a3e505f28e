use num_traits::One;

use super::{DualMatrix, LieAlgebra};
use crate::linalg::{unit_vector, zero_vector, Matrix, Subspace};

/// `gl(n)` on the basis `E_ij` in row-major order.
pub fn gl(n: usize) -> LieAlgebra {
    let label = |i: usize, j: usize| {
        if n > 9 {
            format!("E{}_{}", i + 1, j + 1)
        } else {
            format!("E{}{}", i + 1, j + 1)
        }
    };
    let labels: Vec<String> = (0..n * n).map(|k| label(k / n, k % n)).collect();
    LieAlgebra::from_table(
        format!("gl({n})"),
        labels,
        |a, b| {
            let (i, j, k, l) = (a / n, a % n, b / n, b % n);
            let mut v = zero_vector(n * n);
            if j == k {
                v[i * n + l] += crate::linalg::Rational::one();
            }
            if l == i {
                v[k * n + j] -= crate::linalg::Rational::one();
            }
            v
        },
        None,
        2,
    )
    .expect("gl(n) table has the right shape")
}

/// Flattens a square matrix to coordinates on the `E_ij` basis of `gl(n)`.
pub fn matrix_to_gl_vector(m: &Matrix) -> Vec<crate::linalg::Rational> {
    m.entries().to_vec()
}

/// The adjoint operators over `D₂` on a free basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualForm {
    /// Columns `εv_1, v_1, εv_2, v_2, …`; conjugating `ad(x)` by this matrix
    /// gives the realified form of a dual matrix.
    pub basis_change: Matrix,
    /// `v_i` as indices of standard basis vectors.
    pub generators: Vec<usize>,
    pub matrices: Vec<DualMatrix>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjointRepresentation {
    /// `ad(x_i)` for each basis vector.
    pub matrices: Vec<Matrix>,
    pub faithful: bool,
    /// Present when the algebra is a free `D₂`-module with `ε² = 0`.
    pub dual_form: Option<DualForm>,
}

impl AdjointRepresentation {
    /// The representation as a linear map `L → gl(n)`.
    pub fn as_map(&self) -> Matrix {
        let n = self.matrices.len();
        let cols: Vec<_> = self.matrices.iter().map(matrix_to_gl_vector).collect();
        Matrix::from_columns(n * n, &cols).expect("ad matrices are n x n")
    }
}

pub fn adjoint_representation(l: &LieAlgebra) -> AdjointRepresentation {
    let matrices = l.ad_matrices().to_vec();
    let n = l.dim();
    let faithful = Matrix::from_columns(n * n, &matrices.iter().map(matrix_to_gl_vector).collect::<Vec<_>>())
        .map(|m| m.rank() == n)
        .unwrap_or(true);
    AdjointRepresentation {
        dual_form: dual_form(l),
        matrices,
        faithful,
    }
}

fn dual_form(l: &LieAlgebra) -> Option<DualForm> {
    let n = l.dim();
    let e = l.eps();
    if l.nilpotency_index() != 2 || n == 0 || n % 2 != 0 || e.rank() * 2 != n || !e.pow(2).is_zero() {
        return None;
    }
    let generators = Subspace::kernel_of(&e).complement_indices();
    let mut cols = Vec::with_capacity(n);
    for &g in &generators {
        let v = unit_vector(n, g);
        cols.push(e.apply(&v));
        cols.push(v);
    }
    let t = Matrix::from_columns(n, &cols).ok()?;
    let ti = t.inverse()?;
    let matrices = l
        .ad_matrices()
        .iter()
        .map(|m| DualMatrix::from_realified(&(&(&ti * m) * &t)))
        .collect::<Result<Vec<_>, _>>()
        .ok()?;
    Some(DualForm {
        basis_change: t,
        generators,
        matrices,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::fixtures::*;

    #[test]
    fn abelian_is_not_faithful() {
        let r = adjoint_representation(&abelian(2));
        assert!(r.matrices.iter().all(Matrix::is_zero));
        assert!(!r.faithful);
        assert!(r.dual_form.is_none());
    }

    #[test]
    fn sl2_is_faithful() {
        let r = adjoint_representation(&sl2());
        assert!(r.faithful);
    }

    #[test]
    fn l4_has_dual_form_with_eps_scalar() {
        let l = l4();
        let r = adjoint_representation(&l);
        let form = r.dual_form.unwrap();
        assert_eq!(form.generators, vec![0, 1]);
        let eps = DualMatrix::from_realified(&(&(&form.basis_change.inverse().unwrap() * &l.eps()) * &form.basis_change)).unwrap();
        assert_eq!(eps, DualMatrix::eps_identity(2));
        for (i, m) in form.matrices.iter().enumerate() {
            assert_eq!(&(&form.basis_change * &m.realify()) * &form.basis_change.inverse().unwrap(), r.matrices[i]);
        }
    }

    #[test]
    fn gl2_validates() {
        let g = gl(2);
        assert!(g.validate().is_valid());
        assert_eq!(g.labels()[1], "E12");
    }
}
