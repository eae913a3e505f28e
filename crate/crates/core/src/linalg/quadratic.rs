use num_traits::Zero;

use super::{sign, Matrix};
use crate::error::{Error, Result};

/// Inertia `(n₊, n₋, n₀)` of a symmetric matrix.
///
/// Diagonalizes by congruence: every row operation is mirrored on the
/// matching column, so the result is `Pᵀ M P` for an invertible `P`. A zero
/// pivot with a nonzero off-diagonal entry `m[k][j]` is repaired by adding
/// row/column `j` to row/column `k`, which puts `2 m[k][j]` on the diagonal.
pub fn signature(m: &Matrix) -> Result<(usize, usize, usize)> {
    m.require_square()?;
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = m.rows();
    let mut a = m.clone();
    let (mut pos, mut neg) = (0, 0);
    for k in 0..n {
        if a[(k, k)].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[(j, j)].is_zero()) {
                swap_congruent(&mut a, k, j);
            } else if let Some(j) = (k + 1..n).find(|&j| !a[(k, j)].is_zero()) {
                add_congruent(&mut a, k, j);
            } else {
                continue;
            }
        }
        let pivot = a[(k, k)].clone();
        match sign(&pivot) {
            1 => pos += 1,
            _ => neg += 1,
        }
        for i in k + 1..n {
            if a[(i, k)].is_zero() {
                continue;
            }
            let f = -(&a[(i, k)] / &pivot);
            a.add_row_multiple(i, k, &f);
            for r in 0..n {
                let v = &a[(r, k)] * &f;
                a[(r, i)] += v;
            }
        }
    }
    Ok((pos, neg, n - pos - neg))
}

fn swap_congruent(a: &mut Matrix, i: usize, j: usize) {
    a.swap_rows(i, j);
    for r in 0..a.rows() {
        let tmp = a[(r, i)].clone();
        a[(r, i)] = a[(r, j)].clone();
        a[(r, j)] = tmp;
    }
}

/// `row_k += row_j`, `col_k += col_j`.
fn add_congruent(a: &mut Matrix, k: usize, j: usize) {
    a.add_row_multiple(k, j, &num_traits::One::one());
    for r in 0..a.rows() {
        let v = a[(r, j)].clone();
        a[(r, k)] += v;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    #[test]
    fn signature_examples() {
        assert_eq!(signature(&Matrix::identity(3)).unwrap(), (3, 0, 0));
        assert_eq!(signature(&Matrix::zeros(2, 2)).unwrap(), (0, 0, 2));
        let d = Matrix::diagonal(&[rat(2), rat(-5), rat(0)]);
        assert_eq!(signature(&d).unwrap(), (1, 1, 1));
    }

    #[test]
    fn hyperbolic_plane_needs_off_diagonal_repair() {
        let h = Matrix::from_i64(2, 2, &[0, 1, 1, 0]);
        assert_eq!(signature(&h).unwrap(), (1, 1, 0));
        let h3 = Matrix::from_i64(3, 3, &[0, 0, 1, 0, 0, 0, 1, 0, 0]);
        assert_eq!(signature(&h3).unwrap(), (1, 1, 1));
    }

    #[test]
    fn rejects_non_symmetric() {
        let m = Matrix::from_i64(2, 2, &[0, 1, 0, 0]);
        assert_eq!(signature(&m), Err(Error::NotSymmetric));
    }
}
