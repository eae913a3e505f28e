//! Builders: dualization `L ⊗ D_p`, semidirect sums, matrix algebras over
//! `D₂`, realification of complex algebras, and the named catalog.

mod catalog;
mod complex;

pub use catalog::{catalog, catalog_entries, catalog_names, catalog_notes, CatalogEntry, Golden, MAX_PARAMETER};
pub use complex::{realify, ComplexAlgebraDef, GaussianRational};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lie::{DualMatrix, LieAlgebra};
use crate::linalg::{zero_vector, Matrix, Rational, Vector};

/// Label of `ε^a x` in a dualization.
pub fn eps_power_label(label: &str, a: usize) -> String {
    match a {
        0 => label.to_string(),
        1 => format!("e{label}"),
        _ => format!("e{a}{label}"),
    }
}

/// `L ⊗ D_p` on the basis `x_1, …, x_n, εx_1, …, εx_n, …, ε^{p-1}x_n`, with
/// `[ε^a x_i, ε^b x_j] = ε^{a+b}[x_i, x_j]` (zero once `a + b ≥ p`) and `ε`
/// the block shift.
pub fn dualize(l: &LieAlgebra, p: usize) -> Result<LieAlgebra> {
    if l.has_eps() {
        return Err(Error::AlreadyDual);
    }
    if p < 2 {
        return Err(Error::InvalidNilpotencyIndex(p));
    }
    let n = l.dim();
    let labels: Vec<String> = (0..p)
        .flat_map(|a| l.labels().iter().map(move |x| eps_power_label(x, a)))
        .collect();
    let mut eps = Matrix::zeros(n * p, n * p);
    for a in 0..p - 1 {
        for i in 0..n {
            eps[((a + 1) * n + i, a * n + i)] = Rational::one();
        }
    }
    let name = if p == 2 {
        format!("{}_dual", l.name())
    } else {
        format!("{}_D{p}", l.name())
    };
    LieAlgebra::from_table(
        name,
        labels,
        |x, y| {
            let (a, i, b, j) = (x / n, x % n, y / n, y % n);
            let mut v = zero_vector(n * p);
            if a + b < p {
                let s = (a + b) * n;
                v[s..s + n].clone_from_slice(&l.basis_bracket(i, j));
            }
            v
        },
        Some(eps),
        p,
    )
}

/// `L ⋉_ρ ℝ^k` with `[x, v] = ρ(x) v` and `[v, w] = 0`. `rho[i]` is the
/// `k × k` matrix of `ρ(x_i)`; it must be a representation, checked on
/// every basis pair. Any `ε` on `L` is dropped.
pub fn semidirect(
    name: &str,
    l: &LieAlgebra,
    rho: &[Matrix],
    labels: &[&str],
) -> Result<LieAlgebra> {
    let n = l.dim();
    let k = labels.len();
    if rho.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: rho.len(),
        });
    }
    if let Some(bad) = rho.iter().find(|r| r.rows() != k || r.cols() != k) {
        return Err(Error::DimensionMismatch {
            expected: k,
            found: bad.rows(),
        });
    }
    for i in 0..n {
        for j in i + 1..n {
            let lhs = combine(rho, &l.basis_bracket(i, j), k);
            if lhs != rho[i].commutator(&rho[j]) {
                return Err(Error::NotRepresentation(i, j));
            }
        }
    }
    let all: Vec<String> = l
        .labels()
        .iter()
        .cloned()
        .chain(labels.iter().map(|s| s.to_string()))
        .collect();
    LieAlgebra::from_table(
        name,
        all,
        |a, b| {
            let mut v = zero_vector(n + k);
            if b < n {
                v[..n].clone_from_slice(&l.basis_bracket(a, b));
            } else if a < n {
                v[n..].clone_from_slice(&rho[a].column(b - n));
            }
            v
        },
        None,
        2,
    )
}

fn combine(ms: &[Matrix], coeffs: &[Rational], k: usize) -> Matrix {
    let mut out = Matrix::zeros(k, k);
    for (m, c) in ms.iter().zip(coeffs) {
        if !c.is_zero() {
            out = &out + &m.scale(c);
        }
    }
    out
}

/// The Lie algebra of `n × n` matrices over `D₂` supported on `positions`,
/// on the basis `E_ij` (real) followed by `εE_ij`, with `ε` acting by
/// multiplication. Brackets are matrix commutators, read back entrywise.
pub fn d2_matrix_algebra(name: &str, n: usize, positions: &[(usize, usize)]) -> Result<LieAlgebra> {
    let k = positions.len();
    let label = |i: usize, j: usize| {
        if n > 9 {
            format!("E{}_{}", i + 1, j + 1)
        } else {
            format!("E{}{}", i + 1, j + 1)
        }
    };
    let mut labels: Vec<String> = positions.iter().map(|&(i, j)| label(i, j)).collect();
    labels.extend(positions.iter().map(|&(i, j)| format!("e{}", label(i, j))));
    let basis: Vec<DualMatrix> = (0..2 * k)
        .map(|t| {
            let (i, j) = positions[t % k];
            let mut unit = Matrix::zeros(n, n);
            unit[(i, j)] = Rational::one();
            if t < k {
                DualMatrix::real(unit).expect("square")
            } else {
                DualMatrix::new(Matrix::zeros(n, n), unit).expect("square")
            }
        })
        .collect();
    let coords = |m: &DualMatrix| -> Result<Vector> {
        let mut v = zero_vector(2 * k);
        let mut seen = Matrix::zeros(n, n);
        for (t, &(i, j)) in positions.iter().enumerate() {
            let (a, b) = m.entry(i, j);
            v[t] = a.clone();
            v[k + t] = b.clone();
            seen[(i, j)] = Rational::one();
        }
        for i in 0..n {
            for j in 0..n {
                let (a, b) = m.entry(i, j);
                if seen[(i, j)].is_zero() && !(a.is_zero() && b.is_zero()) {
                    return Err(Error::Structure(format!("{name}: positions not closed under brackets")));
                }
            }
        }
        Ok(v)
    };
    let mut table = vec![Vec::new(); 4 * k * k];
    for x in 0..2 * k {
        for y in x + 1..2 * k {
            table[x * 2 * k + y] = coords(&basis[x].bracket(&basis[y]))?;
        }
    }
    let eps_id = DualMatrix::eps_identity(n);
    let eps_cols = basis
        .iter()
        .map(|b| coords(&(&eps_id * b)))
        .collect::<Result<Vec<_>>>()?;
    LieAlgebra::from_table(
        name,
        labels,
        |x, y| table[x * 2 * k + y].clone(),
        Some(Matrix::from_columns(2 * k, &eps_cols)?),
        2,
    )
}
