//! Lie algebras over `ℚ` given by structure constants, with an optional
//! dual-number structure operator `ε`.

mod adjoint;
mod dual;
mod morphism;
mod ops;
mod validate;

pub use adjoint::{adjoint_representation, gl, matrix_to_gl_vector, AdjointRepresentation, DualForm};
pub use dual::{format_dual, DualMatrix};
pub use morphism::{verify_morphism, MorphismCheck, MorphismReport};
pub use validate::{ValidationReport, Violation};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{axpy, zero_vector, Matrix, Rational, Vector};

/// A finite-dimensional Lie algebra with structure constants `c_{ij}^k`.
///
/// Only brackets `[x_i, x_j]` with `i < j` are stored; antisymmetry is
/// implied. `ε` is a plain rational matrix on the chosen basis (absent means
/// zero) and `p` is its declared nilpotency index (`εᵖ = 0`, default 2).
///
/// Construction checks shapes only. The axioms (Jacobi, `εᵖ = 0`,
/// compatibility of `ε` with the bracket) are reported by
/// [`LieAlgebra::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    labels: Vec<String>,
    brackets: Vec<Vector>,
    eps: Option<Matrix>,
    nilpotency: usize,
    ad_basis: Vec<Matrix>,
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

impl LieAlgebra {
    pub fn builder(name: impl Into<String>, labels: &[&str]) -> LieAlgebraBuilder {
        LieAlgebraBuilder::new(name, labels.iter().map(|s| s.to_string()).collect())
    }

    /// Assembles an algebra from a full bracket table: `table(i, j)` must
    /// return `[x_i, x_j]` for `i < j`.
    pub fn from_table(
        name: impl Into<String>,
        labels: Vec<String>,
        table: impl Fn(usize, usize) -> Vector,
        eps: Option<Matrix>,
        nilpotency: usize,
    ) -> Result<Self> {
        let n = labels.len();
        let mut b = LieAlgebraBuilder::new(name, labels);
        for i in 0..n {
            for j in i + 1..n {
                b = b.bracket(i, j, table(i, j));
            }
        }
        if let Some(e) = eps {
            b = b.eps(e);
        }
        b.nilpotency(nilpotency).build()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `[x_i, x_j]` for any pair of basis indices.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vector {
        use std::cmp::Ordering::*;
        let n = self.dim();
        match i.cmp(&j) {
            Less => self.brackets[pair_index(n, i, j)].clone(),
            Greater => self.brackets[pair_index(n, j, i)].iter().map(|c| -c).collect(),
            Equal => zero_vector(n),
        }
    }

    /// The `ε` operator, zero if none was attached.
    pub fn eps(&self) -> Matrix {
        self.eps
            .clone()
            .unwrap_or_else(|| Matrix::zeros(self.dim(), self.dim()))
    }

    pub fn eps_opt(&self) -> Option<&Matrix> {
        self.eps.as_ref()
    }

    /// True when `ε` is present and nonzero.
    pub fn has_eps(&self) -> bool {
        self.eps.as_ref().is_some_and(|e| !e.is_zero())
    }

    pub fn nilpotency_index(&self) -> usize {
        self.nilpotency
    }

    /// Drops the `ε` structure, keeping the underlying real Lie algebra.
    pub fn realification(&self) -> LieAlgebra {
        LieAlgebra {
            name: format!("{}_real", self.name),
            eps: None,
            nilpotency: 2,
            ..self.clone()
        }
    }

    /// Same algebra with a different `ε` (shape-checked).
    pub fn with_eps(&self, eps: Option<Matrix>, nilpotency: usize) -> Result<LieAlgebra> {
        let mut b = LieAlgebraBuilder::new(self.name.clone(), self.labels.clone());
        b.brackets = self.brackets.clone();
        b.eps = eps;
        b.nilpotency(nilpotency).build()
    }

    /// Applies `ε` to a vector.
    pub fn apply_eps(&self, v: &[Rational]) -> Vector {
        match &self.eps {
            Some(e) => e.apply(v),
            None => zero_vector(self.dim()),
        }
    }

    fn check_len(&self, v: &[Rational]) -> Result<()> {
        if v.len() == self.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            })
        }
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vector> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let mut out = zero_vector(self.dim());
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            let col = self.ad_basis[i].apply(y);
            axpy(&mut out, xi, &col);
        }
        out
    }

    /// `ad(x)`, the matrix of `y ↦ [x, y]`.
    pub fn ad(&self, x: &[Rational]) -> Result<Matrix> {
        self.check_len(x)?;
        let n = self.dim();
        let mut out = Matrix::zeros(n, n);
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                out = &out + &self.ad_basis[i].scale(xi);
            }
        }
        Ok(out)
    }

    /// `ad(x_i)` for a basis element.
    pub fn ad_basis(&self, i: usize) -> &Matrix {
        &self.ad_basis[i]
    }

    pub fn ad_matrices(&self) -> &[Matrix] {
        &self.ad_basis
    }
}

/// Incremental constructor for [`LieAlgebra`].
#[derive(Clone, Debug)]
pub struct LieAlgebraBuilder {
    name: String,
    labels: Vec<String>,
    brackets: Vec<Vector>,
    eps: Option<Matrix>,
    nilpotency: usize,
    error: Option<Error>,
}

impl LieAlgebraBuilder {
    pub fn new(name: impl Into<String>, labels: Vec<String>) -> Self {
        let n = labels.len();
        LieAlgebraBuilder {
            name: name.into(),
            brackets: vec![zero_vector(n); n * n.saturating_sub(1) / 2],
            labels,
            eps: None,
            nilpotency: 2,
            error: None,
        }
    }

    /// Sets `[x_i, x_j] = value`; `i > j` stores the negation.
    pub fn bracket(mut self, i: usize, j: usize, value: Vector) -> Self {
        let n = self.labels.len();
        if i == j || i >= n || j >= n || value.len() != n {
            self.error.get_or_insert(Error::Structure(format!(
                "bad bracket entry ({i}, {j}) of length {} in dimension {n}",
                value.len()
            )));
            return self;
        }
        if i < j {
            self.brackets[pair_index(n, i, j)] = value;
        } else {
            self.brackets[pair_index(n, j, i)] = value.iter().map(|c| -c).collect();
        }
        self
    }

    /// Sets `[a, b]` by label to an integer combination of labelled basis vectors.
    pub fn bracket_labels(self, a: &str, b: &str, value: &[(&str, i64)]) -> Self {
        let terms: Vec<(&str, Rational)> = value
            .iter()
            .map(|&(l, c)| (l, crate::linalg::rat(c)))
            .collect();
        self.bracket_labels_q(a, b, &terms)
    }

    pub fn bracket_labels_q(mut self, a: &str, b: &str, value: &[(&str, Rational)]) -> Self {
        let n = self.labels.len();
        let idx = |l: &str| self.labels.iter().position(|x| x == l);
        let (Some(i), Some(j)) = (idx(a), idx(b)) else {
            self.error
                .get_or_insert(Error::Structure(format!("unknown label in [{a}, {b}]")));
            return self;
        };
        let mut v = zero_vector(n);
        for (l, c) in value {
            match idx(l) {
                Some(k) => v[k] += c,
                None => {
                    self.error
                        .get_or_insert(Error::Structure(format!("unknown label {l}")));
                    return self;
                }
            }
        }
        self.bracket(i, j, v)
    }

    pub fn eps(mut self, eps: Matrix) -> Self {
        self.eps = Some(eps);
        self
    }

    /// Sets `ε` from `(source, image)` label pairs; unlisted basis vectors map to 0.
    pub fn eps_map(mut self, pairs: &[(&str, &str)]) -> Self {
        let n = self.labels.len();
        let mut e = Matrix::zeros(n, n);
        for (src, dst) in pairs {
            let s = self.labels.iter().position(|x| x == src);
            let d = self.labels.iter().position(|x| x == dst);
            match (s, d) {
                (Some(s), Some(d)) => e[(d, s)] = num_traits::One::one(),
                _ => {
                    self.error
                        .get_or_insert(Error::Structure(format!("unknown label in eps {src} -> {dst}")));
                }
            }
        }
        self.eps = Some(e);
        self
    }

    pub fn nilpotency(mut self, p: usize) -> Self {
        self.nilpotency = p;
        self
    }

    pub fn build(self) -> Result<LieAlgebra> {
        if let Some(e) = self.error {
            return Err(e);
        }
        let n = self.labels.len();
        for (i, l) in self.labels.iter().enumerate() {
            if l.is_empty() || self.labels[..i].contains(l) {
                return Err(Error::Structure(format!("basis labels must be distinct and nonempty: {l:?}")));
            }
        }
        if let Some(e) = &self.eps {
            if e.rows() != n || e.cols() != n {
                return Err(Error::Structure(format!(
                    "eps must be {n}x{n}, got {}x{}",
                    e.rows(),
                    e.cols()
                )));
            }
        }
        if self.nilpotency < 2 {
            return Err(Error::InvalidNilpotencyIndex(self.nilpotency));
        }
        let mut ad_basis = Vec::with_capacity(n);
        for i in 0..n {
            let mut m = Matrix::zeros(n, n);
            for j in 0..n {
                let col = match i.cmp(&j) {
                    std::cmp::Ordering::Less => self.brackets[pair_index(n, i, j)].clone(),
                    std::cmp::Ordering::Greater => {
                        self.brackets[pair_index(n, j, i)].iter().map(|c| -c).collect()
                    }
                    std::cmp::Ordering::Equal => continue,
                };
                m.set_column(j, &col);
            }
            ad_basis.push(m);
        }
        Ok(LieAlgebra {
            name: self.name,
            labels: self.labels,
            brackets: self.brackets,
            eps: self.eps,
            nilpotency: self.nilpotency,
            ad_basis,
        })
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::linalg::{rat, unit_vector, vector_from_i64};

    #[test]
    fn heis3_bracket() {
        let h = heis3();
        let u = unit_vector(3, 0);
        let v = unit_vector(3, 1);
        assert_eq!(h.bracket(&u, &v).unwrap(), unit_vector(3, 2));
        assert_eq!(h.bracket(&v, &u).unwrap(), vector_from_i64(&[0, 0, -1]));
        let x = vector_from_i64(&[3, -1, 7]);
        assert_eq!(h.bracket(&x, &x).unwrap(), zero_vector(3));
        assert!(h.bracket(&x, &[rat(1)]).is_err());
    }

    #[test]
    fn l4_bracket_with_eps_part_vanishes() {
        let l = l4();
        let y = unit_vector(4, 1);
        let ex = unit_vector(4, 2);
        assert_eq!(l.bracket(&y, &ex).unwrap(), zero_vector(4));
    }

    #[test]
    fn ad_examples() {
        let h = heis3();
        assert!(h.ad(&unit_vector(3, 2)).unwrap().is_zero());
        let ad_u = h.ad(&unit_vector(3, 0)).unwrap();
        assert_eq!(ad_u, Matrix::from_i64(3, 3, &[0, 0, 0, 0, 0, 0, 0, 1, 0]));

        let s = sl2();
        let ad_h = s.ad(&unit_vector(3, 0)).unwrap();
        assert_eq!(ad_h, Matrix::diagonal(&[rat(0), rat(2), rat(-2)]));
    }

    #[test]
    fn builder_rejects_bad_shapes() {
        let e = LieAlgebra::builder("x", &["A", "B"]).eps(Matrix::zeros(3, 3)).build();
        assert!(matches!(e, Err(Error::Structure(_))));
        let e = LieAlgebra::builder("x", &["A", "A"]).build();
        assert!(matches!(e, Err(Error::Structure(_))));
        let e = LieAlgebra::builder("x", &["A", "B"]).nilpotency(1).build();
        assert_eq!(e, Err(Error::InvalidNilpotencyIndex(1)));
    }
}
