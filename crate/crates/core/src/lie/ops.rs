use super::LieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace, Vector};

impl LieAlgebra {
    /// `L / I` on the complement spanned by the non-pivot standard vectors
    /// of `I`, with the induced `ε` (possibly zero).
    pub fn quotient(&self, ideal: &Subspace) -> Result<LieAlgebra> {
        ideal.check_ambient(self.dim())?;
        self.require_ideal(ideal)?;
        let e = self.eps_opt();
        if let Some(e) = e {
            for (k, b) in ideal.basis_vectors().iter().enumerate() {
                if !ideal.contains(&e.apply(b)) {
                    return Err(Error::NotEpsInvariant(k));
                }
            }
        }
        let keep = ideal.complement_indices();
        let project = |v: &[crate::linalg::Rational]| -> Vector {
            let r = ideal.reduce(v);
            keep.iter().map(|&j| r[j].clone()).collect()
        };
        let labels: Vec<String> = keep.iter().map(|&j| self.label(j).to_string()).collect();
        let eps = e.map(|e| {
            let cols: Vec<Vector> = keep.iter().map(|&j| project(&e.column(j))).collect();
            Matrix::from_columns(keep.len(), &cols).expect("projected columns")
        });
        LieAlgebra::from_table(
            format!("{}/I", self.name()),
            labels,
            |a, b| project(&self.basis_bracket(keep[a], keep[b])),
            eps,
            self.nilpotency_index(),
        )
    }

    /// Fails with the first pair `(x_i, ideal basis vector k)` whose bracket leaves `I`.
    pub fn require_ideal(&self, ideal: &Subspace) -> Result<()> {
        for (k, b) in ideal.basis_vectors().iter().enumerate() {
            for i in 0..self.dim() {
                if !ideal.contains(&self.ad_basis(i).apply(b)) {
                    return Err(Error::NotAnIdeal {
                        element: self.label(i).to_string(),
                        ideal_vector: k,
                    });
                }
            }
        }
        Ok(())
    }

    /// `L₁ ⊕ L₂` with block-diagonal structure. Labels of the second summand
    /// that collide with the first get a `_2` suffix.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let (n1, n2) = (self.dim(), other.dim());
        let mut labels = self.labels().to_vec();
        for l in other.labels() {
            let mut candidate = l.clone();
            while labels.contains(&candidate) || (candidate != *l && other.labels().contains(&candidate)) {
                candidate.push_str("_2");
            }
            labels.push(candidate);
        }
        let eps = if self.eps_opt().is_some() || other.eps_opt().is_some() {
            Some(self.eps().direct_sum(&other.eps()))
        } else {
            None
        };
        let table = |i: usize, j: usize| -> Vector {
            let mut v = crate::linalg::zero_vector(n1 + n2);
            if j < n1 {
                v[..n1].clone_from_slice(&self.basis_bracket(i, j));
            } else if i >= n1 {
                v[n1..].clone_from_slice(&other.basis_bracket(i - n1, j - n1));
            }
            v
        };
        LieAlgebra::from_table(
            format!("{}+{}", self.name(), other.name()),
            labels,
            table,
            eps,
            self.nilpotency_index().max(other.nilpotency_index()),
        )
        .expect("direct sum shapes agree")
    }

    /// The subalgebra `S` as an algebra in its own right, on the canonical
    /// basis of `S` (labels `S1, S2, …`). `ε` is restricted when `εS ⊆ S`.
    pub fn restrict(&self, s: &Subspace) -> Result<LieAlgebra> {
        s.check_ambient(self.dim())?;
        let basis = s.basis_vectors();
        let coords = |v: Vector| s.coordinates(&v).ok_or(Error::NotSubalgebra);
        let k = basis.len();
        let mut table = vec![Vec::new(); k * k];
        for i in 0..k {
            for j in i + 1..k {
                table[i * k + j] = coords(self.bracket_unchecked(&basis[i], &basis[j]))?;
            }
        }
        let eps = match self.eps_opt() {
            Some(e) => basis
                .iter()
                .map(|b| s.coordinates(&e.apply(b)))
                .collect::<Option<Vec<_>>>()
                .map(|cols| Matrix::from_columns(k, &cols).expect("coordinate columns")),
            None => None,
        };
        LieAlgebra::from_table(
            format!("{}|S", self.name()),
            (1..=k).map(|i| format!("S{i}")).collect(),
            |i, j| table[i * k + j].clone(),
            eps,
            self.nilpotency_index(),
        )
    }
}
