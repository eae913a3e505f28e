use std::fmt;

use super::LieAlgebra;
use crate::linalg::{add_vectors, is_zero_vector, sub_vectors, unit_vector, Matrix};

/// One failed axiom, with the basis indices that witness it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `[x_i,[x_j,x_k]] + [x_j,[x_k,x_i]] + [x_k,[x_i,x_j]] ≠ 0`.
    Jacobi { i: usize, j: usize, k: usize },
    /// `εᵖ x_j ≠ 0`.
    EpsNotNilpotent { p: usize, j: usize },
    /// `[ε x_i, x_j] ≠ ε[x_i, x_j]`.
    EpsLeft { i: usize, j: usize },
    /// `[x_i, ε x_j] ≠ ε[x_i, x_j]`.
    EpsRight { i: usize, j: usize },
}

impl Violation {
    pub fn describe(&self, labels: &[String]) -> String {
        match *self {
            Violation::Jacobi { i, j, k } => format!(
                "jacobi fails on ({}, {}, {})",
                labels[i], labels[j], labels[k]
            ),
            Violation::EpsNotNilpotent { p, j } => {
                format!("eps^{p} does not vanish on {}", labels[j])
            }
            Violation::EpsLeft { i, j } => format!(
                "[eps {a}, {b}] != eps [{a}, {b}]",
                a = labels[i],
                b = labels[j]
            ),
            Violation::EpsRight { i, j } => format!(
                "[{a}, eps {b}] != eps [{a}, {b}]",
                a = labels[i],
                b = labels[j]
            ),
        }
    }
}

/// Result of [`LieAlgebra::validate`]. Antisymmetry holds by construction,
/// so only the remaining axioms can appear.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub labels: Vec<String>,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn lines(&self) -> Vec<String> {
        self.violations.iter().map(|v| v.describe(&self.labels)).collect()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return writeln!(f, "valid");
        }
        for line in self.lines() {
            writeln!(f, "violation: {line}")?;
        }
        Ok(())
    }
}

impl LieAlgebra {
    /// Checks Jacobi on all basis triples and, when `ε` is present,
    /// `εᵖ = 0` and `[εx, y] = [x, εy] = ε[x, y]` on all basis pairs.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim();
        let mut violations = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let xij = self.basis_bracket(i, j);
                for k in j + 1..n {
                    let xjk = self.basis_bracket(j, k);
                    let xki = self.basis_bracket(k, i);
                    let a = self.ad_basis(i).apply(&xjk);
                    let b = self.ad_basis(j).apply(&xki);
                    let c = self.ad_basis(k).apply(&xij);
                    if !is_zero_vector(&add_vectors(&add_vectors(&a, &b), &c)) {
                        violations.push(Violation::Jacobi { i, j, k });
                    }
                }
            }
        }
        if let Some(e) = self.eps_opt() {
            let ep: Matrix = e.pow(self.nilpotency_index());
            for j in 0..n {
                if !is_zero_vector(&ep.column(j)) {
                    violations.push(Violation::EpsNotNilpotent {
                        p: self.nilpotency_index(),
                        j,
                    });
                }
            }
            let eps_cols: Vec<_> = (0..n).map(|j| e.column(j)).collect();
            for i in 0..n {
                for j in 0..n {
                    let target = e.apply(&self.basis_bracket(i, j));
                    let left = self.bracket_unchecked(&eps_cols[i], &unit_vector(n, j));
                    if !is_zero_vector(&sub_vectors(&left, &target)) {
                        violations.push(Violation::EpsLeft { i, j });
                    }
                    let right = self.bracket_unchecked(&unit_vector(n, i), &eps_cols[j]);
                    if !is_zero_vector(&sub_vectors(&right, &target)) {
                        violations.push(Violation::EpsRight { i, j });
                    }
                }
            }
        }
        ValidationReport {
            labels: self.labels().to_vec(),
            violations,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::fixtures::*;

    #[test]
    fn valid_examples() {
        assert!(abelian(2).validate().is_valid());
        assert!(l4().validate().is_valid());
        assert!(sl2().validate().is_valid());
    }

    #[test]
    fn eps_not_nilpotent_is_reported() {
        let h = heis3()
            .with_eps(Some(Matrix::from_i64(3, 3, &[1, 0, 0, 0, 0, 0, 0, 0, 0])), 2)
            .unwrap();
        let r = h.validate();
        assert!(r.violations.contains(&Violation::EpsNotNilpotent { p: 2, j: 0 }));
        assert!(!r.is_valid());
    }

    #[test]
    fn eps_incompatible_is_reported() {
        // eps: W -> U, so eps [U, V] = U while [eps U, V] = 0
        let h = heis3()
            .with_eps(Some(Matrix::from_i64(3, 3, &[0, 0, 1, 0, 0, 0, 0, 0, 0])), 2)
            .unwrap();
        let r = h.validate();
        assert!(r.violations.contains(&Violation::EpsLeft { i: 2, j: 1 }));
        assert_eq!(r.lines()[0], "[eps U, V] != eps [U, V]");
    }

    #[test]
    fn jacobi_violation_is_reported() {
        let bad = LieAlgebra::builder("bad", &["A", "B", "C"])
            .bracket_labels("A", "B", &[("A", 1)])
            .bracket_labels("B", "C", &[("B", 1)])
            .build()
            .unwrap();
        assert_eq!(bad.validate().violations, vec![Violation::Jacobi { i: 0, j: 1, k: 2 }]);
    }
}
