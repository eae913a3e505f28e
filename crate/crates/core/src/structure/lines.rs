use crate::error::Result;
use crate::lie::LieAlgebra;
use crate::linalg::{factor_poly, Matrix, Rational, Subspace};

/// A common eigenspace of all `ad x_i`: every line inside it is an ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineIdeal {
    /// Eigenvalue of `ad x_i` on the space, per basis element.
    pub eigenvalues: Vec<Rational>,
    pub space: Subspace,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineIdeals {
    pub families: Vec<LineIdeal>,
    /// Every real eigenvalue of every `ad x_i` is rational, so no real line
    /// ideal is missed.
    pub conclusive: bool,
}

impl LineIdeals {
    pub fn is_empty(&self) -> bool {
        self.families.is_empty()
    }

    /// Whether the line through `v` is an ideal according to the families.
    pub fn contains_line(&self, v: &[Rational]) -> bool {
        self.families.iter().any(|f| f.space.contains(v))
    }
}

/// Refines the whole space by the rational eigenspaces of `ad x_1`, then
/// `ad x_2`, and so on, dropping empty intersections.
pub fn find_line_ideals(l: &LieAlgebra) -> Result<LineIdeals> {
    let n = l.dim();
    let mut conclusive = true;
    let mut families = vec![LineIdeal {
        eigenvalues: Vec::new(),
        space: Subspace::full(n),
    }];
    for a in l.ad_matrices() {
        let cp = a.char_poly()?;
        let fac = factor_poly(&cp)?;
        let roots = fac.rational_roots();
        if cp.real_root_count()? != fac.rational_root_count() {
            conclusive = false;
        }
        let kernels: Vec<(Rational, Subspace)> = roots
            .into_iter()
            .map(|(r, _)| {
                let shifted = a - &Matrix::identity(n).scale(&r);
                (r, Subspace::kernel_of(&shifted))
            })
            .collect();
        let mut next = Vec::new();
        for fam in &families {
            for (r, k) in &kernels {
                let w = fam.space.intersect(k)?;
                if !w.is_zero() {
                    let mut ev = fam.eigenvalues.clone();
                    ev.push(r.clone());
                    next.push(LineIdeal { eigenvalues: ev, space: w });
                }
            }
        }
        families = next;
    }
    families.retain(|f| !f.space.is_zero());
    Ok(LineIdeals {
        families,
        conclusive,
    })
}
