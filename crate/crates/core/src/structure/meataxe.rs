use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::envelope::{associative_envelope, combine_matrices, restrict_operator, trace_radical};
use super::{class_flags, require_index_two};
use crate::calculus::{bracket_space, eps_image, eps_image_full, random_vector, series, SeriesKind};
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{factor_poly, unit_vector, Matrix, Subspace, Vector};

/// Random envelope elements tried before giving up on a splitting element.
const SPLIT_ATTEMPTS: usize = 64;

/// A nonzero subspace of `ℚ^dim` invariant under `gens` and containing no
/// smaller nonzero invariant subspace.
///
/// Works over the associative envelope `B` of the generators. A common null
/// vector gives a line. Otherwise, if the trace radical `Rad(B)` is nonzero,
/// `Rad(B)·V` is a proper submodule and the search recurses into it.
/// Otherwise `B` is semisimple; for generators spanning a solvable Lie
/// algebra it is then commutative, so `ker f(a)` is a submodule for every
/// irreducible factor `f` of the characteristic polynomial of an element
/// `a ∈ B`. When `χ_a = f^k` with `deg f = dim B`, `B = ℚ[a]` is a field and
/// `B·v` is simple for any `v ≠ 0`.
pub fn minimal_submodule(gens: &[Matrix], dim: usize) -> Result<Subspace> {
    if dim == 0 {
        return Err(Error::Structure("no nonzero subspace of a zero space".into()));
    }
    let w = minimal_inner(gens, dim)?;
    for g in gens {
        if !w.contains_subspace(&w.image_under(g)?) {
            return Err(Error::Verification(
                "splitting produced a non-invariant subspace; generators may not span a solvable algebra".into(),
            ));
        }
    }
    Ok(w)
}

fn minimal_inner(gens: &[Matrix], dim: usize) -> Result<Subspace> {
    let stacked: Vec<Vector> = gens.iter().flat_map(Matrix::row_vectors).collect();
    let joint = Matrix::from_rows(dim, &stacked)?.kernel();
    if let Some(v) = joint.into_iter().next() {
        return Subspace::span(dim, &[v]);
    }
    let env = associative_envelope(gens);
    let rad = trace_radical(&env);
    if !rad.is_empty() {
        let mut cols = Vec::new();
        for c in &rad {
            let m = combine_matrices(&env, c);
            cols.extend((0..dim).map(|j| m.column(j)));
        }
        let w = Subspace::span(dim, &cols)?;
        if w.is_full() {
            return Err(Error::Verification("radical of the envelope acts surjectively".into()));
        }
        return recurse_into(gens, &w);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut candidates: Vec<Matrix> = env.clone();
    for _ in 0..SPLIT_ATTEMPTS {
        let c = random_vector(&mut rng, env.len());
        candidates.push(combine_matrices(&env, &c));
    }
    for a in candidates {
        let fac = factor_poly(&a.char_poly()?)?;
        if fac.factors.len() >= 2 {
            let f = &fac.factors[0].0;
            let w = Subspace::kernel_of(&f.eval_matrix(&a));
            return recurse_into(gens, &w);
        }
        let f = &fac.factors[0].0;
        if f.degree() == Some(env.len()) {
            let v = unit_vector(dim, 0);
            let images: Vec<Vector> = env.iter().map(|b| b.apply(&v)).collect();
            return Subspace::span(dim, &images);
        }
    }
    Err(Error::Verification("no splitting element found in the envelope".into()))
}

fn recurse_into(gens: &[Matrix], w: &Subspace) -> Result<Subspace> {
    let restricted = gens
        .iter()
        .map(|g| restrict_operator(g, w))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Verification("submodule is not invariant".into()))?;
    let inner = minimal_inner(&restricted, w.dim())?;
    let vs: Vec<Vector> = inner.basis_vectors().iter().map(|c| w.combine(c)).collect();
    Subspace::span(w.ambient_dim(), &vs)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalIdeal {
    pub space: Subspace,
    /// The ambient searched: `Im ε`, or the last nonzero derived term when `ε = 0`.
    pub searched: Subspace,
    pub note: Option<String>,
}

impl MinimalIdeal {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

/// Note attached when the minimal rational invariant subspace has dimension above 2.
pub const IRRATIONAL_NOTE: &str =
    "irrational spectrum; a real invariant refinement of dimension at most 2 exists";

/// A minimal nonzero `ad L`-invariant subspace of `P = Im ε` (or of the last
/// nonzero derived term when `ε = 0`). Inside `Im ε ⊆ Ker ε` every such
/// subspace is an abelian `D₂`-ideal.
pub fn minimal_abelian_d2_ideal(l: &LieAlgebra) -> Result<MinimalIdeal> {
    require_index_two(l)?;
    if !class_flags(l).solvable {
        return Err(Error::NotSolvable);
    }
    let p = if l.has_eps() {
        eps_image_full(l)
    } else {
        series(l, SeriesKind::Derived)
            .into_iter()
            .rev()
            .find(|s| !s.is_zero())
            .ok_or_else(|| Error::Structure("zero algebra has no nonzero ideal".into()))?
    };
    let gens = l
        .ad_matrices()
        .iter()
        .map(|a| restrict_operator(a, &p))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Verification("search space is not an ideal".into()))?;
    let inner = minimal_submodule(&gens, p.dim())?;
    let vs: Vec<Vector> = inner.basis_vectors().iter().map(|c| p.combine(c)).collect();
    let w = Subspace::span(l.dim(), &vs)?;

    l.require_ideal(&w)
        .map_err(|e| Error::Verification(format!("result is not an ideal: {e}")))?;
    if !bracket_space(l, &w, &w)?.is_zero() {
        return Err(Error::Verification("result is not abelian".into()));
    }
    if !w.contains_subspace(&eps_image(l, &w)?) {
        return Err(Error::Verification("result is not eps-invariant".into()));
    }
    let note = (w.dim() > 2).then(|| IRRATIONAL_NOTE.to_string());
    Ok(MinimalIdeal {
        space: w,
        searched: p,
        note,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::fixtures::*;

    #[test]
    fn l4_gives_eps_x() {
        let r = minimal_abelian_d2_ideal(&l4()).unwrap();
        assert_eq!(r.space, Subspace::span(4, &[unit_vector(4, 2)]).unwrap());
        assert!(r.note.is_none());
    }

    #[test]
    fn sl2_is_rejected() {
        assert_eq!(minimal_abelian_d2_ideal(&sl2()), Err(Error::NotSolvable));
    }

    #[test]
    fn heis3_uses_derived_term() {
        let r = minimal_abelian_d2_ideal(&heis3()).unwrap();
        assert_eq!(r.space, Subspace::span(3, &[unit_vector(3, 2)]).unwrap());
    }

    #[test]
    fn rotation_and_cubic_field() {
        let rot = Matrix::from_i64(2, 2, &[0, -1, 1, 0]);
        assert!(minimal_submodule(std::slice::from_ref(&rot), 2).unwrap().is_full());
        // companion matrix of t^3 - 2 on Q^3 plus a copy of the rotation
        let c = Matrix::from_i64(3, 3, &[0, 0, 2, 1, 0, 0, 0, 1, 0]);
        assert!(minimal_submodule(std::slice::from_ref(&c), 3).unwrap().is_full());
        let big = c.direct_sum(&rot);
        assert_eq!(minimal_submodule(std::slice::from_ref(&big), 5).unwrap().dim(), 2);
        // two copies of the same field: any B·v is 2-dimensional
        let twice = rot.direct_sum(&rot);
        assert_eq!(minimal_submodule(&[twice], 4).unwrap().dim(), 2);
    }

    #[test]
    fn nilpotent_radical_path() {
        // a 2x2 Jordan block tensored with a rotation: radical part is nonzero
        let j = Matrix::from_i64(4, 4, &[0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0]);
        let r = Matrix::from_i64(4, 4, &[0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0]);
        let w = minimal_submodule(&[j, r], 4).unwrap();
        assert_eq!(w.dim(), 2);
    }
}
