//! Structure theory: Killing form, class predicates, radical and
//! nilradical, essential dimension, triangularity, dualizability and
//! fingerprints, plus the search algorithms in the submodules.

mod engel;
pub(crate) mod envelope;
mod levi;
mod lines;
mod meataxe;

pub use engel::{engel_triangularize, random_engel_instance, verify_triangular_form};
pub use levi::{eps_split_check, levi_check, EpsSplit, LeviReport};
pub use lines::{find_line_ideals, LineIdeal, LineIdeals};
pub use meataxe::{minimal_abelian_d2_ideal, minimal_submodule, MinimalIdeal};

use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::calculus::{
    bracket_space, eps_image, eps_image_full, eps_kernel, generated_ideal, random_vector, saturate,
    series_dims, SeriesKind,
};
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{signature, unit_vector, Matrix, Polynomial, Subspace, Vector};

/// `K_ij = tr(ad x_i · ad x_j)`.
pub fn killing_form(l: &LieAlgebra) -> Matrix {
    let ads = l.ad_matrices();
    let n = l.dim();
    let mut k = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let t = ads[i].trace_of_product(&ads[j]);
            k[(j, i)] = t.clone();
            k[(i, j)] = t;
        }
    }
    k
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ClassFlags {
    pub abelian: bool,
    pub nilpotent: bool,
    pub solvable: bool,
    /// Nondegenerate Killing form. The zero algebra counts as semisimple.
    pub semisimple: bool,
}

pub fn class_flags(l: &LieAlgebra) -> ClassFlags {
    let full = Subspace::full(l.dim());
    ClassFlags {
        abelian: l.ad_matrices().iter().all(Matrix::is_zero),
        nilpotent: is_nilpotent_subalgebra(l, &full),
        solvable: is_solvable_subalgebra(l, &full),
        semisimple: !killing_form(l).determinant().expect("square").is_zero(),
    }
}

/// Lower central series of `S` as an algebra in its own right reaches 0.
pub fn is_nilpotent_subalgebra(l: &LieAlgebra, s: &Subspace) -> bool {
    let mut cur = s.clone();
    loop {
        if cur.is_zero() {
            return true;
        }
        let next = bracket_space(l, s, &cur).expect("same ambient");
        if next == cur {
            return false;
        }
        cur = next;
    }
}

/// Derived series of `S` reaches 0.
pub fn is_solvable_subalgebra(l: &LieAlgebra, s: &Subspace) -> bool {
    let mut cur = s.clone();
    loop {
        if cur.is_zero() {
            return true;
        }
        let next = bracket_space(l, &cur, &cur).expect("same ambient");
        if next == cur {
            return false;
        }
        cur = next;
    }
}

fn verification(msg: impl Into<String>) -> Error {
    Error::Verification(msg.into())
}

/// The solvable radical as the Killing-orthogonal of `[L, L]`, checked
/// afterwards: a solvable `ε`-invariant ideal with semisimple quotient.
pub fn radical(l: &LieAlgebra) -> Result<Subspace> {
    let n = l.dim();
    let full = Subspace::full(n);
    let k = killing_form(l);
    let derived = bracket_space(l, &full, &full)?;
    let rows: Vec<Vector> = derived.basis_vectors().iter().map(|y| k.apply(y)).collect();
    let r = Subspace::kernel_of(&Matrix::from_rows(n, &rows)?);

    l.require_ideal(&r)
        .map_err(|e| verification(format!("radical is not an ideal: {e}")))?;
    if !is_solvable_subalgebra(l, &r) {
        return Err(verification("radical is not solvable"));
    }
    if !r.contains_subspace(&eps_image(l, &r)?) {
        return Err(verification("radical is not eps-invariant"));
    }
    let q = l.quotient(&r)?;
    if !class_flags(&q).semisimple {
        return Err(verification("quotient by the radical is not semisimple"));
    }
    Ok(r)
}

/// Number of random radical elements tried in the nilradical maximality check.
pub const NILRADICAL_SPOT_CHECKS: usize = 20;

/// The nilradical as `{x : ad x ∈ Rad(A)}` with `A` the associative
/// envelope of `ad L` and `Rad(A)` its trace-form radical. Since `ad x ∈ A`,
/// membership reduces to `tr(ad x · b) = 0` for every basis element `b` of `A`.
///
/// Checked afterwards: a nilpotent `ε`-invariant ideal containing `Im ε`
/// (for `ε² = 0`), and no ideal generated by it together with a radical
/// element from the witness set (radical basis vectors outside it, then
/// [`NILRADICAL_SPOT_CHECKS`] random radical elements, seed 0) is nilpotent.
pub fn nilradical(l: &LieAlgebra) -> Result<Subspace> {
    let n = l.dim();
    let env = envelope::associative_envelope(l.ad_matrices());
    let rows: Vec<Vector> = env
        .iter()
        .map(|b| l.ad_matrices().iter().map(|a| a.trace_of_product(b)).collect())
        .collect();
    let nil = Subspace::kernel_of(&Matrix::from_rows(n, &rows)?);

    l.require_ideal(&nil)
        .map_err(|e| verification(format!("nilradical is not an ideal: {e}")))?;
    if !is_nilpotent_subalgebra(l, &nil) {
        return Err(verification("nilradical is not nilpotent"));
    }
    if !nil.contains_subspace(&eps_image(l, &nil)?) {
        return Err(verification("nilradical is not eps-invariant"));
    }
    if l.nilpotency_index() == 2 && !nil.contains_subspace(&eps_image_full(l)) {
        return Err(verification("nilradical does not contain Im eps"));
    }
    let rad = radical(l)?;
    let mut witnesses: Vec<Vector> = rad
        .basis_vectors()
        .into_iter()
        .filter(|v| !nil.contains(v))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..NILRADICAL_SPOT_CHECKS {
        if rad.is_zero() {
            break;
        }
        let c = random_vector(&mut rng, rad.dim());
        let v = rad.combine(&c);
        if !nil.contains(&v) {
            witnesses.push(v);
        }
    }
    let mut gens = nil.basis_vectors();
    for w in witnesses {
        gens.push(w);
        let bigger = generated_ideal(l, &gens)?;
        gens.pop();
        if is_nilpotent_subalgebra(l, &bigger) {
            return Err(verification("a larger nilpotent ideal exists"));
        }
    }
    Ok(nil)
}

/// `d(L) = dim L - rank ε` and standard basis vectors whose images span
/// `L / Im ε`.
pub fn essential(l: &LieAlgebra) -> (usize, Vec<Vector>) {
    let p = eps_image_full(l);
    let basis: Vec<Vector> = p
        .complement_indices()
        .into_iter()
        .map(|i| unit_vector(l.dim(), i))
        .collect();
    (basis.len(), basis)
}

/// A basis element whose adjoint operator has a non-real eigenvalue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumWitness {
    pub index: usize,
    pub label: String,
    pub char_poly: Polynomial,
    pub real_roots: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangularity {
    pub triangular: bool,
    pub solvable: bool,
    pub witness: Option<SpectrumWitness>,
}

/// Solvable, and every `ad x_j` has only real eigenvalues. Eigenvalues of
/// `ad x` are the values of the complex weights at `x`, so real values on a
/// basis give real values everywhere.
pub fn triangularity(l: &LieAlgebra) -> Triangularity {
    let solvable = class_flags(l).solvable;
    let n = l.dim();
    let mut witness = None;
    for (j, a) in l.ad_matrices().iter().enumerate() {
        let cp = a.char_poly().expect("square");
        let real_roots = cp.real_root_count().expect("monic");
        if real_roots < n {
            witness = Some(SpectrumWitness {
                index: j,
                label: l.label(j).to_string(),
                char_poly: cp,
                real_roots,
            });
            break;
        }
    }
    Triangularity {
        triangular: solvable && witness.is_none(),
        solvable,
        witness,
    }
}

pub fn is_triangular(l: &LieAlgebra) -> bool {
    triangularity(l).triangular
}

/// Free `D_p`-module: every Jordan block of `ε` has size `p`, i.e.
/// `p · dim Ker ε = dim L`. For `p = 2` this is `rank ε = dim L / 2`.
pub fn is_free_module(l: &LieAlgebra) -> bool {
    l.nilpotency_index() * eps_kernel(l).dim() == l.dim()
}

pub(crate) fn require_index_two(l: &LieAlgebra) -> Result<()> {
    match l.nilpotency_index() {
        2 => Ok(()),
        p => Err(Error::UnsupportedNilpotencyIndex(p)),
    }
}

/// `S` is a subalgebra, `ε` is injective on `S` and `L = S ⊕ εS`; then
/// `L ≅ S ⊗ D₂`.
pub fn dualization_witness(l: &LieAlgebra, s: &Subspace) -> Result<bool> {
    require_index_two(l)?;
    s.check_ambient(l.dim())?;
    let es = eps_image(l, s)?;
    let is_sub = s.contains_subspace(&bracket_space(l, s, s)?);
    Ok(is_sub
        && es.dim() == s.dim()
        && s.dim() + es.dim() == l.dim()
        && s.intersect(&es)?.is_zero())
}

/// Isomorphism invariants. Equal fingerprints never certify isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub dim: usize,
    pub rank_eps: usize,
    pub essential_dim: usize,
    pub derived_dims: Vec<usize>,
    pub lcs_dims: Vec<usize>,
    pub center_dim: usize,
    pub radical_dim: usize,
    pub nilradical_dim: usize,
    pub killing_signature: (usize, usize, usize),
    pub solvable: bool,
    pub nilpotent: bool,
    pub semisimple: bool,
    pub triangular: bool,
    pub free_d2_module: bool,
}

pub fn fingerprint(l: &LieAlgebra) -> Result<Fingerprint> {
    let flags = class_flags(l);
    let rank_eps = l.eps().rank();
    Ok(Fingerprint {
        dim: l.dim(),
        rank_eps,
        essential_dim: l.dim() - rank_eps,
        derived_dims: series_dims(l, SeriesKind::Derived),
        lcs_dims: series_dims(l, SeriesKind::LowerCentral),
        center_dim: crate::calculus::center(l).dim(),
        radical_dim: radical(l)?.dim(),
        nilradical_dim: nilradical(l)?.dim(),
        killing_signature: signature(&killing_form(l))?,
        solvable: flags.solvable,
        nilpotent: flags.nilpotent,
        semisimple: flags.semisimple,
        triangular: is_triangular(l),
        free_d2_module: is_free_module(l),
    })
}

/// `Û` of the span of an essential basis is all of `L` (as a `D₂`-module
/// the essential basis generates `L`).
pub fn essential_basis_generates(l: &LieAlgebra) -> Result<bool> {
    let (_, basis) = essential(l);
    let mut u = Subspace::span(l.dim(), &basis)?;
    for _ in 0..l.dim() {
        let next = saturate(l, &u)?;
        if next == u {
            break;
        }
        u = next;
    }
    Ok(u.is_full())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::fixtures::*;
    use crate::linalg::vector_from_i64;

    fn aff1() -> LieAlgebra {
        LieAlgebra::builder("aff1", &["X", "Y"])
            .bracket_labels("X", "Y", &[("Y", 1)])
            .build()
            .unwrap()
    }

    fn e2() -> LieAlgebra {
        LieAlgebra::builder("e2", &["J", "P1", "P2"])
            .bracket_labels("J", "P1", &[("P2", 1)])
            .bracket_labels("J", "P2", &[("P1", -1)])
            .build()
            .unwrap()
    }

    #[test]
    fn killing_examples() {
        assert!(killing_form(&abelian(3)).is_zero());
        assert_eq!(signature(&killing_form(&sl2())).unwrap(), (2, 1, 0));
    }

    #[test]
    fn flags_examples() {
        let h = class_flags(&heis3());
        assert!(h.nilpotent && h.solvable && !h.semisimple && !h.abelian);
        let s = class_flags(&sl2());
        assert!(s.semisimple && !s.solvable);
        let l = class_flags(&l4());
        assert!(!l.semisimple && l.nilpotent);
        assert!(class_flags(&abelian(0)).semisimple);
    }

    #[test]
    fn radical_examples() {
        assert!(radical(&heis3()).unwrap().is_full());
        assert!(radical(&sl2()).unwrap().is_zero());
        assert!(radical(&aff1()).unwrap().is_full());
    }

    #[test]
    fn nilradical_examples() {
        assert!(nilradical(&heis3()).unwrap().is_full());
        assert_eq!(
            nilradical(&aff1()).unwrap(),
            Subspace::span(2, &[vector_from_i64(&[0, 1])]).unwrap()
        );
        assert_eq!(nilradical(&e2()).unwrap().dim(), 2);
        assert!(nilradical(&sl2()).unwrap().is_zero());
    }

    #[test]
    fn essential_examples() {
        assert_eq!(essential(&abelian(1)).0, 1);
        let (d, basis) = essential(&l4());
        assert_eq!(d, 2);
        assert_eq!(basis, vec![unit_vector(4, 0), unit_vector(4, 1)]);
        assert!(essential_basis_generates(&l4()).unwrap());
    }

    #[test]
    fn triangularity_examples() {
        assert!(is_triangular(&heis3()));
        let t = triangularity(&e2());
        assert!(!t.triangular);
        let w = t.witness.unwrap();
        assert_eq!(w.label, "J");
        assert_eq!(w.char_poly, Polynomial::from_i64(&[0, 1, 0, 1]));
        assert!(!is_triangular(&sl2()));
    }

    #[test]
    fn free_module_examples() {
        assert!(is_free_module(&l4()));
        assert!(!is_free_module(&heis3()));
        assert!(is_free_module(&abelian(0)));
    }

    #[test]
    fn l4_has_no_dualization_on_its_real_part() {
        let l = l4();
        let s = Subspace::span(4, &[unit_vector(4, 0), unit_vector(4, 1)]).unwrap();
        assert!(!dualization_witness(&l, &s).unwrap());
    }
}
