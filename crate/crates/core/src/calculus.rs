//! Subspace operators on a Lie algebra: `ε`-images, saturation, generated
//! subalgebras and ideals, centralizers, normalizers and the canonical series.

use rand::Rng;

use crate::error::Result;
use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Rational, Subspace, Vector};

/// `εU`.
pub fn eps_image(l: &LieAlgebra, u: &Subspace) -> Result<Subspace> {
    u.check_ambient(l.dim())?;
    u.image_under(&l.eps())
}

/// `Im ε`.
pub fn eps_image_full(l: &LieAlgebra) -> Subspace {
    Subspace::column_space(&l.eps())
}

/// `Ker ε`.
pub fn eps_kernel(l: &LieAlgebra) -> Subspace {
    Subspace::kernel_of(&l.eps())
}

/// `Û = U + εU + … + εᵖ⁻¹U`, the smallest `ε`-invariant subspace containing `U`.
pub fn saturate(l: &LieAlgebra, u: &Subspace) -> Result<Subspace> {
    u.check_ambient(l.dim())?;
    let e = l.eps();
    let mut acc = u.clone();
    let mut layer = u.clone();
    for _ in 1..l.nilpotency_index() {
        layer = layer.image_under(&e)?;
        if layer.is_zero() {
            break;
        }
        acc = acc.sum(&layer)?;
    }
    Ok(acc)
}

/// `[U, V]`, the span of all brackets of basis vectors.
pub fn bracket_space(l: &LieAlgebra, u: &Subspace, v: &Subspace) -> Result<Subspace> {
    u.check_ambient(l.dim())?;
    v.check_ambient(l.dim())?;
    let vb = v.basis_vectors();
    let mut out = Vec::with_capacity(u.dim() * v.dim());
    for a in u.basis_vectors() {
        let ad = l.ad(&a)?;
        out.extend(vb.iter().map(|b| ad.apply(b)));
    }
    Subspace::span(l.dim(), &out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SubspaceClassification {
    pub is_subalgebra: bool,
    pub is_ideal: bool,
    /// `εU ⊆ U`.
    pub is_d2_invariant: bool,
    pub is_abelian: bool,
}

pub fn classify_subspace(l: &LieAlgebra, u: &Subspace) -> Result<SubspaceClassification> {
    let uu = bracket_space(l, u, u)?;
    let lu = bracket_space(l, &Subspace::full(l.dim()), u)?;
    Ok(SubspaceClassification {
        is_subalgebra: u.contains_subspace(&uu),
        is_ideal: u.contains_subspace(&lu),
        is_d2_invariant: u.contains_subspace(&eps_image(l, u)?),
        is_abelian: uu.is_zero(),
    })
}

/// Grows `start` by `step` until it stops changing. Each productive round
/// raises the dimension, so at most `dim L` rounds are needed.
fn close(
    l: &LieAlgebra,
    start: Subspace,
    step: impl Fn(&Subspace) -> Result<Subspace>,
) -> Result<Subspace> {
    let mut cur = start;
    for _ in 0..=l.dim() {
        let next = cur.sum(&step(&cur)?)?;
        if next == cur {
            return Ok(cur);
        }
        cur = next;
    }
    unreachable!("closure exceeded dim L rounds");
}

/// Smallest subalgebra containing `vectors`.
pub fn generated_subalgebra(l: &LieAlgebra, vectors: &[Vector]) -> Result<Subspace> {
    let start = Subspace::span(l.dim(), vectors)?;
    close(l, start, |s| bracket_space(l, s, s))
}

/// Smallest `ε`-invariant subalgebra containing `vectors`.
pub fn generated_d2_subalgebra(l: &LieAlgebra, vectors: &[Vector]) -> Result<Subspace> {
    let start = saturate(l, &Subspace::span(l.dim(), vectors)?)?;
    close(l, start, |s| saturate(l, &bracket_space(l, s, s)?))
}

/// Smallest ideal containing `vectors`.
pub fn generated_ideal(l: &LieAlgebra, vectors: &[Vector]) -> Result<Subspace> {
    let start = Subspace::span(l.dim(), vectors)?;
    let full = Subspace::full(l.dim());
    close(l, start, |s| bracket_space(l, &full, s))
}

/// `{x : [x, U] ⊆ W}` as the kernel of the stacked maps `x ↦ π_W [u, x]`.
fn bracket_preimage(l: &LieAlgebra, u: &Subspace, w: &Subspace) -> Result<Subspace> {
    u.check_ambient(l.dim())?;
    w.check_ambient(l.dim())?;
    let ann = w.annihilator();
    let mut rows: Vec<Vector> = Vec::new();
    for b in u.basis_vectors() {
        let ad = l.ad(&b)?;
        rows.extend((&ann * &ad).row_vectors());
    }
    Ok(Subspace::kernel_of(&Matrix::from_rows(l.dim(), &rows)?))
}

/// `{x : [x, U] = 0}`.
pub fn centralizer(l: &LieAlgebra, u: &Subspace) -> Result<Subspace> {
    bracket_preimage(l, u, &Subspace::zero(l.dim()))
}

/// `{x : [x, U] ⊆ U}`.
pub fn normalizer(l: &LieAlgebra, u: &Subspace) -> Result<Subspace> {
    bracket_preimage(l, u, u)
}

pub fn center(l: &LieAlgebra) -> Subspace {
    centralizer(l, &Subspace::full(l.dim())).expect("ambient dims agree")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    Derived,
    LowerCentral,
    UpperCentral,
}

/// Terms of the series up to and including the first repeated term:
/// descending from `L` for derived and lower central, ascending from `0`
/// for upper central.
pub fn series(l: &LieAlgebra, kind: SeriesKind) -> Vec<Subspace> {
    let n = l.dim();
    let full = Subspace::full(n);
    let (first, step): (Subspace, Box<dyn Fn(&Subspace) -> Subspace>) = match kind {
        SeriesKind::Derived => (
            full.clone(),
            Box::new(|s: &Subspace| bracket_space(l, s, s).expect("same ambient")),
        ),
        SeriesKind::LowerCentral => (
            full.clone(),
            Box::new(|s: &Subspace| bracket_space(l, &full, s).expect("same ambient")),
        ),
        SeriesKind::UpperCentral => (
            Subspace::zero(n),
            Box::new(|s: &Subspace| bracket_preimage(l, &full, s).expect("same ambient")),
        ),
    };
    let mut out = vec![first];
    for _ in 0..=n {
        let next = step(out.last().expect("nonempty"));
        if &next == out.last().expect("nonempty") {
            return out;
        }
        out.push(next);
    }
    unreachable!("series exceeded dim L steps");
}

pub fn series_dims(l: &LieAlgebra, kind: SeriesKind) -> Vec<usize> {
    series(l, kind).iter().map(Subspace::dim).collect()
}

/// A vector with independent uniform coordinates in `-3..=3`.
pub fn random_vector(rng: &mut impl Rng, n: usize) -> Vector {
    (0..n)
        .map(|_| Rational::from_integer(rng.gen_range(-3i64..=3).into()))
        .collect()
}

/// Span of `k` random vectors, `k` uniform in `1..=n` (`0` when `n = 0`).
pub fn random_subspace(rng: &mut impl Rng, n: usize) -> Subspace {
    if n == 0 {
        return Subspace::zero(0);
    }
    let k = rng.gen_range(1..=n);
    let vs: Vec<Vector> = (0..k).map(|_| random_vector(rng, n)).collect();
    Subspace::span(n, &vs).expect("random vectors have length n")
}
