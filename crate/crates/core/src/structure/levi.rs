use super::{class_flags, radical, require_index_two};
use crate::calculus::{bracket_space, eps_image, saturate};
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::Subspace;

/// How a subalgebra `S` sits against `A = εS`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsSplit {
    pub dim_s: usize,
    pub dim_a: usize,
    /// `εS ∩ S = 0`.
    pub trivial_intersection: bool,
    pub a_abelian: bool,
    /// `Ŝ = S ⊕ A` as vector spaces.
    pub direct_sum: bool,
    /// `[Ŝ, A] ⊆ A`.
    pub a_ideal_in_s_hat: bool,
    /// `[S, A] ⊆ A`.
    pub s_normalizes_a: bool,
}

impl EpsSplit {
    pub fn passes(&self) -> bool {
        self.trivial_intersection
            && self.a_abelian
            && self.direct_sum
            && self.a_ideal_in_s_hat
            && self.s_normalizes_a
    }
}

/// Computes [`EpsSplit`] without any semisimplicity requirement on `S`.
pub fn eps_split_check(l: &LieAlgebra, s: &Subspace) -> Result<EpsSplit> {
    require_index_two(l)?;
    s.check_ambient(l.dim())?;
    if !s.contains_subspace(&bracket_space(l, s, s)?) {
        return Err(Error::NotSubalgebra);
    }
    let a = eps_image(l, s)?;
    let s_hat = saturate(l, s)?;
    Ok(EpsSplit {
        dim_s: s.dim(),
        dim_a: a.dim(),
        trivial_intersection: s.intersect(&a)?.is_zero(),
        a_abelian: bracket_space(l, &a, &a)?.is_zero(),
        direct_sum: s_hat.dim() == s.dim() + a.dim(),
        a_ideal_in_s_hat: a.contains_subspace(&bracket_space(l, &s_hat, &a)?),
        s_normalizes_a: a.contains_subspace(&bracket_space(l, s, &a)?),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviReport {
    pub split: EpsSplit,
    pub radical_dim: usize,
    /// `L = S ⊕ R`, checked only when `dim S + dim R = dim L`.
    pub levi_decomposition: Option<bool>,
    /// `dim A ≥ dim S`; an observation, never a pass criterion.
    pub dim_a_at_least_dim_s: bool,
}

impl LeviReport {
    pub fn passes(&self) -> bool {
        self.split.passes() && self.levi_decomposition != Some(false)
    }
}

/// For a semisimple subalgebra `S`: `εS ∩ S = 0`, `A = εS` is abelian,
/// `Ŝ = S ⊕ A` with `[S, A] ⊆ A`, and the Levi decomposition when the
/// dimensions allow it.
pub fn levi_check(l: &LieAlgebra, s: &Subspace) -> Result<LeviReport> {
    require_index_two(l)?;
    s.check_ambient(l.dim())?;
    let restricted = l.restrict(s)?;
    if !class_flags(&restricted).semisimple || s.is_zero() {
        return Err(Error::NotSemisimple);
    }
    let split = eps_split_check(l, s)?;
    let r = radical(l)?;
    let levi_decomposition = if s.dim() + r.dim() == l.dim() {
        Some(s.intersect(&r)?.is_zero())
    } else {
        None
    };
    Ok(LeviReport {
        dim_a_at_least_dim_s: split.dim_a >= split.dim_s,
        split,
        radical_dim: r.dim(),
        levi_decomposition,
    })
}
