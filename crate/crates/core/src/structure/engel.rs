use num_traits::Zero;
use rand::Rng;

use super::envelope::Echelon;
use crate::error::{Error, Result};
use crate::lie::DualMatrix;
use crate::linalg::{factor_poly, Matrix, Polynomial, Rational, Subspace, Vector};

/// Upper bound on the number of eigenvalue tuples tried per level.
const MAX_TUPLES: usize = 4096;
/// Candidate vectors tried per level before backtracking.
const MAX_BRANCH: usize = 8;
/// Candidate vectors tried in total.
const MAX_NODES: usize = 4096;

/// Finds an invertible `g` over `D₂` such that every `g⁻¹ M g` is upper
/// triangular with diagonal entries in `εℝ`.
///
/// Each level looks for a free vector `v` (real part nonzero) with
/// `M v = ε c_M v` for all `M`, splits off `D₂ v`, and recurses on the
/// quotient block. A poor choice of `v` can leave a quotient with no free
/// common eigenvector, so each level tries several candidates and
/// backtracks. The scalars `c_M` are searched over `0` and the rational
/// eigenvalues of the `ε`-parts, zero first. When the search runs dry the
/// result is [`Error::NoTriangularForm`]; `{εR}` for a plane rotation `R` is
/// an input with no such form at all.
///
/// Every input must be nilpotent, certified by the characteristic
/// polynomial of its realification being `t^{2m}`.
pub fn engel_triangularize(matrices: &[DualMatrix], m: usize) -> Result<DualMatrix> {
    let target = Polynomial::t().pow(2 * m);
    for (index, x) in matrices.iter().enumerate() {
        if x.rank() != m {
            return Err(Error::DimensionMismatch {
                expected: m,
                found: x.rank(),
            });
        }
        let cp = x.realify().char_poly()?;
        if cp != target {
            return Err(Error::NotNilpotent { index, char_poly: cp });
        }
    }
    let mut budget = MAX_NODES;
    let g = triangularize(&independent_subset(matrices), m, &mut budget)?;
    if !verify_triangular_form(matrices, &g) {
        return Err(Error::Verification("conjugated matrices are not eps-triangular".into()));
    }
    Ok(g)
}

/// `g` is invertible and every `g⁻¹ M g` is upper triangular with diagonal in `εℝ`.
pub fn verify_triangular_form(matrices: &[DualMatrix], g: &DualMatrix) -> bool {
    let Some(gi) = g.inverse() else {
        return false;
    };
    matrices
        .iter()
        .all(|x| (&(&gi * x) * g).is_eps_triangular())
}

fn independent_subset(matrices: &[DualMatrix]) -> Vec<DualMatrix> {
    let mut ech = Echelon::new();
    matrices
        .iter()
        .filter(|x| ech.insert(x.realify().entries()))
        .cloned()
        .collect()
}

fn block(x: &DualMatrix, m: usize) -> DualMatrix {
    DualMatrix::new(
        x.real_part().submatrix(1..m, 1..m),
        x.eps_part().submatrix(1..m, 1..m),
    )
    .expect("square block")
}

/// Tries the candidate free vectors of each level in order and backtracks
/// when a quotient block has none.
fn triangularize(ms: &[DualMatrix], m: usize, budget: &mut usize) -> Result<DualMatrix> {
    if m == 0 {
        return Ok(DualMatrix::identity(0));
    }
    let mut search = FreeVectorSearch::new(ms, m);
    while let Some(batch) = search.next_batch() {
        for (v0, v1) in batch {
            if *budget == 0 {
                return Err(Error::NoTriangularForm(m));
            }
            *budget -= 1;
            let g = basis_through(&v0, &v1, m)?;
            if m == 1 {
                return Ok(g);
            }
            let gi = g.inverse().expect("real part has full rank");
            let lower: Vec<DualMatrix> = ms
                .iter()
                .map(|x| block(&(&(&gi * x) * &g), m))
                .collect();
            match triangularize(&independent_subset(&lower), m - 1, budget) {
                Ok(h) => {
                    let lift = DualMatrix::new(
                        Matrix::identity(1).direct_sum(h.real_part()),
                        Matrix::zeros(1, 1).direct_sum(h.eps_part()),
                    )?;
                    return Ok(&g * &lift);
                }
                Err(Error::NoTriangularForm(_)) => continue,
                Err(e) => return Err(e),
            }
        }
    }
    Err(Error::NoTriangularForm(m))
}

/// `g` with first column `v0 + εv1`, the other columns unit vectors.
fn basis_through(v0: &[Rational], v1: &[Rational], m: usize) -> Result<DualMatrix> {
    let p = v0.iter().position(|x| !x.is_zero()).expect("free vector");
    let mut a = Matrix::identity(m);
    let mut b = Matrix::zeros(m, m);
    a.set_column(0, v0);
    b.set_column(0, v1);
    for (col, j) in (0..m).filter(|&j| j != p).enumerate() {
        let mut e = vec![Rational::zero(); m];
        e[j] = num_traits::One::one();
        a.set_column(col + 1, &e);
    }
    DualMatrix::new(a, b)
}

/// Walks the tuples `(c_M)` and yields, per tuple, up to `MAX_BRANCH`
/// vectors `v = v0 + εv1` with `v0 ≠ 0` and `M v = ε c_M v` for all `M`.
struct FreeVectorSearch {
    m: usize,
    reals: Vec<Matrix>,
    eps: Matrix,
    candidates: Vec<Vec<Rational>>,
    idx: Vec<usize>,
    tuples: usize,
    exhausted: bool,
}

impl FreeVectorSearch {
    fn new(ms: &[DualMatrix], m: usize) -> Self {
        let candidates = ms
            .iter()
            .map(|x| {
                let mut c = vec![Rational::zero()];
                let cp = x.eps_part().char_poly().expect("square");
                if let Ok(f) = factor_poly(&cp) {
                    for (r, _) in f.rational_roots() {
                        if !r.is_zero() {
                            c.push(r);
                        }
                    }
                }
                c
            })
            .collect();
        FreeVectorSearch {
            m,
            reals: ms.iter().map(DualMatrix::realify).collect(),
            eps: DualMatrix::eps_identity(m).realify(),
            candidates,
            idx: vec![0; ms.len()],
            tuples: 0,
            exhausted: false,
        }
    }

    /// Vectors deep in the image filtration come first: a common eigenvector
    /// outside `A V` can twist the quotient into an `εR` block.
    fn next_batch(&mut self) -> Option<Vec<(Vector, Vector)>> {
        if self.exhausted || self.tuples == MAX_TUPLES {
            return None;
        }
        self.tuples += 1;
        let m = self.m;
        let shifted: Vec<Matrix> = self
            .reals
            .iter()
            .zip(&self.idx)
            .zip(&self.candidates)
            .map(|((r, &i), c)| r - &self.eps.scale(&c[i]))
            .collect();
        let rows: Vec<Vector> = shifted.iter().flat_map(Matrix::row_vectors).collect();
        let common = Subspace::kernel_of(&Matrix::from_rows(2 * m, &rows).expect("rows of length 2m"));
        let mut ws: Vec<Vector> = Vec::new();
        for layer in image_filtration(&shifted, 2 * m).iter().rev() {
            let kernel = common.intersect(layer).expect("same ambient").basis_vectors();
            ws.extend(kernel.iter().cloned());
            for i in 0..kernel.len() {
                for j in i + 1..kernel.len() {
                    ws.push(kernel[i].iter().zip(&kernel[j]).map(|(a, b)| a + b).collect());
                }
            }
        }
        let mut found: Vec<(Vector, Vector)> = Vec::new();
        for w in &ws {
            let v0: Vector = (0..m).map(|j| w[2 * j + 1].clone()).collect();
            if v0.iter().all(Zero::is_zero) {
                continue;
            }
            let v = (v0, (0..m).map(|j| w[2 * j].clone()).collect());
            if !found.contains(&v) {
                found.push(v);
                if found.len() == MAX_BRANCH {
                    break;
                }
            }
        }
        self.advance();
        Some(found)
    }

    fn advance(&mut self) {
        for k in 0..self.idx.len() {
            self.idx[k] += 1;
            if self.idx[k] < self.candidates[k].len() {
                return;
            }
            self.idx[k] = 0;
        }
        self.exhausted = true;
    }
}

/// `V ⊇ A V ⊇ A² V ⊇ …` down to zero, `A` generated by the `shifted` maps.
fn image_filtration(shifted: &[Matrix], n: usize) -> Vec<Subspace> {
    let mut layers = vec![Subspace::full(n)];
    loop {
        let last = layers.last().expect("nonempty");
        let images: Vec<Vector> = last
            .basis_vectors()
            .iter()
            .flat_map(|b| shifted.iter().map(move |x| x.apply(b)))
            .collect();
        let next = Subspace::span(n, &images).expect("same ambient");
        if next.is_zero() || next == *last {
            return layers;
        }
        layers.push(next);
    }
}

fn random_rational(rng: &mut impl Rng) -> Rational {
    Rational::from_integer(rng.gen_range(-3i64..=3).into())
}

/// A bracket-closed set of strictly upper triangular `D₂` matrices of rank
/// `m` (the Lie closure of one to three random ones), conjugated by a random
/// `g` with invertible real part. Entries are uniform in `-3..=3`.
pub fn random_engel_instance(rng: &mut impl Rng, m: usize) -> Vec<DualMatrix> {
    let count = rng.gen_range(1..=3);
    let mut seeds = Vec::new();
    for _ in 0..count {
        let a = Matrix::from_fn(m, m, |i, j| if j > i { random_rational(rng) } else { Rational::zero() });
        let b = Matrix::from_fn(m, m, |i, j| if j > i { random_rational(rng) } else { Rational::zero() });
        seeds.push(DualMatrix::new(a, b).expect("square"));
    }
    let mut ech = Echelon::new();
    let mut basis: Vec<DualMatrix> = Vec::new();
    for s in seeds {
        if ech.insert(s.realify().entries()) {
            basis.push(s);
        }
    }
    let mut i = 0;
    while i < basis.len() {
        for j in 0..i {
            let c = basis[j].bracket(&basis[i]);
            if ech.insert(c.realify().entries()) {
                basis.push(c);
            }
        }
        i += 1;
    }
    let g = loop {
        let a = Matrix::from_fn(m, m, |_, _| random_rational(rng));
        let b = Matrix::from_fn(m, m, |_, _| random_rational(rng));
        if !a.determinant().expect("square").is_zero() {
            break DualMatrix::new(a, b).expect("square");
        }
    };
    let gi = g.inverse().expect("invertible");
    basis.iter().map(|x| &(&g * x) * &gi).collect()
}
