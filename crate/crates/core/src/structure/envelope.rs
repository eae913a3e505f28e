use std::collections::VecDeque;

use num_traits::Zero;

use crate::linalg::{Matrix, Rational, Subspace, Vector};

/// Row-echelon accumulator for incremental span tests. Stored rows are
/// normalized at their pivot and reduced against all earlier pivots, so
/// reducing in insertion order eliminates every pivot column.
#[derive(Clone, Debug)]
pub(crate) struct Echelon {
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon {
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    fn reduce(&self, v: &mut [Rational]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = -v[p].clone();
            crate::linalg::axpy(v, &c, row);
        }
    }

    /// Adds `v` if it is independent of the rows so far.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        let mut r = v.to_vec();
        self.reduce(&mut r);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip();
        for x in r.iter_mut() {
            *x *= &inv;
        }
        self.rows.push(r);
        self.pivots.push(p);
        true
    }
}

fn flatten(m: &Matrix) -> Vector {
    m.entries().to_vec()
}

/// A basis of the associative algebra (without unit) generated by `gens`.
///
/// Breadth-first over products `g·a`: the span of the processed elements
/// contains the generators and is closed under left multiplication by
/// them, hence contains every word.
pub(crate) fn associative_envelope(gens: &[Matrix]) -> Vec<Matrix> {
    let mut ech = Echelon::new();
    let mut basis = Vec::new();
    let mut queue = VecDeque::new();
    for g in gens {
        if ech.insert(&flatten(g)) {
            basis.push(g.clone());
            queue.push_back(g.clone());
        }
    }
    while let Some(a) = queue.pop_front() {
        for g in gens {
            let p = g * &a;
            if ech.insert(&flatten(&p)) {
                basis.push(p.clone());
                queue.push_back(p);
            }
        }
    }
    basis
}

/// Coefficient vectors (in the given basis) spanning the trace-form radical
/// `{a : tr(ab) = 0 for all b}` of an associative matrix algebra.
pub(crate) fn trace_radical(basis: &[Matrix]) -> Vec<Vector> {
    let k = basis.len();
    let gram = Matrix::from_fn(k, k, |i, j| basis[i].trace_of_product(&basis[j]));
    gram.kernel()
}

pub(crate) fn combine_matrices(basis: &[Matrix], coeffs: &[Rational]) -> Matrix {
    let (r, c) = basis
        .first()
        .map(|m| (m.rows(), m.cols()))
        .unwrap_or((0, 0));
    let mut out = Matrix::zeros(r, c);
    for (m, x) in basis.iter().zip(coeffs) {
        if !x.is_zero() {
            out = &out + &m.scale(x);
        }
    }
    out
}

/// Matrix of `m` restricted to the invariant subspace `s`, in the canonical
/// basis of `s`; `None` if `s` is not invariant.
pub(crate) fn restrict_operator(m: &Matrix, s: &Subspace) -> Option<Matrix> {
    let cols = s
        .basis_vectors()
        .iter()
        .map(|b| s.coordinates(&m.apply(b)))
        .collect::<Option<Vec<_>>>()?;
    Some(Matrix::from_columns(s.dim(), &cols).expect("coordinate columns"))
}
