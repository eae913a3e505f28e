use std::ops::{Add, Mul, Neg};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{rat, zero_vector, Rational, Vector};

/// `re + i·im` with rational parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_i64(re: i64, im: i64) -> Self {
        Self::new(rat(re), rat(im))
    }

    pub fn zero() -> Self {
        Self::from_i64(0, 0)
    }

    pub fn one() -> Self {
        Self::from_i64(1, 0)
    }

    pub fn i() -> Self {
        Self::from_i64(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}

/// A complex Lie algebra with Gaussian-rational structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexAlgebraDef {
    pub name: String,
    pub labels: Vec<String>,
    /// `[x_i, x_j]` for `i < j`, as coefficients on the basis.
    pub brackets: Vec<((usize, usize), Vec<GaussianRational>)>,
}

impl ComplexAlgebraDef {
    pub fn new(name: &str, labels: &[&str]) -> Self {
        ComplexAlgebraDef {
            name: name.to_string(),
            labels: labels.iter().map(|s| s.to_string()).collect(),
            brackets: Vec::new(),
        }
    }

    /// Sets `[x_i, x_j]` for `i < j`.
    pub fn bracket(mut self, i: usize, j: usize, value: Vec<GaussianRational>) -> Self {
        self.brackets.push(((i, j), value));
        self
    }

    fn table(&self) -> Result<Vec<Vec<GaussianRational>>> {
        let n = self.labels.len();
        let mut t = vec![vec![GaussianRational::zero(); n]; n * n];
        for ((i, j), v) in &self.brackets {
            let (i, j) = (*i, *j);
            if i >= j || j >= n || v.len() != n {
                return Err(Error::Structure(format!(
                    "{}: bad complex bracket entry ({i}, {j})",
                    self.name
                )));
            }
            t[j * n + i] = v.iter().map(|c| -c).collect();
            t[i * n + j] = v.clone();
        }
        Ok(t)
    }
}

/// The underlying real algebra on `x_1, …, x_n, i·x_1, …, i·x_n`.
///
/// Validity of the complex constants is checked through the result: the
/// realification satisfies Jacobi exactly when the complex algebra does.
pub fn realify(cdef: &ComplexAlgebraDef) -> Result<LieAlgebra> {
    let n = cdef.labels.len();
    let table = cdef.table()?;
    let mut labels = cdef.labels.clone();
    labels.extend(cdef.labels.iter().map(|l| format!("i{l}")));
    let unit = |k: usize| if k < n { GaussianRational::one() } else { GaussianRational::i() };
    let l = LieAlgebra::from_table(
        format!("{}_real", cdef.name),
        labels,
        |a, b| {
            let scalar = &unit(a) * &unit(b);
            let mut v: Vector = zero_vector(2 * n);
            for (k, c) in table[(a % n) * n + (b % n)].iter().enumerate() {
                let z = &scalar * c;
                v[k] = z.re.clone();
                v[n + k] = z.im;
            }
            v
        },
        None,
        2,
    )?;
    if !l.validate().is_valid() {
        return Err(Error::Structure(format!(
            "{}: complex structure constants violate Jacobi",
            cdef.name
        )));
    }
    Ok(l)
}
