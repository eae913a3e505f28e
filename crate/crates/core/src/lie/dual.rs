use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{format_rational, sign, Matrix, Rational};

/// A square matrix `a + εb` over the dual numbers, acting on `D₂ᵐ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DualMatrix {
    a: Matrix,
    b: Matrix,
}

impl DualMatrix {
    pub fn new(a: Matrix, b: Matrix) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::NotSquare {
                rows: a.rows(),
                cols: a.cols(),
            });
        }
        if a.rows() != b.rows() || a.cols() != b.cols() {
            return Err(Error::DimensionMismatch {
                expected: a.rows(),
                found: b.rows(),
            });
        }
        Ok(DualMatrix { a, b })
    }

    pub fn zero(m: usize) -> Self {
        DualMatrix {
            a: Matrix::zeros(m, m),
            b: Matrix::zeros(m, m),
        }
    }

    pub fn identity(m: usize) -> Self {
        DualMatrix {
            a: Matrix::identity(m),
            b: Matrix::zeros(m, m),
        }
    }

    /// `ε·I`.
    pub fn eps_identity(m: usize) -> Self {
        DualMatrix {
            a: Matrix::zeros(m, m),
            b: Matrix::identity(m),
        }
    }

    pub fn real(a: Matrix) -> Result<Self> {
        let b = Matrix::zeros(a.rows(), a.cols());
        Self::new(a, b)
    }

    pub fn rank(&self) -> usize {
        self.a.rows()
    }

    pub fn real_part(&self) -> &Matrix {
        &self.a
    }

    pub fn eps_part(&self) -> &Matrix {
        &self.b
    }

    /// Entry `(i, j)` as `(real, eps)`.
    pub fn entry(&self, i: usize, j: usize) -> (&Rational, &Rational) {
        (&self.a[(i, j)], &self.b[(i, j)])
    }

    /// The `2m × 2m` real matrix with cell `[[a_ij, b_ij], [0, a_ij]]` at
    /// block `(i, j)`. A dual coordinate `u + εw` sits in the pair `(w, u)`.
    pub fn realify(&self) -> Matrix {
        let m = self.rank();
        let mut out = Matrix::zeros(2 * m, 2 * m);
        for i in 0..m {
            for j in 0..m {
                out[(2 * i, 2 * j)] = self.a[(i, j)].clone();
                out[(2 * i + 1, 2 * j + 1)] = self.a[(i, j)].clone();
                out[(2 * i, 2 * j + 1)] = self.b[(i, j)].clone();
            }
        }
        out
    }

    /// Inverse of [`DualMatrix::realify`]; fails unless every cell has the
    /// dual-number shape.
    pub fn from_realified(r: &Matrix) -> Result<Self> {
        if !r.is_square() || r.rows() % 2 != 0 {
            return Err(Error::NotD2Linear(format!(
                "{}x{} is not an even square shape",
                r.rows(),
                r.cols()
            )));
        }
        let m = r.rows() / 2;
        let mut a = Matrix::zeros(m, m);
        let mut b = Matrix::zeros(m, m);
        for i in 0..m {
            for j in 0..m {
                let x = &r[(2 * i, 2 * j)];
                if *x != r[(2 * i + 1, 2 * j + 1)] || !r[(2 * i + 1, 2 * j)].is_zero() {
                    return Err(Error::NotD2Linear(format!("cell ({i}, {j})")));
                }
                a[(i, j)] = x.clone();
                b[(i, j)] = r[(2 * i, 2 * j + 1)].clone();
            }
        }
        Ok(DualMatrix { a, b })
    }

    /// `(A + εB)⁻¹ = A⁻¹ - εA⁻¹BA⁻¹`; exists iff `A` is invertible.
    pub fn inverse(&self) -> Option<Self> {
        let ai = self.a.inverse()?;
        let b = -&(&(&ai * &self.b) * &ai);
        Some(DualMatrix { a: ai, b })
    }

    pub fn bracket(&self, other: &DualMatrix) -> DualMatrix {
        &(self * other) - &(other * self)
    }

    pub fn scale(&self, c: &Rational) -> DualMatrix {
        DualMatrix {
            a: self.a.scale(c),
            b: self.b.scale(c),
        }
    }

    /// Conjugate `g⁻¹ M g`; `None` if `g` is not invertible.
    pub fn conjugate_by(&self, g: &DualMatrix) -> Option<DualMatrix> {
        Some(&(&g.inverse()? * self) * g)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Upper triangular with every diagonal entry in `εℝ`.
    pub fn is_eps_triangular(&self) -> bool {
        let m = self.rank();
        (0..m).all(|i| {
            (0..=i).all(|j| {
                let below = j < i;
                self.a[(i, j)].is_zero() && (!below || self.b[(i, j)].is_zero())
            })
        })
    }
}

impl Mul for &DualMatrix {
    type Output = DualMatrix;
    fn mul(self, rhs: &DualMatrix) -> DualMatrix {
        DualMatrix {
            a: &self.a * &rhs.a,
            b: &(&self.a * &rhs.b) + &(&self.b * &rhs.a),
        }
    }
}

impl Add for &DualMatrix {
    type Output = DualMatrix;
    fn add(self, rhs: &DualMatrix) -> DualMatrix {
        DualMatrix {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Sub for &DualMatrix {
    type Output = DualMatrix;
    fn sub(self, rhs: &DualMatrix) -> DualMatrix {
        DualMatrix {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Neg for &DualMatrix {
    type Output = DualMatrix;
    fn neg(self) -> DualMatrix {
        DualMatrix {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

/// Formats `a + εb` as `a`, `be`, `a+be` or `a-be` (`e` standing for `ε`,
/// unit coefficient on `e` omitted).
pub fn format_dual(a: &Rational, b: &Rational) -> String {
    let eps = |c: &Rational| -> String {
        if c.is_one() {
            "e".to_string()
        } else if (-c).is_one() {
            "-e".to_string()
        } else {
            format!("{}e", format_rational(c))
        }
    };
    match (a.is_zero(), b.is_zero()) {
        (_, true) => format_rational(a),
        (true, false) => eps(b),
        (false, false) => {
            let e = eps(b);
            if sign(b) < 0 {
                format!("{}{}", format_rational(a), e)
            } else {
                format!("{}+{}", format_rational(a), e)
            }
        }
    }
}

impl fmt::Display for DualMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rank() {
            let row: Vec<String> = (0..self.rank())
                .map(|j| format_dual(&self.a[(i, j)], &self.b[(i, j)]))
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}
