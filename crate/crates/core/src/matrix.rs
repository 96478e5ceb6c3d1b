//! Dense complex matrices, the Hilbert-Schmidt inner/outer products and the
//! Pauli operator basis.
//!
//! Basis convention: |e⟩ = (1,0)ᵀ, |g⟩ = (0,1)ᵀ, so σ3 = diag(1,−1) and
//! σ− = |g⟩⟨e| carries its 1 in row 1, column 0.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Dense complex matrix with row-major storage.
///
/// Hermiticity and unit trace are checkable predicates, not constructor
/// requirements: the same type holds density operators, spin operators and
/// vectorized superoperators.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Builds from row-major entries; `entries.len()` must equal `rows * cols`.
    pub fn from_vec(rows: usize, cols: usize, entries: Vec<Complex64>) -> Self {
        assert_eq!(
            rows * cols,
            entries.len(),
            "entry count {} does not match {}x{}",
            entries.len(),
            rows,
            cols
        );
        Self { rows, cols, entries }
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Self::from_vec(nrows, ncols, rows.concat())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn shape_string(&self) -> String {
        format!("{}x{}", self.rows, self.cols)
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    pub fn conj(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(Complex64::conj).collect(),
        }
    }

    /// Conjugate transpose A†.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        assert!(self.is_square(), "trace of non-square matrix");
        (0..self.rows).map(|i| self[(i, i)]).sum()
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn scale_re(&self, factor: f64) -> Self {
        self.scale(Complex64::new(factor, 0.0))
    }

    /// Kronecker product, (A ⊗ B)[(i1·rB + i2, j1·cB + j2)] = A[i1,j1]·B[i2,j2].
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self[(i1, j1)];
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        out[(i1 * other.rows + i2, j1 * other.cols + j2)] = a * other[(i2, j2)];
                    }
                }
            }
        }
        out
    }

    /// Column-stacking vectorization: vec(ρ)[col·d + row] = ρ[row, col].
    pub fn vec_columns(&self) -> Vec<Complex64> {
        let mut v = Vec::with_capacity(self.rows * self.cols);
        for j in 0..self.cols {
            for i in 0..self.rows {
                v.push(self[(i, j)]);
            }
        }
        v
    }

    /// Inverse of [`vec_columns`](Self::vec_columns) for square matrices.
    pub fn from_vec_columns(dim: usize, v: &[Complex64]) -> Self {
        assert_eq!(v.len(), dim * dim, "vectorized length must be dim^2");
        let mut m = Self::zeros(dim, dim);
        for j in 0..dim {
            for i in 0..dim {
                m[(i, j)] = v[j * dim + i];
            }
        }
        m
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Maximum absolute column sum.
    pub fn one_norm(&self) -> f64 {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self[(i, j)].norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self.rows, self.cols) == (other.rows, other.cols) && self.max_abs_diff(other) <= tol
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.is_square() && self.max_abs_diff(&self.adjoint()) <= tol
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.max_abs() <= tol
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.entries[i * self.cols + j]
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in add");
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in sub");
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn neg(self) -> ComplexMatrix {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in mul");
        let mut out = ComplexMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl fmt::Display for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| format!("{:.4}{:+.4}i", self[(i, j)].re, self[(i, j)].im))
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

fn require_same_square(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<()> {
    if !a.is_square() || !b.is_square() || a.rows() != b.rows() {
        return Err(Error::Shape {
            expected: format!("square matrices of equal dimension, got {}", a.shape_string()),
            found: b.shape_string(),
        });
    }
    Ok(())
}

/// Hilbert-Schmidt inner product Tr{A†B}.
///
/// Conjugate-symmetric: `hs_inner(A, B) = conj(hs_inner(B, A))`.
pub fn hs_inner(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<Complex64> {
    require_same_square(a, b)?;
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            acc += a[(i, j)].conj() * b[(i, j)];
        }
    }
    Ok(acc)
}

/// Action of the outer product [A ⊗ B] on C: returns Tr{B†C}·A.
pub fn outer_apply(a: &ComplexMatrix, b: &ComplexMatrix, c: &ComplexMatrix) -> Result<ComplexMatrix> {
    if !a.is_square() {
        return Err(Error::Shape {
            expected: "square matrix".into(),
            found: a.shape_string(),
        });
    }
    let weight = hs_inner(b, c)?;
    Ok(a.scale(weight))
}

/// The four 2×2 Pauli matrices σ0 (identity), σ1, σ2, σ3.
#[derive(Debug, Clone)]
pub struct PauliBasis {
    matrices: [ComplexMatrix; 4],
}

impl PauliBasis {
    pub fn new() -> Self {
        Self {
            matrices: [sigma0(), sigma1(), sigma2(), sigma3()],
        }
    }

    pub fn sigma(&self, i: usize) -> &ComplexMatrix {
        &self.matrices[i]
    }

    pub fn matrices(&self) -> &[ComplexMatrix; 4] {
        &self.matrices
    }
}

impl Default for PauliBasis {
    fn default() -> Self {
        Self::new()
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn sigma0() -> ComplexMatrix {
    ComplexMatrix::identity(2)
}

pub fn sigma1() -> ComplexMatrix {
    ComplexMatrix::from_vec(2, 2, vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)])
}

pub fn sigma2() -> ComplexMatrix {
    ComplexMatrix::from_vec(2, 2, vec![c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0)])
}

pub fn sigma3() -> ComplexMatrix {
    ComplexMatrix::from_vec(2, 2, vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)])
}

/// Raising operator σ+ = |e⟩⟨g|.
pub fn sigma_plus() -> ComplexMatrix {
    ComplexMatrix::from_vec(2, 2, vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)])
}

/// Lowering operator σ− = |g⟩⟨e|.
pub fn sigma_minus() -> ComplexMatrix {
    ComplexMatrix::from_vec(2, 2, vec![c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)])
}

/// Excited-state projector σe = |e⟩⟨e| = diag(1, 0).
pub fn sigma_e() -> ComplexMatrix {
    ComplexMatrix::from_vec(2, 2, vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)])
}

/// Ground-state projector |g⟩⟨g| = diag(0, 1).
pub fn ground_projector() -> ComplexMatrix {
    ComplexMatrix::from_vec(2, 2, vec![c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)])
}

pub fn excited_projector() -> ComplexMatrix {
    sigma_e()
}

/// Expands a 2×2 matrix in the Pauli basis: A = Σ c_i σ_i with
/// c_i = Tr{σ_i A}/2.
pub fn pauli_expand(a: &ComplexMatrix) -> Result<[Complex64; 4]> {
    if a.rows() != 2 || a.cols() != 2 {
        return Err(Error::Shape {
            expected: "2x2".into(),
            found: a.shape_string(),
        });
    }
    let basis = PauliBasis::new();
    let mut coeffs = [Complex64::new(0.0, 0.0); 4];
    for (i, coeff) in coeffs.iter_mut().enumerate() {
        let sigma = basis.sigma(i);
        *coeff = hs_inner(sigma, a)? / hs_inner(sigma, sigma)?;
    }
    Ok(coeffs)
}

/// Rebuilds Σ c_i σ_i from Pauli coefficients.
pub fn pauli_reconstruct(coeffs: &[Complex64; 4]) -> ComplexMatrix {
    let basis = PauliBasis::new();
    let mut out = ComplexMatrix::zeros(2, 2);
    for (i, &coeff) in coeffs.iter().enumerate() {
        out = &out + &basis.sigma(i).scale(coeff);
    }
    out
}
