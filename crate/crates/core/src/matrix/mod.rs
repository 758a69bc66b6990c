//! Dense real matrices and the spectral primitives the bounds are built on.
//!
//! Everything here is real arithmetic on row-major `f64` storage. Matrices are
//! small (at most a few hundred rows in practice), so every routine is a plain
//! O(n³) dense algorithm.

mod center;
mod eigen;
mod trace;

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

pub use center::{center_restrict, centered, householder_basis};
pub use eigen::{
    antisym_spectrum, is_normal, is_psd, normal_complex_spectrum, sym_eigen, sym_eigenvalues, SymmetricEigen,
};
pub use trace::{vn_trace_range, TraceRange};

/// Default tolerance for yes/no predicates (symmetry, normality, PSD).
pub const DECISION_TOL: f64 = 1e-8;

/// Default relative tolerance for eigenvalue residuals.
pub const EIGEN_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MatrixError {
    #[error("invalid dimension {0}")]
    InvalidDimension(usize),
    #[error("row {row} has {len} entries, expected {expected}")]
    RaggedRows { row: usize, len: usize, expected: usize },
    #[error("entry ({row}, {col}) is not finite")]
    NonFinite { row: usize, col: usize },
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("matrix is not symmetric (asymmetry {asymmetry:.3e} exceeds {allowed:.3e})")]
    NotSymmetric { asymmetry: f64, allowed: f64 },
    #[error("matrix is not antisymmetric (deviation {deviation:.3e} exceeds {allowed:.3e})")]
    NotAntisymmetric { deviation: f64, allowed: f64 },
    #[error("matrix is not normal (commutator norm {commutator:.3e} exceeds {allowed:.3e})")]
    NotNormal { commutator: f64, allowed: f64 },
}

/// Square real matrix with row-major storage and finite entries.
#[derive(Clone, PartialEq, Serialize)]
pub struct DenseMatrix {
    n: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(n: usize) -> Result<Self, MatrixError> {
        if n == 0 {
            return Err(MatrixError::InvalidDimension(n));
        }
        Ok(Self {
            n,
            data: vec![0.0; n * n],
        })
    }

    pub fn identity(n: usize) -> Result<Self, MatrixError> {
        let mut m = Self::zeros(n)?;
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        Ok(m)
    }

    /// Builds a matrix entry by entry. Fails if any produced value is not finite.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Result<Self, MatrixError> {
        if n == 0 {
            return Err(MatrixError::InvalidDimension(n));
        }
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let v = f(i, j);
                if !v.is_finite() {
                    return Err(MatrixError::NonFinite { row: i, col: j });
                }
                data.push(v);
            }
        }
        Ok(Self { n, data })
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self, MatrixError> {
        let n = rows.len();
        for (i, r) in rows.iter().enumerate() {
            if r.as_ref().len() != n {
                return Err(MatrixError::RaggedRows {
                    row: i,
                    len: r.as_ref().len(),
                    expected: n,
                });
            }
        }
        Self::from_fn(n, |i, j| rows[i].as_ref()[j])
    }

    pub fn from_row_major(n: usize, data: Vec<f64>) -> Result<Self, MatrixError> {
        if n == 0 {
            return Err(MatrixError::InvalidDimension(n));
        }
        if data.len() != n * n {
            return Err(MatrixError::DimensionMismatch(data.len(), n * n));
        }
        if let Some(k) = data.iter().position(|v| !v.is_finite()) {
            return Err(MatrixError::NonFinite { row: k / n, col: k % n });
        }
        Ok(Self { n, data })
    }

    pub fn diagonal(values: &[f64]) -> Result<Self, MatrixError> {
        let n = values.len();
        Self::from_fn(n, |i, j| if i == j { values[i] } else { 0.0 })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.data.chunks_exact(self.n)
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.rows().map(<[f64]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                data[j * n + i] = self.data[i * n + j];
            }
        }
        Self { n, data }
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self {
            n: self.n,
            data: self.data.iter().map(|v| v * factor).collect(),
        }
    }

    /// Applies `f` to every entry. Panics if the result is not finite.
    pub fn map(&self, f: impl Fn(f64) -> f64) -> Self {
        let data: Vec<f64> = self.data.iter().map(|&v| f(v)).collect();
        assert!(data.iter().all(|v| v.is_finite()), "map produced a non-finite entry");
        Self { n: self.n, data }
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// `max(1, ‖self‖_F)`, the scale used by every hybrid tolerance.
    pub fn scale_factor(&self) -> f64 {
        self.frobenius_norm().max(1.0)
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.data[i * self.n + i]).sum()
    }

    pub fn sum(&self) -> f64 {
        self.data.iter().sum()
    }

    pub fn row_sums(&self) -> Vec<f64> {
        self.rows().map(|r| r.iter().sum()).collect()
    }

    /// Frobenius norm of `self - selfᵀ`.
    pub fn asymmetry(&self) -> f64 {
        let n = self.n;
        let mut acc = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                let d = self.data[i * n + j] - self.data[j * n + i];
                acc += 2.0 * d * d;
            }
        }
        acc.sqrt()
    }

    /// True when `‖A − Aᵀ‖_F ≤ tol·max(1, ‖A‖_F)`.
    pub fn is_symmetric(&self, tol: f64) -> bool {
        self.asymmetry() <= tol * self.scale_factor()
    }

    pub fn ensure_symmetric(&self, tol: f64) -> Result<(), MatrixError> {
        let asymmetry = self.asymmetry();
        let allowed = tol * self.scale_factor();
        if asymmetry <= allowed {
            Ok(())
        } else {
            Err(MatrixError::NotSymmetric { asymmetry, allowed })
        }
    }

    /// `(A + Aᵀ)/2`
    pub fn symmetric_part(&self) -> Self {
        let t = self.transpose();
        Self {
            n: self.n,
            data: self.data.iter().zip(&t.data).map(|(a, b)| 0.5 * (a + b)).collect(),
        }
    }

    /// `(A − Aᵀ)/2`
    pub fn antisymmetric_part(&self) -> Self {
        let t = self.transpose();
        Self {
            n: self.n,
            data: self.data.iter().zip(&t.data).map(|(a, b)| 0.5 * (a - b)).collect(),
        }
    }

    pub fn matmul(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.n != other.n {
            return Err(MatrixError::DimensionMismatch(self.n, other.n));
        }
        let n = self.n;
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            let out_row = &mut out[i * n..(i + 1) * n];
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0.0 {
                    continue;
                }
                let b_row = &other.data[k * n..(k + 1) * n];
                for (o, b) in out_row.iter_mut().zip(b_row) {
                    *o += a * b;
                }
            }
        }
        Ok(Self { n, data: out })
    }

    /// `PᵀAP` for a permutation given as `perm[i] = image of i`; entry `(i, j)`
    /// of the result is `A[perm[i], perm[j]]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let n = self.n;
        let mut data = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                data[i * n + j] = self.data[perm[i] * n + perm[j]];
            }
        }
        Self { n, data }
    }

    /// Square sub-block starting at `(offset, offset)`.
    pub fn trailing_block(&self, offset: usize) -> Result<Self, MatrixError> {
        if offset >= self.n {
            return Err(MatrixError::InvalidDimension(self.n - offset.min(self.n)));
        }
        let m = self.n - offset;
        Self::from_fn(m, |i, j| self[(i + offset, j + offset)])
    }
}

impl Index<(usize, usize)> for DenseMatrix {
    type Output = f64;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for DenseMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.n + j]
    }
}

impl Add for &DenseMatrix {
    type Output = DenseMatrix;

    fn add(self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch in matrix addition");
        DenseMatrix {
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &DenseMatrix {
    type Output = DenseMatrix;

    fn sub(self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch in matrix subtraction");
        DenseMatrix {
            n: self.n,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &DenseMatrix {
    type Output = DenseMatrix;

    fn mul(self, rhs: &DenseMatrix) -> DenseMatrix {
        self.matmul(rhs).expect("dimension mismatch in matrix product")
    }
}

impl fmt::Debug for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "DenseMatrix({}x{}) [", self.n, self.n)?;
        for row in self.rows() {
            write!(f, "  ")?;
            for v in row {
                write!(f, "{v:>12.6} ")?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Real eigenvalues sorted in non-increasing order, multiplicities kept.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Spectrum(Vec<f64>);

impl Spectrum {
    /// Sorts `values` into non-increasing order.
    pub fn from_unsorted(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Self(values)
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.0.iter().sum()
    }

    pub fn min(&self) -> Option<f64> {
        self.0.last().copied()
    }

    pub fn max(&self) -> Option<f64> {
        self.0.first().copied()
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }
}

/// Possibly complex eigenvalues of a real normal matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSpectrum(Vec<Complex64>);

impl ComplexSpectrum {
    pub fn new(values: Vec<Complex64>) -> Self {
        Self(values)
    }

    pub fn values(&self) -> &[Complex64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Checks that non-real values come in conjugate pairs of equal
    /// multiplicity, matching values within `tol`.
    pub fn is_conjugate_closed(&self, tol: f64) -> bool {
        let mut unmatched: Vec<Complex64> = self.0.iter().copied().filter(|z| z.im.abs() > tol).collect();
        while let Some(z) = unmatched.pop() {
            let target = z.conj();
            match unmatched.iter().position(|w| (w - target).norm() <= tol) {
                Some(k) => {
                    unmatched.swap_remove(k);
                }
                None => return false,
            }
        }
        true
    }
}

impl Serialize for ComplexSpectrum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for z in &self.0 {
            seq.serialize_element(&[z.re, z.im])?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_non_finite() {
        assert_eq!(DenseMatrix::zeros(0), Err(MatrixError::InvalidDimension(0)));
        let err = DenseMatrix::from_rows(&[[0.0, f64::NAN], [1.0, 0.0]]).unwrap_err();
        assert_eq!(err, MatrixError::NonFinite { row: 0, col: 1 });
        let err = DenseMatrix::from_rows(&[vec![0.0, 1.0], vec![1.0]]).unwrap_err();
        assert!(matches!(err, MatrixError::RaggedRows { row: 1, .. }));
    }

    #[test]
    fn symmetric_and_antisymmetric_parts_recombine() {
        let a = DenseMatrix::from_rows(&[[1.0, 2.0, 3.0], [4.0, 5.0, 6.0], [7.0, 8.0, 10.0]]).unwrap();
        let back = &a.symmetric_part() + &a.antisymmetric_part();
        assert_eq!(back, a);
        assert!(a.symmetric_part().is_symmetric(0.0));
        assert!(!a.is_symmetric(1e-8));
    }

    #[test]
    fn permuted_matches_index_mapping() {
        let a = DenseMatrix::from_fn(3, |i, j| (3 * i + j) as f64).unwrap();
        let p = a.permuted(&[2, 0, 1]);
        assert_eq!(p[(0, 0)], a[(2, 2)]);
        assert_eq!(p[(0, 1)], a[(2, 0)]);
        assert_eq!(p[(1, 2)], a[(0, 1)]);
    }

    #[test]
    fn conjugate_closure() {
        let z = Complex64::new(1.0, 2.0);
        assert!(ComplexSpectrum::new(vec![z, z.conj(), Complex64::new(3.0, 0.0)]).is_conjugate_closed(1e-12));
        assert!(!ComplexSpectrum::new(vec![z, z]).is_conjugate_closed(1e-12));
    }
}
