//! Cyclic Jacobi eigensolver and the spectral routines layered on it.
//!
//! Jacobi is slower than tridiagonal QL by a constant factor but is accurate
//! to working precision for every real symmetric matrix, needs no shifts and
//! is bit-for-bit deterministic, which is what the bound computations need.

use num_complex::Complex64;

use super::{ComplexSpectrum, DenseMatrix, MatrixError, Spectrum};

const MAX_SWEEPS: usize = 100;

/// Eigenvalues in non-increasing order with matching orthonormal eigenvectors
/// (column `k` of `vectors` belongs to `values[k]`).
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    pub values: Spectrum,
    pub vectors: DenseMatrix,
}

impl SymmetricEigen {
    pub fn vector(&self, k: usize) -> Vec<f64> {
        let n = self.vectors.n();
        (0..n).map(|i| self.vectors[(i, k)]).collect()
    }
}

/// Jacobi rotations on an exactly symmetric matrix. Returns unsorted
/// eigenvalues and the accumulated rotation matrix.
fn jacobi(s: &DenseMatrix) -> (Vec<f64>, DenseMatrix) {
    let n = s.n();
    let mut a = s.clone();
    let mut v = DenseMatrix::identity(n).expect("n >= 1");

    for sweep in 0..MAX_SWEEPS {
        let mut off = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off += a[(p, q)] * a[(p, q)];
            }
        }
        if off == 0.0 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let app = a[(p, p)];
                let aqq = a[(q, q)];
                let g = 100.0 * apq.abs();
                // negligible against both diagonal entries: drop it
                if sweep > 3 && app.abs() + g == app.abs() && aqq.abs() + g == aqq.abs() {
                    a[(p, q)] = 0.0;
                    a[(q, p)] = 0.0;
                    continue;
                }
                let h = aqq - app;
                let t = if h.abs() + g == h.abs() {
                    apq / h
                } else {
                    let theta = 0.5 * h / apq;
                    let t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
                    if theta < 0.0 {
                        -t
                    } else {
                        t
                    }
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let sn = t * c;
                rotate(&mut a, &mut v, p, q, c, sn);
            }
        }
    }

    let values = (0..n).map(|i| a[(i, i)]).collect();
    (values, v)
}

/// Applies the similarity `JᵀAJ` for the plane rotation `(p, q, c, s)`.
fn rotate(a: &mut DenseMatrix, v: &mut DenseMatrix, p: usize, q: usize, c: f64, s: f64) {
    let n = a.n();
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = c * akp - s * akq;
        a[(k, q)] = s * akp + c * akq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = c * apk - s * aqk;
        a[(q, k)] = s * apk + c * aqk;
    }
    a[(p, q)] = 0.0;
    a[(q, p)] = 0.0;
    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = c * vkp - s * vkq;
        v[(k, q)] = s * vkp + c * vkq;
    }
}

/// Full symmetric eigendecomposition. `s` must be symmetric within
/// `tol·max(1, ‖s‖_F)`; it is symmetrized before the rotations start.
pub fn sym_eigen(s: &DenseMatrix, tol: f64) -> Result<SymmetricEigen, MatrixError> {
    s.ensure_symmetric(tol)?;
    let sym = if s.asymmetry() == 0.0 {
        s.clone()
    } else {
        s.symmetric_part()
    };
    let (values, rot) = jacobi(&sym);

    let n = s.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| values[j].total_cmp(&values[i]));
    let vectors = DenseMatrix::from_fn(n, |i, k| rot[(i, order[k])])?;
    let values = Spectrum(order.iter().map(|&k| values[k]).collect());
    Ok(SymmetricEigen { values, vectors })
}

/// All eigenvalues of a symmetric matrix, non-increasing.
pub fn sym_eigenvalues(s: &DenseMatrix, tol: f64) -> Result<Spectrum, MatrixError> {
    sym_eigen(s, tol).map(|e| e.values)
}

/// Real spectrum of `−iK` for a real antisymmetric `K`: values `±θ_j`, plus
/// one zero when the dimension is odd, sorted non-increasing.
///
/// `θ_j` are the singular values of `K`. They are read off the symmetric
/// real form `[[0, K], [−K, 0]]` of the Hermitian matrix `−iK`, whose
/// spectrum is that of `−iK` with every multiplicity doubled. The output is
/// made exactly sign-symmetric: `values[i] == -values[n - 1 - i]`.
pub fn antisym_spectrum(k: &DenseMatrix, tol: f64) -> Result<Spectrum, MatrixError> {
    let n = k.n();
    let sym_dev = k.symmetric_part().frobenius_norm();
    let allowed = tol * k.scale_factor();
    if sym_dev > allowed {
        return Err(MatrixError::NotAntisymmetric {
            deviation: sym_dev,
            allowed,
        });
    }
    let k = k.antisymmetric_part();
    let big = DenseMatrix::from_fn(2 * n, |i, j| match (i < n, j < n) {
        (true, false) => k[(i, j - n)],
        (false, true) => -k[(i - n, j)],
        _ => 0.0,
    })?;
    let doubled = sym_eigenvalues(&big, 0.0)?;
    let halved: Vec<f64> = doubled.values().iter().step_by(2).copied().collect();

    let mut out = vec![0.0; n];
    for i in 0..n / 2 {
        let theta = 0.5 * (halved[i] - halved[n - 1 - i]);
        out[i] = theta;
        out[n - 1 - i] = -theta;
    }
    Ok(Spectrum(out))
}

/// `‖MMᵀ − MᵀM‖_F ≤ tol·max(1, ‖M‖_F²)`.
pub fn is_normal(m: &DenseMatrix, tol: f64) -> bool {
    let (commutator, scale) = normality_defect(m);
    commutator <= tol * scale
}

fn normality_defect(m: &DenseMatrix) -> (f64, f64) {
    let mt = m.transpose();
    let commutator = &(m * &mt) - &(&mt * m);
    let fro = m.frobenius_norm();
    (commutator.frobenius_norm(), (fro * fro).max(1.0))
}

/// Positive semidefiniteness: smallest eigenvalue `≥ −tol·max(1, ‖S‖_F)`.
pub fn is_psd(s: &DenseMatrix, tol: f64) -> Result<bool, MatrixError> {
    let spectrum = sym_eigenvalues(s, tol)?;
    let floor = -tol * s.scale_factor();
    Ok(spectrum.min().is_some_and(|m| m >= floor))
}

/// Eigenvalues of a real normal matrix by simultaneous diagonalization.
///
/// The symmetric part `S = (M + Mᵀ)/2` is diagonalized first. Eigenvalues of
/// `S` closer than `1e−8·‖S‖_F` are grouped; on each group's eigenspace the
/// antisymmetric part restricts to a small antisymmetric block whose
/// spectrum supplies the imaginary parts. Each eigenvalue is `s + iθ`.
pub fn normal_complex_spectrum(m: &DenseMatrix, tol: f64) -> Result<ComplexSpectrum, MatrixError> {
    let (commutator, scale) = normality_defect(m);
    if commutator > tol * scale {
        return Err(MatrixError::NotNormal {
            commutator,
            allowed: tol * scale,
        });
    }
    let n = m.n();
    let eig = sym_eigen(&m.symmetric_part(), 0.0)?;
    let anti = m.antisymmetric_part();
    let gap = 1e-8 * m.symmetric_part().frobenius_norm();
    let values = eig.values.values();

    let mut out = Vec::with_capacity(n);
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && values[end - 1] - values[end] <= gap {
            end += 1;
        }
        let size = end - start;
        let real = values[start..end].iter().sum::<f64>() / size as f64;
        if size == 1 {
            out.push(Complex64::new(real, 0.0));
        } else {
            // block = Vᵀ A V on the group's eigenspace
            let block = DenseMatrix::from_fn(size, |a, b| {
                let (ca, cb) = (start + a, start + b);
                let mut acc = 0.0;
                for i in 0..n {
                    let vi = eig.vectors[(i, ca)];
                    if vi == 0.0 {
                        continue;
                    }
                    for j in 0..n {
                        acc += vi * anti[(i, j)] * eig.vectors[(j, cb)];
                    }
                }
                acc
            })?;
            let imag = antisym_spectrum(&block.antisymmetric_part(), 0.0)?;
            out.extend(imag.values().iter().map(|&im| Complex64::new(real, im)));
        }
        start = end;
    }
    Ok(ComplexSpectrum(out))
}
