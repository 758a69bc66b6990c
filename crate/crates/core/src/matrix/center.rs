use super::{DenseMatrix, MatrixError};

/// Relative asymmetry below which a restricted operator is snapped to exact symmetry.
const SNAP_SYMMETRY: f64 = 1e-12;

/// Unit vector `w` of the Householder reflector `H = I − 2wwᵀ` that sends the
/// first standard basis vector to `1/√n`.
fn reflector(n: usize) -> Vec<f64> {
    let inv_sqrt = 1.0 / (n as f64).sqrt();
    let mut w = vec![-inv_sqrt; n];
    w[0] += 1.0;
    let norm = w.iter().map(|v| v * v).sum::<f64>().sqrt();
    w.iter_mut().for_each(|v| *v /= norm);
    w
}

/// The full reflector `H`. Its first column is `1/√n`; columns `1..n` form an
/// orthonormal basis of the complement of the all-ones vector.
pub fn householder_basis(n: usize) -> Result<DenseMatrix, MatrixError> {
    if n < 2 {
        return Err(MatrixError::InvalidDimension(n));
    }
    let w = reflector(n);
    DenseMatrix::from_fn(n, |i, j| {
        let delta = if i == j { 1.0 } else { 0.0 };
        delta - 2.0 * w[i] * w[j]
    })
}

/// `−P D P` with `P = I − J/n`, as a full `n × n` matrix.
pub fn centered(d: &DenseMatrix) -> DenseMatrix {
    let n = d.n();
    let inv = 1.0 / n as f64;
    let row_means: Vec<f64> = d.rows().map(|r| r.iter().sum::<f64>() * inv).collect();
    let mut col_means = vec![0.0; n];
    for r in d.rows() {
        for (c, v) in col_means.iter_mut().zip(r) {
            *c += v * inv;
        }
    }
    let grand = row_means.iter().sum::<f64>() * inv;
    DenseMatrix::from_fn(n, |i, j| -(d[(i, j)] - row_means[i] - col_means[j] + grand))
        .expect("centering keeps entries finite")
}

/// Restriction of `−P D P` to the complement of the all-ones vector, written in
/// the deterministic Householder basis: `R = Qᵀ(−PDP)Q` with `Q` the trailing
/// `n − 1` columns of [`householder_basis`].
///
/// Since the columns of `Q` are orthogonal to the all-ones vector, `PQ = Q` and
/// `R = −QᵀDQ`. The product is formed with two rank-one updates. When `D` is
/// symmetric the result is symmetrized exactly.
pub fn center_restrict(d: &DenseMatrix) -> Result<DenseMatrix, MatrixError> {
    let n = d.n();
    if n < 2 {
        return Err(MatrixError::InvalidDimension(n));
    }
    let w = reflector(n);

    // HD = D − 2 w (wᵀD)
    let mut wt_d = vec![0.0; n];
    for (i, row) in d.rows().enumerate() {
        for (acc, v) in wt_d.iter_mut().zip(row) {
            *acc += w[i] * v;
        }
    }
    let mut hd = DenseMatrix::from_fn(n, |i, j| d[(i, j)] - 2.0 * w[i] * wt_d[j])?;

    // (HD)H = HD − 2 (HD w) wᵀ
    let hd_w: Vec<f64> = hd.rows().map(|r| r.iter().zip(&w).map(|(a, b)| a * b).sum()).collect();
    for i in 0..n {
        for j in 0..n {
            hd[(i, j)] -= 2.0 * hd_w[i] * w[j];
        }
    }

    let r = hd.trailing_block(1)?.scale(-1.0);
    if d.asymmetry() <= SNAP_SYMMETRY * d.frobenius_norm() {
        Ok(r.symmetric_part())
    } else {
        Ok(r)
    }
}
