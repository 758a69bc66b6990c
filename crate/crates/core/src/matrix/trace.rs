use serde::Serialize;

use super::{sym_eigenvalues, DenseMatrix, MatrixError, DECISION_TOL};

/// Von Neumann bracket for `tr(AB)` with `A`, `B` symmetric.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TraceRange {
    /// Anti-sorted pairing `Σ λ_j μ_{n+1−j}`.
    pub lo: f64,
    /// Sorted pairing `Σ λ_j μ_j`.
    pub hi: f64,
    /// `tr(AB)`.
    pub tr: f64,
}

impl TraceRange {
    /// `lo − slack ≤ tr ≤ hi + slack`.
    pub fn contains_trace(&self, slack: f64) -> bool {
        self.lo - slack <= self.tr && self.tr <= self.hi + slack
    }
}

pub fn vn_trace_range(a: &DenseMatrix, b: &DenseMatrix) -> Result<TraceRange, MatrixError> {
    if a.n() != b.n() {
        return Err(MatrixError::DimensionMismatch(a.n(), b.n()));
    }
    let la = sym_eigenvalues(a, DECISION_TOL)?;
    let lb = sym_eigenvalues(b, DECISION_TOL)?;
    let (la, lb) = (la.values(), lb.values());
    let n = a.n();
    let hi = la.iter().zip(lb).map(|(x, y)| x * y).sum();
    let lo = la.iter().zip(lb.iter().rev()).map(|(x, y)| x * y).sum();
    let mut tr = 0.0;
    for i in 0..n {
        for k in 0..n {
            tr += a[(i, k)] * b[(k, i)];
        }
    }
    Ok(TraceRange { lo, hi, tr })
}
