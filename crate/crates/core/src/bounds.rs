//! Eigenvalue lower bounds on the optimal tour length.
//!
//! All bounds share one pipeline: restrict `−PDP` to the complement of the
//! all-ones vector ([`center_restrict`]), take its spectrum, and pair the
//! eigenvalues with the spectrum of the `N`-cycle. For symmetric `D` the
//! pairing is the sorted one ([`phi_symmetric`]). For asymmetric `D` there are
//! two variants: [`phi_normal`] when the restricted matrix is normal, and
//! [`phi_general`] which splits it into Hermitian and anti-Hermitian parts.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use crate::assignment;
use crate::matrix::{
    antisym_spectrum, center_restrict, centered, is_normal, is_psd, normal_complex_spectrum, sym_eigenvalues,
    ComplexSpectrum, DenseMatrix, MatrixError, Spectrum, DECISION_TOL,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BoundError {
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("need at least {min} cities, got {n}")]
    TooFewCities { n: usize, min: usize },
    #[error("diagonal entry {index} is {value}, expected 0")]
    NonzeroDiagonal { index: usize, value: f64 },
    #[error("negative entry ({row}, {col}) = {value} in a distance matrix")]
    NegativeEntry { row: usize, col: usize, value: f64 },
}

/// The cycle coefficients `1 − cos(2πk/N)`, `k = 1..N−1`, ascending.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoefficientList {
    n: usize,
    c: Vec<f64>,
}

impl CoefficientList {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[f64] {
        &self.c
    }
}

pub fn tsp_coefficients(n: usize) -> Result<CoefficientList, BoundError> {
    if n < 2 {
        return Err(BoundError::TooFewCities { n, min: 2 });
    }
    let mut c: Vec<f64> = (1..n).map(|k| 1.0 - (2.0 * PI * k as f64 / n as f64).cos()).collect();
    c.sort_by(f64::total_cmp);
    Ok(CoefficientList { n, c })
}

/// `Σ a_k b_{σ(k)}` minimized over `σ`: pair `a` ascending with `b` descending.
pub fn min_pairing(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(f64::total_cmp);
    b.sort_by(|x, y| y.total_cmp(x));
    a.iter().zip(&b).map(|(x, y)| x * y).sum()
}

fn check_dimension(d: &DenseMatrix, min: usize) -> Result<(), BoundError> {
    if d.n() < min {
        return Err(BoundError::TooFewCities { n: d.n(), min });
    }
    Ok(())
}

fn check_zero_diagonal(d: &DenseMatrix) -> Result<(), BoundError> {
    for i in 0..d.n() {
        let value = d[(i, i)];
        if value != 0.0 {
            return Err(BoundError::NonzeroDiagonal { index: i, value });
        }
    }
    Ok(())
}

/// `φ(D)` together with the spectrum it was computed from.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SymmetricBound {
    pub value: f64,
    /// Eigenvalues `μ_1 ≥ … ≥ μ_{N−1}` of the restricted `−PDP`.
    pub mu: Spectrum,
}

/// `φ(D) = Σ c_k μ_k` for symmetric `D` with zero diagonal.
pub fn phi_symmetric(d: &DenseMatrix) -> Result<f64, BoundError> {
    phi_symmetric_detail(d, DECISION_TOL).map(|b| b.value)
}

pub fn phi_symmetric_detail(d: &DenseMatrix, tol: f64) -> Result<SymmetricBound, BoundError> {
    check_dimension(d, 2)?;
    d.ensure_symmetric(tol)?;
    check_zero_diagonal(d)?;
    let mu = sym_eigenvalues(&center_restrict(d)?, tol)?;
    let c = tsp_coefficients(d.n())?;
    let value: f64 = c.values().iter().zip(mu.values()).map(|(c, m)| c * m).sum();

    debug_assert!({
        let parity = phi_parity_form(&mu);
        let scale: f64 = c.values().iter().zip(mu.values()).map(|(c, m)| (c * m).abs()).sum();
        (parity - value).abs() <= 1e-9 * scale.max(1.0)
    });
    Ok(SymmetricBound { value, mu })
}

/// The same sum written with paired eigenvalues: for odd `N`,
/// `Σ_{k=1}^{(N−1)/2} (1 − cos(2πk/N))(μ_{2k−1} + μ_{2k})`; for even `N` the
/// sum runs to `N/2 − 1` and picks up `2μ_{N−1}`.
pub fn phi_parity_form(mu: &Spectrum) -> f64 {
    let m = mu.values();
    let n = m.len() + 1;
    let half = if n % 2 == 1 { (n - 1) / 2 } else { n / 2 - 1 };
    let mut total = 0.0;
    for k in 1..=half {
        let coeff = 1.0 - (2.0 * PI * k as f64 / n as f64).cos();
        total += coeff * (m[2 * k - 2] + m[2 * k - 1]);
    }
    if n.is_multiple_of(2) {
        total += 2.0 * m[n - 2];
    }
    total
}

/// Bound for asymmetric `D` whose restricted `−PDP` is normal.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NormalBound {
    pub value: f64,
    /// Complex eigenvalues `ϖ` of the restricted `−PDP`.
    pub eigenvalues: ComplexSpectrum,
    /// `assignment[j − 1] = k`: cycle index `j` is paired with `eigenvalues[k]`.
    pub assignment: Vec<usize>,
}

/// `min_σ Σ_j Re((1 − e^{2πij/N}) ϖ_{σ(j)})`, solved exactly as a linear
/// assignment over the `(N−1)²` pairings.
pub fn phi_normal(d: &DenseMatrix) -> Result<NormalBound, BoundError> {
    phi_normal_with_tol(d, DECISION_TOL)
}

pub fn phi_normal_with_tol(d: &DenseMatrix, tol: f64) -> Result<NormalBound, BoundError> {
    check_dimension(d, 2)?;
    check_zero_diagonal(d)?;
    let r = center_restrict(d)?;
    let eigenvalues = normal_complex_spectrum(&r, tol)?;
    let n = d.n();
    let m = n - 1;
    let mut cost = Vec::with_capacity(m * m);
    for j in 1..n {
        let angle = 2.0 * PI * j as f64 / n as f64;
        let weight = Complex64::new(1.0 - angle.cos(), -angle.sin());
        for w in eigenvalues.values() {
            cost.push((weight * w).re);
        }
    }
    let solution = assignment::solve(m, &cost);
    Ok(NormalBound {
        value: solution.cost,
        eigenvalues,
        assignment: solution.row_to_col,
    })
}

/// Bound valid for any `D`, split into Hermitian and anti-Hermitian terms.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GeneralBound {
    pub value: f64,
    pub hermitian_term: f64,
    pub antihermitian_term: f64,
    /// Eigenvalues of the Hermitian part of the restricted `−PDP`.
    pub mu_hermitian: Spectrum,
    /// Eigenvalues of the anti-Hermitian part, i.e. of `−iK` with `K` the
    /// antisymmetric part of the restricted `−PDP`.
    pub mu_antihermitian: Spectrum,
}

/// `min_π Σ (1 − cos(2πj/N)) μᴴ_{π(j)} + min_ρ Σ sin(2πj/N) μᴬᴴ_{ρ(j)}`.
/// Each term is minimized on its own by the rearrangement rule.
pub fn phi_general(d: &DenseMatrix) -> Result<GeneralBound, BoundError> {
    check_dimension(d, 2)?;
    check_zero_diagonal(d)?;
    let r = center_restrict(d)?;
    let mu_hermitian = sym_eigenvalues(&r.symmetric_part(), 0.0)?;
    let mu_antihermitian = antisym_spectrum(&r.antisymmetric_part(), 0.0)?;

    let n = d.n();
    let angles: Vec<f64> = (1..n).map(|j| 2.0 * PI * j as f64 / n as f64).collect();
    let cos_coeffs: Vec<f64> = angles.iter().map(|a| 1.0 - a.cos()).collect();
    let sin_coeffs: Vec<f64> = angles.iter().map(|a| a.sin()).collect();
    let hermitian_term = min_pairing(&cos_coeffs, mu_hermitian.values());
    let antihermitian_term = min_pairing(&sin_coeffs, mu_antihermitian.values());
    Ok(GeneralBound {
        value: hermitian_term + antihermitian_term,
        hermitian_term,
        antihermitian_term,
        mu_hermitian,
        mu_antihermitian,
    })
}

/// Half the sum over cities of the two smallest distances leaving each city.
pub fn n2_bound(d: &DenseMatrix) -> Result<f64, BoundError> {
    check_dimension(d, 3)?;
    d.ensure_symmetric(DECISION_TOL)?;
    let mut total = 0.0;
    for (j, row) in d.rows().enumerate() {
        let (mut first, mut second) = (f64::INFINITY, f64::INFINITY);
        for (k, &v) in row.iter().enumerate() {
            if k == j {
                continue;
            }
            if v < first {
                second = first;
                first = v;
            } else if v < second {
                second = v;
            }
        }
        total += first + second;
    }
    Ok(0.5 * total)
}

/// Mean over all `N²` entries, diagonal included.
pub fn mean_distance(d: &DenseMatrix) -> f64 {
    d.sum() / (d.n() * d.n()) as f64
}

/// `N(1 − cos(2π/N))·D̄`, a floor for `φ(D)` whenever the restricted `−PDP`
/// is positive semidefinite.
pub fn euclidean_floor(d: &DenseMatrix) -> Result<f64, BoundError> {
    check_dimension(d, 2)?;
    d.ensure_symmetric(DECISION_TOL)?;
    check_zero_diagonal(d)?;
    let n = d.n() as f64;
    Ok(n * (1.0 - (2.0 * PI / n).cos()) * mean_distance(d))
}

/// Schoenberg test: a symmetric `E` with zero diagonal is a matrix of squared
/// Euclidean distances iff `−PEP` is positive semidefinite.
pub fn schoenberg_edm_check(e: &DenseMatrix, tol: f64) -> Result<bool, BoundError> {
    e.ensure_symmetric(tol)?;
    check_zero_diagonal(e)?;
    for (i, row) in e.rows().enumerate() {
        if let Some(j) = row.iter().position(|&v| v < -tol) {
            return Err(BoundError::NegativeEntry {
                row: i,
                col: j,
                value: row[j],
            });
        }
    }
    Ok(is_psd(&centered(e), tol)?)
}

/// Every bound and diagnostic for one distance matrix.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub phi_symmetric: Option<f64>,
    pub phi_normal: Option<f64>,
    /// Cycle-index to eigenvalue assignment chosen for `phi_normal`.
    pub normal_assignment: Option<Vec<usize>>,
    pub phi_general: f64,
    /// Absent for fewer than three cities or asymmetric input.
    pub n2: Option<f64>,
    pub euclidean_floor: Option<f64>,
    /// Spectrum of the (Hermitian part of the) restricted `−PDP`.
    pub mu: Spectrum,
    pub mean_distance: f64,
    pub psd: bool,
    pub normal: bool,
    pub symmetric: bool,
}

impl BoundReport {
    /// The strongest bound available: `phi_symmetric` when defined, else the
    /// larger of `phi_normal` and `phi_general`.
    pub fn best(&self) -> f64 {
        match self.phi_symmetric {
            Some(v) => v,
            None => self.phi_normal.map_or(self.phi_general, |v| v.max(self.phi_general)),
        }
    }
}

pub fn report(d: &DenseMatrix) -> Result<BoundReport, BoundError> {
    report_with_tol(d, DECISION_TOL)
}

/// [`report`] with a caller-chosen tolerance for the symmetric, normal and
/// PSD decisions.
pub fn report_with_tol(d: &DenseMatrix, tol: f64) -> Result<BoundReport, BoundError> {
    check_dimension(d, 2)?;
    check_zero_diagonal(d)?;
    let symmetric = d.is_symmetric(tol);
    let r = center_restrict(d)?;
    let normal = is_normal(&r, tol);
    let general = phi_general(d)?;

    let (phi_symmetric, mu, n2, floor) = if symmetric {
        let sym = phi_symmetric_detail(d, tol)?;
        let n2 = if d.n() >= 3 { Some(n2_bound(d)?) } else { None };
        (Some(sym.value), sym.mu, n2, Some(euclidean_floor(d)?))
    } else {
        (None, general.mu_hermitian.clone(), None, None)
    };
    let psd = mu.min().is_some_and(|m| m >= -tol * r.scale_factor());
    let (phi_normal, normal_assignment) = if normal {
        let nb = phi_normal_with_tol(d, tol)?;
        (Some(nb.value), Some(nb.assignment))
    } else {
        (None, None)
    };

    Ok(BoundReport {
        n: d.n(),
        phi_symmetric,
        phi_normal,
        normal_assignment,
        phi_general: general.value,
        n2,
        euclidean_floor: floor,
        mu,
        mean_distance: mean_distance(d),
        psd,
        normal,
        symmetric,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{
        circle_instance, line_instance, random_asymmetric, random_euclidean, random_symmetric, two_cluster,
        uniform_instance,
    };

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn coefficients_small_n() {
        let c4 = tsp_coefficients(4).unwrap();
        let expected = [1.0, 1.0, 2.0];
        assert!(c4.values().iter().zip(expected).all(|(a, b)| close(*a, b, 1e-15)));
        let c3 = tsp_coefficients(3).unwrap();
        assert!(c3.values().iter().all(|v| close(*v, 1.5, 1e-15)));
        // 1 − cos(2π/5) and 1 − cos(4π/5), each twice
        let c5 = tsp_coefficients(5).unwrap();
        let expected = [
            0.690_983_005_625_052_4,
            0.690_983_005_625_052_4,
            1.809_016_994_374_947_5,
            1.809_016_994_374_947_5,
        ];
        assert!(c5.values().iter().zip(expected).all(|(a, b)| close(*a, b, 1e-15)));
        assert!(tsp_coefficients(1).is_err());
    }

    #[test]
    fn coefficients_sum_to_n() {
        for n in 2..200 {
            let c = tsp_coefficients(n).unwrap();
            let s: f64 = c.values().iter().sum();
            assert!(close(s, n as f64, 1e-12 * n as f64), "n={n} sum={s}");
            assert!(c.values().windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn uniform_bound_is_n() {
        assert!(close(phi_symmetric(&uniform_instance(8)).unwrap(), 8.0, 1e-12));
    }

    #[test]
    fn line_bounds() {
        assert!(close(phi_symmetric(&line_instance(10)).unwrap(), 13.052, 1e-3));
        assert!(close(phi_symmetric(&line_instance(3)).unwrap(), 4.0, 1e-12));
        let mu = phi_symmetric_detail(&line_instance(3), 1e-8).unwrap().mu;
        assert!(close(mu.values()[0], 2.0, 1e-12) && close(mu.values()[1], 2.0 / 3.0, 1e-12));
    }

    #[test]
    fn circle_bound_is_n() {
        for n in 3..=50 {
            let v = phi_symmetric(&circle_instance(n)).unwrap();
            assert!(close(v, n as f64, 1e-6), "n={n}: {v}");
        }
    }

    #[test]
    fn two_cluster_spectrum() {
        let mu = phi_symmetric_detail(&two_cluster(2), 1e-8).unwrap().mu;
        assert!(close(mu.values()[0], 2.0, 1e-12));
        assert!(mu.values()[1..].iter().all(|v| v.abs() < 1e-12));
    }

    #[test]
    fn parity_form_agrees() {
        for n in 2..30 {
            let d = random_symmetric(n, n as u64);
            let b = phi_symmetric_detail(&d, 1e-8).unwrap();
            assert!(close(phi_parity_form(&b.mu), b.value, 1e-9 * (1.0 + b.value.abs())));
        }
    }

    #[test]
    fn rejects_bad_input() {
        let mut d = uniform_instance(4);
        d[(2, 2)] = 0.5;
        assert_eq!(
            phi_symmetric(&d),
            Err(BoundError::NonzeroDiagonal { index: 2, value: 0.5 })
        );
        let a = random_asymmetric(4, 1);
        assert!(matches!(
            phi_symmetric(&a),
            Err(BoundError::Matrix(MatrixError::NotSymmetric { .. }))
        ));
        let one = DenseMatrix::zeros(1).unwrap();
        assert_eq!(phi_symmetric(&one), Err(BoundError::TooFewCities { n: 1, min: 2 }));
    }

    #[test]
    fn n2_examples() {
        for n in 3..12 {
            assert!(close(n2_bound(&line_instance(n)).unwrap(), (n + 1) as f64, 1e-12));
            assert_eq!(n2_bound(&two_cluster(n)).unwrap(), 0.0);
        }
        assert_eq!(n2_bound(&uniform_instance(5)).unwrap(), 5.0);
        assert!(n2_bound(&uniform_instance(2)).is_err());
    }

    #[test]
    fn floor_examples() {
        assert!(close(euclidean_floor(&uniform_instance(4)).unwrap(), 3.0, 1e-12));
        for n in 3..30 {
            let d = circle_instance(n);
            assert!(euclidean_floor(&d).unwrap() <= phi_symmetric(&d).unwrap() + 1e-8);
        }
        for seed in 0..20 {
            let (_, d) = random_euclidean(8, 2, seed);
            assert!(euclidean_floor(&d).unwrap() <= phi_symmetric(&d).unwrap() + 1e-8);
        }
    }

    #[test]
    fn schoenberg_examples() {
        let (pts, _) = random_euclidean(6, 2, 17);
        let squared = DenseMatrix::from_fn(6, |i, j| {
            pts.points()[i]
                .iter()
                .zip(&pts.points()[j])
                .map(|(a, b)| (a - b).powi(2))
                .sum()
        })
        .unwrap();
        assert!(schoenberg_edm_check(&squared, 1e-8).unwrap());
        assert!(schoenberg_edm_check(&uniform_instance(3), 1e-8).unwrap());
        let clusters = two_cluster(3).map(|v| v * v);
        assert!(schoenberg_edm_check(&clusters, 1e-8).unwrap());
        // three collinear points with the wrong squared distances
        let bad = DenseMatrix::from_rows(&[[0.0, 1.0, 4.0], [1.0, 0.0, 1.0], [4.0, 1.0, 0.0]])
            .unwrap()
            .map(|v| v * v);
        assert!(!schoenberg_edm_check(&bad, 1e-8).unwrap());
        let neg = DenseMatrix::from_rows(&[[0.0, -1.0], [-1.0, 0.0]]).unwrap();
        assert!(matches!(
            schoenberg_edm_check(&neg, 1e-8),
            Err(BoundError::NegativeEntry { .. })
        ));
    }

    #[test]
    fn symmetric_input_collapses_all_bounds() {
        for seed in 0..10 {
            let d = random_symmetric(7, seed);
            let s = phi_symmetric(&d).unwrap();
            let g = phi_general(&d).unwrap();
            let nb = phi_normal(&d).unwrap();
            assert!(close(g.value, s, 1e-8 * (1.0 + s.abs())));
            assert_eq!(g.antihermitian_term, 0.0);
            assert!(close(nb.value, s, 1e-8 * (1.0 + s.abs())));
        }
    }

    #[test]
    fn tie_order_does_not_matter() {
        let mu = [3.0, 2.0, 2.0, 2.0, -1.0];
        let c = tsp_coefficients(6).unwrap();
        let sorted = min_pairing(c.values(), &mu);
        let mut shuffled = mu;
        shuffled.swap(1, 3);
        shuffled.swap(0, 4);
        assert_eq!(min_pairing(c.values(), &shuffled), sorted);
    }

    #[test]
    fn report_fields() {
        let r = report(&circle_instance(9)).unwrap();
        assert!(r.symmetric && r.psd && r.normal);
        assert!(close(r.phi_symmetric.unwrap(), 9.0, 1e-9));
        assert_eq!(r.mu.len(), 8);
        assert!(r.euclidean_floor.is_some() && r.n2.is_some());

        let r = report(&random_asymmetric(6, 3)).unwrap();
        assert!(!r.symmetric && !r.normal);
        assert!(r.phi_symmetric.is_none() && r.phi_normal.is_none() && r.euclidean_floor.is_none());
        assert_eq!(r.best(), r.phi_general);
    }
}
