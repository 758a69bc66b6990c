//! Instance families with known optima and seeded random instances.

use std::f64::consts::PI;

use serde::Serialize;

use crate::matrix::DenseMatrix;
use crate::rng::SplitMix64;

/// Points in `ℝ^dim`, one coordinate tuple per city.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EuclideanPoints {
    dim: usize,
    points: Vec<Vec<f64>>,
}

impl EuclideanPoints {
    /// Fails (returns `None`) on fewer than two points, a zero dimension,
    /// ragged tuples or non-finite coordinates.
    pub fn new(dim: usize, points: Vec<Vec<f64>>) -> Option<Self> {
        let ok =
            dim >= 1 && points.len() >= 2 && points.iter().all(|p| p.len() == dim && p.iter().all(|c| c.is_finite()));
        ok.then_some(Self { dim, points })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    /// Pairwise Euclidean norms.
    pub fn distance_matrix(&self) -> DenseMatrix {
        DenseMatrix::from_fn(self.points.len(), |i, j| {
            if i == j {
                return 0.0;
            }
            self.points[i]
                .iter()
                .zip(&self.points[j])
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>()
                .sqrt()
        })
        .expect("finite coordinates give finite distances")
    }
}

fn require(n: usize, min: usize, what: &str) {
    assert!(n >= min, "{what} needs n >= {min}, got {n}");
}

/// All distances equal one: `J − I`.
pub fn uniform_instance(n: usize) -> DenseMatrix {
    require(n, 2, "uniform_instance");
    DenseMatrix::from_fn(n, |i, j| if i == j { 0.0 } else { 1.0 }).unwrap()
}

/// Regular `n`-gon with unit side: `D_ij = sin(π|i−j|/n) / sin(π/n)`.
pub fn circle_instance(n: usize) -> DenseMatrix {
    require(n, 2, "circle_instance");
    let step = PI / n as f64;
    let denom = step.sin();
    DenseMatrix::from_fn(n, |i, j| {
        if i == j {
            0.0
        } else {
            (step * i.abs_diff(j) as f64).sin() / denom
        }
    })
    .unwrap()
}

/// Vertices of the unit-side regular `n`-gon centered at the origin.
pub fn circle_points(n: usize) -> EuclideanPoints {
    require(n, 2, "circle_points");
    let radius = 1.0 / (2.0 * (PI / n as f64).sin());
    let points = (0..n)
        .map(|i| {
            let angle = 2.0 * PI * i as f64 / n as f64;
            vec![radius * angle.cos(), radius * angle.sin()]
        })
        .collect();
    EuclideanPoints { dim: 2, points }
}

/// Equally spaced cities on a line: `D_ij = |i − j|`.
pub fn line_instance(n: usize) -> DenseMatrix {
    require(n, 2, "line_instance");
    DenseMatrix::from_fn(n, |i, j| i.abs_diff(j) as f64).unwrap()
}

/// Two clusters of `n` coincident cities at unit distance, `2n` cities total.
pub fn two_cluster(n: usize) -> DenseMatrix {
    require(n, 2, "two_cluster");
    DenseMatrix::from_fn(2 * n, |i, j| if (i < n) != (j < n) { 1.0 } else { 0.0 }).unwrap()
}

/// `n` points uniform in `[0, 1)^dim` and their distance matrix. Coordinates
/// are drawn point by point, axis by axis, from [`SplitMix64`] seeded with `seed`.
pub fn random_euclidean(n: usize, dim: usize, seed: u64) -> (EuclideanPoints, DenseMatrix) {
    require(n, 2, "random_euclidean");
    require(dim, 1, "random_euclidean dimension");
    let mut rng = SplitMix64::new(seed);
    let points = (0..n).map(|_| (0..dim).map(|_| rng.next_f64()).collect()).collect();
    let pts = EuclideanPoints { dim, points };
    let d = pts.distance_matrix();
    (pts, d)
}

/// Symmetric matrix with i.i.d. `U[0, 1)` entries above the diagonal, drawn
/// row by row (`i < j`), zero diagonal.
pub fn random_symmetric(n: usize, seed: u64) -> DenseMatrix {
    require(n, 2, "random_symmetric");
    let mut rng = SplitMix64::new(seed);
    let mut d = DenseMatrix::zeros(n).unwrap();
    for i in 0..n {
        for j in (i + 1)..n {
            let v = rng.next_f64();
            d[(i, j)] = v;
            d[(j, i)] = v;
        }
    }
    d
}

/// Matrix with i.i.d. `U[0, 1)` off-diagonal entries drawn in row-major
/// order, zero diagonal.
pub fn random_asymmetric(n: usize, seed: u64) -> DenseMatrix {
    require(n, 2, "random_asymmetric");
    let mut rng = SplitMix64::new(seed);
    DenseMatrix::from_fn(n, |i, j| if i == j { 0.0 } else { rng.next_f64() }).unwrap()
}

/// Circulant matrix `C_ij = row[(j − i) mod n]`.
pub fn circulant(row: &[f64]) -> DenseMatrix {
    let n = row.len();
    DenseMatrix::from_fn(n, |i, j| row[(j + n - i) % n]).expect("finite circulant row")
}

/// Random circulant cost matrix: zero diagonal, other offsets `U[0, 1)`.
/// Generally asymmetric, always normal.
pub fn random_circulant(n: usize, seed: u64) -> DenseMatrix {
    require(n, 2, "random_circulant");
    let mut rng = SplitMix64::new(seed);
    let mut row = vec![0.0];
    row.extend((1..n).map(|_| rng.next_f64()));
    circulant(&row)
}
