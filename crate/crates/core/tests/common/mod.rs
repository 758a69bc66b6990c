//! Independent reference computations for the integration tests. Nothing
//! here calls into the library's solvers or eigen routines.
#![allow(dead_code)]

use num_complex::Complex64;
use spectral_tsp::DenseMatrix;

/// Calls `f` on every permutation of `0..n` (Heap's algorithm).
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    f(&p);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            f(&p);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Minimum of `Σ cost(i, σ(i))` over all permutations.
pub fn min_over_pairings(n: usize, cost: impl Fn(usize, usize) -> f64) -> f64 {
    let mut best = f64::INFINITY;
    for_each_permutation(n, |p| {
        let total: f64 = p.iter().enumerate().map(|(i, &j)| cost(i, j)).sum();
        best = best.min(total);
    });
    best
}

/// Optimal directed tour length by enumerating every ordering of `1..n`
/// after city 0.
pub fn exhaustive_tour_length(d: &DenseMatrix) -> f64 {
    let n = d.n();
    let mut best = f64::INFINITY;
    for_each_permutation(n - 1, |p| {
        let mut len = d[(0, p[0] + 1)] + d[(p[n - 2] + 1, 0)];
        for w in p.windows(2) {
            len += d[(w[0] + 1, w[1] + 1)];
        }
        best = best.min(len);
    });
    best
}

/// Eigenvalues `λ_k = Σ_m c_m e^{2πi mk/n}` of the circulant with first row `c`.
pub fn circulant_spectrum(first_row: &[f64]) -> Vec<Complex64> {
    let n = first_row.len();
    (0..n)
        .map(|k| {
            first_row
                .iter()
                .enumerate()
                .map(|(m, &c)| c * Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * (m * k) as f64 / n as f64))
                .sum()
        })
        .collect()
}

/// General real eigenvalues through nalgebra's Schur decomposition.
pub fn nalgebra_eigenvalues(m: &DenseMatrix) -> Vec<Complex64> {
    let n = m.n();
    let mat = nalgebra::DMatrix::from_row_slice(n, n, m.as_slice());
    mat.complex_eigenvalues().iter().copied().collect()
}

/// Symmetric eigenvalues through nalgebra, descending.
pub fn nalgebra_symmetric_eigenvalues(m: &DenseMatrix) -> Vec<f64> {
    let n = m.n();
    let mat = nalgebra::DMatrix::from_row_slice(n, n, m.as_slice());
    let mut v: Vec<f64> = mat.symmetric_eigen().eigenvalues.iter().copied().collect();
    v.sort_by(|a, b| b.total_cmp(a));
    v
}

/// Greedy multiset match: every value in `a` has a partner in `b` within `tol`.
pub fn same_multiset(a: &[Complex64], b: &[Complex64], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    a.iter().all(|x| {
        let hit = (0..b.len())
            .filter(|&j| !used[j])
            .min_by(|&i, &j| (b[i] - x).norm().total_cmp(&(b[j] - x).norm()));
        match hit {
            Some(j) if (b[j] - x).norm() <= tol => {
                used[j] = true;
                true
            }
            _ => false,
        }
    })
}

/// Adjacency lists as boolean rows.
pub type Adjacency = Vec<Vec<bool>>;

fn extend_path(adj: &Adjacency, path: &mut Vec<usize>, used: &mut [bool], close: bool) -> bool {
    let n = adj.len();
    let last = *path.last().unwrap();
    if path.len() == n {
        return !close || adj[last][path[0]];
    }
    for next in 0..n {
        if used[next] || !adj[last][next] {
            continue;
        }
        used[next] = true;
        path.push(next);
        if extend_path(adj, path, used, close) {
            return true;
        }
        path.pop();
        used[next] = false;
    }
    false
}

/// Backtracking search for a Hamiltonian cycle.
pub fn has_hamiltonian_cycle(adj: &Adjacency) -> bool {
    let n = adj.len();
    assert!(n <= 12);
    if n < 3 || adj.iter().any(|row| row.iter().filter(|&&e| e).count() < 2) {
        return false;
    }
    let mut used = vec![false; n];
    used[0] = true;
    extend_path(adj, &mut vec![0], &mut used, true)
}

/// Backtracking search for a Hamiltonian path from any start vertex.
pub fn has_hamiltonian_path(adj: &Adjacency) -> bool {
    let n = adj.len();
    assert!(n <= 12);
    if n == 1 {
        return true;
    }
    let degrees: Vec<usize> = adj.iter().map(|row| row.iter().filter(|&&e| e).count()).collect();
    // an isolated vertex, or more than two leaves, rules a path out
    if degrees.contains(&0) || degrees.iter().filter(|&&d| d == 1).count() > 2 {
        return false;
    }
    (0..n).any(|s| {
        let mut used = vec![false; n];
        used[s] = true;
        extend_path(adj, &mut vec![s], &mut used, false)
    })
}

/// Connectivity by repeated relaxation, independent of the library's BFS.
pub fn is_connected(adj: &Adjacency) -> bool {
    let n = adj.len();
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut changed = true;
    while changed {
        changed = false;
        for u in 0..n {
            for v in 0..n {
                if seen[u] && adj[u][v] && !seen[v] {
                    seen[v] = true;
                    changed = true;
                }
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Floyd–Warshall hop distances.
pub fn hop_distances(adj: &Adjacency) -> Vec<Vec<f64>> {
    let n = adj.len();
    let mut d: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        0.0
                    } else if adj[i][j] {
                        1.0
                    } else {
                        f64::INFINITY
                    }
                })
                .collect()
        })
        .collect();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}
