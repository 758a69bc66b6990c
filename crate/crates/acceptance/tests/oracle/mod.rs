//! Brute-force reference computations used by the acceptance criteria.

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
