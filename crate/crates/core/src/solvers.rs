//! Exact and heuristic tour solvers for small instances.

use serde::Serialize;
use thiserror::Error;

use crate::matrix::{DenseMatrix, DECISION_TOL};
use crate::rng::SplitMix64;

pub const BRUTE_FORCE_MAX: usize = 12;
pub const HELD_KARP_MAX: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("{solver} handles at most {max} cities, got {n}")]
    TooLarge { solver: &'static str, n: usize, max: usize },
    #[error("order is not a permutation of 0..{n}")]
    InvalidPermutation { n: usize },
    #[error("2-opt needs a symmetric matrix")]
    Asymmetric,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Tour {
    pub order: Vec<usize>,
    pub length: f64,
}

impl Tour {
    fn from_order(d: &DenseMatrix, order: Vec<usize>) -> Self {
        let length = cyclic_sum(d, &order);
        Tour { order, length }
    }
}

fn cyclic_sum(d: &DenseMatrix, order: &[usize]) -> f64 {
    let n = order.len();
    (0..n).map(|i| d[(order[i], order[(i + 1) % n])]).sum()
}

pub fn is_permutation(order: &[usize], n: usize) -> bool {
    if order.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &c in order {
        if c >= n || std::mem::replace(&mut seen[c], true) {
            return false;
        }
    }
    true
}

/// `Σ D[order[i], order[i+1]]` with the last city returning to the first.
pub fn tour_length(d: &DenseMatrix, order: &[usize]) -> Result<f64, SolverError> {
    if !is_permutation(order, d.n()) {
        return Err(SolverError::InvalidPermutation { n: d.n() });
    }
    Ok(cyclic_sum(d, order))
}

/// Tolerance under which two tour lengths count as equal.
fn tie_slack(d: &DenseMatrix) -> f64 {
    1e-12 * d.scale_factor()
}

struct Search<'a> {
    d: &'a DenseMatrix,
    symmetric: bool,
    prune: bool,
    slack: f64,
    order: Vec<usize>,
    used: Vec<bool>,
    best: Option<Tour>,
}

impl Search<'_> {
    fn run(&mut self, partial: f64) {
        let n = self.d.n();
        let depth = self.order.len();
        let last = self.order[depth - 1];
        if depth == n {
            if self.symmetric && n > 2 && self.order[1] > self.order[n - 1] {
                return;
            }
            let length = partial + self.d[(last, 0)];
            if self.best.as_ref().is_none_or(|b| length < b.length - self.slack) {
                self.best = Some(Tour {
                    order: self.order.clone(),
                    length,
                });
            }
            return;
        }
        for next in 1..n {
            if self.used[next] {
                continue;
            }
            let extended = partial + self.d[(last, next)];
            if self.prune && self.best.as_ref().is_some_and(|b| extended >= b.length + self.slack) {
                continue;
            }
            self.used[next] = true;
            self.order.push(next);
            self.run(extended);
            self.order.pop();
            self.used[next] = false;
        }
    }
}

/// Exhaustive search with city 0 fixed first. Symmetric matrices enumerate
/// one orientation per tour. Among optimal tours the lexicographically
/// smallest order is returned.
pub fn brute_force(d: &DenseMatrix) -> Result<Tour, SolverError> {
    let n = d.n();
    if n > BRUTE_FORCE_MAX {
        return Err(SolverError::TooLarge {
            solver: "brute_force",
            n,
            max: BRUTE_FORCE_MAX,
        });
    }
    if n == 1 {
        return Ok(Tour::from_order(d, vec![0]));
    }
    let mut used = vec![false; n];
    used[0] = true;
    let mut search = Search {
        d,
        symmetric: d.is_symmetric(DECISION_TOL),
        // partial sums are only monotone for non-negative entries
        prune: d.as_slice().iter().all(|&v| v >= 0.0),
        slack: tie_slack(d),
        order: vec![0],
        used,
        best: None,
    };
    search.run(0.0);
    Ok(search.best.expect("at least one tour exists"))
}

/// Bellman / Held–Karp dynamic programming over subsets of `1..n`, anchored
/// at city 0.
pub fn held_karp(d: &DenseMatrix) -> Result<Tour, SolverError> {
    let n = d.n();
    if n > HELD_KARP_MAX {
        return Err(SolverError::TooLarge {
            solver: "held_karp",
            n,
            max: HELD_KARP_MAX,
        });
    }
    if n <= 2 {
        return Ok(Tour::from_order(d, (0..n).collect()));
    }
    // city c in 1..n is bit c−1; cost[mask * m + j] is the cheapest path
    // 0 → … → j+1 through exactly the cities in mask.
    let m = n - 1;
    let full = (1usize << m) - 1;
    let mut cost = vec![f64::INFINITY; (full + 1) * m];
    for j in 0..m {
        cost[(1 << j) * m + j] = d[(0, j + 1)];
    }
    for mask in 1..=full {
        for j in 0..m {
            if mask & (1 << j) == 0 {
                continue;
            }
            let here = cost[mask * m + j];
            if here == f64::INFINITY {
                continue;
            }
            for k in 0..m {
                if mask & (1 << k) != 0 {
                    continue;
                }
                let next = (mask | (1 << k)) * m + k;
                let candidate = here + d[(j + 1, k + 1)];
                if candidate < cost[next] {
                    cost[next] = candidate;
                }
            }
        }
    }

    let mut last = 0;
    let mut best = f64::INFINITY;
    for j in 0..m {
        let total = cost[full * m + j] + d[(j + 1, 0)];
        if total < best {
            best = total;
            last = j;
        }
    }

    let mut order = vec![0; n];
    let mut mask = full;
    let mut j = last;
    for pos in (1..n).rev() {
        order[pos] = j + 1;
        let target = cost[mask * m + j];
        mask &= !(1 << j);
        if mask == 0 {
            break;
        }
        j = (0..m)
            .filter(|&k| mask & (1 << k) != 0)
            .find(|&k| cost[mask * m + k] + d[(k + 1, j + 1)] == target)
            .expect("predecessor is recorded in the table");
    }
    if d.is_symmetric(DECISION_TOL) && order[1] > order[n - 1] {
        order[1..].reverse();
    }
    Ok(Tour::from_order(d, order))
}

/// Nearest-neighbour tour from city 0, then first-improvement 2-opt passes
/// until a full pass changes nothing. The seed only picks among equally near
/// neighbours during construction.
pub fn two_opt(d: &DenseMatrix, seed: u64) -> Result<Tour, SolverError> {
    if !d.is_symmetric(DECISION_TOL) {
        return Err(SolverError::Asymmetric);
    }
    let n = d.n();
    let mut order = nearest_neighbour(d, seed);
    if n < 4 {
        return Ok(Tour::from_order(d, order));
    }
    let slack = tie_slack(d);
    let mut improved = true;
    while improved {
        improved = false;
        for i in 0..n - 2 {
            for j in i + 2..n {
                if i == 0 && j == n - 1 {
                    continue;
                }
                let (a, b) = (order[i], order[i + 1]);
                let (c, e) = (order[j], order[(j + 1) % n]);
                let delta = d[(a, c)] + d[(b, e)] - d[(a, b)] - d[(c, e)];
                if delta < -slack {
                    order[i + 1..=j].reverse();
                    improved = true;
                }
            }
        }
    }
    Ok(Tour::from_order(d, order))
}

fn nearest_neighbour(d: &DenseMatrix, seed: u64) -> Vec<usize> {
    let n = d.n();
    let slack = tie_slack(d);
    let mut rng = SplitMix64::new(seed);
    let mut used = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut current = 0;
    used[0] = true;
    order.push(0);
    let mut ties = Vec::new();
    while order.len() < n {
        let nearest = (0..n)
            .filter(|&k| !used[k])
            .map(|k| d[(current, k)])
            .fold(f64::INFINITY, f64::min);
        ties.clear();
        ties.extend((0..n).filter(|&k| !used[k] && d[(current, k)] <= nearest + slack));
        current = ties[rng.below(ties.len() as u64) as usize];
        used[current] = true;
        order.push(current);
    }
    order
}
