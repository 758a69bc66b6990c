//! Simple undirected graphs, their distance matrices, and the spectral
//! Hamiltonicity screens.

mod cayley;
mod screen;

use std::collections::VecDeque;

use thiserror::Error;

use crate::bounds::BoundError;
use crate::matrix::{DenseMatrix, MatrixError};

pub use cayley::{cayley_graph, dihedral_reflection_cayley, GroupTable};
pub use screen::{
    adjacency_screen, adjacency_screen_with_tol, distance_screen, distance_screen_with_tol, AdjacencyScreen,
    DistanceScreen, HamiltonicityVerdict, ScreenKind, Verdict,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {0}-{1} listed twice")]
    DuplicateEdge(usize, usize),
    #[error("adjacency entry ({row}, {col}) = {value} is not a valid 0/1 symmetric entry")]
    InvalidAdjacency { row: usize, col: usize, value: f64 },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("{what} needs {min} or more, got {got}")]
    InvalidSize { what: &'static str, got: usize, min: usize },
    #[error("identity element in the connection set")]
    IdentityInConnectionSet,
    #[error("connection set is not closed under inverses (missing inverse of {0})")]
    NotInverseClosed(usize),
    #[error("connection set element {element} outside group of order {order}")]
    ElementOutOfRange { element: usize, order: usize },
    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),
    #[error(transparent)]
    Bound(#[from] BoundError),
}

impl From<MatrixError> for GraphError {
    fn from(e: MatrixError) -> Self {
        GraphError::Bound(BoundError::Matrix(e))
    }
}

/// A simple undirected graph stored as sorted neighbour lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    neighbours: Vec<Vec<usize>>,
}

impl Graph {
    /// `n` isolated vertices.
    ///
    /// # Panics
    /// If `n` is zero.
    pub fn empty(n: usize) -> Self {
        assert!(n > 0, "a graph needs at least one vertex");
        Graph {
            neighbours: vec![Vec::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::InvalidSize {
                what: "vertex count",
                got: 0,
                min: 1,
            });
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.neighbours[u].push(v);
            g.neighbours[v].push(u);
        }
        g.neighbours.iter_mut().for_each(|l| l.sort_unstable());
        Ok(g)
    }

    /// Reads a symmetric 0/1 matrix with zero diagonal.
    pub fn from_adjacency(a: &DenseMatrix) -> Result<Self, GraphError> {
        let n = a.n();
        let mut g = Graph::empty(n);
        for i in 0..n {
            for j in 0..n {
                let value = a[(i, j)];
                let valid = (value == 0.0 || (value == 1.0 && i != j)) && a[(j, i)] == value;
                if !valid {
                    return Err(GraphError::InvalidAdjacency { row: i, col: j, value });
                }
                if value == 1.0 {
                    g.neighbours[i].push(j);
                }
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.neighbours.len()
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.neighbours[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbours[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbours[u].contains(&v)
    }

    pub fn edge_count(&self) -> usize {
        self.neighbours.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.neighbours.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.neighbours.iter().map(Vec::len).collect()
    }

    pub fn adjacency(&self) -> DenseMatrix {
        let n = self.n();
        let mut a = DenseMatrix::zeros(n).expect("graphs are non-empty");
        for (u, list) in self.neighbours.iter().enumerate() {
            for &v in list {
                a[(u, v)] = 1.0;
            }
        }
        a
    }

    fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices are reached");
            for &v in &self.neighbours[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.bfs(0).iter().all(Option::is_some)
    }
}

/// Swaps edges and non-edges.
pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let neighbours = (0..n)
        .map(|u| (0..n).filter(|&v| v != u && !g.has_edge(u, v)).collect())
        .collect();
    Graph { neighbours }
}

/// All-pairs hop distances by breadth-first search.
pub fn graph_distance_matrix(g: &Graph) -> Result<DenseMatrix, GraphError> {
    let n = g.n();
    let mut d = DenseMatrix::zeros(n)?;
    for u in 0..n {
        for (v, dist) in g.bfs(u).into_iter().enumerate() {
            d[(u, v)] = dist.ok_or(GraphError::Disconnected)? as f64;
        }
    }
    Ok(d)
}

pub fn is_regular(g: &Graph) -> bool {
    g.neighbours.windows(2).all(|w| w[0].len() == w[1].len())
}

/// Constant distance row sums. Errors on disconnected graphs.
pub fn is_transmission_regular(g: &Graph) -> Result<bool, GraphError> {
    let sums = graph_distance_matrix(g)?.row_sums();
    Ok(sums.windows(2).all(|w| w[0] == w[1]))
}

/// Two triangles sharing vertex 0.
pub fn bow_tie() -> Graph {
    Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).expect("valid edges")
}

/// `K_{n,m}` with parts `0..n` and `n..n+m`.
pub fn complete_bipartite(n: usize, m: usize) -> Result<Graph, GraphError> {
    for size in [n, m] {
        if size == 0 {
            return Err(GraphError::InvalidSize {
                what: "bipartite part",
                got: 0,
                min: 1,
            });
        }
    }
    let edges: Vec<_> = (0..n).flat_map(|u| (n..n + m).map(move |v| (u, v))).collect();
    Graph::from_edges(n + m, &edges)
}

/// Two disjoint copies of `K_n` on vertices `0..n` and `n..2n`.
pub fn disjoint_cliques(n: usize) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::InvalidSize {
            what: "clique size",
            got: n,
            min: 2,
        });
    }
    let mut edges = Vec::new();
    for offset in [0, n] {
        for u in 0..n {
            edges.extend((u + 1..n).map(|v| (offset + u, offset + v)));
        }
    }
    Graph::from_edges(2 * n, &edges)
}

pub fn path_graph(n: usize) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::InvalidSize {
            what: "path length",
            got: n,
            min: 2,
        });
    }
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle_graph(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidSize {
            what: "cycle length",
            got: n,
            min: 3,
        });
    }
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}
