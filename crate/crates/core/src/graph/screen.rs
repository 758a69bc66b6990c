use serde::Serialize;

use super::{complement, graph_distance_matrix, is_regular, Graph, GraphError};
use crate::bounds::{phi_symmetric_detail, tsp_coefficients};
use crate::matrix::{sym_eigenvalues, DECISION_TOL};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// The bound rules the property out.
    Excluded,
    /// The bound is consistent with the property. Nothing is claimed.
    NotExcluded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ScreenKind {
    AdjacencyHamiltonian,
    AdjacencyTraceable,
    DistanceHamiltonian,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HamiltonicityVerdict {
    pub phi_value: f64,
    pub threshold: f64,
    pub verdict: Verdict,
    pub test_kind: ScreenKind,
    /// `phi_value` sits on the threshold within tolerance.
    pub saturated: bool,
}

impl HamiltonicityVerdict {
    fn new(phi_value: f64, threshold: f64, test_kind: ScreenKind, slack: f64) -> Self {
        let verdict = if phi_value > threshold + slack {
            Verdict::Excluded
        } else {
            Verdict::NotExcluded
        };
        HamiltonicityVerdict {
            phi_value,
            threshold,
            verdict,
            test_kind,
            saturated: (phi_value - threshold).abs() <= slack,
        }
    }

    pub fn excluded(&self) -> bool {
        self.verdict == Verdict::Excluded
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AdjacencyScreen {
    /// Threshold 0.
    pub hamiltonian: HamiltonicityVerdict,
    /// Threshold 1.
    pub traceable: HamiltonicityVerdict,
    /// `|φ(A_Ḡ) − (N + φ(−A_G))|`.
    pub identity_residual: f64,
    /// For regular graphs, `|φ(A_Ḡ) − (N + Σ c_j λ_{j+1})|` with `λ` the
    /// adjacency spectrum in descending order.
    pub regular_residual: Option<f64>,
}

pub fn adjacency_screen(g: &Graph) -> Result<AdjacencyScreen, GraphError> {
    adjacency_screen_with_tol(g, DECISION_TOL)
}

/// Screens `G` through `φ(A_Ḡ)`: a Hamiltonian graph has `φ(A_Ḡ) ≤ 0`, a
/// traceable one `φ(A_Ḡ) ≤ 1`.
pub fn adjacency_screen_with_tol(g: &Graph, tol: f64) -> Result<AdjacencyScreen, GraphError> {
    let n = g.n();
    if n < 3 {
        return Err(GraphError::InvalidSize {
            what: "screened vertex count",
            got: n,
            min: 3,
        });
    }
    let a_bar = complement(g).adjacency();
    let phi = phi_symmetric_detail(&a_bar, tol)?.value;
    let slack = tol * a_bar.scale_factor();

    let a = g.adjacency();
    let negated = a.map(|v| -v);
    let identity_residual = (phi - (n as f64 + phi_symmetric_detail(&negated, tol)?.value)).abs();
    debug_assert!(
        identity_residual <= slack.max(tol * phi.abs()),
        "residual {identity_residual}"
    );

    let regular_residual = if is_regular(g) {
        let lambda = sym_eigenvalues(&a, tol)?;
        let c = tsp_coefficients(n)?;
        let fast: f64 = c.values().iter().zip(&lambda.values()[1..]).map(|(c, l)| c * l).sum();
        Some((phi - (n as f64 + fast)).abs())
    } else {
        None
    };

    Ok(AdjacencyScreen {
        hamiltonian: HamiltonicityVerdict::new(phi, 0.0, ScreenKind::AdjacencyHamiltonian, slack),
        traceable: HamiltonicityVerdict::new(phi, 1.0, ScreenKind::AdjacencyTraceable, slack),
        identity_residual,
        regular_residual,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistanceScreen {
    pub hamiltonian: HamiltonicityVerdict,
    /// For transmission-regular graphs, `|φ(D_G) + Σ c_j κ_j|` with `κ` the
    /// distance spectrum in ascending order.
    pub transmission_residual: Option<f64>,
}

pub fn distance_screen(g: &Graph) -> Result<DistanceScreen, GraphError> {
    distance_screen_with_tol(g, DECISION_TOL)
}

/// Screens a connected `G` through `φ(D_G)`: a Hamiltonian graph has
/// `φ(D_G) ≤ N`.
pub fn distance_screen_with_tol(g: &Graph, tol: f64) -> Result<DistanceScreen, GraphError> {
    let d = graph_distance_matrix(g)?;
    let n = g.n();
    if n < 2 {
        return Err(GraphError::InvalidSize {
            what: "screened vertex count",
            got: n,
            min: 2,
        });
    }
    let phi = phi_symmetric_detail(&d, tol)?.value;
    let slack = tol * d.scale_factor();

    let sums = d.row_sums();
    let transmission_residual = if sums.windows(2).all(|w| w[0] == w[1]) {
        let kappa = sym_eigenvalues(&d, tol)?;
        let c = tsp_coefficients(n)?;
        // κ ascending is the descending spectrum read backwards
        let fast: f64 = c
            .values()
            .iter()
            .zip(kappa.values().iter().rev())
            .map(|(c, k)| c * k)
            .sum();
        Some((phi + fast).abs())
    } else {
        None
    };

    Ok(DistanceScreen {
        hamiltonian: HamiltonicityVerdict::new(phi, n as f64, ScreenKind::DistanceHamiltonian, slack),
        transmission_residual,
    })
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;
    use crate::graph::{bow_tie, complete_bipartite, cycle_graph, disjoint_cliques, path_graph};

    #[test]
    fn bow_tie_screen() {
        let s = adjacency_screen(&bow_tie()).unwrap();
        assert!((s.hamiltonian.phi_value - 0.658).abs() < 1e-3);
        assert!(s.hamiltonian.excluded());
        assert!(!s.traceable.excluded());
        assert!(s.regular_residual.is_none());
    }

    #[test]
    fn balanced_bipartite_saturates() {
        for n in 2..=6 {
            let s = adjacency_screen(&complete_bipartite(n, n).unwrap()).unwrap();
            assert!(s.hamiltonian.phi_value.abs() < 1e-8, "n={n}");
            assert!(s.hamiltonian.saturated && !s.hamiltonian.excluded());
            assert!(s.regular_residual.unwrap() < 1e-8);
        }
    }

    #[test]
    fn cliques_screen() {
        for n in 3..=8 {
            let s = adjacency_screen(&disjoint_cliques(n).unwrap()).unwrap();
            let expected = (1.0 - (PI / n as f64).cos()) * n as f64;
            assert!((s.hamiltonian.phi_value - expected).abs() < 1e-8);
            assert!(s.hamiltonian.excluded());
            assert_eq!(s.traceable.excluded(), n <= 4, "n={n}");
        }
    }

    #[test]
    fn path_distance_screen() {
        let s = distance_screen(&path_graph(10).unwrap()).unwrap();
        assert!((s.hamiltonian.phi_value - 13.052).abs() < 1e-3);
        assert!(s.hamiltonian.excluded());
        assert!(s.transmission_residual.is_none());
    }

    #[test]
    fn cycles_pass_both_screens() {
        for n in 3..15 {
            let g = cycle_graph(n).unwrap();
            let d = distance_screen(&g).unwrap();
            assert!(!d.hamiltonian.excluded());
            assert!(d.transmission_residual.unwrap() < 1e-8);
            let a = adjacency_screen(&g).unwrap();
            assert!(!a.hamiltonian.excluded() && a.regular_residual.unwrap() < 1e-8);
        }
    }

    #[test]
    fn rejects_tiny_and_disconnected() {
        assert!(adjacency_screen(&path_graph(2).unwrap()).is_err());
        assert_eq!(
            distance_screen(&disjoint_cliques(3).unwrap()),
            Err(GraphError::Disconnected)
        );
    }
}
