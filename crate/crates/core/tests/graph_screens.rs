mod common;

use std::f64::consts::PI;

use common::{close, has_hamiltonian_cycle, has_hamiltonian_path, hop_distances, is_connected, Adjacency};
use spectral_tsp::bounds::phi_symmetric;
use spectral_tsp::graph::{
    adjacency_screen, cayley_graph, complement, complete_bipartite, distance_screen, graph_distance_matrix, is_regular,
    is_transmission_regular, path_graph, Graph, GroupTable,
};
use spectral_tsp::rng::SplitMix64;

fn random_graph(n: usize, p: f64, rng: &mut SplitMix64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.next_f64() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn as_adjacency(g: &Graph) -> Adjacency {
    (0..g.n())
        .map(|u| (0..g.n()).map(|v| g.has_edge(u, v)).collect())
        .collect()
}

fn bipartite_formula(n: usize, m: usize) -> f64 {
    let (nf, mf) = (n as f64, m as f64);
    let sign = if (n + m).is_multiple_of(2) { 1.0 } else { -1.0 };
    (nf - mf).powi(2) / (nf + mf) + (1.0 - (PI * (1.0 - sign) / (2.0 * (nf + mf))).cos()) * 2.0 * nf * mf / (nf + mf)
}

#[test]
fn bipartite_closed_form() {
    for n in 1..=8 {
        for m in 1..=8 {
            if n + m < 3 {
                continue;
            }
            let s = adjacency_screen(&complete_bipartite(n, m).unwrap()).unwrap();
            assert!(
                close(s.hamiltonian.phi_value, bipartite_formula(n, m), 1e-8),
                "K_{n},{m}"
            );
            assert_eq!(s.hamiltonian.excluded(), n != m, "K_{n},{m}");
        }
    }
}

#[test]
fn complement_identity_on_random_graphs() {
    let mut rng = SplitMix64::new(2024);
    for _ in 0..200 {
        let n = 3 + rng.below(8) as usize;
        let g = random_graph(n, 0.5, &mut rng);
        let s = adjacency_screen(&g).unwrap();
        let direct = phi_symmetric(&complement(&g).adjacency()).unwrap();
        let via_negation = n as f64 + phi_symmetric(&g.adjacency().map(|v| -v)).unwrap();
        assert!(close(direct, via_negation, 1e-8 * direct.abs().max(1.0)));
        assert!(s.identity_residual <= 1e-8 * direct.abs().max(1.0));
        if let Some(r) = s.regular_residual {
            assert!(r <= 1e-8);
        }
    }
}

#[test]
fn distance_matrix_matches_floyd_warshall() {
    let mut rng = SplitMix64::new(5);
    let mut checked = 0;
    while checked < 50 {
        let g = random_graph(3 + rng.below(7) as usize, 0.4, &mut rng);
        let adj = as_adjacency(&g);
        if !is_connected(&adj) {
            assert!(graph_distance_matrix(&g).is_err());
            continue;
        }
        let d = graph_distance_matrix(&g).unwrap();
        assert_eq!(d.to_rows(), hop_distances(&adj));
        checked += 1;
    }
}

#[test]
fn screens_never_exclude_hamiltonian_graphs() {
    let mut rng = SplitMix64::new(77);
    for _ in 0..400 {
        let n = 3 + rng.below(6) as usize;
        let g = random_graph(n, 0.55, &mut rng);
        let adj = as_adjacency(&g);
        let s = adjacency_screen(&g).unwrap();
        if has_hamiltonian_cycle(&adj) {
            assert!(!s.hamiltonian.excluded());
            assert!(!distance_screen(&g).unwrap().hamiltonian.excluded());
        }
        if has_hamiltonian_path(&adj) {
            assert!(!s.traceable.excluded());
        }
    }
}

#[test]
fn path_graphs_excluded_by_distance_screen() {
    for n in [10, 20, 30] {
        let s = distance_screen(&path_graph(n).unwrap()).unwrap();
        assert!(s.hamiltonian.excluded(), "P_{n}");
    }
}

#[test]
fn cyclic_cayley_graphs_are_vertex_uniform() {
    let mut rng = SplitMix64::new(9);
    for _ in 0..60 {
        let n = 4 + rng.below(12) as usize;
        let table = GroupTable::cyclic(n).unwrap();
        let mut set = Vec::new();
        for s in 1..=n / 2 {
            if rng.next_f64() < 0.4 {
                set.push(s);
                if n - s != s {
                    set.push(n - s);
                }
            }
        }
        if set.is_empty() {
            continue;
        }
        let g = cayley_graph(&table, &set).unwrap();
        assert!(is_regular(&g));
        if g.is_connected() {
            assert!(is_transmission_regular(&g).unwrap());
            let d = distance_screen(&g).unwrap();
            assert!(d.transmission_residual.unwrap() <= 1e-8);
        }
    }
}
