//! Prints the distance-matrix bound of the path graph P_n next to n.
//!
//! Usage: cargo run --example path_distance_bound -- [max_n]

use spectral_tsp::graph::{distance_screen, path_graph};

fn main() {
    let max_n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(60);
    println!("n,phi,phi_minus_n,excluded");
    for n in 3..=max_n {
        let s = distance_screen(&path_graph(n).unwrap()).unwrap();
        let phi = s.hamiltonian.phi_value;
        println!("{n},{phi:.6},{:.6},{}", phi - n as f64, s.hamiltonian.excluded());
    }
}
