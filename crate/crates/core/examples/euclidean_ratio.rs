//! Smallest observed bound/optimum ratio on random Euclidean instances,
//! reported with N times that ratio so the trend in N is visible.
//!
//! Usage: cargo run --release --example euclidean_ratio -- [max_n] [trials] [dim]

use spectral_tsp::bounds::phi_symmetric;
use spectral_tsp::instances::random_euclidean;
use spectral_tsp::rng::SplitMix64;
use spectral_tsp::solvers::held_karp;

fn main() {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<usize>().ok());
    let max_n = args.next().flatten().unwrap_or(14).min(20);
    let trials = args.next().flatten().unwrap_or(50);
    let dim = args.next().flatten().unwrap_or(2);
    let mut rng = SplitMix64::new(17);
    println!("n,min_ratio,n_times_min_ratio,mean_ratio");
    for n in 4..=max_n {
        let mut min = f64::INFINITY;
        let mut total = 0.0;
        for _ in 0..trials {
            let (_, d) = random_euclidean(n, dim, rng.next_u64());
            let ratio = phi_symmetric(&d).unwrap() / held_karp(&d).unwrap().length;
            min = min.min(ratio);
            total += ratio;
        }
        println!("{n},{min:.5},{:.4},{:.5}", n as f64 * min, total / trials as f64);
    }
}
