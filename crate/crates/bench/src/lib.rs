//! Shared fixtures for the criterion benchmarks.

use ltc_core::constructions::construction2;
use ltc_core::search::random_3graph;
use ltc_core::ThreeGraph;

/// The second construction at `n`, used as a sparse-link covering workload.
pub fn construction2_host(n: usize) -> ThreeGraph {
    construction2(n).expect("n ≥ 7").0
}

/// A dense random host where almost every vertex is covered early.
pub fn dense_random_host(n: usize, seed: u64) -> ThreeGraph {
    random_3graph(n, 0.5, seed).expect("valid probability")
}
