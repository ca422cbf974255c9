//! Fixtures shared by the benchmarks.

use ng_core::{generate, Graph, GraphKind};

/// A fixed `G(n, 1/2)` sample.
pub fn random_graph(n: usize, seed: u64) -> Graph {
    generate(&GraphKind::ErdosRenyi { n, p: 0.5 }, seed).expect("valid order")
}
