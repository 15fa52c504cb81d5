//! Graph fixtures shared by the benchmarks.

use flowup_core::graph::complete_edge_count;
use flowup_core::{factorize, pq_rank, EdgeLabeledGraph, Result};

/// The 5-cycle over `Z/15Z` with labels 3, 5, 5, 3, 5.
pub fn c5() -> Result<EdgeLabeledGraph> {
    let ctx = factorize(15)?;
    EdgeLabeledGraph::new(ctx, 5, &[(1, 2, 3), (2, 3, 5), (3, 4, 5), (4, 5, 3), (1, 5, 5)])
}

/// Decreasing power-of-two chain labels for `K_n` over `Z/2^t Z`, where
/// `t = complete_edge_count(n) + 1`.
pub fn decreasing_chain(n: usize) -> (u128, Vec<u128>) {
    let e = complete_edge_count(n) as u32;
    let labels = (0..e).map(|k| 1u128 << (e - k)).collect();
    (1u128 << (e + 1), labels)
}

/// `K_n` over `Z/6Z` with rank `n - 1`.
pub fn pq_graph(n: usize) -> Result<EdgeLabeledGraph> {
    pq_rank(n, n - 1, 2, 3)
}
