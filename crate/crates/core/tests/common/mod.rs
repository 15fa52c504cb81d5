#![allow(dead_code)]

use flowup_core::{factorize, EdgeLabeledGraph};
use rand::seq::SliceRandom;
use rand::Rng;

/// Random connected graph on `n` vertices over `Z/mZ`: a random spanning tree
/// plus each remaining pair with probability 1/2, labels drawn uniformly from
/// the divisors of `m`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, m: u128) -> EdgeLabeledGraph {
    let ctx = factorize(m).unwrap();
    let divisors = ctx.divisors();
    let mut order: Vec<usize> = (1..=n).collect();
    order.shuffle(rng);
    let mut pairs = Vec::new();
    for k in 1..n {
        let parent = order[rng.gen_range(0..k)];
        pairs.push((parent.min(order[k]), parent.max(order[k])));
    }
    for j in 2..=n {
        for i in 1..j {
            if !pairs.contains(&(i, j)) && rng.gen_bool(0.5) {
                pairs.push((i, j));
            }
        }
    }
    let edges: Vec<(usize, usize, u128)> =
        pairs.into_iter().map(|(i, j)| (i, j, *divisors.choose(rng).unwrap())).collect();
    EdgeLabeledGraph::new(ctx, n, &edges).unwrap()
}

/// Random connected spanning subgraph of `g`: a random spanning tree plus
/// each other edge with probability 1/2.
pub fn random_spanning_edges<R: Rng>(rng: &mut R, g: &EdgeLabeledGraph) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let mut order: Vec<usize> = (1..=n).collect();
    order.shuffle(rng);
    let mut keep = Vec::new();
    for k in 1..n {
        let parent = order[rng.gen_range(0..k)];
        let (a, b) = (parent.min(order[k]), parent.max(order[k]));
        assert!(g.label(a, b).is_some(), "spanning trees assume a complete graph");
        keep.push((a, b));
    }
    for e in g.edges() {
        if !keep.contains(&(e.u, e.v)) && rng.gen_bool(0.5) {
            keep.push((e.u, e.v));
        }
    }
    keep
}
