//! Edge-labeled graphs over `Z/mZ`.
//!
//! Vertices are 1-indexed (`v_1..v_n`). The order matters: flow-up classes are
//! defined by counting leading zeros in this order. Complete graphs are built
//! as `K_{n+1} = K_n + S_n`, which fixes the edge numbering
//! `index(e_ij) = r_{j-1} + i` with `r_k = k(k-1)/2`.

use std::collections::{BTreeSet, VecDeque};

use crate::arith::ModulusContext;
use crate::error::{Error, Result};

/// `r_k = k(k-1)/2`, the number of edges of `K_k`.
pub fn complete_edge_count(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// 1-based canonical index of edge `v_i v_j` (`i < j`) in a complete graph.
pub fn complete_edge_index(i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j);
    complete_edge_count(j - 1) + i
}

/// Inverse of [`complete_edge_index`].
pub fn complete_edge_endpoints(index: usize) -> (usize, usize) {
    assert!(index >= 1, "edge indices start at 1");
    let mut j = 2;
    while complete_edge_count(j) < index {
        j += 1;
    }
    (index - complete_edge_count(j - 1), j)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    /// Smaller endpoint.
    pub u: usize,
    /// Larger endpoint.
    pub v: usize,
    /// Canonical label: a positive divisor of `m`.
    pub label: u128,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeLabeledGraph {
    ctx: ModulusContext,
    n: usize,
    /// Sorted by `(v, u)`, which is the canonical order on complete graphs.
    edges: Vec<Edge>,
    /// `adjacency[x - 1]` lists `(neighbor, edge id)`.
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl EdgeLabeledGraph {
    /// Builds a simple connected graph; labels are canonicalized to `gcd(l, m)`
    /// (`0` becomes `m`).
    pub fn new(ctx: ModulusContext, n: usize, edges: &[(usize, usize, u128)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("graph has no vertices".into()));
        }
        let mut seen = BTreeSet::new();
        let mut list = Vec::with_capacity(edges.len());
        for &(a, b, raw) in edges {
            for x in [a, b] {
                if x == 0 || x > n {
                    return Err(Error::VertexOutOfRange { index: x, n });
                }
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at v{a}")));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if !seen.insert((u, v)) {
                return Err(Error::InvalidGraph(format!("repeated edge v{u}v{v}")));
            }
            list.push(Edge { u, v, label: ctx.canonical_label(raw) });
        }
        list.sort_by_key(|e| (e.v, e.u));
        let mut adjacency = vec![Vec::new(); n];
        for (id, e) in list.iter().enumerate() {
            adjacency[e.u - 1].push((e.v, id));
            adjacency[e.v - 1].push((e.u, id));
        }
        let g = EdgeLabeledGraph { ctx, n, edges: list, adjacency };
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    pub fn ctx(&self) -> &ModulusContext {
        &self.ctx
    }

    pub fn modulus(&self) -> u128 {
        self.ctx.modulus()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> &Edge {
        &self.edges[id]
    }

    /// Neighbors of `x` with the connecting edge id.
    pub fn neighbors(&self, x: usize) -> &[(usize, usize)] {
        &self.adjacency[x - 1]
    }

    pub fn label(&self, a: usize, b: usize) -> Option<u128> {
        self.edge_id(a, b).map(|id| self.edges[id].label)
    }

    pub fn edge_id(&self, a: usize, b: usize) -> Option<usize> {
        if a == 0 || a > self.n {
            return None;
        }
        self.adjacency[a - 1].iter().find(|&&(w, _)| w == b).map(|&(_, id)| id)
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == complete_edge_count(self.n)
    }

    /// Labels in canonical complete-graph order `l_1..l_{r_n}`.
    pub fn complete_labels(&self) -> Option<Vec<u128>> {
        self.is_complete().then(|| self.edges.iter().map(|e| e.label).collect())
    }

    /// Whether every label is a proper nonzero ideal generator (`1 < l < m`).
    pub fn has_proper_labels(&self) -> bool {
        self.edges.iter().all(|e| e.label > 1 && e.label < self.modulus())
    }

    fn is_connected(&self) -> bool {
        self.component_of(1, |_| true).len() == self.n
    }

    /// Vertex set of the component containing `start` in the subgraph that
    /// keeps only edges accepted by `keep`. Sorted ascending.
    pub fn component_of(&self, start: usize, keep: impl Fn(&Edge) -> bool) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        seen[start - 1] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &(w, id) in self.neighbors(x) {
                if !seen[w - 1] && keep(&self.edges[id]) {
                    seen[w - 1] = true;
                    queue.push_back(w);
                }
            }
        }
        (1..=self.n).filter(|&x| seen[x - 1]).collect()
    }

    /// Adds the star `S_n` with centre `v_{n+1}`; `star_labels[i]` labels `v_{i+1} v_{n+1}`.
    pub fn add_star(&self, star_labels: &[u128]) -> Result<Self> {
        if !self.is_complete() {
            return Err(Error::InvalidGraph("add_star needs a complete graph".into()));
        }
        if star_labels.len() != self.n {
            return Err(Error::InvalidArgument(format!(
                "star on K_{} needs {} labels, got {}",
                self.n,
                self.n,
                star_labels.len()
            )));
        }
        let mut edges: Vec<(usize, usize, u128)> =
            self.edges.iter().map(|e| (e.u, e.v, e.label)).collect();
        edges.extend(star_labels.iter().enumerate().map(|(i, &l)| (i + 1, self.n + 1, l)));
        EdgeLabeledGraph::new(self.ctx.clone(), self.n + 1, &edges)
    }

    /// Same vertices, only the listed edges (given by endpoints), labels kept.
    pub fn spanning_subgraph(&self, keep: &[(usize, usize)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(keep.len());
        for &(a, b) in keep {
            let id = self.edge_id(a, b).ok_or_else(|| {
                Error::InvalidArgument(format!("v{a}v{b} is not an edge of the graph"))
            })?;
            let e = self.edges[id];
            edges.push((e.u, e.v, e.label));
        }
        EdgeLabeledGraph::new(self.ctx.clone(), self.n, &edges)
    }
}

/// Labels `l_1..l_{r_n}` of `K_n` in canonical edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompleteGraphLabels {
    pub n: usize,
    pub labels: Vec<u128>,
}

impl CompleteGraphLabels {
    pub fn new(n: usize, labels: Vec<u128>) -> Self {
        CompleteGraphLabels { n, labels }
    }
}

/// Builds `K_n` with `label(e_ij) = labels[r_{j-1} + i]`.
pub fn complete_from_labels(input: &CompleteGraphLabels, ctx: &ModulusContext) -> Result<EdgeLabeledGraph> {
    let n = input.n;
    if n < 3 {
        return Err(Error::InvalidArgument(format!("complete graph needs n >= 3, got {n}")));
    }
    if input.labels.len() != complete_edge_count(n) {
        return Err(Error::InvalidArgument(format!(
            "K_{n} needs {} labels, got {}",
            complete_edge_count(n),
            input.labels.len()
        )));
    }
    let m = ctx.modulus();
    let mut edges = Vec::with_capacity(input.labels.len());
    for (k, &l) in input.labels.iter().enumerate() {
        let (i, j) = complete_edge_endpoints(k + 1);
        if l <= 1 || l >= m || !m.is_multiple_of(l) {
            return Err(Error::InvalidLabel {
                u: i,
                v: j,
                label: l,
                reason: format!("expected a divisor of {m} strictly between 1 and {m}"),
            });
        }
        edges.push((i, j, l));
    }
    EdgeLabeledGraph::new(ctx.clone(), n, &edges)
}

/// Edge sets of common spanning subgraphs, as endpoint pairs.
pub mod shapes {
    /// Path `v_1 v_2 ... v_n`.
    pub fn path(n: usize) -> Vec<(usize, usize)> {
        (1..n).map(|i| (i, i + 1)).collect()
    }

    /// Cycle `v_1 ... v_n v_1`.
    pub fn cycle(n: usize) -> Vec<(usize, usize)> {
        let mut e = path(n);
        if n >= 3 {
            e.push((1, n));
        }
        e
    }

    /// Star with the given centre joined to every other vertex.
    pub fn star(n: usize, centre: usize) -> Vec<(usize, usize)> {
        (1..=n).filter(|&x| x != centre).map(|x| (centre, x)).collect()
    }

    /// Wheel: star at `hub` plus the rim cycle through the remaining vertices
    /// in index order.
    pub fn wheel(n: usize, hub: usize) -> Vec<(usize, usize)> {
        let rim: Vec<usize> = (1..=n).filter(|&x| x != hub).collect();
        let mut e = star(n, hub);
        for w in rim.windows(2) {
            e.push((w[0], w[1]));
        }
        if rim.len() >= 3 {
            e.push((rim[0], rim[rim.len() - 1]));
        }
        e
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::factorize;

    #[test]
    fn edge_index_matches_construction_order() {
        assert_eq!(complete_edge_index(1, 2), 1);
        assert_eq!(complete_edge_index(1, 3), 2);
        assert_eq!(complete_edge_index(2, 3), 3);
        assert_eq!(complete_edge_index(1, 4), 4);
        assert_eq!(complete_edge_index(2, 4), 5);
        assert_eq!(complete_edge_index(3, 4), 6);
        assert_eq!(complete_edge_index(1, 5), 7);
        assert_eq!(complete_edge_index(4, 5), 10);
    }

    #[test]
    fn edge_index_is_a_bijection() {
        for n in 2..=12 {
            let mut seen = BTreeSet::new();
            for j in 2..=n {
                for i in 1..j {
                    let idx = complete_edge_index(i, j);
                    assert!(idx >= 1 && idx <= complete_edge_count(n));
                    assert!(seen.insert(idx));
                    assert_eq!(complete_edge_endpoints(idx), (i, j));
                }
            }
            assert_eq!(seen.len(), complete_edge_count(n));
        }
    }

    #[test]
    fn triangle_labels_by_index() {
        let ctx = factorize(1000).unwrap();
        let g = complete_from_labels(&CompleteGraphLabels::new(3, vec![4, 8, 10]), &ctx).unwrap();
        assert_eq!(g.label(1, 2), Some(4));
        assert_eq!(g.label(1, 3), Some(8));
        assert_eq!(g.label(3, 2), Some(10));
    }

    #[test]
    fn k4_and_k5_new_edges() {
        let ctx = factorize(2u128.pow(20)).unwrap();
        let labels: Vec<u128> = (1..=6).map(|k| 2u128.pow(k)).collect();
        let g = complete_from_labels(&CompleteGraphLabels::new(4, labels), &ctx).unwrap();
        assert_eq!(g.label(1, 4), Some(2u128.pow(4)));
        assert_eq!(g.label(2, 4), Some(2u128.pow(5)));
        assert_eq!(g.label(3, 4), Some(2u128.pow(6)));
        let k5 = g.add_star(&[2, 2, 2, 2]).unwrap();
        assert_eq!(k5.edges().len(), 10);
        assert!(k5.is_complete());
        assert_eq!(k5.edges()[6], Edge { u: 1, v: 5, label: 2 });
        assert_eq!(k5.edges()[9], Edge { u: 4, v: 5, label: 2 });
    }

    #[test]
    fn add_star_matches_direct_construction() {
        let ctx = factorize(720).unwrap();
        let ls = vec![2, 3, 4, 5, 6, 8, 9, 10, 12, 15];
        let k4 = complete_from_labels(&CompleteGraphLabels::new(4, ls[..6].to_vec()), &ctx).unwrap();
        let k5 = complete_from_labels(&CompleteGraphLabels::new(5, ls.clone()), &ctx).unwrap();
        assert_eq!(k4.add_star(&ls[6..]).unwrap(), k5);
        let k3 = complete_from_labels(&CompleteGraphLabels::new(3, ls[..3].to_vec()), &ctx).unwrap();
        assert_eq!(k3.add_star(&ls[3..6]).unwrap(), k4);
    }

    #[test]
    fn add_star_rejects_bad_input() {
        let ctx = factorize(6).unwrap();
        let path = EdgeLabeledGraph::new(ctx.clone(), 3, &[(1, 2, 2), (2, 3, 3)]).unwrap();
        assert!(path.add_star(&[2, 2, 2]).is_err());
        let k2 = EdgeLabeledGraph::new(ctx, 2, &[(1, 2, 2)]).unwrap();
        assert!(k2.add_star(&[2]).is_err());
        assert_eq!(k2.add_star(&[2, 2]).unwrap().edges().len(), 3);
    }

    #[test]
    fn construction_errors() {
        let ctx = factorize(15).unwrap();
        assert!(complete_from_labels(&CompleteGraphLabels::new(3, vec![3, 5]), &ctx).is_err());
        assert!(matches!(
            complete_from_labels(&CompleteGraphLabels::new(3, vec![3, 5, 15]), &ctx),
            Err(Error::InvalidLabel { .. })
        ));
        assert!(matches!(
            complete_from_labels(&CompleteGraphLabels::new(3, vec![3, 5, 1]), &ctx),
            Err(Error::InvalidLabel { .. })
        ));
        assert_eq!(
            EdgeLabeledGraph::new(ctx.clone(), 3, &[(1, 2, 3)]).unwrap_err(),
            Error::Disconnected
        );
        assert!(EdgeLabeledGraph::new(ctx.clone(), 2, &[(1, 1, 3)]).is_err());
        assert!(EdgeLabeledGraph::new(ctx, 2, &[(1, 2, 3), (2, 1, 5)]).is_err());
    }

    #[test]
    fn labels_are_canonicalized() {
        let ctx = factorize(15).unwrap();
        let g = EdgeLabeledGraph::new(ctx, 3, &[(1, 2, 10), (2, 3, 0)]).unwrap();
        assert_eq!(g.label(1, 2), Some(5));
        assert_eq!(g.label(2, 3), Some(15));
    }

    #[test]
    fn spanning_subgraphs() {
        let ctx = factorize(64).unwrap();
        let k5 = complete_from_labels(&CompleteGraphLabels::new(5, vec![2; 10]), &ctx).unwrap();
        let wheel = k5.spanning_subgraph(&shapes::wheel(5, 1)).unwrap();
        assert_eq!(wheel.edges().len(), 8);
        let k4 = complete_from_labels(&CompleteGraphLabels::new(4, vec![2, 4, 8, 16, 32, 2]), &ctx)
            .unwrap();
        let w4 = k4.spanning_subgraph(&shapes::wheel(4, 1)).unwrap();
        assert_eq!(w4, k4);
        let star = k5.spanning_subgraph(&shapes::star(5, 1)).unwrap();
        assert_eq!(star.edges().len(), 4);
        let path = k5.spanning_subgraph(&shapes::path(5)).unwrap();
        assert_eq!(path.edges().len(), 4);
        assert_eq!(path.vertex_count(), 5);
        for e in path.edges() {
            assert_eq!(Some(e.label), k5.label(e.u, e.v));
        }
        assert_eq!(k5.spanning_subgraph(&[(1, 2), (3, 4)]).unwrap_err(), Error::Disconnected);
    }
}
