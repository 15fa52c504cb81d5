use std::collections::BTreeSet;

use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::graph::EdgeLabeledGraph;

/// A walk that repeats no edge. Vertices may repeat.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Trail {
    /// `v_{a_0}, v_{a_1}, ..., v_{a_k}`
    pub vertices: Vec<usize>,
    /// Edge ids, `edges[t]` joins `vertices[t]` and `vertices[t + 1]`.
    pub edges: Vec<usize>,
}

impl Trail {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// gcd of the edge labels along the trail.
    pub fn label_gcd(&self, g: &EdgeLabeledGraph) -> u128 {
        self.edges.iter().fold(0, |acc, &id| gcd(acc, g.edge(id).label))
    }
}

fn check_endpoints(g: &EdgeLabeledGraph, from: usize, to: usize) -> Result<()> {
    let n = g.vertex_count();
    for x in [from, to] {
        if x == 0 || x > n {
            return Err(Error::VertexOutOfRange { index: x, n });
        }
    }
    if from == to {
        return Err(Error::InvalidArgument(format!("trail endpoints coincide (v{from})")));
    }
    Ok(())
}

struct Walker<'a, F> {
    g: &'a EdgeLabeledGraph,
    target: usize,
    used_edges: Vec<bool>,
    on_path: Vec<bool>,
    simple: bool,
    trail: Trail,
    visit: F,
}

impl<F: FnMut(&Trail, u128)> Walker<'_, F> {
    fn step(&mut self, at: usize, acc: u128) {
        for &(next, id) in self.g.neighbors(at) {
            if self.used_edges[id] || (self.simple && self.on_path[next - 1]) {
                continue;
            }
            let acc2 = gcd(acc, self.g.edge(id).label);
            self.used_edges[id] = true;
            self.on_path[next - 1] = true;
            self.trail.vertices.push(next);
            self.trail.edges.push(id);
            if next == self.target {
                (self.visit)(&self.trail, acc2);
            }
            // A simple path must stop at its target; a trail may pass through.
            if !(self.simple && next == self.target) {
                self.step(next, acc2);
            }
            self.trail.vertices.pop();
            self.trail.edges.pop();
            self.on_path[next - 1] = false;
            self.used_edges[id] = false;
        }
    }
}

fn walk(
    g: &EdgeLabeledGraph,
    from: usize,
    to: usize,
    simple: bool,
    visit: impl FnMut(&Trail, u128),
) -> Result<()> {
    check_endpoints(g, from, to)?;
    let mut w = Walker {
        g,
        target: to,
        used_edges: vec![false; g.edges().len()],
        on_path: vec![false; g.vertex_count()],
        simple,
        trail: Trail { vertices: vec![from], edges: Vec::new() },
        visit,
    };
    w.on_path[from - 1] = true;
    w.step(from, 0);
    Ok(())
}

/// Depth-first enumeration of every trail from `from` to `to`. The callback
/// gets the trail and the gcd of its labels.
pub fn for_each_trail(
    g: &EdgeLabeledGraph,
    from: usize,
    to: usize,
    visit: impl FnMut(&Trail, u128),
) -> Result<()> {
    walk(g, from, to, false, visit)
}

/// Like [`for_each_trail`] restricted to simple paths (no repeated vertex).
pub fn for_each_simple_path(
    g: &EdgeLabeledGraph,
    from: usize,
    to: usize,
    visit: impl FnMut(&Trail, u128),
) -> Result<()> {
    walk(g, from, to, true, visit)
}

pub fn trails_between(g: &EdgeLabeledGraph, from: usize, to: usize) -> Result<Vec<Trail>> {
    let mut out = Vec::new();
    for_each_trail(g, from, to, |t, _| out.push(t.clone()))?;
    Ok(out)
}

pub fn simple_paths_between(g: &EdgeLabeledGraph, from: usize, to: usize) -> Result<Vec<Trail>> {
    let mut out = Vec::new();
    for_each_simple_path(g, from, to, |t, _| out.push(t.clone()))?;
    Ok(out)
}

/// `{ gcd of labels along t : t a trail from -> to }`
pub fn trail_gcd_set(g: &EdgeLabeledGraph, from: usize, to: usize) -> Result<BTreeSet<u128>> {
    let mut out = BTreeSet::new();
    for_each_trail(g, from, to, |_, d| {
        out.insert(d);
    })?;
    Ok(out)
}

/// Same as [`trail_gcd_set`] over simple paths only.
pub fn path_gcd_set(g: &EdgeLabeledGraph, from: usize, to: usize) -> Result<BTreeSet<u128>> {
    let mut out = BTreeSet::new();
    for_each_simple_path(g, from, to, |_, d| {
        out.insert(d);
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::factorize;

    fn triangle() -> EdgeLabeledGraph {
        EdgeLabeledGraph::new(factorize(120).unwrap(), 3, &[(1, 2, 4), (1, 3, 6), (2, 3, 10)])
            .unwrap()
    }

    /// Independent enumeration: extend edge sequences breadth-first and keep
    /// every sequence that forms a trail ending at `to`.
    fn brute_trails(g: &EdgeLabeledGraph, from: usize, to: usize) -> BTreeSet<Vec<usize>> {
        let mut found = BTreeSet::new();
        let mut frontier: Vec<(usize, Vec<usize>)> = vec![(from, vec![])];
        while let Some((at, seq)) = frontier.pop() {
            for (id, e) in g.edges().iter().enumerate() {
                if seq.contains(&id) {
                    continue;
                }
                let next = if e.u == at {
                    e.v
                } else if e.v == at {
                    e.u
                } else {
                    continue;
                };
                let mut s2 = seq.clone();
                s2.push(id);
                if next == to {
                    found.insert(s2.clone());
                }
                frontier.push((next, s2));
            }
        }
        found
    }

    #[test]
    fn triangle_has_two_trails() {
        let g = triangle();
        let trails = trails_between(&g, 3, 1).unwrap();
        assert_eq!(trails.len(), 2);
        assert_eq!(trail_gcd_set(&g, 3, 1).unwrap(), BTreeSet::from([2, 6]));
        for t in &trails {
            assert_eq!(t.vertices.first(), Some(&3));
            assert_eq!(t.vertices.last(), Some(&1));
        }
    }

    #[test]
    fn tree_has_unique_trail() {
        let g = EdgeLabeledGraph::new(factorize(6).unwrap(), 3, &[(1, 2, 2), (2, 3, 3)]).unwrap();
        assert_eq!(trails_between(&g, 3, 1).unwrap().len(), 1);
        let single = EdgeLabeledGraph::new(factorize(12).unwrap(), 2, &[(1, 2, 4)]).unwrap();
        assert_eq!(trail_gcd_set(&single, 2, 1).unwrap(), BTreeSet::from([4]));
    }

    #[test]
    fn k4_trails_match_brute_force() {
        let ctx = factorize(360).unwrap();
        let g = EdgeLabeledGraph::new(
            ctx,
            4,
            &[(1, 2, 2), (1, 3, 3), (2, 3, 4), (1, 4, 5), (2, 4, 6), (3, 4, 9)],
        )
        .unwrap();
        for (a, b) in [(4, 1), (1, 4), (2, 3), (3, 2)] {
            let dfs: BTreeSet<Vec<usize>> =
                trails_between(&g, a, b).unwrap().into_iter().map(|t| t.edges).collect();
            assert_eq!(dfs, brute_trails(&g, a, b));
        }
        // some trails revisit a vertex, so there are strictly more trails than paths
        assert!(trails_between(&g, 4, 1).unwrap().len() > simple_paths_between(&g, 4, 1).unwrap().len());
    }

    #[test]
    fn extending_a_trail_divides_its_gcd() {
        let g = triangle();
        for t in trails_between(&g, 3, 1).unwrap() {
            for k in 1..=t.len() {
                let prefix = Trail { vertices: t.vertices[..=k].to_vec(), edges: t.edges[..k].to_vec() };
                assert_eq!(prefix.label_gcd(&g) % t.label_gcd(&g), 0);
            }
        }
    }

    #[test]
    fn endpoint_errors() {
        let g = triangle();
        assert!(trails_between(&g, 1, 1).is_err());
        assert!(trails_between(&g, 0, 1).is_err());
        assert!(trails_between(&g, 1, 4).is_err());
    }
}
