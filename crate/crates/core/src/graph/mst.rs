use serde::{Deserialize, Serialize};

use super::pair_weight;
use crate::instance::DistanceMatrix;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpanningTree {
    pub edges: Vec<(usize, usize)>,
    pub weight: f64,
}

impl SpanningTree {
    pub fn degrees(&self, n: usize) -> Vec<usize> {
        let mut deg = vec![0; n];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }
}

/// Prim's algorithm on the dense distance matrix, O(n^2).
///
/// Grows from vertex 0; among equal keys the lowest vertex index is taken
/// first, and a key is only replaced by a strictly smaller one.
pub fn minimum_spanning_tree(d: &DistanceMatrix) -> SpanningTree {
    let (edges, _) = prim(d.n(), |i, j| d.get(i, j));
    let weight = pair_weight(d, &edges);
    SpanningTree { edges, weight }
}

/// Prim on an arbitrary dense weight function; returns sorted edges and the
/// total weight.
pub fn prim(n: usize, w: impl Fn(usize, usize) -> f64) -> (Vec<(usize, usize)>, f64) {
    if n == 0 {
        return (Vec::new(), 0.0);
    }
    let mut in_tree = vec![false; n];
    let mut key = vec![f64::INFINITY; n];
    let mut parent = vec![usize::MAX; n];
    key[0] = 0.0;
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for _ in 0..n {
        let mut u = usize::MAX;
        for v in 0..n {
            if !in_tree[v] && (u == usize::MAX || key[v] < key[u]) {
                u = v;
            }
        }
        in_tree[u] = true;
        if parent[u] != usize::MAX {
            let p = parent[u];
            edges.push((p.min(u), p.max(u)));
        }
        for v in 0..n {
            if !in_tree[v] && w(u, v) < key[v] {
                key[v] = w(u, v);
                parent[v] = u;
            }
        }
    }
    edges.sort_unstable();
    let total = edges.iter().map(|&(a, b)| w(a, b)).sum();
    (edges, total)
}
