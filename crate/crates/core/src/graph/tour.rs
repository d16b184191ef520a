use serde::{Deserialize, Serialize};

use super::{min_weight_perfect_matching, minimum_spanning_tree, Matching, SpanningTree};
use crate::error::Result;
use crate::instance::DistanceMatrix;

/// Hamilton cycle given as a vertex order; the closing edge is implicit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Tour {
    pub order: Vec<usize>,
    pub weight: f64,
}

impl Tour {
    pub fn from_order(d: &DistanceMatrix, order: Vec<usize>) -> Self {
        let weight = cycle_weight(d, &order);
        Self { order, weight }
    }
}

pub(crate) fn cycle_weight(d: &DistanceMatrix, order: &[usize]) -> f64 {
    let k = order.len();
    if k < 2 {
        return 0.0;
    }
    (0..k).map(|i| d.get(order[i], order[(i + 1) % k])).sum()
}

/// Everything Christofides' heuristic computes on the way to its tour.
#[derive(Debug, Clone)]
pub struct ChristofidesParts {
    pub tree: SpanningTree,
    pub odd_matching: Matching,
    pub tour: Tour,
}

pub fn christofides_tour(d: &DistanceMatrix) -> Result<Tour> {
    christofides_with_parts(d).map(|p| p.tour)
}

/// MST, matching on its odd-degree vertices, Euler circuit of the union
/// started at vertex 0, then shortcut to first visits.
pub fn christofides_with_parts(d: &DistanceMatrix) -> Result<ChristofidesParts> {
    let n = d.n();
    let tree = minimum_spanning_tree(d);
    let deg = tree.degrees(n);
    let odd: Vec<usize> = (0..n).filter(|&v| deg[v] % 2 == 1).collect();
    let odd_matching = min_weight_perfect_matching(d, &odd)?;
    let mut multi: Vec<(usize, usize)> = tree.edges.clone();
    multi.extend(odd_matching.pairs.iter().copied());
    let circuit = eulerian_circuit(n, &multi, 0);
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for v in circuit {
        if !seen[v] {
            seen[v] = true;
            order.push(v);
        }
    }
    let tour = Tour::from_order(d, order);
    Ok(ChristofidesParts {
        tree,
        odd_matching,
        tour,
    })
}

/// Hierholzer's algorithm on an undirected multigraph whose vertices all
/// have even degree. Neighbours are consumed in insertion order.
pub fn eulerian_circuit(n: usize, edges: &[(usize, usize)], start: usize) -> Vec<usize> {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (id, &(a, b)) in edges.iter().enumerate() {
        adj[a].push((b, id));
        adj[b].push((a, id));
    }
    let mut used = vec![false; edges.len()];
    let mut ptr = vec![0usize; n];
    let mut stack = vec![start];
    let mut circuit = Vec::with_capacity(edges.len() + 1);
    while let Some(&v) = stack.last() {
        while ptr[v] < adj[v].len() && used[adj[v][ptr[v]].1] {
            ptr[v] += 1;
        }
        if ptr[v] == adj[v].len() {
            circuit.push(v);
            stack.pop();
        } else {
            let (w, id) = adj[v][ptr[v]];
            used[id] = true;
            stack.push(w);
        }
    }
    circuit.reverse();
    circuit
}
