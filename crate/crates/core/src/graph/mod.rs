//! Graph primitives on the complete graph of team venues.

mod blossom;
mod matching;
mod mst;
mod tour;

pub use blossom::max_weight_matching;
pub use matching::{min_weight_perfect_matching, Matching};
pub use mst::{minimum_spanning_tree, prim, SpanningTree};
pub use tour::{christofides_tour, christofides_with_parts, eulerian_circuit, ChristofidesParts, Tour};

use crate::instance::DistanceMatrix;

/// Sum of `d` over the given pairs, accumulated in the order given.
pub fn pair_weight(d: &DistanceMatrix, pairs: &[(usize, usize)]) -> f64 {
    pairs.iter().map(|&(i, j)| d.get(i, j)).sum()
}
