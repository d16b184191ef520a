use serde::{Deserialize, Serialize};

use super::{max_weight_matching, pair_weight};
use crate::error::{Error, Result};
use crate::instance::DistanceMatrix;

/// Perfect matching of a vertex subset. Pairs are stored `(low, high)` and
/// sorted, so two matchings with the same pairs compare equal.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Matching {
    pub pairs: Vec<(usize, usize)>,
    pub weight: f64,
}

impl Matching {
    pub fn from_pairs(d: &DistanceMatrix, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut pairs: Vec<(usize, usize)> = pairs
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        pairs.sort_unstable();
        let weight = pair_weight(d, &pairs);
        Self { pairs, weight }
    }

    /// Partner of `v`, if `v` is covered.
    pub fn partner(&self, v: usize) -> Option<usize> {
        self.pairs.iter().find_map(|&(a, b)| {
            if a == v {
                Some(b)
            } else if b == v {
                Some(a)
            } else {
                None
            }
        })
    }
}

/// Minimum-weight perfect matching of the complete graph induced by `subset`.
pub fn min_weight_perfect_matching(d: &DistanceMatrix, subset: &[usize]) -> Result<Matching> {
    let k = subset.len();
    if k % 2 == 1 {
        return Err(Error::Domain(format!(
            "perfect matching needs an even vertex set, got {k}"
        )));
    }
    if k == 0 {
        return Ok(Matching {
            pairs: Vec::new(),
            weight: 0.0,
        });
    }
    let maxd = subset
        .iter()
        .flat_map(|&i| subset.iter().map(move |&j| (i, j)))
        .map(|(i, j)| d.get(i, j))
        .fold(0.0f64, f64::max);
    // Shifting every weight by a constant leaves the order of perfect
    // matchings unchanged; the shift keeps all weights positive.
    let big = maxd + 1.0;
    let mut edges = Vec::with_capacity(k * (k - 1) / 2);
    for a in 0..k {
        for b in a + 1..k {
            edges.push((a, b, big - d.get(subset[a], subset[b])));
        }
    }
    let mate = max_weight_matching(k, &edges, true);
    let mut pairs = Vec::with_capacity(k / 2);
    for (a, m) in mate.iter().enumerate() {
        match m {
            Some(b) if a < *b => pairs.push((subset[a], subset[*b])),
            Some(_) => {}
            None => {
                return Err(Error::Construction(format!(
                    "matching left vertex {} uncovered",
                    subset[a]
                )))
            }
        }
    }
    Ok(Matching::from_pairs(d, pairs))
}
