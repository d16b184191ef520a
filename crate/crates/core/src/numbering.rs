//! Team numbering: matched pairs become super-teams, the two most central
//! pairs take the top labels, and the remaining even labels follow the
//! Hamilton cycle.
//!
//! Labels are 1-based throughout (`1..=n`), matching the usual `t_1..t_n`
//! notation; original team indices are 0-based.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::graph::{Matching, SpanningTree, Tour};
use crate::instance::DistanceMatrix;

/// Row sums `D(i)` and their total.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DegreeSums {
    pub per_team: Vec<f64>,
    pub total: f64,
}

pub fn degree_sums(d: &DistanceMatrix) -> DegreeSums {
    let per_team: Vec<f64> = (0..d.n())
        .map(|i| (0..d.n()).filter(|&j| j != i).map(|j| d.get(i, j)).sum())
        .collect();
    let total = per_team.iter().sum();
    DegreeSums { per_team, total }
}

/// Bijection between original indices and labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TeamNumbering {
    label_of: Vec<usize>,
    original_of: Vec<usize>,
}

impl TeamNumbering {
    /// Builds a numbering from `original_of[label - 1]`.
    pub fn from_originals(original_of: Vec<usize>) -> Self {
        let mut label_of = vec![0; original_of.len()];
        for (l, &o) in original_of.iter().enumerate() {
            label_of[o] = l + 1;
        }
        Self {
            label_of,
            original_of,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_originals((0..n).collect())
    }

    pub fn n(&self) -> usize {
        self.original_of.len()
    }

    /// Number of super-teams.
    pub fn m(&self) -> usize {
        self.n() / 2
    }

    pub fn label_of(&self, original: usize) -> usize {
        self.label_of[original]
    }

    pub fn original_of(&self, label: usize) -> usize {
        self.original_of[label - 1]
    }

    /// Distance between two labels.
    pub fn dist(&self, d: &DistanceMatrix, a: usize, b: usize) -> f64 {
        d.get(self.original_of(a), self.original_of(b))
    }

    /// Super-team index (1-based) of a label.
    pub fn super_of(label: usize) -> usize {
        label.div_ceil(2)
    }

    /// Two-column text dump: `label original` with 1-based originals.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for l in 1..=self.n() {
            let _ = writeln!(s, "{l} {}", self.original_of(l) + 1);
        }
        s
    }
}

/// Labels the teams from the matching `m` and cycle `c`.
///
/// The pair with the smallest `D`-sum gets `{n-1, n}`, the second smallest
/// `{n-3, n-2}` (ties go to the pair holding the smaller original index;
/// within these pairs the smaller index takes the odd label). The cycle is
/// then walked from its first vertex: the first-seen member of each
/// remaining pair takes the next even label `2, 4, ..., n-4` and its
/// partner the odd label just below.
pub fn assign_numbering(d: &DistanceMatrix, m: &Matching, c: &Tour) -> TeamNumbering {
    let n = d.n();
    let sums = degree_sums(d);
    let mut pairs: Vec<(usize, usize)> = m.pairs.clone();
    pairs.sort_by(|a, b| {
        let sa = sums.per_team[a.0] + sums.per_team[a.1];
        let sb = sums.per_team[b.0] + sums.per_team[b.1];
        sa.total_cmp(&sb).then(a.0.min(a.1).cmp(&b.0.min(b.1)))
    });
    let mut original_of = vec![usize::MAX; n];
    let (lo, hi) = (pairs[0].0.min(pairs[0].1), pairs[0].0.max(pairs[0].1));
    original_of[n - 2] = lo;
    original_of[n - 1] = hi;
    let (lo, hi) = (pairs[1].0.min(pairs[1].1), pairs[1].0.max(pairs[1].1));
    original_of[n - 4] = lo;
    original_of[n - 3] = hi;

    let mut taken = vec![false; n];
    for &(a, b) in &pairs[..2] {
        taken[a] = true;
        taken[b] = true;
    }
    let partner = |v: usize| m.partner(v).expect("matching must be perfect");
    let mut next_even = 2;
    for &v in &c.order {
        if taken[v] {
            continue;
        }
        let p = partner(v);
        taken[v] = true;
        taken[p] = true;
        original_of[next_even - 1] = v;
        original_of[next_even - 2] = p;
        next_even += 2;
    }
    debug_assert_eq!(next_even, n - 2);
    TeamNumbering::from_originals(original_of)
}

/// The two inequalities the numbering is built to satisfy.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NumberingDiagnostics {
    pub ineq3_lhs: f64,
    pub ineq3_rhs: f64,
    pub ineq4_lhs: f64,
    pub ineq4_rhs: f64,
    pub ineq3_holds: bool,
    pub ineq4_holds: bool,
    /// Weight of the cycle the even labels were read from.
    pub cycle_weight: f64,
}

/// `d_{2,4} + d_{4,6} + ... + d_{n-4,2}` over labels.
pub fn even_cycle_weight(d: &DistanceMatrix, numbering: &TeamNumbering) -> f64 {
    let n = numbering.n();
    let evens: Vec<usize> = (2..=n - 4).step_by(2).collect();
    let k = evens.len();
    if k < 2 {
        return 0.0;
    }
    (0..k)
        .map(|i| numbering.dist(d, evens[i], evens[(i + 1) % k]))
        .sum()
}

/// Sum of `D` over the four top labels `n-3..=n`.
pub fn top_four_degree_sum(d: &DistanceMatrix, numbering: &TeamNumbering) -> f64 {
    let sums = degree_sums(d);
    let n = numbering.n();
    (n - 3..=n)
        .map(|l| sums.per_team[numbering.original_of(l)])
        .sum()
}

pub fn numbering_diagnostics(
    numbering: &TeamNumbering,
    d: &DistanceMatrix,
    m: &Matching,
    t: &SpanningTree,
    c: &Tour,
) -> NumberingDiagnostics {
    let n = numbering.n() as f64;
    let delta = degree_sums(d).total;
    let ineq3_lhs = top_four_degree_sum(d, numbering);
    let ineq3_rhs = 4.0 / n * delta;
    let ineq4_lhs = even_cycle_weight(d, numbering);
    let ineq4_rhs = t.weight + m.weight;
    let tol = |x: f64| 1e-9 * x.abs().max(1.0);
    NumberingDiagnostics {
        ineq3_lhs,
        ineq3_rhs,
        ineq4_lhs,
        ineq4_rhs,
        ineq3_holds: ineq3_lhs <= ineq3_rhs + tol(ineq3_rhs),
        ineq4_holds: ineq4_lhs <= ineq4_rhs + tol(ineq4_rhs),
        cycle_weight: c.weight,
    }
}
