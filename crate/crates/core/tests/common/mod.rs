//! Brute-force oracles shared by the integration tests. Deliberately naive:
//! they share no code with the library beyond `DistanceMatrix`.

#![allow(dead_code)]

use ttp2::instance::DistanceMatrix;
use ttp2::schedule::Schedule;
use ttp2::validation::ViolationKind;

/// Minimum weight of a perfect matching on `set`, by recursion on the
/// lowest vertex.
pub fn brute_matching(d: &DistanceMatrix, set: &[usize]) -> f64 {
    if set.is_empty() {
        return 0.0;
    }
    let first = set[0];
    let mut best = f64::INFINITY;
    for j in 1..set.len() {
        let rest: Vec<usize> = set[1..]
            .iter()
            .enumerate()
            .filter(|&(i, _)| i + 1 != j)
            .map(|(_, &v)| v)
            .collect();
        best = best.min(d.get(first, set[j]) + brute_matching(d, &rest));
    }
    best
}

/// Weights of all `n^(n-2)` labeled spanning trees of `K_n`, decoded from
/// Prüfer sequences.
pub fn all_tree_weights(n: usize, w: &dyn Fn(usize, usize) -> f64) -> Vec<f64> {
    if n < 2 {
        return vec![0.0];
    }
    if n == 2 {
        return vec![w(0, 1)];
    }
    let len = n - 2;
    let mut out = Vec::with_capacity(n.pow(len as u32));
    for code in 0..n.pow(len as u32) {
        let mut c = code;
        let seq: Vec<usize> = (0..len)
            .map(|_| {
                let s = c % n;
                c /= n;
                s
            })
            .collect();
        let mut degree = vec![1usize; n];
        for &s in &seq {
            degree[s] += 1;
        }
        let mut total = 0.0;
        for &s in &seq {
            let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
            total += w(leaf, s);
            degree[leaf] -= 1;
            degree[s] -= 1;
        }
        let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        total += w(rest[0], rest[1]);
        out.push(total);
    }
    out
}

pub fn brute_mst(n: usize, w: &dyn Fn(usize, usize) -> f64) -> f64 {
    all_tree_weights(n, w).into_iter().fold(f64::INFINITY, f64::min)
}

/// Shortest Hamilton cycle by trying every order of vertices `1..n`.
pub fn brute_tsp(d: &DistanceMatrix) -> f64 {
    fn go(d: &DistanceMatrix, last: usize, left: &mut Vec<usize>, acc: f64, best: &mut f64) {
        if left.is_empty() {
            *best = best.min(acc + d.get(last, 0));
            return;
        }
        for i in 0..left.len() {
            let v = left.swap_remove(i);
            go(d, v, left, acc + d.get(last, v), best);
            left.push(v);
            let l = left.len();
            left.swap(i, l - 1);
        }
    }
    let mut left: Vec<usize> = (1..d.n()).collect();
    let mut best = f64::INFINITY;
    go(d, 0, &mut left, 0.0, &mut best);
    best
}

/// Violation kinds of a schedule, recomputed from the raw game list.
/// Assumes every game names two distinct teams and a day in range.
pub fn naive_violation_kinds(s: &Schedule, k: usize) -> Vec<ViolationKind> {
    let n = s.n;
    let days = s.days;
    let games_of = |day: usize, t: usize| -> Vec<(usize, bool)> {
        s.games
            .iter()
            .filter(|g| g.day == day && (g.home == t || g.away == t))
            .map(|g| if g.home == t { (g.away, true) } else { (g.home, false) })
            .collect()
    };
    let mut kinds = Vec::new();
    if (1..=days).any(|day| (0..n).any(|t| games_of(day, t).len() != 1)) {
        kinds.push(ViolationKind::FixedGameTime);
    }
    let repeat = (0..n).any(|t| {
        (2..=days).any(|day| {
            let prev = games_of(day - 1, t);
            games_of(day, t).iter().any(|(o, _)| prev.iter().any(|(p, _)| p == o))
        })
    });
    if repeat {
        kinds.push(ViolationKind::NoRepeat);
    }
    let long_run = (0..n).any(|t| {
        (1..=days.saturating_sub(k)).any(|start| {
            let w: Vec<Vec<(usize, bool)>> = (start..=start + k).map(|day| games_of(day, t)).collect();
            w.iter().all(|g| g.len() == 1) && w.iter().all(|g| g[0].1 == w[0][0].1)
        })
    });
    if long_run {
        kinds.push(ViolationKind::BoundedByK);
    }
    let drr = (0..n).any(|h| {
        (0..n).any(|a| h != a && s.games.iter().filter(|g| g.home == h && g.away == a).count() != 1)
    });
    if drr {
        kinds.push(ViolationKind::DoubleRoundRobin);
    }
    kinds
}
