//! Exhaustive optimal TTP-k solver for tiny instances (n ≤ 8).
//!
//! Depth-first, one day at a time: the lowest-indexed team without a game
//! that day picks an opponent and a venue. With pruning enabled a branch
//! is cut once its travel so far plus an admissible estimate of the
//! remaining travel reaches the incumbent. The estimate is, per team, the
//! cheapest way to finish its current trip and cover every venue it has
//! yet to visit with round trips of at most `k` venues.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instance::DistanceMatrix;
use crate::schedule::{Game, Schedule};

pub const MAX_EXACT_N: usize = 8;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExactResult {
    pub optimum: f64,
    pub schedule: Schedule,
    pub nodes_explored: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactOptions {
    pub k: usize,
    pub node_limit: u64,
    /// Cut branches with the remaining-travel bound.
    pub prune: bool,
}

impl Default for ExactOptions {
    fn default() -> Self {
        Self {
            k: 2,
            node_limit: 50_000_000,
            prune: true,
        }
    }
}

/// Optimal TTP-`k` schedule with bound pruning.
pub fn solve_exact(d: &DistanceMatrix, k: usize, node_limit: u64) -> Result<ExactResult> {
    solve_exact_with(
        d,
        ExactOptions {
            k,
            node_limit,
            prune: true,
        },
    )
}

pub fn solve_exact_with(d: &DistanceMatrix, opts: ExactOptions) -> Result<ExactResult> {
    let n = d.n();
    if n > MAX_EXACT_N {
        return Err(Error::Domain(format!(
            "exact search supports n ≤ {MAX_EXACT_N}, got {n}"
        )));
    }
    if opts.k == 0 {
        return Err(Error::Domain("k must be at least 1".into()));
    }
    let mut s = Search::new(d, opts);
    s.dfs(0, 0)?;
    match s.best {
        Some((optimum, games)) => Ok(ExactResult {
            optimum,
            schedule: Schedule::new(n, s.days, games),
            nodes_explored: s.nodes,
        }),
        None => Err(Error::Construction(format!(
            "no feasible TTP-{} schedule for n = {n}",
            opts.k
        ))),
    }
}

struct Search<'a> {
    d: &'a DistanceMatrix,
    n: usize,
    days: usize,
    opts: ExactOptions,
    played: Vec<bool>,
    last_opp: Vec<usize>,
    run_home: Vec<bool>,
    run_len: Vec<usize>,
    pos: Vec<usize>,
    home_left: Vec<usize>,
    away_left: Vec<usize>,
    cost: f64,
    games: Vec<Game>,
    best: Option<(f64, Vec<Game>)>,
    nodes: u64,
    /// cover[t][mask]: cheapest round trips from `t` visiting `mask`.
    cover: Vec<Vec<f64>>,
}

impl<'a> Search<'a> {
    fn new(d: &'a DistanceMatrix, opts: ExactOptions) -> Self {
        let n = d.n();
        Self {
            d,
            n,
            days: 2 * (n - 1),
            opts,
            played: vec![false; n * n],
            last_opp: vec![usize::MAX; n],
            run_home: vec![false; n],
            run_len: vec![0; n],
            pos: (0..n).collect(),
            home_left: vec![n - 1; n],
            away_left: vec![n - 1; n],
            cost: 0.0,
            games: Vec::with_capacity(n * (n - 1)),
            best: None,
            nodes: 0,
            cover: (0..n).map(|t| cover_costs(d, t, opts.k)).collect(),
        }
    }

    fn incumbent(&self) -> f64 {
        self.best.as_ref().map_or(f64::INFINITY, |b| b.0)
    }

    /// Admissible estimate of the travel still to come.
    fn remaining_bound(&self) -> f64 {
        let n = self.n;
        (0..n)
            .map(|t| {
                let mut rem = 0usize;
                for j in 0..n {
                    if j != t && !self.played[j * n + t] {
                        rem |= 1 << j;
                    }
                }
                let p = self.pos[t];
                if p == t {
                    self.cover[t][rem]
                } else {
                    self.finish_trip(t, p, rem, self.run_len[t])
                }
            })
            .sum()
    }

    /// Team `t` is away at `p` after `r` away games in a row.
    fn finish_trip(&self, t: usize, p: usize, rem: usize, r: usize) -> f64 {
        let mut best = self.d.get(p, t) + self.cover[t][rem];
        if r < self.opts.k {
            let mut bits = rem;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                best = best.min(self.d.get(p, v) + self.finish_trip(t, v, rem & !(1 << v), r + 1));
            }
        }
        best
    }

    fn can_finish(&self, t: usize) -> bool {
        let k = self.opts.k;
        let (h, a) = (self.home_left[t], self.away_left[t]);
        // After the current run, the minority side must separate the majority.
        let (cur_h, cur_len) = (self.run_home[t], self.run_len[t]);
        let (same, other) = if cur_h { (h, a) } else { (a, h) };
        // Remaining "same" games can extend the current run by k - cur_len
        // and fill k slots per gap after each "other" game.
        same <= (k - cur_len.min(k)) + k * other && other <= k * (same + 1)
    }

    fn apply(&mut self, day: usize, home: usize, away: usize) -> (f64, [(bool, usize, usize, usize); 2]) {
        let n = self.n;
        let saved = [
            (self.run_home[home], self.run_len[home], self.last_opp[home], self.pos[home]),
            (self.run_home[away], self.run_len[away], self.last_opp[away], self.pos[away]),
        ];
        let delta = self.d.get(self.pos[home], home) + self.d.get(self.pos[away], home);
        for (t, is_home, opp) in [(home, true, away), (away, false, home)] {
            if self.run_len[t] > 0 && self.run_home[t] == is_home {
                self.run_len[t] += 1;
            } else {
                self.run_home[t] = is_home;
                self.run_len[t] = 1;
            }
            self.last_opp[t] = opp;
            self.pos[t] = home;
        }
        self.home_left[home] -= 1;
        self.away_left[away] -= 1;
        self.played[home * n + away] = true;
        self.cost += delta;
        self.games.push(Game::new(day + 1, home, away));
        (delta, saved)
    }

    fn undo(&mut self, home: usize, away: usize, delta: f64, saved: [(bool, usize, usize, usize); 2]) {
        let n = self.n;
        for (t, s) in [(home, saved[0]), (away, saved[1])] {
            self.run_home[t] = s.0;
            self.run_len[t] = s.1;
            self.last_opp[t] = s.2;
            self.pos[t] = s.3;
        }
        self.home_left[home] += 1;
        self.away_left[away] += 1;
        self.played[home * n + away] = false;
        self.cost -= delta;
        self.games.pop();
    }

    fn dfs(&mut self, day: usize, busy: u32) -> Result<()> {
        let n = self.n;
        self.nodes += 1;
        if self.nodes > self.opts.node_limit {
            return Err(Error::Limit(self.opts.node_limit));
        }
        if busy == (1u32 << n) - 1 {
            if day + 1 == self.days {
                let total = canonical_total(self.d, n, &self.games);
                if total < self.incumbent() {
                    self.best = Some((total, self.games.clone()));
                }
                return Ok(());
            }
            return self.dfs(day + 1, 0);
        }
        let t = (0..n).find(|&t| busy & (1 << t) == 0).expect("some team free");
        let mut moves: Vec<(f64, usize, usize)> = Vec::with_capacity(2 * n);
        for o in t + 1..n {
            if busy & (1 << o) != 0 || self.last_opp[t] == o {
                continue;
            }
            for (h, a) in [(t, o), (o, t)] {
                if self.played[h * n + a] {
                    continue;
                }
                let k = self.opts.k;
                let blocked = |x: usize, home: bool| {
                    self.run_len[x] >= k && self.run_home[x] == home
                };
                if blocked(h, true) || blocked(a, false) {
                    continue;
                }
                let step = self.d.get(self.pos[h], h) + self.d.get(self.pos[a], h);
                moves.push((step, h, a));
            }
        }
        moves.sort_by(|x, y| x.0.total_cmp(&y.0));
        for (_, h, a) in moves {
            let (delta, saved) = self.apply(day, h, a);
            let ok = self.can_finish(h) && self.can_finish(a);
            let promising = !self.opts.prune || {
                // The slack keeps pruning from cutting ties that the
                // unpruned search would resolve differently in floating point.
                let inc = self.incumbent();
                self.cost + self.remaining_bound() < inc + 1e-9 * inc.abs().max(1.0)
            };
            if ok && promising {
                let r = self.dfs(day, busy | (1 << h) | (1 << a));
                if r.is_err() {
                    self.undo(h, a, delta, saved);
                    return r;
                }
            }
            self.undo(h, a, delta, saved);
        }
        Ok(())
    }
}

/// Total travel summed team by team in day order, so equal schedules
/// always get bit-identical totals.
fn canonical_total(d: &DistanceMatrix, n: usize, games: &[Game]) -> f64 {
    let mut sorted = games.to_vec();
    sorted.sort_unstable();
    let mut total = 0.0;
    for t in 0..n {
        let mut pos = t;
        let mut leg = 0.0;
        for g in sorted.iter().filter(|g| g.home == t || g.away == t) {
            leg += d.get(pos, g.home);
            pos = g.home;
        }
        total += leg + d.get(pos, t);
    }
    total
}

/// `out[mask]`: cheapest set of round trips from `home`, each visiting at
/// most `k` venues, that together visit every venue in `mask` once.
fn cover_costs(d: &DistanceMatrix, home: usize, k: usize) -> Vec<f64> {
    let n = d.n();
    let full = 1usize << n;
    // path[mask][last]: home → … → last through exactly `mask`.
    let mut path = vec![vec![f64::INFINITY; n]; full];
    for v in (0..n).filter(|&v| v != home) {
        path[1 << v][v] = d.get(home, v);
    }
    let mut trip = vec![f64::INFINITY; full];
    for mask in 1..full {
        if mask & (1 << home) != 0 || mask.count_ones() as usize > k {
            continue;
        }
        for last in 0..n {
            let c = path[mask][last];
            if !c.is_finite() {
                continue;
            }
            trip[mask] = trip[mask].min(c + d.get(last, home));
            for v in (0..n).filter(|&v| v != home && mask & (1 << v) == 0) {
                let nm = mask | (1 << v);
                path[nm][v] = path[nm][v].min(c + d.get(last, v));
            }
        }
    }
    let mut out = vec![f64::INFINITY; full];
    out[0] = 0.0;
    for mask in 1..full {
        if mask & (1 << home) != 0 {
            continue;
        }
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        // Sub-trips containing the lowest venue.
        let mut sub = rest;
        loop {
            let s = sub | low;
            if trip[s].is_finite() {
                out[mask] = out[mask].min(trip[s] + out[mask ^ s]);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::validation::validate_schedule;

    #[test]
    fn zero_metric() {
        let d = DistanceMatrix::uniform(4, 0.0).unwrap();
        let r = solve_exact(&d, 2, 1_000_000).unwrap();
        assert_eq!(r.optimum, 0.0);
        assert!(validate_schedule(&r.schedule, 2, 6).is_empty());
    }

    #[test]
    fn rejects_large_n() {
        let d = DistanceMatrix::uniform(10, 1.0).unwrap();
        assert!(matches!(solve_exact(&d, 2, 10), Err(Error::Domain(_))));
    }

    #[test]
    fn node_limit() {
        let d = DistanceMatrix::uniform(6, 1.0).unwrap();
        assert_eq!(solve_exact(&d, 2, 5).unwrap_err(), Error::Limit(5));
    }
}
