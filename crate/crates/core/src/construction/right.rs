//! Right super-games `(u_{i-1}, u_i, u_m)` and the slot-by-slot search
//! that lays them out.
//!
//! The six pairs played in a right super-game form a 6-cycle, so a day is
//! one of its two perfect matchings and the four days read `X Y X Y` with
//! every pair met once per venue. A layout is therefore a choice of which
//! matching opens plus one venue bit per pair: 128 layouts per slot.
//! Consecutive right games share `u_m` and one rotating super-team, so the
//! layouts are chosen jointly by dynamic programming over the slots.

use super::grid::{seq_ok, Grid};
use super::plan::wrap;
use super::templates::members;
use crate::schedule::{Game, Slot};

pub const LAYOUTS: usize = 128;

/// Positions in [`RightBlock::teams`].
const AO: usize = 0;
const AE: usize = 1;
const BO: usize = 2;
const BE: usize = 3;
const G1: usize = 4;
const G2: usize = 5;

/// The six teams and the 6-cycle of pairs of one right super-game.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RightBlock {
    pub i: usize,
    /// `[AO, AE, BO, BE, G1, G2]` as label indices.
    pub teams: [usize; 6],
    /// Pairs in cycle order, as positions into `teams`.
    pub cycle: [(usize, usize); 6],
}

impl RightBlock {
    /// Right super-game with `B = u_i`, `A = u_{i-1}` (`u_0 = u_{m-2}`).
    pub fn new(i: usize, m: usize) -> Self {
        let a = wrap(i as i64 - 1, m);
        let [ao, ae] = members(a);
        let [bo, be] = members(i);
        let [g1, g2] = members(m);
        let cycle = if i == 1 {
            [(AO, BO), (BO, G1), (G1, AE), (AE, BE), (BE, G2), (G2, AO)]
        } else if i.is_multiple_of(2) {
            [(BE, AO), (AO, G2), (G2, BO), (BO, G1), (G1, AE), (AE, BE)]
        } else {
            [(AO, BO), (BO, G1), (G1, AE), (AE, G2), (G2, BE), (BE, AO)]
        };
        Self {
            i,
            teams: [ao, ae, bo, be, g1, g2],
            cycle,
        }
    }

    /// Per-team four-day slots of `layout` (indexed like `teams`).
    pub fn slots(&self, layout: usize) -> [[Slot; 4]; 6] {
        let order = layout >> 6;
        let mut out = [[Slot { opponent: 0, home: false }; 4]; 6];
        for (k, &(p, q)) in self.cycle.iter().enumerate() {
            let first = (k % 2) ^ order;
            let flip = (layout >> k) & 1 == 1;
            let (h1, a1) = if flip { (q, p) } else { (p, q) };
            for (day, (h, a)) in [(first, (h1, a1)), (first + 2, (a1, h1))] {
                out[h][day] = Slot { opponent: self.teams[a], home: true };
                out[a][day] = Slot { opponent: self.teams[h], home: false };
            }
        }
        out
    }

    pub fn games(&self, layout: usize, first_day: usize) -> Vec<Game> {
        let sl = self.slots(layout);
        let mut g = Vec::with_capacity(12);
        for (pos, days) in sl.iter().enumerate() {
            for (k, s) in days.iter().enumerate() {
                if s.home {
                    g.push(Game::new(first_day + k, self.teams[pos], s.opponent));
                }
            }
        }
        g
    }
}

/// Twelve games of the right super-game `(u_{i-1}, u_i, u_m)` in slot `s`.
pub fn expand_right(i: usize, m: usize, layout: usize, s: usize) -> Vec<Game> {
    RightBlock::new(i, m).games(layout, 4 * s - 3)
}

/// Precomputed facts about one layout of one slot.
struct Cand {
    slots: [[Slot; 4]; 6],
    unary: f64,
}

/// Chooses layouts for all slots. `grid` must hold every two-party
/// super-game. Returns, for each feasible final layout, the cheapest
/// cost and the layout sequence, sorted by cost.
pub(crate) fn solve_right_blocks(
    grid: &Grid,
    m: usize,
    dist: &dyn Fn(usize, usize) -> f64,
) -> Vec<(f64, Vec<usize>)> {
    let slots = m - 2;
    let blocks: Vec<RightBlock> = (1..=slots)
        .map(|s| RightBlock::new(super::plan::right_index(s, m), m))
        .collect();
    let venue = |t: usize, s: &Slot| if s.home { t } else { s.opponent };

    let mut cands: Vec<Vec<Option<Cand>>> = Vec::with_capacity(slots);
    for (si, b) in blocks.iter().enumerate() {
        let first = 4 * si;
        let mut row = Vec::with_capacity(LAYOUTS);
        for layout in 0..LAYOUTS {
            let sl = b.slots(layout);
            let mut ok = true;
            let mut cost = 0.0;
            for (pos, days) in sl.iter().enumerate() {
                let t = b.teams[pos];
                for k in 0..3 {
                    cost += dist(venue(t, &days[k]), venue(t, &days[k + 1]));
                }
                let fixed_before = si == 0 || pos == AO || pos == AE;
                if fixed_before {
                    if si == 0 {
                        cost += dist(t, venue(t, &days[0]));
                    } else {
                        let prev = [
                            grid.get(first - 2, t).expect("fixed day"),
                            grid.get(first - 1, t).expect("fixed day"),
                        ];
                        let seq = [prev[0], prev[1], days[0], days[1]];
                        ok &= seq_ok(&seq);
                        cost += dist(venue(t, &prev[1]), venue(t, &days[0]));
                    }
                }
                if (pos == BO || pos == BE) && si + 1 < slots {
                    let next = [
                        grid.get(first + 4, t).expect("fixed day"),
                        grid.get(first + 5, t).expect("fixed day"),
                    ];
                    let seq = [days[2], days[3], next[0], next[1]];
                    ok &= seq_ok(&seq);
                    cost += dist(venue(t, &days[3]), venue(t, &next[0]));
                }
                if !ok {
                    break;
                }
            }
            row.push(ok.then_some(Cand { slots: sl, unary: cost }));
        }
        cands.push(row);
    }

    // Shared teams between slot s-1 and s: (position in s-1, position in s).
    const SHARED: [(usize, usize); 4] = [(AO, BO), (AE, BE), (G1, G1), (G2, G2)];
    let mut best = vec![vec![f64::INFINITY; LAYOUTS]; slots];
    let mut parent = vec![vec![usize::MAX; LAYOUTS]; slots];
    for (l, c) in cands[0].iter().enumerate() {
        if let Some(c) = c {
            best[0][l] = c.unary;
        }
    }
    for si in 1..slots {
        let prev_t = blocks[si - 1].teams;
        for l in 0..LAYOUTS {
            let Some(c) = &cands[si][l] else { continue };
            let mut bv = f64::INFINITY;
            let mut bp = usize::MAX;
            for p in 0..LAYOUTS {
                let base = best[si - 1][p];
                if !base.is_finite() {
                    continue;
                }
                let pc = cands[si - 1][p].as_ref().expect("finite implies feasible");
                let mut cost = base;
                let mut ok = true;
                for &(pp, cp) in &SHARED {
                    let t = prev_t[pp];
                    let a = &pc.slots[pp];
                    let b = &c.slots[cp];
                    let seq = [a[2], a[3], b[0], b[1]];
                    if !seq_ok(&seq) {
                        ok = false;
                        break;
                    }
                    cost += dist(venue(t, &a[3]), venue(t, &b[0]));
                }
                if ok && cost < bv {
                    bv = cost;
                    bp = p;
                }
            }
            if bp != usize::MAX {
                best[si][l] = bv + c.unary;
                parent[si][l] = bp;
            }
        }
    }
    let mut finals: Vec<(f64, Vec<usize>)> = (0..LAYOUTS)
        .filter(|&l| best[slots - 1][l].is_finite())
        .map(|l| {
            let mut seq = vec![l; slots];
            for si in (1..slots).rev() {
                seq[si - 1] = parent[si][seq[si]];
            }
            (best[slots - 1][l], seq)
        })
        .collect();
    finals.sort_by(|a, b| a.0.total_cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    finals
}
