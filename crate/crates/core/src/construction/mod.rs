//! Schedule construction for `n ≡ 2 (mod 4)`, `n ≥ 10`.
//!
//! Matched pairs form `m = n/2` super-teams. Slots `1..=m-2` take four
//! days each and hold one super-game per super-team pair meeting; the
//! last six days play every still-owed game. See [`plan`] for the slot
//! layout, [`templates`] for the two-party blocks and [`right`] for the
//! three-party blocks.

mod grid;
mod last;
pub mod plan;
pub mod right;
pub mod templates;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{christofides_with_parts, min_weight_perfect_matching, Matching, SpanningTree, Tour};
use crate::instance::DistanceMatrix;
use crate::numbering::{assign_numbering, TeamNumbering};
pub use crate::schedule::{Game, Schedule, Slot};

use grid::Grid;
pub use last::LAST_DAYS;
pub use plan::{
    build_slot_plans, participation, right_daytypes, DayType, Participation, SlotPlan, SuperGame,
    SuperGameKind,
};
pub use right::{expand_right, RightBlock};
pub use templates::{expand_left, expand_normal, expand_special_left};

/// How many of the cheapest right-game layouts are tried against the
/// last slot.
const FINAL_CANDIDATES: usize = 8;

/// Everything the pipeline produces for one instance.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Construction {
    /// Schedule over original team indices.
    pub schedule: Schedule,
    /// The same schedule over label indices (`label - 1`).
    pub labeled: Schedule,
    pub numbering: TeamNumbering,
    pub plans: Vec<SlotPlan>,
    /// Chosen right-game layout per slot (see [`RightBlock::slots`]).
    pub right_layouts: Vec<usize>,
    pub matching: Matching,
    pub tree: SpanningTree,
    pub tour: Tour,
}

/// Checks the team count the construction supports.
pub fn check_supported(n: usize) -> Result<()> {
    if n % 4 != 2 || n < 10 {
        return Err(Error::Unsupported(format!(
            "construction needs n ≡ 2 (mod 4) and n ≥ 10, got {n}"
        )));
    }
    Ok(())
}

/// Full pipeline: matching, tour, numbering, slots, last slot.
pub fn construct_schedule(d: &DistanceMatrix) -> Result<Construction> {
    let n = d.n();
    check_supported(n)?;
    let all: Vec<usize> = (0..n).collect();
    let matching = min_weight_perfect_matching(d, &all)?;
    let parts = christofides_with_parts(d)?;
    let numbering = assign_numbering(d, &matching, &parts.tour);
    let dist = |a: usize, b: usize| numbering.dist(d, a + 1, b + 1);
    let (labeled, plans, right_layouts) = construct_labeled(n, &dist)?;
    let schedule = labeled.relabel(|l| numbering.original_of(l + 1));
    Ok(Construction {
        schedule,
        labeled,
        numbering,
        plans,
        right_layouts,
        matching,
        tree: parts.tree,
        tour: parts.tour,
    })
}

/// Builds the schedule over label indices, given distances between them.
pub fn construct_labeled(
    n: usize,
    dist: &dyn Fn(usize, usize) -> f64,
) -> Result<(Schedule, Vec<SlotPlan>, Vec<usize>)> {
    check_supported(n)?;
    let m = n / 2;
    let plans = build_slot_plans(m)?;
    let days = 2 * (n - 1);
    let mut grid = Grid::new(n, days);
    for p in &plans {
        let first = p.first_day();
        for g in &p.supergames {
            let games = match g.kind {
                SuperGameKind::Normal => expand_normal(g.participants[0], g.participants[1], first),
                SuperGameKind::Left => expand_left(g.participants[0], g.participants[1], first),
                SuperGameKind::SpecialLeft => expand_special_left(m, first),
                SuperGameKind::Right => continue,
            };
            grid.put_all(&games)?;
        }
    }
    let finals = right::solve_right_blocks(&grid, m, dist);
    if finals.is_empty() {
        return Err(Error::Construction("no feasible right-game layout".into()));
    }
    let first_last = 4 * (m - 2);
    let mut best: Option<(f64, Grid, Vec<usize>)> = None;
    let mut last_err = None;
    for (cost, layouts) in finals.into_iter().take(FINAL_CANDIDATES) {
        let mut g = grid.clone();
        for (k, &l) in layouts.iter().enumerate() {
            let s = k + 1;
            g.put_all(&expand_right(plans[k].right().participants[1], m, l, s))?;
        }
        match last::build_last_slot_on(&g, first_last, dist) {
            Ok((games, c)) => {
                let total = cost + c;
                if best.as_ref().is_none_or(|b| total < b.0) {
                    g.put_all(&games)?;
                    best = Some((total, g, layouts));
                }
            }
            Err(e) => last_err = Some(e),
        }
    }
    let (_, g, layouts) = best.ok_or_else(|| {
        last_err.unwrap_or_else(|| Error::Construction("last slot infeasible".into()))
    })?;
    Ok((g.into_schedule(), plans, layouts))
}

/// Completes a schedule whose first `first_day` days are played by
/// adding the six-day last slot. Returns the added games and their travel.
pub fn build_last_slot(
    partial: &Schedule,
    first_day: usize,
    dist: &dyn Fn(usize, usize) -> f64,
) -> Result<(Vec<Game>, f64)> {
    let mut g = Grid::new(partial.n, first_day + LAST_DAYS);
    for game in &partial.games {
        if game.day > first_day {
            return Err(Error::Ledger(format!("game on day {} after the ledger", game.day)));
        }
        g.put(*game).map_err(|e| Error::Ledger(e.to_string()))?;
    }
    last::build_last_slot_on(&g, first_day, dist)
}
