//! Travel accounting, lower bounds, the analytic upper bound and the
//! extra-travel breakdown.

use serde::{Deserialize, Serialize};

use crate::construction::{construct_schedule, Construction};
use crate::error::{Error, Result};
use crate::graph::{Matching, SpanningTree};
use crate::instance::{DistanceMatrix, InstanceKind};
use crate::numbering::{degree_sums, even_cycle_weight, top_four_degree_sum, TeamNumbering};
use crate::schedule::Schedule;
use crate::validation::validate_schedule;

/// Venues visited by one team, starting and ending at home.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Itinerary {
    pub team: usize,
    /// `venues[0]` and the last entry are the team's home.
    pub venues: Vec<usize>,
    pub distance: f64,
}

impl Itinerary {
    /// Maximal away runs as venue lists.
    pub fn trips(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        for &v in &self.venues {
            if v == self.team {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
            } else {
                cur.push(v);
            }
        }
        out
    }
}

/// Itinerary of `team` (0-based). Days on which the team has no game are
/// skipped; a team with several games on a day uses the first listed.
pub fn team_itinerary(sched: &Schedule, d: &DistanceMatrix, team: usize) -> Itinerary {
    let mut per_day: Vec<Option<usize>> = vec![None; sched.days];
    for g in &sched.games {
        let slot = per_day.get_mut(g.day.wrapping_sub(1));
        if let Some(s @ None) = slot {
            if g.home == team {
                *s = Some(team);
            } else if g.away == team {
                *s = Some(g.home);
            }
        }
    }
    let mut venues = vec![team];
    venues.extend(per_day.into_iter().flatten());
    venues.push(team);
    let distance = venues.windows(2).map(|w| d.get(w[0], w[1])).sum();
    Itinerary {
        team,
        venues,
        distance,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LowerBounds {
    pub lb1: f64,
    pub lb2: f64,
}

/// `lb1 = Δ + n·d(M)`, `lb2 = n·(d(T) + d(M))`.
pub fn lower_bounds(d: &DistanceMatrix, m: &Matching, t: &SpanningTree) -> LowerBounds {
    let n = d.n() as f64;
    LowerBounds {
        lb1: degree_sums(d).total + n * m.weight,
        lb2: n * (t.weight + m.weight),
    }
}

/// `Δ + [D(n-3)+…+D(n)] + 5·(d_{2,4}+…+d_{n-4,2}) + (n+4)·d(M)` in labels.
pub fn analytic_upper_bound(d: &DistanceMatrix, numbering: &TeamNumbering, m: &Matching) -> f64 {
    let n = d.n() as f64;
    degree_sums(d).total
        + top_four_degree_sum(d, numbering)
        + 5.0 * even_cycle_weight(d, numbering)
        + (n + 4.0) * m.weight
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TravelReport {
    pub per_team: Vec<f64>,
    pub total: f64,
    pub lb1: f64,
    pub lb2: f64,
    pub analytic_upper: f64,
    pub ratio_lb1: f64,
    pub target_ratio: f64,
    pub ineq4_holds: bool,
}

/// Relative tolerance used for ratio and bound comparisons.
pub const REL_TOL: f64 = 1e-9;

/// `a <= b` up to [`REL_TOL`].
pub fn leq_rel(a: f64, b: f64) -> bool {
    a <= b + REL_TOL * b.abs().max(1.0)
}

pub fn travel_totals(
    sched: &Schedule,
    d: &DistanceMatrix,
    numbering: &TeamNumbering,
    m: &Matching,
    t: &SpanningTree,
) -> Result<TravelReport> {
    let per_team: Vec<f64> = (0..sched.n)
        .map(|i| team_itinerary(sched, d, i).distance)
        .collect();
    let total: f64 = per_team.iter().sum();
    let LowerBounds { lb1, lb2 } = lower_bounds(d, m, t);
    let ratio_lb1 = if lb1 > 0.0 {
        total / lb1
    } else if total == 0.0 {
        1.0
    } else {
        return Err(Error::Degenerate(format!(
            "lower bound is zero but travel is {total}"
        )));
    };
    let ineq4_holds = leq_rel(even_cycle_weight(d, numbering), t.weight + m.weight);
    Ok(TravelReport {
        per_team,
        total,
        lb1,
        lb2,
        analytic_upper: analytic_upper_bound(d, numbering, m),
        ratio_lb1,
        target_ratio: 1.0 + 9.0 / sched.n as f64,
        ineq4_holds,
    })
}

/// Extra travel of one trip `home → v_1 → … → v_k → home` relative to the
/// per-team route behind `lb1` (each venue once, matched pairs visited
/// together, the partner visited alone): a lone visit to a non-partner
/// costs its return leg again, and every hop between two venues that are
/// not matched to each other is extra.
pub fn trip_extra(d: &DistanceMatrix, m: &Matching, home: usize, trip: &[usize]) -> f64 {
    let mut e = 0.0;
    if let [v] = trip {
        if m.partner(home) != Some(*v) {
            e += d.get(home, *v);
        }
    }
    for w in trip.windows(2) {
        if m.partner(w[0]) != Some(w[1]) {
            e += d.get(w[0], w[1]);
        }
    }
    e
}

/// Extra travel of a venue sequence played in isolation (start and end at
/// home). Used to check block templates.
pub fn block_extra(d: &DistanceMatrix, m: &Matching, home: usize, venues: &[usize]) -> f64 {
    let it = Itinerary {
        team: home,
        venues: std::iter::once(home)
            .chain(venues.iter().copied())
            .chain(std::iter::once(home))
            .collect(),
        distance: 0.0,
    };
    it.trips().iter().map(|t| trip_extra(d, m, home, t)).sum()
}

/// The six super-team categories used by the per-team accounting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Category {
    /// `u_1`.
    I,
    /// `u_i`, `i` even, `2 ≤ i ≤ m-3`.
    II,
    /// `u_i`, `i` odd, `3 ≤ i ≤ m-4`.
    III,
    /// `u_{m-2}`.
    IV,
    /// `u_{m-1}`.
    V,
    /// `u_m`.
    VI,
}

impl Category {
    pub fn of_super_team(u: usize, m: usize) -> Self {
        match u {
            1 => Self::I,
            _ if u == m => Self::VI,
            _ if u == m - 1 => Self::V,
            _ if u == m - 2 => Self::IV,
            _ if u.is_multiple_of(2) => Self::II,
            _ => Self::III,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TeamExtra {
    /// Paper label (1-based).
    pub label: usize,
    pub category: Category,
    /// Itinerary minus `D(team) + d(M)`; may be negative.
    pub signed: f64,
    /// Sum of [`trip_extra`] over the team's trips.
    pub extra: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtraBreakdown {
    pub teams: Vec<TeamExtra>,
    /// Summed `extra` per category, in category order I..VI.
    pub by_category: Vec<(Category, f64)>,
}

/// Per-team extra travel of a schedule over original indices.
pub fn extra_travel_breakdown(
    sched: &Schedule,
    d: &DistanceMatrix,
    numbering: &TeamNumbering,
    m: &Matching,
) -> ExtraBreakdown {
    let sums = degree_sums(d);
    let mm = numbering.m();
    let mut teams = Vec::with_capacity(sched.n);
    for label in 1..=sched.n {
        let t = numbering.original_of(label);
        let it = team_itinerary(sched, d, t);
        let extra = it.trips().iter().map(|tr| trip_extra(d, m, t, tr)).sum();
        teams.push(TeamExtra {
            label,
            category: Category::of_super_team(TeamNumbering::super_of(label), mm),
            signed: it.distance - (sums.per_team[t] + m.weight),
            extra,
        });
    }
    let cats = [
        Category::I,
        Category::II,
        Category::III,
        Category::IV,
        Category::V,
        Category::VI,
    ];
    let by_category = cats
        .iter()
        .map(|&c| (c, teams.iter().filter(|x| x.category == c).map(|x| x.extra).sum()))
        .collect();
    ExtraBreakdown { teams, by_category }
}

/// One line of experiment output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceReport {
    pub n: usize,
    pub seed: Option<u64>,
    pub kind: Option<InstanceKind>,
    pub total: f64,
    pub lb1: f64,
    pub lb2: f64,
    pub ratio: f64,
    pub target: f64,
    pub analytic_upper: f64,
    pub ineq4_holds: bool,
    pub violations: usize,
}

impl InstanceReport {
    /// Ratio within target, or (when inequality (4) fails) travel within
    /// the analytic bound; plus zero violations.
    pub fn passes(&self) -> bool {
        let bound_ok = if self.ineq4_holds {
            leq_rel(self.ratio, self.target)
        } else {
            leq_rel(self.total, self.analytic_upper)
        };
        self.violations == 0 && bound_ok
    }
}

/// Constructs, validates and measures a schedule for `d`.
pub fn evaluate(
    d: &DistanceMatrix,
    seed: Option<u64>,
    kind: Option<InstanceKind>,
) -> Result<(Construction, TravelReport, InstanceReport)> {
    let c = construct_schedule(d)?;
    let n = d.n();
    let violations = validate_schedule(&c.schedule, 2, 2 * (n - 1)).len();
    let r = travel_totals(&c.schedule, d, &c.numbering, &c.matching, &c.tree)?;
    let line = InstanceReport {
        n,
        seed,
        kind,
        total: r.total,
        lb1: r.lb1,
        lb2: r.lb2,
        ratio: r.ratio_lb1,
        target: r.target_ratio,
        analytic_upper: r.analytic_upper,
        ineq4_holds: r.ineq4_holds,
        violations,
    };
    Ok((c, r, line))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{min_weight_perfect_matching, minimum_spanning_tree, Tour};
    use crate::numbering::assign_numbering;
    use crate::schedule::Game;

    #[test]
    fn uniform_bounds() {
        let d = DistanceMatrix::uniform(6, 1.0).unwrap();
        let m = min_weight_perfect_matching(&d, &(0..6).collect::<Vec<_>>()).unwrap();
        let t = minimum_spanning_tree(&d);
        assert_eq!(lower_bounds(&d, &m, &t), LowerBounds { lb1: 48.0, lb2: 48.0 });
    }

    #[test]
    fn uniform_upper_bound_n10() {
        let d = DistanceMatrix::uniform(10, 1.0).unwrap();
        let m = min_weight_perfect_matching(&d, &(0..10).collect::<Vec<_>>()).unwrap();
        let c = Tour::from_order(&d, (0..10).collect());
        let num = assign_numbering(&d, &m, &c);
        // Δ 90, top-four D 36, even cycle 2-4-6-2 of weight 3, d(M) 5.
        assert_eq!(analytic_upper_bound(&d, &num, &m), 90.0 + 36.0 + 15.0 + 70.0);
        let z = DistanceMatrix::uniform(10, 0.0).unwrap();
        let mz = min_weight_perfect_matching(&z, &(0..10).collect::<Vec<_>>()).unwrap();
        assert_eq!(analytic_upper_bound(&z, &num, &mz), 0.0);
    }

    #[test]
    fn itinerary_chains_away_games() {
        let d = DistanceMatrix::from_line(&[0.0, 1.0, 3.0, 7.0]).unwrap();
        // Team 0: day1 home, day2 at 2, day3 at 3, day4 home.
        let s = Schedule::new(
            4,
            4,
            vec![
                Game::new(1, 0, 1),
                Game::new(2, 2, 0),
                Game::new(3, 3, 0),
                Game::new(4, 0, 2),
            ],
        );
        let it = team_itinerary(&s, &d, 0);
        assert_eq!(it.venues, vec![0, 0, 2, 3, 0, 0]);
        assert_eq!(it.distance, 3.0 + 4.0 + 7.0);
        assert_eq!(it.trips(), vec![vec![2, 3]]);
        // All-home team travels nothing.
        let h = Schedule::new(4, 1, vec![Game::new(1, 1, 0)]);
        assert_eq!(team_itinerary(&h, &d, 1).distance, 0.0);
    }

    #[test]
    fn trip_extras() {
        let d = DistanceMatrix::from_line(&[0.0, 1.0, 3.0, 7.0]).unwrap();
        let m = Matching::from_pairs(&d, vec![(0, 1), (2, 3)]);
        assert_eq!(trip_extra(&d, &m, 0, &[2, 3]), 0.0);
        assert_eq!(trip_extra(&d, &m, 0, &[1]), 0.0);
        assert_eq!(trip_extra(&d, &m, 0, &[2]), 3.0);
        assert_eq!(trip_extra(&d, &m, 0, &[1, 2]), 2.0);
        assert_eq!(block_extra(&d, &m, 0, &[2, 0, 0, 3]), 10.0);
    }

    #[test]
    fn categories() {
        let m = 9;
        let cats: Vec<_> = (1..=m).map(|u| Category::of_super_team(u, m)).collect();
        use Category::*;
        assert_eq!(cats, vec![I, II, III, II, III, II, IV, V, VI]);
    }
}
