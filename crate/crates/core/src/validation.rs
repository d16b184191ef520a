//! Feasibility checks for arbitrary schedules.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::schedule::Schedule;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ViolationKind {
    /// A team plays zero or several games on a day.
    FixedGameTime,
    /// Same opponent on two consecutive days.
    NoRepeat,
    /// More than `k` consecutive home or away games.
    BoundedByK,
    /// An ordered pair is played zero or several times.
    DoubleRoundRobin,
    /// A game lies outside `1..=days` or names an unknown team.
    DayRange,
}

/// A concrete counterexample. Teams and days are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub teams: Vec<usize>,
    pub days: Vec<usize>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} teams {:?} days {:?}: {}", self.kind, self.teams, self.days, self.detail)
    }
}

/// Lists every violation of the TTP-`k` constraints over `expected_days`.
pub fn validate_schedule(sched: &Schedule, k: usize, expected_days: usize) -> Vec<Violation> {
    let n = sched.n;
    let mut out = Vec::new();
    // cells[day][team] = games of that team that day as (opponent, home)
    let mut cells: Vec<Vec<Vec<(usize, bool)>>> = vec![vec![Vec::new(); n]; expected_days];
    let mut count = vec![0usize; n * n];
    for g in &sched.games {
        if g.day == 0 || g.day > expected_days || g.home >= n || g.away >= n || g.home == g.away {
            out.push(Violation {
                kind: ViolationKind::DayRange,
                teams: vec![g.home + 1, g.away + 1],
                days: vec![g.day],
                detail: format!("game outside days 1..={expected_days} or with invalid teams"),
            });
            continue;
        }
        cells[g.day - 1][g.home].push((g.away, true));
        cells[g.day - 1][g.away].push((g.home, false));
        count[g.home * n + g.away] += 1;
    }
    for (d, row) in cells.iter().enumerate() {
        for (t, c) in row.iter().enumerate() {
            if c.len() != 1 {
                out.push(Violation {
                    kind: ViolationKind::FixedGameTime,
                    teams: vec![t + 1],
                    days: vec![d + 1],
                    detail: format!("{} games on the day", c.len()),
                });
            }
        }
    }
    for t in 0..n {
        let mut run = 0;
        let mut run_home = None;
        for d in 0..expected_days {
            let today = &cells[d][t];
            if d > 0 {
                for &(o, _) in today {
                    if cells[d - 1][t].iter().any(|&(p, _)| p == o) {
                        out.push(Violation {
                            kind: ViolationKind::NoRepeat,
                            teams: vec![t + 1, o + 1],
                            days: vec![d, d + 1],
                            detail: "same opponent on consecutive days".into(),
                        });
                    }
                }
            }
            let venue = match today.as_slice() {
                [(_, h)] => Some(*h),
                _ => None,
            };
            match venue {
                Some(h) if run_home == Some(h) => run += 1,
                Some(h) => {
                    run_home = Some(h);
                    run = 1;
                }
                None => {
                    run_home = None;
                    run = 0;
                }
            }
            if run == k + 1 {
                out.push(Violation {
                    kind: ViolationKind::BoundedByK,
                    teams: vec![t + 1],
                    days: (d + 1 - k..=d + 1).collect(),
                    detail: format!(
                        "more than {k} consecutive {} games",
                        if run_home == Some(true) { "home" } else { "away" }
                    ),
                });
            }
        }
    }
    for h in 0..n {
        for a in 0..n {
            if h != a && count[h * n + a] != 1 {
                out.push(Violation {
                    kind: ViolationKind::DoubleRoundRobin,
                    teams: vec![h + 1, a + 1],
                    days: Vec::new(),
                    detail: format!("{} hosts {} {} times", h + 1, a + 1, count[h * n + a]),
                });
            }
        }
    }
    out
}

/// Convenience: true when the schedule is a feasible TTP-`k` tournament
/// over `2(n-1)` days.
pub fn is_feasible(sched: &Schedule, k: usize) -> bool {
    validate_schedule(sched, k, 2 * (sched.n.max(1) - 1)).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schedule::Game;

    /// A feasible n=4 TTP-2 schedule (exact optimum on the circle metric).
    pub(crate) fn n4() -> Schedule {
        let rows = "+2 -1 +4 -3\n+3 +4 -1 -2\n-2 +1 -4 +3\n+4 -3 +2 -1\n-3 -4 +1 +2\n-4 +3 -2 +1\n";
        Schedule::from_timetable_text(rows).unwrap()
    }

    #[test]
    fn hand_schedule_feasible() {
        let s = n4();
        assert_eq!(validate_schedule(&s, 2, 6), vec![]);
        assert!(is_feasible(&s, 2));
    }

    #[test]
    fn moved_game_names_both_days() {
        let mut s = n4();
        let g = s.games.iter_mut().find(|g| g.day == 1).unwrap();
        g.day = 2;
        let v = validate_schedule(&s, 2, 6);
        let days: Vec<usize> = v
            .iter()
            .filter(|v| v.kind == ViolationKind::FixedGameTime)
            .flat_map(|v| v.days.clone())
            .collect();
        assert!(days.contains(&1) && days.contains(&2));
    }

    #[test]
    fn out_of_range_day() {
        let mut s = n4();
        s.games.push(Game::new(9, 0, 1));
        let v = validate_schedule(&s, 2, 6);
        assert!(v.iter().any(|v| v.kind == ViolationKind::DayRange));
        assert!(v.iter().all(|v| v.kind != ViolationKind::DoubleRoundRobin));
    }

    #[test]
    fn k_is_a_parameter() {
        let s = n4();
        let v = validate_schedule(&s, 1, 6);
        assert!(v.iter().any(|v| v.kind == ViolationKind::BoundedByK));
    }
}
