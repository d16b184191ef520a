//! Slot plans: which super-games are played in each 4-day slot.
//!
//! Super-teams are 1-based (`u_1..u_m`). The rotating super-teams
//! `u_1..u_{m-2}` sit on a cycle; in slot `s` the centre `u_x`,
//! `x = m-1-s`, meets `u_{m-1}`, the pairs `(x+k, x-k)` play normal
//! super-games, and the two leftovers `u_{i-1}, u_i` join `u_m` in the
//! right super-game, where `i + s ≡ (m+1)/2 (mod m-2)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SuperGameKind {
    Normal,
    Left,
    SpecialLeft,
    Right,
}

/// Day types of a right super-game (`bar` = all venues flipped).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DayType {
    pub index: u8,
    pub bar: bool,
}

impl std::fmt::Display for DayType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.bar {
            write!(f, "R{}bar", self.index)
        } else {
            write!(f, "R{}", self.index)
        }
    }
}

/// A super-game inside a slot.
///
/// For two-party games `participants[0]` is the tail: it hosts the first
/// two days of a normal game and plays `H A A H` in a left game. For the
/// right game the participants are `[u_{i-1}, u_i, u_m]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuperGame {
    pub kind: SuperGameKind,
    pub participants: Vec<usize>,
    pub daytypes: Option<[DayType; 4]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlotPlan {
    pub s: usize,
    pub supergames: Vec<SuperGame>,
}

impl SlotPlan {
    /// First day (1-based) of the slot.
    pub fn first_day(&self) -> usize {
        4 * self.s - 3
    }

    pub fn right(&self) -> &SuperGame {
        self.supergames
            .iter()
            .find(|g| g.kind == SuperGameKind::Right)
            .expect("every slot has a right super-game")
    }
}

/// Maps any integer onto the rotating range `1..=m-2`.
pub(crate) fn wrap(v: i64, m: usize) -> usize {
    let r = (m - 2) as i64;
    ((v - 1).rem_euclid(r) + 1) as usize
}

/// Whether rotating super-team `y` is the tail of its normal super-game in
/// slot `s`. Odd teams lead before their centre slot `m-1-y` and follow
/// after it; even teams the other way round. The left game at the centre
/// slot bridges the switch.
pub fn is_tail(y: usize, s: usize, m: usize) -> bool {
    let sc = m - 1 - y;
    if y % 2 == 1 {
        s < sc
    } else {
        s > sc
    }
}

/// Index `i` of the right super-game `(u_{i-1}, u_i, u_m)` in slot `s`.
pub fn right_index(s: usize, m: usize) -> usize {
    wrap((m as i64 + 1) / 2 - s as i64, m)
}

/// Nominal day-type sequence of the right super-game in slot `s`.
pub fn right_daytypes(s: usize, m: usize, forward: bool) -> Result<[DayType; 4]> {
    if s == 0 || s > m.saturating_sub(2) {
        return Err(Error::Domain(format!("slot {s} outside 1..={}", m.saturating_sub(2))));
    }
    let r = |index, bar| DayType { index, bar };
    Ok(if s <= (m - 3) / 2 {
        if forward {
            [r(4, false), r(3, false), r(4, true), r(3, true)]
        } else {
            [r(2, true), r(1, true), r(2, false), r(1, false)]
        }
    } else if s == (m - 1) / 2 {
        [r(1, false), r(3, false), r(1, true), r(3, true)]
    } else if forward {
        [r(1, false), r(2, false), r(1, true), r(2, true)]
    } else {
        [r(3, true), r(4, true), r(3, false), r(4, false)]
    })
}

/// Builds the `m-2` slot plans. Requires `m` odd and at least 5.
pub fn build_slot_plans(m: usize) -> Result<Vec<SlotPlan>> {
    if m.is_multiple_of(2) || m < 5 {
        return Err(Error::Domain(format!(
            "super-team count must be odd and at least 5, got {m}"
        )));
    }
    let h = (m - 3) / 2;
    let c = m - 1;
    let mut plans = Vec::with_capacity(m - 2);
    for s in 1..=m - 2 {
        let x = m - 1 - s;
        let mut games = Vec::with_capacity(h + 1);
        games.push(if s == 1 {
            SuperGame {
                kind: SuperGameKind::Normal,
                participants: vec![c, x],
                daytypes: None,
            }
        } else if s == m - 2 {
            SuperGame {
                kind: SuperGameKind::SpecialLeft,
                participants: vec![1, c],
                daytypes: None,
            }
        } else {
            let participants = if s % 2 == 1 { vec![x, c] } else { vec![c, x] };
            SuperGame {
                kind: SuperGameKind::Left,
                participants,
                daytypes: None,
            }
        });
        for k in 1..h {
            let p = wrap((x + k) as i64, m);
            let q = wrap(x as i64 - k as i64, m);
            let (tp, tq) = (is_tail(p, s, m), is_tail(q, s, m));
            if tp == tq {
                return Err(Error::Construction(format!(
                    "slot {s}: normal pair ({p}, {q}) has no unique tail"
                )));
            }
            let participants = if tp { vec![p, q] } else { vec![q, p] };
            games.push(SuperGame {
                kind: SuperGameKind::Normal,
                participants,
                daytypes: None,
            });
        }
        let i = right_index(s, m);
        games.push(SuperGame {
            kind: SuperGameKind::Right,
            participants: vec![wrap(i as i64 - 1, m), i, m],
            daytypes: Some(right_daytypes(s, m, s % 2 == 1)?),
        });
        plans.push(SlotPlan { s, supergames: games });
    }
    Ok(plans)
}

/// How many super-games of each kind a super-team plays.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Participation {
    pub normal: usize,
    pub left: usize,
    pub special_left: usize,
    pub right: usize,
}

/// Participation of `u_1..u_m`; index 0 is `u_1`.
pub fn participation(plans: &[SlotPlan], m: usize) -> Vec<Participation> {
    let mut out = vec![Participation::default(); m];
    for p in plans {
        for g in &p.supergames {
            for &u in &g.participants {
                let c = &mut out[u - 1];
                match g.kind {
                    SuperGameKind::Normal => c.normal += 1,
                    SuperGameKind::Left => c.left += 1,
                    SuperGameKind::SpecialLeft => c.special_left += 1,
                    SuperGameKind::Right => c.right += 1,
                }
            }
        }
    }
    out
}
