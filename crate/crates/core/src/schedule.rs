//! Games, schedules and the plain-text timetable format.
//!
//! A timetable has one row per day and one column per team; the entry for
//! team `i` on day `d` is `+j` when `i` hosts team `j` and `-j` when `i`
//! plays at `j`'s venue (teams are 1-based in text, 0-based in memory).

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One game: `home` hosts `away` on `day` (1-based day, 0-based teams).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Game {
    pub day: usize,
    pub home: usize,
    pub away: usize,
}

impl Game {
    pub fn new(day: usize, home: usize, away: usize) -> Self {
        Self { day, home, away }
    }
}

/// What one team does on one day.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Slot {
    pub opponent: usize,
    pub home: bool,
}

impl Slot {
    /// Venue the team plays at (its own index when at home).
    pub fn venue(&self, team: usize) -> usize {
        if self.home {
            team
        } else {
            self.opponent
        }
    }
}

/// A tournament over `n` teams and `days` days.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Schedule {
    pub n: usize,
    pub days: usize,
    pub games: Vec<Game>,
}

impl Schedule {
    pub fn new(n: usize, days: usize, mut games: Vec<Game>) -> Self {
        games.sort_unstable();
        Self { n, days, games }
    }

    /// Per-day, per-team lookup. Fails unless every team plays exactly
    /// once on each day `1..=days`.
    pub fn timetable(&self) -> Result<Vec<Vec<Slot>>> {
        let mut t: Vec<Vec<Option<Slot>>> = vec![vec![None; self.n]; self.days];
        for g in &self.games {
            if g.day == 0 || g.day > self.days || g.home >= self.n || g.away >= self.n {
                return Err(Error::Validation(format!("game out of range: {g:?}")));
            }
            for (team, slot) in [
                (g.home, Slot { opponent: g.away, home: true }),
                (g.away, Slot { opponent: g.home, home: false }),
            ] {
                let cell = &mut t[g.day - 1][team];
                if cell.is_some() {
                    return Err(Error::Validation(format!(
                        "team {} plays twice on day {}",
                        team + 1,
                        g.day
                    )));
                }
                *cell = Some(slot);
            }
        }
        t.into_iter()
            .enumerate()
            .map(|(d, row)| {
                row.into_iter()
                    .enumerate()
                    .map(|(i, c)| {
                        c.ok_or_else(|| {
                            Error::Validation(format!("team {} idle on day {}", i + 1, d + 1))
                        })
                    })
                    .collect()
            })
            .collect()
    }

    /// Renames every team through `f`.
    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> Self {
        Self::new(
            self.n,
            self.days,
            self.games
                .iter()
                .map(|g| Game::new(g.day, f(g.home), f(g.away)))
                .collect(),
        )
    }

    /// Renders the timetable text format. Requires fixed-game-time.
    pub fn to_timetable_text(&self) -> Result<String> {
        let t = self.timetable()?;
        let mut s = String::new();
        for row in &t {
            let cells: Vec<String> = row
                .iter()
                .map(|c| {
                    let j = c.opponent + 1;
                    if c.home {
                        format!("+{j}")
                    } else {
                        format!("-{j}")
                    }
                })
                .collect();
            let _ = writeln!(s, "{}", cells.join(" "));
        }
        Ok(s)
    }

    /// Parses the timetable text format. Every signed entry contributes a
    /// game, so inconsistent rows surface as validation violations rather
    /// than parse errors. Blank lines and `#` comments are ignored.
    pub fn from_timetable_text(text: &str) -> Result<Self> {
        let rows: Vec<&str> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .collect();
        if rows.is_empty() {
            return Err(Error::Parse("empty timetable".into()));
        }
        let mut n = None;
        let mut games = Vec::new();
        for (d, row) in rows.iter().enumerate() {
            let cells: Vec<&str> = row.split_whitespace().collect();
            match n {
                None => n = Some(cells.len()),
                Some(k) if k != cells.len() => {
                    return Err(Error::Parse(format!(
                        "row {} has {} entries, expected {k}",
                        d + 1,
                        cells.len()
                    )))
                }
                _ => {}
            }
            let width = cells.len();
            for (i, cell) in cells.iter().enumerate() {
                let (home, digits) = match cell.as_bytes().first() {
                    Some(b'+') => (true, &cell[1..]),
                    Some(b'-') => (false, &cell[1..]),
                    _ => return Err(Error::Parse(format!("entry {cell:?} lacks a sign"))),
                };
                let j: usize = digits
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad entry {cell:?}")))?;
                if j == 0 || j > width || j == i + 1 {
                    return Err(Error::Parse(format!(
                        "entry {cell:?} for team {} on day {} names no valid opponent",
                        i + 1,
                        d + 1
                    )));
                }
                let g = if home {
                    Game::new(d + 1, i, j - 1)
                } else {
                    Game::new(d + 1, j - 1, i)
                };
                games.push(g);
            }
        }
        games.sort_unstable();
        // Each consistent game is listed by both of its teams.
        let mut out: Vec<Game> = Vec::with_capacity(games.len() / 2);
        let mut k = 0;
        while k < games.len() {
            if k + 1 < games.len() && games[k] == games[k + 1] {
                out.push(games[k]);
                k += 2;
            } else {
                out.push(games[k]);
                k += 1;
            }
        }
        Ok(Self::new(n.unwrap_or(0), rows.len(), out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny() -> Schedule {
        // n=4 single round-robin fragment: day 1 (0 hosts 1, 2 hosts 3).
        Schedule::new(4, 1, vec![Game::new(1, 0, 1), Game::new(1, 2, 3)])
    }

    #[test]
    fn timetable_round_trip() {
        let s = tiny();
        let text = s.to_timetable_text().unwrap();
        assert_eq!(text, "+2 -1 +4 -3\n");
        assert_eq!(Schedule::from_timetable_text(&text).unwrap(), s);
    }

    #[test]
    fn inconsistent_rows_keep_both_games() {
        let s = Schedule::from_timetable_text("+2 -1 +4 -1\n").unwrap();
        assert_eq!(s.games.len(), 3);
        assert!(s.timetable().is_err());
    }

    #[test]
    fn parse_errors() {
        assert!(Schedule::from_timetable_text("").is_err());
        assert!(Schedule::from_timetable_text("2 -1 +4 -3").is_err());
        assert!(Schedule::from_timetable_text("+1 -1 +4 -3").is_err());
        assert!(Schedule::from_timetable_text("+2 -1 +4 -3\n+3 +4").is_err());
        assert!(Schedule::from_timetable_text("+9 -1 +4 -3").is_err());
    }
}
