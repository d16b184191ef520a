//! Mutable day × team table used while a schedule is being assembled.

use crate::error::{Error, Result};
use crate::schedule::{Game, Schedule, Slot};

#[derive(Debug, Clone)]
pub(crate) struct Grid {
    pub n: usize,
    pub days: usize,
    cells: Vec<Option<Slot>>,
}

impl Grid {
    pub fn new(n: usize, days: usize) -> Self {
        Self {
            n,
            days,
            cells: vec![None; n * days],
        }
    }

    /// `day` is 0-based here.
    #[inline]
    pub fn get(&self, day: usize, team: usize) -> Option<Slot> {
        self.cells[day * self.n + team]
    }

    pub fn put(&mut self, g: Game) -> Result<()> {
        let d = g.day - 1;
        for (t, slot) in [
            (g.home, Slot { opponent: g.away, home: true }),
            (g.away, Slot { opponent: g.home, home: false }),
        ] {
            let cell = &mut self.cells[d * self.n + t];
            if cell.is_some() {
                return Err(Error::Construction(format!(
                    "team {} already plays on day {}",
                    t + 1,
                    g.day
                )));
            }
            *cell = Some(slot);
        }
        Ok(())
    }

    pub fn put_all(&mut self, games: &[Game]) -> Result<()> {
        games.iter().try_for_each(|&g| self.put(g))
    }

    pub fn into_schedule(self) -> Schedule {
        let mut games = Vec::with_capacity(self.n * self.days / 2);
        for d in 0..self.days {
            for t in 0..self.n {
                if let Some(s) = self.get(d, t) {
                    if s.home {
                        games.push(Game::new(d + 1, t, s.opponent));
                    }
                }
            }
        }
        Schedule::new(self.n, self.days, games)
    }
}

/// True if the sequence keeps home/away runs within 2 and never repeats an
/// opponent on consecutive days.
#[inline]
pub(crate) fn seq_ok(seq: &[Slot]) -> bool {
    let mut run = 0;
    for k in 0..seq.len() {
        if k > 0 && seq[k].home == seq[k - 1].home {
            run += 1;
            if run > 2 {
                return false;
            }
        } else {
            run = 1;
        }
        if k > 0 && seq[k].opponent == seq[k - 1].opponent {
            return false;
        }
    }
    true
}
