//! Fixed four-day templates for the two-party super-games.
//!
//! Teams are label indices (`label - 1`); super-team `u` has members
//! `2u-2` (odd label) and `2u-1` (even label).

use crate::schedule::Game;

#[inline]
pub fn members(u: usize) -> [usize; 2] {
    [2 * u - 2, 2 * u - 1]
}

fn block(first_day: usize, rows: [[(usize, usize); 2]; 4]) -> Vec<Game> {
    rows.iter()
        .enumerate()
        .flat_map(|(k, row)| row.iter().map(move |&(h, a)| Game::new(first_day + k, h, a)))
        .collect()
}

/// Normal super-game: the tail hosts days 1–2 (`HHAA`), the head hosts
/// days 3–4 (`AAHH`); each team alternates between the two opponents.
pub fn expand_normal(tail: usize, head: usize, first_day: usize) -> Vec<Game> {
    let [a1, a2] = members(tail);
    let [b1, b2] = members(head);
    block(
        first_day,
        [
            [(a1, b1), (a2, b2)],
            [(a1, b2), (a2, b1)],
            [(b1, a1), (b2, a2)],
            [(b1, a2), (b2, a1)],
        ],
    )
}

/// Left super-game: the tail plays `HAAH` (one two-venue trip), the other
/// side `AHHA` (two single-venue trips).
pub fn expand_left(tail: usize, other: usize, first_day: usize) -> Vec<Game> {
    let [x1, x2] = members(tail);
    let [y1, y2] = members(other);
    block(
        first_day,
        [
            [(x1, y1), (x2, y2)],
            [(y2, x1), (y1, x2)],
            [(y1, x1), (y2, x2)],
            [(x1, y2), (x2, y1)],
        ],
    )
}

/// Special left super-game between `u_1` and `u_{m-1}`: `t_1 HAAH`,
/// `t_2 HHAA`, `t_{n-3} AAHH`, `t_{n-2} AHHA`.
pub fn expand_special_left(m: usize, first_day: usize) -> Vec<Game> {
    let [t1, t2] = members(1);
    let [c1, c2] = members(m - 1);
    block(
        first_day,
        [
            [(t1, c1), (t2, c2)],
            [(c2, t1), (t2, c1)],
            [(c1, t1), (c2, t2)],
            [(c1, t2), (t1, c2)],
        ],
    )
}
