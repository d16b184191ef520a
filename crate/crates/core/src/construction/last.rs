//! The six-day last slot.
//!
//! After the four-day slots every team still owes both games against
//! three teams: its partner and two others. These saved pairs form a cubic
//! graph whose non-partner edges split into even cycles ("units"). Each
//! day plays one of three perfect matchings — the partner matching `P` or
//! one alternating half of every unit cycle — and each matching is used on
//! two non-adjacent days, once per venue. Units hang together through
//! partner edges, so the units of a component form a path or a ring; day
//! layout and venue bits are chosen by dynamic programming along it.

use super::grid::{seq_ok, Grid};
use crate::error::{Error, Result};
use crate::schedule::{Game, Slot};

pub const LAST_DAYS: usize = 6;

/// State of one team when the last slot begins.
#[derive(Debug, Clone, Copy)]
struct History {
    prev: [Slot; 2],
    pos: usize,
}

#[derive(Debug, Clone, Copy)]
struct Edge {
    u: usize,
    v: usize,
}

#[derive(Debug, Clone)]
struct Unit {
    /// Cycle vertices; `cross[k]` joins `cyc[k]` and `cyc[k+1]`.
    cyc: Vec<usize>,
    cross: Vec<usize>,
    /// Partner edges with both ends in this unit.
    internal: Vec<usize>,
    /// Partner edges leaving this unit: (edge, other unit).
    external: Vec<(usize, usize)>,
}

/// Days of the partner matching and of the two halves of a unit cycle.
#[derive(Debug, Clone, Copy)]
struct DayPlan {
    p: [usize; 2],
    alpha: [usize; 2],
    beta: [usize; 2],
}

fn partner_days() -> Vec<[usize; 2]> {
    (0..LAST_DAYS)
        .flat_map(|a| (a + 2..LAST_DAYS).map(move |b| [a, b]))
        .collect()
}

fn cycle_plans(p: [usize; 2]) -> Vec<DayPlan> {
    let rest: Vec<usize> = (0..LAST_DAYS).filter(|d| !p.contains(d)).collect();
    let mut v = Vec::new();
    for x in 0..4 {
        for y in x + 1..4 {
            let alpha = [rest[x], rest[y]];
            let b: Vec<usize> = rest.iter().copied().filter(|d| !alpha.contains(d)).collect();
            let beta = [b[0], b[1]];
            if alpha[0].abs_diff(alpha[1]) != 1 && beta[0].abs_diff(beta[1]) != 1 {
                v.push(DayPlan { p, alpha, beta });
            }
        }
    }
    v
}

#[derive(Debug, Clone, Copy)]
struct UnitChoice {
    plan: DayPlan,
    cross_bits: u32,
    internal_bits: u32,
}

struct Ctx<'a> {
    hist: Vec<History>,
    edges: Vec<Edge>,
    link_of: Vec<usize>,
    dist: &'a dyn Fn(usize, usize) -> f64,
}

impl Ctx<'_> {
    /// Travel of `team` over the six days, or `None` if infeasible.
    /// Each part is (edge, its two days, venue bit).
    fn team(&self, team: usize, parts: [(usize, [usize; 2], bool); 3]) -> Option<f64> {
        let h = &self.hist[team];
        let mut seq = [h.prev[0]; LAST_DAYS + 2];
        seq[1] = h.prev[1];
        for (e, [d1, d2], bit) in parts {
            let Edge { u, v } = self.edges[e];
            let other = if team == u { v } else { u };
            let home_first = (if bit { v } else { u }) == team;
            seq[2 + d1] = Slot { opponent: other, home: home_first };
            seq[2 + d2] = Slot { opponent: other, home: !home_first };
        }
        if !seq_ok(&seq) {
            return None;
        }
        let mut pos = h.pos;
        let mut cost = 0.0;
        for s in &seq[2..] {
            let v = s.venue(team);
            cost += (self.dist)(pos, v);
            pos = v;
        }
        Some(cost + (self.dist)(pos, team))
    }

    /// Cheapest configuration of `unit` per outgoing link bit.
    fn solve_unit(
        &self,
        unit: &Unit,
        plans: &[DayPlan],
        incoming: Option<(usize, bool)>,
        outgoing: Option<usize>,
        forced_out: Option<bool>,
    ) -> [Option<(f64, UnitChoice)>; 2] {
        let len = unit.cyc.len();
        let out_bits: &[bool] = match (outgoing, forced_out) {
            (None, _) => &[false],
            (Some(_), Some(true)) => &[true],
            (Some(_), Some(false)) => &[false],
            (Some(_), None) => &[false, true],
        };
        // table[k][(bit before, bit after, link bit)] for the current plan
        let mut table = vec![[None::<f64>; 8]; len];
        let mut best: [Option<(f64, UnitChoice)>; 2] = [None, None];
        for plan in plans {
            let cls = |j: usize| if j.is_multiple_of(2) { plan.alpha } else { plan.beta };
            for (k, row) in table.iter_mut().enumerate() {
                let team = unit.cyc[k];
                let j = (k + len - 1) % len;
                let link = self.link_of[team];
                for (idx, cell) in row.iter_mut().enumerate() {
                    *cell = self.team(
                        team,
                        [
                            (unit.cross[j], cls(j), idx & 1 == 1),
                            (unit.cross[k], cls(k), idx & 2 == 2),
                            (link, plan.p, idx & 4 == 4),
                        ],
                    );
                }
            }
            if table.iter().any(|r| r.iter().all(Option::is_none)) {
                continue;
            }
            for internal_bits in 0u32..(1 << unit.internal.len()) {
                for &ob in out_bits {
                    let link_bits: Vec<bool> = unit
                        .cyc
                        .iter()
                        .map(|&t| {
                            let e = self.link_of[t];
                            if let Some(k) = unit.internal.iter().position(|&x| x == e) {
                                (internal_bits >> k) & 1 == 1
                            } else if let Some((_, ib)) = incoming.filter(|&(ie, _)| ie == e) {
                                ib
                            } else {
                                ob
                            }
                        })
                        .collect();
                    'mask: for cross_bits in 0u32..(1 << len) {
                        let mut total = 0.0;
                        for k in 0..len {
                            let j = (k + len - 1) % len;
                            let idx = ((cross_bits >> j) & 1)
                                | (((cross_bits >> k) & 1) << 1)
                                | (u32::from(link_bits[k]) << 2);
                            match table[k][idx as usize] {
                                Some(c) => total += c,
                                None => continue 'mask,
                            }
                        }
                        let slot = usize::from(ob);
                        if best[slot].is_none_or(|b| total < b.0) {
                            best[slot] = Some((
                                total,
                                UnitChoice {
                                    plan: *plan,
                                    cross_bits,
                                    internal_bits,
                                },
                            ));
                        }
                    }
                }
            }
        }
        best
    }
}

/// Units of one component in walking order, with the partner edge that
/// joins each unit to the next (`ring` adds a closing edge back to the
/// first unit).
struct Chain {
    units: Vec<usize>,
    links: Vec<usize>,
    ring: bool,
}

fn chains(units: &[Unit]) -> Result<Vec<Chain>> {
    let mut seen = vec![false; units.len()];
    let mut out = Vec::new();
    for start in 0..units.len() {
        if seen[start] {
            continue;
        }
        // Collect the component, then pick a walking start.
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            for &(_, w) in &units[comp[k]].external {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            k += 1;
        }
        if comp.iter().any(|&u| units[u].external.len() > 2) {
            return Err(Error::Ledger(
                "saved games do not form a path or ring of cycles".into(),
            ));
        }
        let first = comp
            .iter()
            .copied()
            .filter(|&u| units[u].external.len() < 2)
            .min()
            .or_else(|| comp.iter().copied().min())
            .expect("non-empty component");
        let ring = units[first].external.len() == 2;
        let mut order = vec![first];
        let mut links = Vec::new();
        let mut cur = first;
        let mut via = usize::MAX;
        loop {
            let Some(&(e, w)) = units[cur].external.iter().find(|&&(e, _)| e != via) else {
                break;
            };
            links.push(e);
            if w == first {
                break;
            }
            order.push(w);
            via = e;
            cur = w;
        }
        if order.len() != comp.len() {
            return Err(Error::Ledger("saved-game units are not a simple chain".into()));
        }
        out.push(Chain {
            units: order,
            links,
            ring,
        });
    }
    Ok(out)
}

/// Builds the last slot on top of `grid`, whose first `first_day` days
/// (0-based count) are filled. Returns the games and their travel cost
/// (including every team's trip home at the end).
pub(crate) fn build_last_slot_on(
    grid: &Grid,
    first_day: usize,
    dist: &dyn Fn(usize, usize) -> f64,
) -> Result<(Vec<Game>, f64)> {
    let n = grid.n;
    if first_day < 2 {
        return Err(Error::Ledger("need at least two played days".into()));
    }
    let mut played = vec![false; n * n];
    for d in 0..first_day {
        for t in 0..n {
            let s = grid
                .get(d, t)
                .ok_or_else(|| Error::Ledger(format!("team {} idle on day {}", t + 1, d + 1)))?;
            if s.home {
                played[t * n + s.opponent] = true;
            }
        }
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for u in 0..n {
        for v in u + 1..n {
            match (played[u * n + v], played[v * n + u]) {
                (true, true) => {}
                (false, false) => {
                    adj[u].push(v);
                    adj[v].push(u);
                }
                _ => {
                    return Err(Error::Ledger(format!(
                        "teams {} and {} have played only one of their two games",
                        u + 1,
                        v + 1
                    )))
                }
            }
        }
    }
    for t in 0..n {
        if adj[t].len() != 3 || !adj[t].contains(&(t ^ 1)) {
            return Err(Error::Ledger(format!(
                "team {} has saved games against {:?}; expected its partner and two others",
                t + 1,
                adj[t].iter().map(|x| x + 1).collect::<Vec<_>>()
            )));
        }
    }

    let mut edges = Vec::with_capacity(3 * n / 2);
    let mut link_of = vec![0; n];
    for t in (0..n).step_by(2) {
        link_of[t] = edges.len();
        link_of[t + 1] = edges.len();
        edges.push(Edge { u: t, v: t + 1 });
    }
    let mut unit_of = vec![usize::MAX; n];
    let mut units: Vec<Unit> = Vec::new();
    for start in 0..n {
        if unit_of[start] != usize::MAX {
            continue;
        }
        let id = units.len();
        let mut cyc = vec![start];
        unit_of[start] = id;
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = adj[cur]
                .iter()
                .copied()
                .find(|&w| w != (cur ^ 1) && w != prev && (w == start || unit_of[w] == usize::MAX));
            match next {
                Some(w) if w == start => break,
                Some(w) => {
                    unit_of[w] = id;
                    cyc.push(w);
                    prev = cur;
                    cur = w;
                }
                None => break,
            }
        }
        if cyc.len() % 2 == 1 || cyc.len() < 4 {
            return Err(Error::Ledger(format!(
                "saved cycle through team {} has length {}",
                start + 1,
                cyc.len()
            )));
        }
        let cross = (0..cyc.len())
            .map(|k| {
                edges.push(Edge {
                    u: cyc[k],
                    v: cyc[(k + 1) % cyc.len()],
                });
                edges.len() - 1
            })
            .collect();
        units.push(Unit {
            cyc,
            cross,
            internal: Vec::new(),
            external: Vec::new(),
        });
    }
    for t in (0..n).step_by(2) {
        let (a, b) = (unit_of[t], unit_of[t + 1]);
        if a == b {
            units[a].internal.push(link_of[t]);
        } else {
            units[a].external.push((link_of[t], b));
            units[b].external.push((link_of[t], a));
        }
    }

    let hist = (0..n)
        .map(|t| {
            let p0 = grid.get(first_day - 2, t).expect("checked above");
            let p1 = grid.get(first_day - 1, t).expect("checked above");
            History {
                prev: [p0, p1],
                pos: p1.venue(t),
            }
        })
        .collect();
    let ctx = Ctx {
        hist,
        edges,
        link_of,
        dist,
    };

    let mut bits = vec![false; ctx.edges.len()];
    let mut days = vec![[0usize; 2]; ctx.edges.len()];
    let mut total = 0.0;
    for chain in chains(&units)? {
        let (cost, picks, link_bits) = solve_chain(&ctx, &units, &chain).ok_or_else(|| {
            Error::Construction(format!(
                "no feasible last-slot layout for units {:?}",
                chain.units
            ))
        })?;
        total += cost;
        for (&u, c) in chain.units.iter().zip(&picks) {
            let unit = &units[u];
            for (k, &e) in unit.cross.iter().enumerate() {
                days[e] = if k % 2 == 0 { c.plan.alpha } else { c.plan.beta };
                bits[e] = (c.cross_bits >> k) & 1 == 1;
            }
            for (k, &e) in unit.internal.iter().enumerate() {
                days[e] = c.plan.p;
                bits[e] = (c.internal_bits >> k) & 1 == 1;
            }
            for &(e, _) in &unit.external {
                days[e] = c.plan.p;
            }
        }
        for (&e, &b) in chain.links.iter().zip(&link_bits) {
            bits[e] = b;
        }
    }
    let mut games = Vec::with_capacity(3 * n);
    for (e, edge) in ctx.edges.iter().enumerate() {
        let (h, a) = if bits[e] { (edge.v, edge.u) } else { (edge.u, edge.v) };
        games.push(Game::new(first_day + days[e][0] + 1, h, a));
        games.push(Game::new(first_day + days[e][1] + 1, a, h));
    }
    Ok((games, total))
}

/// Returns (cost, per-unit choices, bit of each chain link).
fn solve_chain(ctx: &Ctx, units: &[Unit], chain: &Chain) -> Option<(f64, Vec<UnitChoice>, Vec<bool>)> {
    let k = chain.units.len();
    let mut best: Option<(f64, Vec<UnitChoice>, Vec<bool>)> = None;
    for p in partner_days() {
        let plans = cycle_plans(p);
        let closings: &[Option<bool>] = if chain.ring {
            &[Some(false), Some(true)]
        } else {
            &[None]
        };
        for &closing in closings {
            // state[bit] = (cost, choices so far, link bits so far)
            let mut state: Vec<Option<(f64, Vec<UnitChoice>, Vec<bool>)>> = vec![None, None];
            for j in 0..k {
                let unit = &units[chain.units[j]];
                let outgoing = chain.links.get(j).copied();
                let forced = if j + 1 == k { closing } else { None };
                let incoming: Vec<(Option<(usize, bool)>, f64, Vec<UnitChoice>, Vec<bool>)> = if j == 0 {
                    let inc = closing.map(|b| (chain.links[k - 1], b));
                    vec![(inc, 0.0, Vec::new(), Vec::new())]
                } else {
                    let e = chain.links[j - 1];
                    state
                        .iter()
                        .enumerate()
                        .filter_map(|(b, s)| {
                            s.as_ref()
                                .map(|(c, ch, lb)| (Some((e, b == 1)), *c, ch.clone(), lb.clone()))
                        })
                        .collect()
                };
                let mut next: Vec<Option<(f64, Vec<UnitChoice>, Vec<bool>)>> = vec![None, None];
                for (inc, base, ch, lb) in incoming {
                    let res = ctx.solve_unit(unit, &plans, inc, outgoing, forced);
                    for (ob, r) in res.iter().enumerate() {
                        let Some((c, choice)) = r else { continue };
                        let cost = base + c;
                        if next[ob].as_ref().is_none_or(|x| cost < x.0) {
                            let mut ch2 = ch.clone();
                            ch2.push(*choice);
                            let mut lb2 = lb.clone();
                            if outgoing.is_some() {
                                lb2.push(ob == 1);
                            }
                            next[ob] = Some((cost, ch2, lb2));
                        }
                    }
                }
                state = next;
            }
            for s in state.into_iter().flatten() {
                if best.as_ref().is_none_or(|b| s.0 < b.0) {
                    best = Some(s);
                }
            }
        }
    }
    best
}
