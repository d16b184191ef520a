mod common;

use std::sync::OnceLock;

use proptest::prelude::*;
use ttp2::construction::construct_schedule;
use ttp2::instance::{generate_instance, InstanceKind};
use ttp2::schedule::{Game, Schedule};
use ttp2::validation::{validate_schedule, ViolationKind};

use common::naive_violation_kinds;

fn base_n10() -> &'static Schedule {
    static S: OnceLock<Schedule> = OnceLock::new();
    S.get_or_init(|| {
        let d = generate_instance(InstanceKind::Circle, 10, 3).unwrap();
        construct_schedule(&d).unwrap().schedule
    })
}

#[derive(Debug, Clone)]
enum Edit {
    MoveDay(usize, usize),
    FlipVenue(usize),
    Delete(usize),
    Duplicate(usize, usize),
    SwapDays(usize, usize),
}

fn edit() -> impl Strategy<Value = Edit> {
    let i = 0usize..1000;
    prop_oneof![
        (i.clone(), i.clone()).prop_map(|(a, b)| Edit::MoveDay(a, b)),
        i.clone().prop_map(Edit::FlipVenue),
        i.clone().prop_map(Edit::Delete),
        (i.clone(), i.clone()).prop_map(|(a, b)| Edit::Duplicate(a, b)),
        (i.clone(), i).prop_map(|(a, b)| Edit::SwapDays(a, b)),
    ]
}

fn apply(s: &Schedule, edits: &[Edit]) -> Schedule {
    let mut games = s.games.clone();
    for e in edits {
        if games.is_empty() {
            break;
        }
        let len = games.len();
        match *e {
            Edit::MoveDay(i, d) => games[i % len].day = d % s.days + 1,
            Edit::FlipVenue(i) => {
                let g = &mut games[i % len];
                std::mem::swap(&mut g.home, &mut g.away);
            }
            Edit::Delete(i) => {
                games.remove(i % len);
            }
            Edit::Duplicate(i, d) => {
                let g = games[i % len];
                games.push(Game::new(d % s.days + 1, g.home, g.away));
            }
            Edit::SwapDays(a, b) => {
                let (a, b) = (a % s.days + 1, b % s.days + 1);
                for g in &mut games {
                    if g.day == a {
                        g.day = b;
                    } else if g.day == b {
                        g.day = a;
                    }
                }
            }
        }
    }
    Schedule::new(s.n, s.days, games)
}

fn kinds(s: &Schedule, k: usize) -> Vec<ViolationKind> {
    let mut v: Vec<ViolationKind> = validate_schedule(s, k, s.days).iter().map(|v| v.kind).collect();
    v.sort();
    v.dedup();
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn validator_agrees_with_naive_checker(edits in prop::collection::vec(edit(), 0..4), k in 1usize..4) {
        let s = apply(base_n10(), &edits);
        prop_assert_eq!(kinds(&s, k), naive_violation_kinds(&s, k));
    }

    // Swapping two whole days may well yield another feasible schedule;
    // every other single edit breaks the round robin or a day.
    #[test]
    fn single_edits_are_always_caught(e in edit()) {
        let base = base_n10();
        let s = apply(base, std::slice::from_ref(&e));
        if s != *base && !matches!(e, Edit::SwapDays(..)) {
            prop_assert!(!kinds(&s, 2).is_empty(), "{:?} went unnoticed", e);
        }
    }
}

#[test]
fn constructed_schedule_is_clean() {
    assert!(kinds(base_n10(), 2).is_empty());
    assert!(naive_violation_kinds(base_n10(), 2).is_empty());
}

#[test]
fn out_of_range_games_are_reported() {
    let base = base_n10();
    let mut games = base.games.clone();
    games.push(Game::new(base.days + 1, 0, 1));
    games.push(Game::new(1, 3, 3));
    let v = validate_schedule(&Schedule::new(base.n, base.days, games), 2, base.days);
    assert_eq!(v.iter().filter(|v| v.kind == ViolationKind::DayRange).count(), 2);
}

#[test]
fn every_violation_is_listed() {
    // Swapping two whole days keeps every day well formed, so only the
    // sequence constraints can break; the validator reports each instance.
    let base = base_n10();
    let s = apply(base, &[Edit::SwapDays(0, 9)]);
    let v = validate_schedule(&s, 2, s.days);
    assert!(v.len() > 1);
    assert!(v.iter().all(|v| !v.teams.is_empty() && !v.days.is_empty()));
}
