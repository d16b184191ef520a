//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Tolerances and budgets are pinned below.

mod common;

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use ttp2::analysis::{
    block_extra, evaluate, extra_travel_breakdown, leq_rel, lower_bounds, InstanceReport,
};
use ttp2::construction::{
    build_slot_plans, expand_left, expand_normal, expand_special_left,
    participation, Construction, Game, Participation,
};
use ttp2::exact::{solve_exact, solve_exact_with, ExactOptions};
use ttp2::graph::{
    christofides_with_parts, min_weight_perfect_matching, minimum_spanning_tree, prim, Matching,
};
use ttp2::instance::{generate_instance, DistanceMatrix, InstanceKind};
use ttp2::numbering::{degree_sums, numbering_diagnostics};
use ttp2::validation::validate_schedule;

use common::{brute_matching, brute_mst, brute_tsp};

/// Relative tolerance for ratio and bound checks.
const RATIO_TOL: f64 = 1e-9;
/// Relative tolerance for the itinerary-accounting identity.
const ACCOUNTING_TOL: f64 = 1e-6;
/// Absolute tolerance for oracle weight equality.
const ORACLE_TOL: f64 = 1e-9;
const CORPUS_BUDGET: Duration = Duration::from_secs(120);
const EXACT_N6_BUDGET: Duration = Duration::from_secs(60);
const MIN_EXACT_INSTANCES: usize = 30;
const INEQ4_MIN_RATE: f64 = 0.95;
const N102_BUDGET: Duration = Duration::from_secs(1);
const MAX_DOUBLING_GROWTH: f64 = 10.0;
const CORPUS_SEEDS: u64 = 20;

struct Sample {
    kind: InstanceKind,
    d: DistanceMatrix,
    c: Construction,
    line: InstanceReport,
}

fn corpus_sizes() -> impl Iterator<Item = usize> {
    (10..=50).step_by(4)
}

fn build_corpus() -> ttp2::Result<Vec<Sample>> {
    let jobs: Vec<(InstanceKind, usize, u64)> = InstanceKind::ALL
        .iter()
        .flat_map(|&k| corpus_sizes().flat_map(move |n| (0..CORPUS_SEEDS).map(move |s| (k, n, s))))
        .collect();
    jobs.par_iter()
        .map(|&(kind, n, seed)| {
            let d = generate_instance(kind, n, seed)?;
            let (c, _, line) = evaluate(&d, Some(seed), Some(kind))?;
            Ok(Sample { kind, d, c, line })
        })
        .collect()
}

fn report(n: u32, ok: bool, detail: String) -> bool {
    println!("criterion {n}: {} {detail}", if ok { "PASS" } else { "FAIL" });
    ok
}

fn tag(s: &Sample) -> String {
    format!("{} n={} seed={}", s.kind.name(), s.line.n, s.line.seed.unwrap_or(0))
}

fn criterion1(corpus: &ttp2::Result<Vec<Sample>>, elapsed: Duration) -> bool {
    let corpus = match corpus {
        Ok(c) => c,
        Err(e) => return report(1, false, format!("construction error: {e}")),
    };
    let bad: Vec<String> = corpus.iter().filter(|s| s.line.violations > 0).map(tag).collect();
    let ok = bad.is_empty() && elapsed <= CORPUS_BUDGET;
    report(
        1,
        ok,
        format!(
            "{} instances, {} with violations {:?}, {:.1}s (budget {}s)",
            corpus.len(),
            bad.len(),
            bad.iter().take(3).collect::<Vec<_>>(),
            elapsed.as_secs_f64(),
            CORPUS_BUDGET.as_secs()
        ),
    )
}

fn criterion2(corpus: &[Sample]) -> bool {
    let mut worst: f64 = 0.0;
    let mut failing = Vec::new();
    let mut ineq4_false = Vec::new();
    for s in corpus {
        let l = &s.line;
        let n = l.n as f64;
        let ok = if l.ineq4_holds {
            worst = worst.max(l.ratio / l.target);
            let chain = (1.0 + 4.0 / n) * l.lb1 + (5.0 / n) * l.lb2;
            l.ratio <= l.target * (1.0 + RATIO_TOL) && leq_rel(l.analytic_upper, chain)
        } else {
            ineq4_false.push(tag(s));
            l.total <= l.analytic_upper * (1.0 + RATIO_TOL)
        };
        if !ok {
            failing.push(tag(s));
        }
    }
    for t in &ineq4_false {
        println!("  note: inequality (4) fails on {t}; checked against the analytic bound");
    }
    report(
        2,
        failing.is_empty(),
        format!(
            "worst ratio/target {worst:.4}, {} instances without (4), failing {:?}",
            ineq4_false.len(),
            failing
        ),
    )
}

fn criterion3() -> bool {
    let mut jobs: Vec<(InstanceKind, usize, u64)> = Vec::new();
    for kind in InstanceKind::ALL {
        jobs.extend((0..10).map(|s| (kind, 4, s)));
        jobs.extend((1..3).map(|s| (kind, 6, s)));
    }
    let results: Vec<Result<(bool, Duration), String>> = jobs
        .par_iter()
        .map(|&(kind, n, seed)| {
            let d = generate_instance(kind, n, seed).map_err(|e| e.to_string())?;
            let start = Instant::now();
            let r = solve_exact(&d, 2, 200_000_000).map_err(|e| format!("{kind:?} n={n}: {e}"))?;
            let took = start.elapsed();
            let m = min_weight_perfect_matching(&d, &(0..n).collect::<Vec<_>>()).unwrap();
            let lb = lower_bounds(&d, &m, &minimum_spanning_tree(&d));
            let tol = ORACLE_TOL * r.optimum.max(1.0);
            let mut ok = lb.lb2 <= lb.lb1 + tol && lb.lb1 <= r.optimum + tol;
            ok &= validate_schedule(&r.schedule, 2, 2 * (n - 1)).is_empty();
            if n == 4 {
                let full = solve_exact_with(&d, ExactOptions { prune: false, ..Default::default() })
                    .map_err(|e| e.to_string())?;
                ok &= full.optimum == r.optimum;
            } else {
                ok &= took <= EXACT_N6_BUDGET;
            }
            Ok((ok, took))
        })
        .collect();
    let solved = results.iter().filter(|r| r.is_ok()).count();
    let all_ok = results.iter().all(|r| matches!(r, Ok((true, _))));
    let slowest = results
        .iter()
        .filter_map(|r| r.as_ref().ok().map(|x| x.1))
        .max()
        .unwrap_or_default();
    report(
        3,
        all_ok && solved >= MIN_EXACT_INSTANCES,
        format!(
            "{solved} instances solved (n=4 and 6), lb2 <= lb1 <= OPT, pruned == unpruned on n=4, slowest {:.2}s",
            slowest.as_secs_f64()
        ),
    )
}

fn criterion4() -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut failures = Vec::new();
    let mut matchings = 0;
    for inst in 0..100u64 {
        let pts: Vec<(f64, f64)> = (0..10).map(|_| (rng.gen(), rng.gen())).collect();
        let d = if inst % 2 == 0 {
            DistanceMatrix::from_points(&pts).unwrap()
        } else {
            generate_instance(InstanceKind::RandomMetric, 10, inst).unwrap()
        };
        for size in (2..=10).step_by(2) {
            let mut set: Vec<usize> = (0..10).collect();
            for i in (1..10).rev() {
                set.swap(i, rng.gen_range(0..=i));
            }
            set.truncate(size);
            let m = min_weight_perfect_matching(&d, &set).unwrap();
            matchings += 1;
            if (m.weight - brute_matching(&d, &set)).abs() > ORACLE_TOL {
                failures.push(format!("matching inst {inst} size {size}"));
            }
        }
    }
    let mut trees = 0;
    for n in 2..=7 {
        for _ in 0..10 {
            let pts: Vec<(f64, f64)> = (0..n).map(|_| (rng.gen(), rng.gen())).collect();
            let w = |i: usize, j: usize| {
                let (a, b): ((f64, f64), (f64, f64)) = (pts[i], pts[j]);
                (a.0 - b.0).hypot(a.1 - b.1)
            };
            trees += 1;
            if (prim(n, w).1 - brute_mst(n, &w)).abs() > ORACLE_TOL {
                failures.push(format!("prim n={n}"));
            }
            if n % 2 == 0 && n >= 4 {
                let d = DistanceMatrix::from_points(&pts).unwrap();
                if (minimum_spanning_tree(&d).weight - brute_mst(n, &w)).abs() > ORACLE_TOL {
                    failures.push(format!("mst n={n}"));
                }
            }
        }
    }
    let mut tours = 0;
    for n in [4, 6, 8] {
        for rep in 0..10u64 {
            let d = if rep % 2 == 0 {
                let pts: Vec<(f64, f64)> = (0..n).map(|_| (rng.gen(), rng.gen())).collect();
                DistanceMatrix::from_points(&pts).unwrap()
            } else {
                generate_instance(InstanceKind::RandomMetric, n, rep).unwrap()
            };
            let p = christofides_with_parts(&d).unwrap();
            tours += 1;
            if p.tour.weight > p.tree.weight + p.odd_matching.weight + ORACLE_TOL
                || p.tour.weight > 1.5 * brute_tsp(&d) + ORACLE_TOL
            {
                failures.push(format!("christofides n={n} rep {rep}"));
            }
        }
    }
    report(
        4,
        failures.is_empty(),
        format!("{matchings} matchings, {trees} trees, {tours} tours vs brute force; failures {failures:?}"),
    )
}

fn venues(games: &[Game], team: usize) -> Vec<usize> {
    let mut mine: Vec<&Game> = games.iter().filter(|g| g.home == team || g.away == team).collect();
    mine.sort_by_key(|g| g.day);
    mine.iter().map(|g| g.home).collect()
}

/// Template extras on a random labeled metric. Returns the failed cases.
fn template_extra_failures() -> Vec<String> {
    let mut bad = Vec::new();
    for (n, seed) in [(10, 1), (18, 2), (26, 3)] {
        let d = generate_instance(InstanceKind::RandomMetric, n, seed).unwrap();
        let m = Matching::from_pairs(&d, (0..n / 2).map(|u| (2 * u, 2 * u + 1)));
        let mm = n / 2;
        let extra = |games: &[Game], t: usize| block_extra(&d, &m, t, &venues(games, t));
        let close = |a: f64, b: f64| (a - b).abs() <= ORACLE_TOL;
        for tail in 1..mm - 1 {
            let head = tail % (mm - 2) + 1;
            let g = expand_normal(tail, head, 1);
            let ts = [2 * tail - 2, 2 * tail - 1, 2 * head - 2, 2 * head - 1];
            if ts.iter().any(|&t| extra(&g, t) != 0.0) {
                bad.push(format!("normal n={n} ({tail},{head})"));
            }
        }
        for x in 2..mm - 1 {
            let g = expand_left(x, mm - 1, 1);
            let [x1, x2] = [2 * x - 2, 2 * x - 1];
            for c in [2 * mm - 4, 2 * mm - 3] {
                if !close(extra(&g, c), d.get(c, x1) + d.get(c, x2)) {
                    bad.push(format!("left n={n} x={x} c={c}"));
                }
            }
            if extra(&g, x1) != 0.0 || extra(&g, x2) != 0.0 {
                bad.push(format!("left tail n={n} x={x}"));
            }
        }
        let g = expand_special_left(mm, 1);
        if !close(extra(&g, n - 3), d.get(0, n - 3) + d.get(1, n - 3)) || extra(&g, n - 4) != 0.0 {
            bad.push(format!("special left n={n}"));
        }
    }
    bad
}

fn criterion5(corpus: &[Sample]) -> bool {
    let mut over_bound = Vec::new();
    let mut accounting = Vec::new();
    let mut worst: f64 = 0.0;
    for s in corpus {
        let l = &s.line;
        worst = worst.max(l.total / l.analytic_upper);
        if l.total > l.analytic_upper * (1.0 + RATIO_TOL) {
            over_bound.push(tag(s));
        }
        let b = extra_travel_breakdown(&s.c.schedule, &s.d, &s.c.numbering, &s.c.matching);
        let extras: f64 = b.teams.iter().map(|t| t.extra).sum();
        let ideal = degree_sums(&s.d).total + l.n as f64 * s.c.matching.weight;
        // Δ + (n−2)·d(M) + extras must cover the measured total.
        let bound = extras + ideal - 2.0 * s.c.matching.weight;
        if l.total > bound * (1.0 + ACCOUNTING_TOL) {
            accounting.push(tag(s));
        }
    }
    let templates = template_extra_failures();
    report(
        5,
        over_bound.is_empty() && accounting.is_empty() && templates.is_empty(),
        format!(
            "worst total/bound {worst:.4}; over bound {over_bound:?}; accounting gaps {accounting:?}; template mismatches {templates:?}"
        ),
    )
}

fn criterion6(corpus: &[Sample]) -> bool {
    let mut ineq3_fail = Vec::new();
    let (mut euclid, mut euclid_hold) = (0usize, 0usize);
    let mut all_hold = 0;
    for s in corpus {
        let c = &s.c;
        let diag = numbering_diagnostics(&c.numbering, &s.d, &c.matching, &c.tree, &c.tour);
        if !diag.ineq3_holds {
            ineq3_fail.push(tag(s));
        }
        all_hold += diag.ineq4_holds as usize;
        if s.kind == InstanceKind::Euclidean {
            euclid += 1;
            euclid_hold += diag.ineq4_holds as usize;
        }
    }
    let rate = euclid_hold as f64 / euclid.max(1) as f64;
    report(
        6,
        ineq3_fail.is_empty() && rate >= INEQ4_MIN_RATE,
        format!(
            "(3) fails on {ineq3_fail:?}; (4) holds on {euclid_hold}/{euclid} euclidean ({:.1}%, need {:.0}%), {all_hold}/{} overall",
            100.0 * rate,
            100.0 * INEQ4_MIN_RATE,
            corpus.len()
        ),
    )
}

fn time_pipeline(n: usize) -> Duration {
    (0..3)
        .map(|seed| {
            let d = generate_instance(InstanceKind::Euclidean, n, seed).unwrap();
            let start = Instant::now();
            let (_, _, line) = evaluate(&d, Some(seed), None).unwrap();
            let t = start.elapsed();
            assert_eq!(line.violations, 0);
            t
        })
        .min()
        .unwrap()
}

fn measure_growth() -> [Duration; 3] {
    [time_pipeline(26), time_pipeline(50), time_pipeline(102)]
}

fn criterion7([t26, t50, t102]: [Duration; 3]) -> bool {
    let g1 = t50.as_secs_f64() / t26.as_secs_f64();
    let g2 = t102.as_secs_f64() / t50.as_secs_f64();
    report(
        7,
        t102 <= N102_BUDGET && g1 <= MAX_DOUBLING_GROWTH && g2 <= MAX_DOUBLING_GROWTH,
        format!(
            "n=26 {:.1}ms, n=50 {:.1}ms, n=102 {:.1}ms (budget {}ms); growth {g1:.2}x, {g2:.2}x (max {MAX_DOUBLING_GROWTH}x)",
            t26.as_secs_f64() * 1e3,
            t50.as_secs_f64() * 1e3,
            t102.as_secs_f64() * 1e3,
            N102_BUDGET.as_millis()
        ),
    )
}

fn criterion8(corpus: &[Sample]) -> bool {
    let mut bad = Vec::new();
    for n in corpus_sizes() {
        let m = n / 2;
        let p = participation(&build_slot_plans(m).unwrap(), m);
        for (idx, &got) in p.iter().enumerate() {
            let u = idx + 1;
            let want = match u {
                1 => Participation { normal: m - 5, left: 0, special_left: 1, right: 2 },
                _ if u == m => Participation { normal: 0, left: 0, special_left: 0, right: m - 2 },
                _ if u == m - 1 => Participation { normal: 1, left: m - 4, special_left: 1, right: 0 },
                _ if u == m - 2 => Participation { normal: m - 4, left: 0, special_left: 0, right: 2 },
                _ => Participation { normal: m - 5, left: 1, special_left: 0, right: 2 },
            };
            if got != want {
                bad.push(format!("n={n} u_{u}: {got:?}"));
            }
        }
    }
    // The plans used by the corpus are the same ones.
    let plans_match = corpus
        .iter()
        .all(|s| s.c.plans == build_slot_plans(s.line.n / 2).unwrap());
    report(
        8,
        bad.is_empty() && plans_match,
        format!("n = 10..=50 step 4; mismatches {bad:?}; corpus plans consistent: {plans_match}"),
    )
}

fn main() {
    let mut ok = true;
    // Timing first, before the machine is busy with the corpus.
    let timings = measure_growth();

    let start = Instant::now();
    let corpus = build_corpus();
    let elapsed = start.elapsed();
    ok &= criterion1(&corpus, elapsed);
    let samples: &[Sample] = corpus.as_deref().unwrap_or(&[]);
    ok &= criterion2(samples) && !samples.is_empty();
    ok &= criterion3();
    ok &= criterion4();
    ok &= criterion5(samples) && !samples.is_empty();
    ok &= criterion6(samples) && !samples.is_empty();
    ok &= criterion7(timings);
    ok &= criterion8(samples);
    if !ok {
        std::process::exit(1);
    }
}
