// Parallel sweep over sizes and seeds, reporting the worst ratio slack.

use rayon::prelude::*;
use ttp2::analysis::evaluate;
use ttp2::instance::{generate_instance, InstanceKind};

pub fn run_example() -> ttp2::Result<()> {
    let jobs: Vec<(usize, u64)> = [10, 18, 26, 34]
        .iter()
        .flat_map(|&n| (0..3).map(move |s| (n, s)))
        .collect();
    let lines = jobs
        .par_iter()
        .map(|&(n, seed)| {
            let kind = InstanceKind::RandomMetric;
            let d = generate_instance(kind, n, seed)?;
            Ok(evaluate(&d, Some(seed), Some(kind))?.2)
        })
        .collect::<ttp2::Result<Vec<_>>>()?;
    for l in &lines {
        println!(
            "n={:>3} seed={} ratio {:.4} (target {:.4}) violations {}",
            l.n,
            l.seed.unwrap_or(0),
            l.ratio,
            l.target,
            l.violations
        );
    }
    assert!(lines.iter().all(|l| l.passes()));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("bench sweep");
}
