// Solve tiny instances to optimality and compare with the lower bounds.

use ttp2::analysis::lower_bounds;
use ttp2::exact::solve_exact;
use ttp2::graph::{min_weight_perfect_matching, minimum_spanning_tree};
use ttp2::instance::{generate_instance, InstanceKind};

pub fn run_example() -> ttp2::Result<()> {
    for (n, seed) in [(4, 1), (6, 1)] {
        let d = generate_instance(InstanceKind::Euclidean, n, seed)?;
        let all: Vec<usize> = (0..n).collect();
        let m = min_weight_perfect_matching(&d, &all)?;
        let lb = lower_bounds(&d, &m, &minimum_spanning_tree(&d));
        let r = solve_exact(&d, 2, 50_000_000)?;
        println!(
            "n={n}: lb2 {:.4}  lb1 {:.4}  optimum {:.4}  ({} nodes)",
            lb.lb2, lb.lb1, r.optimum, r.nodes_explored
        );
        assert!(lb.lb2 <= lb.lb1 && lb.lb1 <= r.optimum + 1e-9);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("exact");
}
