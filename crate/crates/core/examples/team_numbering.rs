// Label teams from the matching and Hamilton cycle and check the two
// inequalities the labels are built for.

use ttp2::graph::{christofides_with_parts, min_weight_perfect_matching};
use ttp2::instance::{generate_instance, InstanceKind};
use ttp2::numbering::{assign_numbering, numbering_diagnostics};

pub fn run_example() -> ttp2::Result<()> {
    let d = generate_instance(InstanceKind::Euclidean, 18, 5)?;
    let all: Vec<usize> = (0..d.n()).collect();
    let m = min_weight_perfect_matching(&d, &all)?;
    let parts = christofides_with_parts(&d)?;
    let num = assign_numbering(&d, &m, &parts.tour);
    print!("label original\n{}", num.dump());
    let diag = numbering_diagnostics(&num, &d, &m, &parts.tree, &parts.tour);
    println!(
        "top-four D sum {:.3} <= 4Δ/n {:.3}: {}",
        diag.ineq3_lhs, diag.ineq3_rhs, diag.ineq3_holds
    );
    println!(
        "even cycle {:.3} <= d(T)+d(M) {:.3}: {}",
        diag.ineq4_lhs, diag.ineq4_rhs, diag.ineq4_holds
    );
    assert!(diag.ineq3_holds);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("numbering");
}
