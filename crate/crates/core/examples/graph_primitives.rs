// Spanning tree, minimum-weight perfect matching and the Christofides
// cycle for a random Euclidean instance.

use ttp2::graph::{christofides_with_parts, min_weight_perfect_matching};
use ttp2::instance::{generate_instance, InstanceKind};

pub fn run_example() -> ttp2::Result<()> {
    let d = generate_instance(InstanceKind::Euclidean, 14, 3)?;
    let all: Vec<usize> = (0..d.n()).collect();
    let m = min_weight_perfect_matching(&d, &all)?;
    let parts = christofides_with_parts(&d)?;
    println!("d(T)   = {:.4}", parts.tree.weight);
    println!("d(M)   = {:.4}  pairs {:?}", m.weight, m.pairs);
    println!("M_odd  = {:.4}", parts.odd_matching.weight);
    println!("tour   = {:.4}  {:?}", parts.tour.weight, parts.tour.order);
    assert!(parts.tour.weight <= parts.tree.weight + parts.odd_matching.weight + 1e-9);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("graph primitives");
}
