// Travel against the lower bounds and the analytic upper bound, plus
// extra travel per super-team category.

use ttp2::analysis::{evaluate, extra_travel_breakdown};
use ttp2::instance::{generate_instance, InstanceKind};

pub fn run_example() -> ttp2::Result<()> {
    let kind = InstanceKind::Euclidean;
    let d = generate_instance(kind, 22, 2)?;
    let (c, report, line) = evaluate(&d, Some(2), Some(kind))?;
    println!("{}", serde_json::to_string(&line).expect("serializable"));
    println!(
        "lb2 {:.3} <= lb1 {:.3} <= total {:.3} <= bound {:.3}",
        report.lb2, report.lb1, report.total, report.analytic_upper
    );
    let extras = extra_travel_breakdown(&c.schedule, &d, &c.numbering, &c.matching);
    for (cat, e) in &extras.by_category {
        println!("category {cat:?}: extra {e:.3}");
    }
    assert!(line.passes());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("travel report");
}
