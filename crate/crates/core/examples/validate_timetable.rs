// Validate a constructed timetable, then break it and list what the
// validator reports.

use ttp2::construction::construct_schedule;
use ttp2::instance::{generate_instance, InstanceKind};
use ttp2::schedule::Schedule;
use ttp2::validation::validate_schedule;

pub fn run_example() -> ttp2::Result<()> {
    let d = generate_instance(InstanceKind::Circle, 14, 0)?;
    let c = construct_schedule(&d)?;
    let text = c.schedule.to_timetable_text()?;
    let parsed = Schedule::from_timetable_text(&text)?;
    assert!(validate_schedule(&parsed, 2, 26).is_empty());
    println!("constructed timetable: feasible");

    // Swap the first two rows: opponents repeat across the seam and runs grow.
    let mut rows: Vec<&str> = text.lines().collect();
    rows.swap(1, 2);
    let broken = Schedule::from_timetable_text(&rows.join("\n"))?;
    let v = validate_schedule(&broken, 2, 26);
    for x in &v {
        println!("  {x}");
    }
    println!("rows 2 and 3 swapped: {} violations", v.len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("validation");
}
