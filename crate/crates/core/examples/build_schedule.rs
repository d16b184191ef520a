// Build the n = 10 schedule, show its slot plan and print the timetable.

use ttp2::construction::construct_schedule;
use ttp2::instance::{generate_instance, InstanceKind};

pub fn run_example() -> ttp2::Result<()> {
    let d = generate_instance(InstanceKind::Euclidean, 10, 1)?;
    let c = construct_schedule(&d)?;
    for p in &c.plans {
        let games: Vec<String> = p
            .supergames
            .iter()
            .map(|g| format!("{:?}{:?}", g.kind, g.participants))
            .collect();
        println!("slot {} (days {}-{}): {}", p.s, p.first_day(), p.first_day() + 3, games.join(" "));
    }
    println!("right layouts: {:?}", c.right_layouts);
    print!("{}", c.schedule.to_timetable_text()?);
    assert_eq!(c.schedule.games.len(), 90);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("construction");
}
