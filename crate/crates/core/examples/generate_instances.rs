// Generate one instance of each family, check it is metric and that the
// text format round-trips.

use ttp2::instance::{
    generate_instance, load_instance, serialize_instance, validate_metric, InstanceFormat,
    InstanceKind, DEFAULT_EPS_TRI,
};

pub fn run_example() -> ttp2::Result<()> {
    for kind in InstanceKind::ALL {
        let d = generate_instance(kind, 10, 7)?;
        assert!(validate_metric(&d, DEFAULT_EPS_TRI).is_empty());
        let text = serialize_instance(&d, InstanceFormat::Headered);
        assert_eq!(load_instance(&text, InstanceFormat::Headered)?, d);
        println!("{kind:>13}: n = {}, d(1,2) = {:.4}", d.n(), d.get(0, 1));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("instance generation");
}
