// Drive the command-line front end in-process.

use ttp2::cli::main_with_args;

pub fn run_example() -> ttp2::Result<()> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = main_with_args(["ttp2", "bounds", "--kind", "circle", "--n", "10"], &mut out, &mut err);
    print!("{}", String::from_utf8_lossy(&out));
    assert_eq!(code, 0);
    let code = main_with_args(["ttp2", "solve", "--n", "12"], &mut out, &mut err);
    println!("solve --n 12 exits with {code}: {}", String::from_utf8_lossy(&err).trim());
    assert_eq!(code, 2);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("cli");
}
