// Checks K_f^2 = 4 chi_f + N for Example 1 in two prime fields.

use pencil5::fibration::{build_example1, verify_dual_prime, VerifyOptions};

pub fn run_example() -> pencil5::Result<()> {
    let report = verify_dual_prime(&build_example1(7), &VerifyOptions::default())?;
    println!("{} -> {:?}", report.equation, report.status);
    if let Some(c) = &report.cross_check {
        println!("cross-check in {}: agrees = {}", c.field_mode, c.agrees);
    }
    for w in &report.warnings {
        println!("warning: {w}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> pencil5::Result<()> {
    run_example()
}
