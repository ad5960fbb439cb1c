// Builds the scroll families, shows the grading convention each one
// settles on and the invariants fitted from its Hilbert function.

use pencil5::exactalg::FieldMode;
use pencil5::fibration::{build_example2, build_example3, verify_slope, VerifyOptions};

pub fn run_example() -> pencil5::Result<()> {
    let mode = FieldMode::prime(32003)?;
    let mut opts = VerifyOptions::default();
    opts.fibre.smoothness = false;
    for model in [build_example2(1, 7)?, build_example3(1, 7)?] {
        let model = model.to_mode(mode)?;
        let conv = model.convention.map(|c| c.name()).unwrap_or("none");
        let rows: Vec<String> = model.twists.rows.iter().map(|r| r.to_string()).collect();
        println!("{} under {conv}, row twists {}", model.family, rows.join(" "));
        let r = verify_slope(&model, &opts)?;
        let inv = &r.invariants;
        println!(
            "  p_g = {} (family states {:?}), chi_f = {}, K_f^2 = {}",
            inv.p_g, inv.expected_pg, inv.chi_f, inv.k_f_squared
        );
        println!("  {} -> {:?}, torsion length {:?}", r.equation, r.status, r.torsion_length);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> pencil5::Result<()> {
    run_example()
}
