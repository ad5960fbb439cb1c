// Extracts p_g, chi_f and K_f^2 from the Hilbert function of a model.
//
// Pass `rational` or `prime:p` as the first argument to pick the field.

use std::time::Instant;

use pencil5::exactalg::FieldMode;
use pencil5::fibration::{build_example1, extract_invariants, FitOptions};
use pencil5::groebner::GroebnerConfig;

pub fn run_example() -> pencil5::Result<()> {
    run_in(FieldMode::prime(32003)?)
}

fn run_in(mode: FieldMode) -> pencil5::Result<()> {
    let model = build_example1(7).to_mode(mode)?;
    let start = Instant::now();
    let inv = extract_invariants(&model, &GroebnerConfig::from_env(), &FitOptions::default())?;
    println!("mode {mode}: {:?}", start.elapsed());
    println!("p_g = {}, chi_f = {}, K_f^2 = {}, e_f = {}", inv.p_g, inv.chi_f, inv.k_f_squared, inv.e_f);
    println!("h(n) = {:?} on window {:?}", inv.hilbert_values, inv.fit_window);
    Ok(())
}

#[allow(dead_code)]
fn main() -> pencil5::Result<()> {
    match std::env::args().nth(1) {
        Some(m) => run_in(m.parse()?),
        None => run_example(),
    }
}
