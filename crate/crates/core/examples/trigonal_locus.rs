// Counts trigonal fibres through the Smith form of the multiplication
// matrix over k[s], for Example 1 and a model with two trigonal fibres.

use pencil5::exactalg::FieldMode;
use pencil5::fibration::{build_example1, build_trigonal_at, trigonal_locus, FibreOptions};

pub fn run_example() -> pencil5::Result<()> {
    let mode = FieldMode::prime(32003)?;
    let opts = FibreOptions { smoothness: false, ..FibreOptions::default() };
    for model in [build_example1(7), build_trigonal_at(&[0, 1], 7)?] {
        let model = model.to_mode(mode)?;
        let locus = trigonal_locus(&model, &opts)?;
        println!("{}", model.family);
        println!("  invariant factors: {:?}", locus.invariant_factors);
        println!("  squarefree factor: {}", locus.squarefree_factor);
        println!("  rational roots:    {:?}", locus.rational_roots);
        println!("  infinity fibre:    {}", locus.infinity);
        println!("  N = {}, torsion length = {}", locus.n, locus.torsion_length);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> pencil5::Result<()> {
    run_example()
}
