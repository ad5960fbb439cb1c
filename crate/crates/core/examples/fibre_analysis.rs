// Classifies a few fibres of Example 1 through the rank of the
// multiplication map on quadrics.

use pencil5::exactalg::FieldMode;
use pencil5::fibration::{analyze_fibre, build_example1, BasePoint, FibreOptions};

pub fn run_example() -> pencil5::Result<()> {
    let mode = FieldMode::prime(32003)?;
    let model = build_example1(7).to_mode(mode)?;
    let opts = FibreOptions::default();
    for (t0, t1) in [(1, 0), (0, 1), (1, 1), (2, 3)] {
        let point = BasePoint::from_i64(mode, t0, t1)?;
        let r = analyze_fibre(&model, &point, &opts)?;
        println!(
            "{}: quadrics {}, cubics {}, rank {}, coker {} -> {} ({:?}), h = {:?}",
            r.point, r.quadric_dim, r.cubic_dim, r.mu_rank, r.coker_dim, r.classification, r.smooth, r.hilbert_values
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> pencil5::Result<()> {
    run_example()
}
