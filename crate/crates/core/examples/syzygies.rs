// Expresses the cubic generators of Example 1 through the quadric ones
// and tests a candidate relation by its exact residual.

use pencil5::fibration::build_example1;
use pencil5::multipoly::{format_polynomial, BiDegree, Polynomial};
use pencil5::pfaffian::{relation_residual, relation_search};

pub fn run_example() -> pencil5::Result<()> {
    let model = build_example1(7);
    let g = &model.generators;
    let names = model.grading.names();
    let (c1, c2) = (&g[0], &g[1]);
    let quadrics = &g[2..5];
    let t1 = Polynomial::var(7, 1, model.mode);

    for (label, c, degree) in [("t1*c2", c2, BiDegree::new(0, 1)), ("t1*c1", c1, BiDegree::new(1, 1))] {
        match relation_search(&t1.mul(c), quadrics, &model.grading, degree)? {
            Some(rel) => {
                let ls: Vec<String> = rel.multipliers.iter().map(|l| format_polynomial(l, names)).collect();
                println!("{label} = sum l_i p_i with l = {ls:?}");
            }
            None => println!("{label}: no relation"),
        }
    }

    // candidate t1*c1 = t0*(x1*p1 - x2*p2 + x4*p3)
    let v = |i: usize| Polynomial::var(7, i, model.mode);
    let t0x = |i: usize| v(0).mul(&v(2 + i));
    let candidate = [t0x(1), t0x(2).neg(), t0x(4)];
    let residual = relation_residual(&t1.mul(c1), quadrics, &candidate);
    println!("candidate residual is zero: {}", residual.is_zero());
    Ok(())
}

#[allow(dead_code)]
fn main() -> pencil5::Result<()> {
    run_example()
}
