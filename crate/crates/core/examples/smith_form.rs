// Smith normal form over Q[s] and squarefree parts.

use pencil5::exactalg::{smith_form, squarefree_part, FieldMode, UniPoly, UniPolyMatrix};

pub fn run_example() -> pencil5::Result<()> {
    let q = FieldMode::Rational;
    let p = |cs: &[i64]| UniPoly::from_i64s(q, cs);

    let m = UniPolyMatrix::from_rows(q, vec![vec![p(&[0, 1]), p(&[1])], vec![p(&[]), p(&[0, 1])]]);
    let sf = smith_form(&m);
    let factors: Vec<String> = sf.invariant_factors.iter().map(|f| f.to_string_in("s")).collect();
    println!("[[s, 1], [0, s]]: factors {factors:?}, torsion length {}", sf.torsion_length);

    let f = p(&[0, 0, -1, 1]);
    let sq = squarefree_part(&f)?;
    println!("squarefree part of {} is {}", f.to_string_in("s"), sq.to_string_in("s"));
    Ok(())
}

#[allow(dead_code)]
fn main() -> pencil5::Result<()> {
    run_example()
}
