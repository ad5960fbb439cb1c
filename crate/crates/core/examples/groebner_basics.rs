// Gröbner bases, normal forms and projective emptiness on small ideals.

use pencil5::exactalg::FieldMode;
use pencil5::groebner::{buchberger, fibre_hilbert_function, projective_empty, GroebnerConfig, MonomialOrder};
use pencil5::multipoly::{fibre_names, format_polynomial, parse_polynomial, Polynomial};

fn parse_all(texts: &[&str]) -> pencil5::Result<Vec<Polynomial>> {
    let names = fibre_names();
    texts.iter().map(|t| parse_polynomial(t, &names, FieldMode::Rational)).collect()
}

pub fn run_example() -> pencil5::Result<()> {
    let names = fibre_names();
    let config = GroebnerConfig::default();

    let gb = buchberger(&parse_all(&["x0^2 - x1^2", "x0 - x1"])?, MonomialOrder::Grevlex, &config)?;
    for g in gb.generators() {
        println!("GB element: {}", format_polynomial(&g, &names));
    }

    // twisted cubic in x0..x3, cut by x4 = 0
    let cubic = parse_all(&["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2", "x4"])?;
    let gb = buchberger(&cubic, MonomialOrder::Grevlex, &config)?;
    let h: Vec<u64> = (0..6).map(|m| fibre_hilbert_function(&gb, m)).collect();
    println!("Hilbert function of a twisted cubic: {h:?}");
    let f = parse_all(&["x1^3 + x0*x3^2"])?.remove(0);
    println!("normal form of x1^3 + x0*x3^2: {}", format_polynomial(&gb.normal_form(&f), &names));

    println!("twisted cubic empty: {}", projective_empty(&cubic, &config)?);
    println!("all variables empty: {}", projective_empty(&parse_all(&["x0", "x1", "x2", "x3", "x4"])?, &config)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> pencil5::Result<()> {
    run_example()
}
