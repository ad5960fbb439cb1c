use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exactalg::{FieldMode, ScalarMatrix};
use crate::multipoly::{BiDegree, Grading, Monomial, Polynomial};

/// A solution of `target = sum_i multipliers[i] * generators[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub multipliers: Vec<Polynomial>,
    /// Dimension of the solution space; the returned solution sets all free
    /// parameters of the reduced echelon form to zero.
    pub free_parameters: usize,
}

/// Searches for multipliers of the given bidegree expressing `target` in
/// terms of `generators`. Returns `None` if no such relation exists.
pub fn relation_search(
    target: &Polynomial,
    generators: &[Polynomial],
    grading: &Grading,
    multiplier_degree: BiDegree,
) -> Result<Option<Relation>> {
    let nvars = grading.nvars();
    let mode = target
        .mode()
        .or_else(|| generators.iter().find_map(Polynomial::mode))
        .unwrap_or(FieldMode::Rational);
    if target.nvars() != nvars || generators.iter().any(|g| g.nvars() != nvars) {
        return Err(Error::InvalidParameter("polynomials do not match the grading".into()));
    }
    let basis = grading.monomials_of(multiplier_degree);

    // one column per (generator, multiplier monomial)
    let mut rows: HashMap<Monomial, usize> = HashMap::new();
    let mut columns = Vec::new();
    for g in generators {
        for m in &basis {
            let prod = g.mul_monomial(m, &mode.one());
            for (mm, _) in prod.terms() {
                let n = rows.len();
                rows.entry(*mm).or_insert(n);
            }
            columns.push(prod);
        }
    }
    for (mm, _) in target.terms() {
        let n = rows.len();
        rows.entry(*mm).or_insert(n);
    }
    let mut a = ScalarMatrix::zeros(mode, rows.len(), columns.len());
    for (c, prod) in columns.iter().enumerate() {
        for (mm, v) in prod.terms() {
            a.set(rows[mm], c, v.clone());
        }
    }
    let mut b = vec![mode.zero(); rows.len()];
    for (mm, v) in target.terms() {
        b[rows[mm]] = v.clone();
    }
    let Some(x) = a.solve(&b) else { return Ok(None) };
    let free_parameters = a.free_columns().len();
    let multipliers = generators
        .iter()
        .enumerate()
        .map(|(i, _)| {
            let terms = basis.iter().enumerate().map(|(k, m)| (*m, x[i * basis.len() + k].clone())).collect();
            Polynomial::from_terms(nvars, terms)
        })
        .collect();
    Ok(Some(Relation { multipliers, free_parameters }))
}

/// `target - sum_i multipliers[i] * generators[i]`; zero iff the relation is
/// an exact polynomial identity.
pub fn relation_residual(target: &Polynomial, generators: &[Polynomial], multipliers: &[Polynomial]) -> Polynomial {
    assert_eq!(generators.len(), multipliers.len());
    generators.iter().zip(multipliers).fold(target.clone(), |acc, (g, l)| acc.sub(&l.mul(g)))
}
