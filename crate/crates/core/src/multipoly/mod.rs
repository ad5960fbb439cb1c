//! Bigraded multivariate polynomials over exact scalars.

mod grading;
mod monomial;
mod parse;
mod poly;

pub use grading::{monomials_of_degree, BiDegree, Grading, FIBRE_NAMES};
pub use monomial::{Monomial, MonomialOrder, Weights, MAX_VARS};
pub use parse::{format_monomial, format_polynomial, parse_polynomial};
pub use poly::{bidegree_of, BiPolynomial, Polynomial};

use crate::error::{Error, Result};
use crate::exactalg::Scalar;

/// Index of `t0`/`t1` in every ambient grading.
pub const T0: usize = 0;
pub const T1: usize = 1;

/// Names `x0..x4` for polynomials on a single fibre `P^4`.
pub fn fibre_names() -> Vec<String> {
    FIBRE_NAMES.iter().map(|s| s.to_string()).collect()
}

/// Names `s, x0..x4` for polynomials on the affine base chart `t0 = 1`.
pub fn chart_names() -> Vec<String> {
    std::iter::once("s".to_string()).chain(fibre_names()).collect()
}

/// Restricts an ambient polynomial to the fibre over `(t0 : t1)`. The result
/// lives in `x0..x4`. Extra (placeholder) variables are not allowed.
pub fn specialize_fibre(f: &Polynomial, t0: &Scalar, t1: &Scalar) -> Result<Polynomial> {
    if t0.is_zero() && t1.is_zero() {
        return Err(Error::DegeneratePoint);
    }
    assert_eq!(f.nvars(), 7, "fibre specialization expects the 7-variable ambient ring");
    Ok(f.substitute(&[(T0, t0.clone()), (T1, t1.clone())], &[2, 3, 4, 5, 6]))
}

/// Dehomogenizes the base on the chart `t0 = 1`; the result is a polynomial
/// in `s = t1` and `x0..x4`.
pub fn specialize_chart(f: &Polynomial) -> Polynomial {
    assert_eq!(f.nvars(), 7, "chart specialization expects the 7-variable ambient ring");
    let one = match f.mode() {
        Some(m) => m.one(),
        None => return Polynomial::zero(6),
    };
    f.substitute(&[(T0, one)], &[1, 2, 3, 4, 5, 6])
}
