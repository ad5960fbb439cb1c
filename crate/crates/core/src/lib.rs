//! Exact computer algebra for genus-5 fibred surfaces over `P^1`.
//!
//! The crate builds fibred surfaces as Pfaffian ideals in `P^1 x P^4` (or in
//! a rational scroll), decides which fibres are trigonal, counts them through
//! a Smith normal form over `k[s]`, fits the invariants `p_g`, `chi_f` and
//! `K_f^2` from standard-monomial counts, and checks the slope equality
//! `K_f^2 = 4 chi_f + N`.
//!
//! Module map:
//!
//! - [`exactalg`]: rationals, prime fields, rank/kernel, Smith form
//! - [`multipoly`]: bigraded polynomials, parsing and printing
//! - [`groebner`]: Buchberger, normal forms, Hilbert-function counts
//! - [`pfaffian`]: 5x5 skew matrices, sub-Pfaffians, twists, syzygy search
//! - [`fibration`]: surface models, fibre analysis, trigonal locus, slope
//! - [`cli`]: the `pencil5` command line

pub mod cli;
pub mod error;
pub mod exactalg;
pub mod fibration;
pub mod groebner;
pub mod multipoly;
pub mod pfaffian;

pub use error::{Error, Result};
