//! Exact scalars, univariate polynomials and exact linear algebra, including
//! Smith normal form over `k[s]`.

mod matrix;
mod scalar;
mod smith;
mod unipoly;

pub use matrix::{Echelon, ScalarMatrix, UniPolyMatrix};
pub use scalar::{FieldMode, Fp, Scalar};
pub use smith::{smith_form, SmithForm};
pub use unipoly::{squarefree_part, UniPoly};

/// Rank and reduced-echelon kernel basis of a scalar matrix.
pub fn rank_kernel(m: &ScalarMatrix) -> (usize, Vec<Vec<Scalar>>) {
    m.rank_kernel()
}
