//! Smith normal form over `k[s]` by Euclidean elimination.
//!
//! Pivot rule: the nonzero entry of smallest degree in the active submatrix,
//! ties broken by the lexicographically smallest (row, column). Over the
//! rationals every touched row is divided by its content.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::matrix::UniPolyMatrix;
use super::scalar::{FieldMode, Scalar};
use super::unipoly::UniPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// Monic invariant factors `d_1 | d_2 | ... | d_r`.
    pub invariant_factors: Vec<UniPoly>,
    /// Rank over the fraction field `k(s)`.
    pub rank: usize,
    /// Sum of the degrees of the invariant factors: the length of the torsion
    /// part of the cokernel.
    pub torsion_length: usize,
}

impl SmithForm {
    pub fn last_factor(&self) -> Option<&UniPoly> {
        self.invariant_factors.last()
    }

    /// Invariant factors that are not units.
    pub fn nontrivial_factors(&self) -> impl Iterator<Item = &UniPoly> {
        self.invariant_factors.iter().filter(|d| d.degree() != Some(0))
    }

    pub fn satisfies_divisibility_chain(&self) -> bool {
        self.invariant_factors.iter().all(UniPoly::is_monic)
            && self.invariant_factors.windows(2).all(|w| w[0].divides(&w[1]))
    }
}

pub fn smith_form(m: &UniPolyMatrix) -> SmithForm {
    let mut a = m.clone();
    let mode = a.mode();
    let (rows, cols) = (a.rows(), a.cols());
    let mut factors = Vec::new();

    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = min_degree_entry(&a, t) else {
            break;
        };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            let pivot = a.get(t, t).clone();
            for i in t + 1..rows {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let (q, r) = a.get(i, t).div_rem(&pivot);
                for j in t..cols {
                    if a.get(t, j).is_zero() {
                        continue;
                    }
                    let v = a.get(i, j).sub(&q.mul(a.get(t, j)));
                    a.set(i, j, v);
                }
                a.set(i, t, r.clone());
                normalize_row(&mut a, i, mode);
                dirty |= !r.is_zero();
            }
            for j in t + 1..cols {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let (q, r) = a.get(t, j).div_rem(&pivot);
                for i in t..rows {
                    if a.get(i, t).is_zero() {
                        continue;
                    }
                    let v = a.get(i, j).sub(&q.mul(a.get(i, t)));
                    a.set(i, j, v);
                }
                a.set(t, j, r.clone());
                dirty |= !r.is_zero();
            }
            if dirty {
                let (pi, pj) = min_degree_entry(&a, t).expect("nonzero entries remain");
                a.swap_rows(t, pi);
                a.swap_cols(t, pj);
                continue;
            }
            // Row and column t are clear; enforce divisibility of the rest.
            let offender = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !a.get(i, j).is_zero() && !pivot.divides(a.get(i, j)));
            match offender {
                Some((i, _)) => {
                    for j in t..cols {
                        let v = a.get(t, j).add(a.get(i, j));
                        a.set(t, j, v);
                    }
                }
                None => break,
            }
        }
        factors.push(a.get(t, t).monic());
    }

    let torsion_length = factors.iter().map(|d| d.degree().unwrap_or(0)).sum();
    let sf = SmithForm { rank: factors.len(), invariant_factors: factors, torsion_length };
    debug_assert!(sf.satisfies_divisibility_chain(), "divisibility chain violated: {sf:?}");
    sf
}

fn min_degree_entry(a: &UniPolyMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            if let Some(d) = a.get(i, j).degree() {
                if best.is_none_or(|(bd, _, _)| d < bd) {
                    best = Some((d, i, j));
                }
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Divides a row by the rational content of its entries.
fn normalize_row(a: &mut UniPolyMatrix, i: usize, mode: FieldMode) {
    if mode != FieldMode::Rational {
        return;
    }
    let mut num_gcd = BigInt::zero();
    let mut den_lcm = BigInt::one();
    for j in 0..a.cols() {
        for c in a.get(i, j).coeffs() {
            if let Some(r) = c.as_rational() {
                num_gcd = num_gcd.gcd(r.numer());
                den_lcm = den_lcm.lcm(r.denom());
            }
        }
    }
    if num_gcd.is_zero() || (num_gcd.is_one() && den_lcm.is_one()) {
        return;
    }
    let scale = Scalar::Rational(BigRational::new(den_lcm, num_gcd));
    for j in 0..a.cols() {
        let v = a.get(i, j).scale(&scale);
        a.set(i, j, v);
    }
}
