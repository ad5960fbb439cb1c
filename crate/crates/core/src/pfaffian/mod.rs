//! Skew-symmetric 5x5 polynomial matrices, their sub-Pfaffians and twist
//! data.

mod json;
mod relation;
mod twist;

pub use json::{matrix_from_json, matrix_to_json, MatrixJson};
pub use relation::{relation_residual, relation_search, Relation};
pub use twist::{infer_twists, TwistData};

use crate::error::{Error, Result};
use crate::exactalg::Scalar;
use crate::multipoly::Polynomial;

/// The ten index pairs `(i, j)`, `1 <= i < j <= 5`, in storage order.
pub const UPPER_PAIRS: [(usize, usize); 10] =
    [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)];

fn slot(i: usize, j: usize) -> usize {
    UPPER_PAIRS.iter().position(|&p| p == (i, j)).expect("valid upper pair")
}

/// A 5x5 skew-symmetric matrix stored by its upper triangle. Indices are
/// 1-based throughout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewMatrix {
    nvars: usize,
    upper: Vec<Polynomial>,
}

impl SkewMatrix {
    pub fn zero(nvars: usize) -> Self {
        SkewMatrix { nvars, upper: vec![Polynomial::zero(nvars); 10] }
    }

    /// Builds a matrix from the upper-triangle entries in `UPPER_PAIRS` order.
    pub fn from_upper(entries: Vec<Polynomial>) -> Result<Self> {
        if entries.len() != 10 {
            return Err(Error::InvalidParameter(format!("expected 10 entries, got {}", entries.len())));
        }
        let nvars = entries[0].nvars();
        if entries.iter().any(|e| e.nvars() != nvars) {
            return Err(Error::InvalidParameter("entries live in different rings".into()));
        }
        Ok(SkewMatrix { nvars, upper: entries })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Entry `m_ij`, using `m_ji = -m_ij` and `m_ii = 0`.
    pub fn entry(&self, i: usize, j: usize) -> Result<Polynomial> {
        for k in [i, j] {
            if !(1..=5).contains(&k) {
                return Err(Error::IndexOutOfRange(k));
            }
        }
        Ok(match i.cmp(&j) {
            std::cmp::Ordering::Less => self.upper[slot(i, j)].clone(),
            std::cmp::Ordering::Greater => self.upper[slot(j, i)].neg(),
            std::cmp::Ordering::Equal => Polynomial::zero(self.nvars),
        })
    }

    /// Replaces `m_ij` (and implicitly `m_ji`); requires `i < j`.
    pub fn set(&mut self, i: usize, j: usize, value: Polynomial) -> Result<()> {
        if !(1..=5).contains(&i) || !(1..=5).contains(&j) || i >= j {
            return Err(Error::IndexOutOfRange(if i >= j { i } else { j }));
        }
        assert_eq!(value.nvars(), self.nvars, "arity mismatch");
        self.upper[slot(i, j)] = value;
        Ok(())
    }

    pub fn upper_entries(&self) -> impl Iterator<Item = ((usize, usize), &Polynomial)> {
        UPPER_PAIRS.iter().copied().zip(self.upper.iter())
    }

    /// Scales row and column `i` by `c`.
    pub fn scale_row_col(&self, i: usize, c: &Scalar) -> Result<Self> {
        if !(1..=5).contains(&i) {
            return Err(Error::IndexOutOfRange(i));
        }
        let mut out = self.clone();
        for (k, &(a, b)) in UPPER_PAIRS.iter().enumerate() {
            if a == i || b == i {
                out.upper[k] = out.upper[k].scale(c);
            }
        }
        Ok(out)
    }

    /// Applies `f` to every entry.
    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Self {
        let upper: Vec<_> = self.upper.iter().map(f).collect();
        let nvars = upper[0].nvars();
        SkewMatrix { nvars, upper }
    }
}

/// Pfaffian of the 4x4 submatrix omitting row and column `k`:
/// `m_ij m_lm - m_il m_jm + m_im m_jl` on the remaining `i < j < l < m`.
pub fn sub_pfaffian(m: &SkewMatrix, k: usize) -> Result<Polynomial> {
    if !(1..=5).contains(&k) {
        return Err(Error::IndexOutOfRange(k));
    }
    let idx: Vec<usize> = (1..=5).filter(|&x| x != k).collect();
    let (i, j, l, mm) = (idx[0], idx[1], idx[2], idx[3]);
    let e = |a, b| m.entry(a, b).expect("in range");
    let t1 = e(i, j).mul(&e(l, mm));
    let t2 = e(i, l).mul(&e(j, mm));
    let t3 = e(i, mm).mul(&e(j, l));
    Ok(t1.sub(&t2).add(&t3))
}

/// The five sub-Pfaffians `(Pf_1, ..., Pf_5)`.
pub fn pfaffian_ideal(m: &SkewMatrix) -> Vec<Polynomial> {
    (1..=5).map(|k| sub_pfaffian(m, k).expect("in range")).collect()
}

/// `sum_k (-1)^k m_jk Pf_k`, which vanishes identically for every `j`.
pub fn pfaffian_syzygy(m: &SkewMatrix, j: usize) -> Result<Polynomial> {
    let pf = pfaffian_ideal(m);
    let mut acc = Polynomial::zero(m.nvars());
    for (k, p) in pf.iter().enumerate() {
        let term = m.entry(j, k + 1)?.mul(p);
        acc = if (k + 1) % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    Ok(acc)
}
