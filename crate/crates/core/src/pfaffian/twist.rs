use serde::{Deserialize, Serialize};

use super::{SkewMatrix, UPPER_PAIRS};
use crate::error::{Error, Result};
use crate::exactalg::{FieldMode, Scalar, ScalarMatrix};
use crate::multipoly::{BiDegree, Grading};

/// Row twists `r_1..r_5` and total twist `T` with
/// `deg m_ij = T - r_i - r_j`, normalized by `r_3 = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistData {
    pub rows: [BiDegree; 5],
    pub total: BiDegree,
}

impl TwistData {
    fn row_sum(&self) -> BiDegree {
        self.rows.iter().fold(BiDegree::ZERO, |a, r| a + *r)
    }

    /// Predicted bidegree of `m_ij` (1-based).
    pub fn entry_degree(&self, i: usize, j: usize) -> BiDegree {
        self.total - self.rows[i - 1] - self.rows[j - 1]
    }

    /// Bidegrees of `Pf_1..Pf_5`: `2T - sum r + r_k`.
    pub fn pfaffian_degrees(&self) -> [BiDegree; 5] {
        let base = 2 * self.total - self.row_sum();
        self.rows.map(|r| base + r)
    }

    /// Bidegrees of the second syzygy generators: `3T - sum r - r_k`.
    pub fn syzygy_degrees(&self) -> [BiDegree; 5] {
        let base = 3 * self.total - self.row_sum();
        self.rows.map(|r| base - r)
    }

    /// Bidegree of the last term of the resolution: `5T - 2 sum r`.
    pub fn top_degree(&self) -> BiDegree {
        5 * self.total - 2 * self.row_sum()
    }
}

/// Unknown order: `T, r1, r2, r4, r5` (`r3 = 0`).
fn column(k: usize) -> Option<usize> {
    match k {
        1 => Some(1),
        2 => Some(2),
        3 => None,
        4 => Some(3),
        5 => Some(4),
        _ => unreachable!(),
    }
}

fn system(rows: &[((usize, usize), i64)]) -> (ScalarMatrix, Vec<Scalar>) {
    let q = FieldMode::Rational;
    let mut m = ScalarMatrix::zeros(q, rows.len(), 5);
    let mut b = Vec::with_capacity(rows.len());
    for (r, &((i, j), d)) in rows.iter().enumerate() {
        m.set(r, 0, q.one());
        for k in [i, j] {
            if let Some(c) = column(k) {
                m.set(r, c, q.from_i64(-1));
            }
        }
        b.push(q.from_i64(d));
    }
    (m, b)
}

/// Integer solution of one component, trying 0/1 for the free unknowns.
fn solve_component(rows: &[((usize, usize), i64)]) -> Option<[i64; 5]> {
    let (m, b) = system(rows);
    let free = m.free_columns();
    let q = FieldMode::Rational;
    for mask in 0u32..(1 << free.len()) {
        let fv: Vec<_> = free.iter().enumerate().map(|(k, &c)| (c, q.from_i64(((mask >> k) & 1) as i64))).collect();
        let sol = m.solve_with_free(&b, &fv)?;
        let ints: Option<Vec<i64>> = sol
            .iter()
            .map(|s| s.as_rational().filter(|r| r.is_integer()).and_then(|r| i64::try_from(r.to_integer()).ok()))
            .collect();
        if let Some(v) = ints {
            return Some([v[0], v[1], v[2], v[3], v[4]]);
        }
    }
    None
}

/// Finds twist data under which every nonzero entry is homogeneous of the
/// predicted bidegree.
pub fn infer_twists(m: &SkewMatrix, grading: &Grading) -> Result<TwistData> {
    let mut constraints: Vec<((usize, usize), BiDegree)> = Vec::new();
    for ((i, j), e) in m.upper_entries() {
        if e.is_zero() {
            continue;
        }
        let d = e.bidegree(grading)?;
        constraints.push(((i, j), d));
        for comp in 0..2 {
            let rows: Vec<_> =
                constraints.iter().map(|&(p, d)| (p, if comp == 0 { d.base } else { d.fibre })).collect();
            if solve_component(&rows).is_none() {
                return Err(Error::NotTwistHomogeneous { i, j });
            }
        }
    }
    let pick = |comp: usize| {
        let rows: Vec<_> = constraints.iter().map(|&(p, d)| (p, if comp == 0 { d.base } else { d.fibre })).collect();
        solve_component(&rows).expect("checked above")
    };
    let (b, f) = (pick(0), pick(1));
    let mut rows = [BiDegree::ZERO; 5];
    for (k, r) in rows.iter_mut().enumerate() {
        if let Some(c) = column(k + 1) {
            *r = BiDegree::new(b[c], f[c]);
        }
    }
    let t = TwistData { rows, total: BiDegree::new(b[0], f[0]) };
    debug_assert!(UPPER_PAIRS.iter().zip(m.upper_entries()).all(|(&(i, j), (_, e))| e.is_zero()
        || e.bidegree(grading).ok() == Some(t.entry_degree(i, j))));
    Ok(t)
}
