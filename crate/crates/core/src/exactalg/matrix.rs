//! Dense matrices over a field and over `k[s]`.

use super::scalar::{FieldMode, Scalar};
use super::unipoly::UniPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarMatrix {
    mode: FieldMode,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub matrix: ScalarMatrix,
    pub pivots: Vec<usize>,
}

impl ScalarMatrix {
    pub fn zeros(mode: FieldMode, rows: usize, cols: usize) -> Self {
        ScalarMatrix { mode, rows, cols, data: vec![mode.zero(); rows * cols] }
    }

    pub fn identity(mode: FieldMode, n: usize) -> Self {
        let mut m = Self::zeros(mode, n, n);
        for i in 0..n {
            m.set(i, i, mode.one());
        }
        m
    }

    /// Builds a matrix from rows; all rows must have equal length.
    pub fn from_rows(mode: FieldMode, rows: Vec<Vec<Scalar>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let n = rows.len();
        ScalarMatrix { mode, rows: n, cols, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(mode: FieldMode, rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            mode,
            rows.iter().map(|r| r.iter().map(|&v| mode.from_i64(v)).collect()).collect(),
        )
    }

    pub fn mode(&self) -> FieldMode {
        self.mode
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(self.mode.zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }

    /// Gauss-Jordan elimination. Pivots are chosen as the first nonzero entry
    /// in each column, so the result is deterministic.
    pub fn rref(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    if m.get(r, j).is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) - &(&f * m.get(r, j));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Rank and a kernel basis. The basis has one vector per non-pivot column
    /// of the reduced echelon form, with a 1 in that column; stacked, the
    /// vectors are themselves in reduced echelon form.
    pub fn rank_kernel(&self) -> (usize, Vec<Vec<Scalar>>) {
        let Echelon { matrix, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let basis = free
            .iter()
            .map(|&f| {
                let mut v = vec![self.mode.zero(); self.cols];
                v[f] = self.mode.one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -matrix.get(r, f);
                }
                v
            })
            .collect();
        (pivots.len(), basis)
    }

    /// Particular solution of `self * x = b` with all free variables set to
    /// zero, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        self.solve_with_free(b, &[])
    }

    /// Like [`solve`](Self::solve), but free variables listed in `free_values`
    /// (column, value) are pinned to the given values instead of zero.
    pub fn solve_with_free(&self, b: &[Scalar], free_values: &[(usize, Scalar)]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = ScalarMatrix::zeros(self.mode, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let Echelon { matrix, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![self.mode.zero(); self.cols];
        for (c, v) in free_values {
            if !pivots.contains(c) {
                x[*c] = v.clone();
            }
        }
        for (r, &pc) in pivots.iter().enumerate() {
            let mut v = matrix.get(r, self.cols).clone();
            for (j, xj) in x.iter().enumerate() {
                if j != pc && !pivots.contains(&j) && !xj.is_zero() {
                    v = &v - &(matrix.get(r, j) * xj);
                }
            }
            x[pc] = v;
        }
        Some(x)
    }

    /// Indices of columns that are not pivots of the echelon form.
    pub fn free_columns(&self) -> Vec<usize> {
        let piv = self.rref().pivots;
        (0..self.cols).filter(|c| !piv.contains(c)).collect()
    }
}

/// A dense matrix of polynomials in `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPolyMatrix {
    mode: FieldMode,
    rows: usize,
    cols: usize,
    data: Vec<UniPoly>,
}

impl UniPolyMatrix {
    pub fn zeros(mode: FieldMode, rows: usize, cols: usize) -> Self {
        UniPolyMatrix { mode, rows, cols, data: vec![UniPoly::zero(); rows * cols] }
    }

    pub fn from_rows(mode: FieldMode, rows: Vec<Vec<UniPoly>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let n = rows.len();
        UniPolyMatrix { mode, rows: n, cols, data: rows.into_iter().flatten().collect() }
    }

    pub fn mode(&self) -> FieldMode {
        self.mode
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &UniPoly {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: UniPoly) {
        self.data[i * self.cols + j] = v;
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// Evaluates every entry at `s = x`.
    pub fn specialize(&self, x: &Scalar) -> ScalarMatrix {
        let mut m = ScalarMatrix::zeros(self.mode, self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).eval(x));
            }
        }
        m
    }
}
