//! Independent oracles and random inputs shared by the integration tests.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use pencil5::exactalg::{FieldMode, Scalar, UniPoly, UniPolyMatrix};
use pencil5::multipoly::{Monomial, Polynomial};
use pencil5::pfaffian::SkewMatrix;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform integer in `[lo, hi]`.
pub fn small(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> i64 {
    lo + (rng.next_u64() % (hi - lo + 1) as u64) as i64
}

pub fn q(v: i64) -> Scalar {
    FieldMode::Rational.from_i64(v)
}

/// Random numeric 5x5 skew matrix as a dense rational array and as a
/// `SkewMatrix` of constants on the 7-variable ring.
pub fn random_numeric_skew(rng: &mut ChaCha8Rng) -> ([[BigRational; 5]; 5], SkewMatrix) {
    let mut a: [[BigRational; 5]; 5] = Default::default();
    let mut upper = Vec::new();
    for i in 0..5 {
        for j in (i + 1)..5 {
            let num = small(rng, -20, 20);
            let den = small(rng, 1, 6);
            let v = BigRational::new(BigInt::from(num), BigInt::from(den));
            a[i][j] = v.clone();
            a[j][i] = -v.clone();
            upper.push(Polynomial::constant(7, FieldMode::Rational.from_rational(&v).unwrap()));
        }
    }
    (a, SkewMatrix::from_upper(upper).unwrap())
}

/// Pfaffian of the skew submatrix on `idx` as a signed sum over all
/// perfect matchings, the sign being that of the permutation obtained by
/// listing the matched pairs in order.
pub fn pfaffian_by_matchings(a: &[[BigRational; 5]; 5], idx: &[usize]) -> BigRational {
    fn go(a: &[[BigRational; 5]; 5], rest: &[usize], perm: &mut Vec<usize>, acc: &mut BigRational) {
        if rest.is_empty() {
            let mut term = BigRational::one();
            for p in perm.chunks(2) {
                term *= &a[p[0]][p[1]];
            }
            let inversions = (0..perm.len())
                .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| perm[i] > perm[j])
                .count();
            if inversions % 2 == 1 {
                term = -term;
            }
            *acc += term;
            return;
        }
        let first = rest[0];
        for k in 1..rest.len() {
            let partner = rest[k];
            let remaining: Vec<usize> = rest[1..].iter().copied().filter(|&x| x != partner).collect();
            perm.push(first);
            perm.push(partner);
            go(a, &remaining, perm, acc);
            perm.truncate(perm.len() - 2);
        }
    }
    let mut acc = BigRational::zero();
    go(a, idx, &mut Vec::new(), &mut acc);
    acc
}

/// Determinant by cofactor expansion, for the small minors used here.
pub fn determinant(a: &[[BigRational; 5]; 5], idx: &[usize]) -> BigRational {
    if idx.is_empty() {
        return BigRational::one();
    }
    let row = idx[0];
    let mut total = BigRational::zero();
    for (k, &col) in idx.iter().enumerate() {
        let cols: Vec<usize> = idx.iter().copied().filter(|&c| c != col).collect();
        let rows: Vec<usize> = idx[1..].to_vec();
        let minor = det_rc(a, &rows, &cols);
        let term = &a[row][col] * minor;
        if k % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn det_rc(a: &[[BigRational; 5]; 5], rows: &[usize], cols: &[usize]) -> BigRational {
    if rows.is_empty() {
        return BigRational::one();
    }
    let mut total = BigRational::zero();
    for (k, &col) in cols.iter().enumerate() {
        let sub: Vec<usize> = cols.iter().copied().filter(|&c| c != col).collect();
        let term = &a[rows[0]][col] * det_rc(a, &rows[1..], &sub);
        if k % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        for r in (rank + 1)..rows {
            for k in (c + 1)..cols {
                let v = &m[rank][c] * &m[r][k] - &m[r][c] * &m[rank][k];
                m[r][k] = v / &prev;
            }
            m[r][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Random matrix over `Q[s]` built as `A * D * B` with integer `A`, `B` and
/// a diagonal `D` of products of small linear factors, so rank drops occur.
pub fn random_unipoly_matrix(rng: &mut ChaCha8Rng) -> (UniPolyMatrix, Vec<Vec<Vec<i64>>>) {
    let rows = small(rng, 2, 4) as usize;
    let cols = small(rng, 2, 4) as usize;
    let inner = rows.min(cols);
    let diag: Vec<Vec<i64>> = (0..inner)
        .map(|_| match small(rng, 0, 4) {
            0 => vec![0],
            1 => vec![1],
            2 => vec![small(rng, -2, 2), 1],
            _ => {
                let (r1, r2) = (small(rng, -2, 2), small(rng, -2, 2));
                vec![r1 * r2, -(r1 + r2), 1]
            }
        })
        .collect();
    let a: Vec<Vec<i64>> = (0..rows).map(|_| (0..inner).map(|_| small(rng, -3, 3)).collect()).collect();
    let b: Vec<Vec<i64>> = (0..inner).map(|_| (0..cols).map(|_| small(rng, -3, 3)).collect()).collect();
    // integer coefficient lists, entry (i, j) = sum_k a_ik d_k b_kj
    let mut coeffs = vec![vec![vec![0i64; 3]; cols]; rows];
    for i in 0..rows {
        for j in 0..cols {
            for k in 0..inner {
                for (e, c) in diag[k].iter().enumerate() {
                    coeffs[i][j][e] += a[i][k] * c * b[k][j];
                }
            }
        }
    }
    let m = UniPolyMatrix::from_rows(
        FieldMode::Rational,
        coeffs.iter().map(|r| r.iter().map(|cs| UniPoly::from_i64s(FieldMode::Rational, cs)).collect()).collect(),
    );
    (m, coeffs)
}

/// Evaluates an integer-coefficient matrix over `Z[s]` at an integer.
pub fn evaluate_integer(coeffs: &[Vec<Vec<i64>>], s: i64) -> Vec<Vec<BigInt>> {
    coeffs
        .iter()
        .map(|r| {
            r.iter()
                .map(|cs| cs.iter().rev().fold(BigInt::zero(), |acc, &c| acc * s + c))
                .collect()
        })
        .collect()
}

/// Random homogeneous polynomial in `nvars` variables.
pub fn random_homogeneous(rng: &mut ChaCha8Rng, nvars: usize, degree: u32, terms: usize) -> Polynomial {
    let monos = pencil5::multipoly::monomials_of_degree(nvars, degree);
    let picked: Vec<(Monomial, Scalar)> = (0..terms)
        .map(|_| {
            let m = monos[(rng.next_u32() as usize) % monos.len()];
            let c = small(rng, -5, 5);
            (m, q(if c == 0 { 1 } else { c }))
        })
        .collect();
    Polynomial::from_terms(nvars, picked)
}

/// A small random homogeneous ideal in three variables.
pub fn random_small_ideal(rng: &mut ChaCha8Rng) -> Vec<Polynomial> {
    let n = small(rng, 2, 3) as usize;
    (0..n)
        .map(|_| {
            let d = small(rng, 1, 3) as u32;
            let t = small(rng, 1, 3) as usize;
            random_homogeneous(rng, 3, d, t)
        })
        .filter(|p| !p.is_zero())
        .collect()
}
