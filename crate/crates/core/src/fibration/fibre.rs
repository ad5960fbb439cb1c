use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::model::SurfaceModel;
use crate::error::{Error, Result};
use crate::exactalg::{FieldMode, Scalar, ScalarMatrix};
use crate::groebner::{buchberger, fibre_hilbert_function, projective_empty, GroebnerConfig, MonomialOrder};
use crate::multipoly::{monomials_of_degree, specialize_fibre, Monomial, Polynomial};

/// Prime used for smoothness certificates of rational models.
pub const SMOOTHNESS_PRIME: u64 = 32003;
/// Fallback when a point does not reduce modulo [`SMOOTHNESS_PRIME`].
pub const SMOOTHNESS_PRIME_ALT: u64 = 32009;

/// A point `(t0 : t1)` of the base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasePoint {
    pub t0: Scalar,
    pub t1: Scalar,
}

impl BasePoint {
    pub fn new(t0: Scalar, t1: Scalar) -> Result<Self> {
        if t0.is_zero() && t1.is_zero() {
            return Err(Error::DegeneratePoint);
        }
        Ok(BasePoint { t0, t1 })
    }

    pub fn from_i64(mode: FieldMode, t0: i64, t1: i64) -> Result<Self> {
        Self::new(mode.from_i64(t0), mode.from_i64(t1))
    }

    /// The point `(1 : s)` of the chart `t0 = 1`.
    pub fn chart(s: Scalar) -> Self {
        BasePoint { t0: s.mode().one(), t1: s }
    }

    pub fn infinity(mode: FieldMode) -> Self {
        BasePoint { t0: mode.zero(), t1: mode.one() }
    }

    /// Parses `"t0,t1"` or `"t0:t1"`.
    pub fn parse(text: &str, mode: FieldMode) -> Result<Self> {
        let (a, b) = text
            .split_once([',', ':'])
            .ok_or_else(|| Error::InvalidParameter(format!("point `{text}` is not of the form t0,t1")))?;
        let q = |s: &str| -> Result<Scalar> {
            let r: num_rational::BigRational = s
                .trim()
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("bad coordinate `{s}`")))?;
            mode.from_rational(&r)
        };
        Self::new(q(a)?, q(b)?)
    }
}

impl fmt::Display for BasePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{})", self.t0, self.t1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    Nontrigonal,
    Trigonal,
    Degenerate(String),
}

impl Classification {
    pub fn is_degenerate(&self) -> bool {
        matches!(self, Classification::Degenerate(_))
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Nontrigonal => write!(f, "Nontrigonal"),
            Classification::Trigonal => write!(f, "Trigonal"),
            Classification::Degenerate(r) => write!(f, "Degenerate: {r}"),
        }
    }
}

impl Serialize for Classification {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Classification {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Ok(match s.as_str() {
            "Nontrigonal" => Classification::Nontrigonal,
            "Trigonal" => Classification::Trigonal,
            other => match other.strip_prefix("Degenerate: ") {
                Some(r) => Classification::Degenerate(r.to_string()),
                None => return Err(serde::de::Error::custom(format!("unknown classification `{other}`"))),
            },
        })
    }
}

/// Outcome of the fibre smoothness test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Smoothness {
    Smooth,
    Singular,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FibreReport {
    pub point: String,
    pub quadric_dim: i64,
    pub cubic_dim: i64,
    pub mu_rank: i64,
    pub coker_dim: i64,
    pub classification: Classification,
    pub smooth: Smoothness,
    /// Hilbert function of the fibre for `m = 1..4`.
    pub hilbert_values: Vec<i64>,
}

#[derive(Clone, Debug)]
pub struct FibreOptions {
    pub groebner: GroebnerConfig,
    pub smoothness: bool,
}

impl Default for FibreOptions {
    fn default() -> Self {
        FibreOptions { groebner: GroebnerConfig::from_env(), smoothness: true }
    }
}

/// Basis of the degree-`d` part of the ideal generated by homogeneous `gens`
/// in `x0..x4`, as reduced echelon rows over `monomials_of_degree(5, d)`.
fn graded_piece(gens: &[Polynomial], d: u32, mode: FieldMode) -> Vec<Polynomial> {
    let cols = monomials_of_degree(5, d);
    let index: HashMap<Monomial, usize> = cols.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut rows = Vec::new();
    for g in gens {
        let Some(gd) = g.total_degree() else { continue };
        if gd > d {
            continue;
        }
        for m in monomials_of_degree(5, d - gd) {
            let mut row = vec![mode.zero(); cols.len()];
            for (mm, c) in g.mul_monomial(&m, &mode.one()).terms() {
                row[index[mm]] = c.clone();
            }
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return Vec::new();
    }
    let ech = ScalarMatrix::from_rows(mode, rows).rref();
    (0..ech.pivots.len())
        .map(|r| {
            let terms = cols.iter().enumerate().map(|(c, m)| (*m, ech.matrix.get(r, c).clone())).collect();
            Polynomial::from_terms(5, terms)
        })
        .collect()
}

/// Rank of `x_j * q_k` expanded over the 35 cubic monomials.
pub fn multiplication_rank(quadrics: &[Polynomial], mode: FieldMode) -> usize {
    let cols = monomials_of_degree(5, 3);
    let index: HashMap<Monomial, usize> = cols.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut rows = Vec::new();
    for q in quadrics {
        for j in 0..5 {
            let mut row = vec![mode.zero(); cols.len()];
            for (mm, c) in q.mul_monomial(&Monomial::var(j), &mode.one()).terms() {
                row[index[mm]] = c.clone();
            }
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return 0;
    }
    ScalarMatrix::from_rows(mode, rows).rank()
}

fn det3(m: [[&Polynomial; 3]; 3]) -> Polynomial {
    let t = |a: &Polynomial, b: &Polynomial, c: &Polynomial| a.mul(&b.mul(c));
    t(m[0][0], m[1][1], m[2][2])
        .sub(&t(m[0][0], m[1][2], m[2][1]))
        .sub(&t(m[0][1], m[1][0], m[2][2]))
        .add(&t(m[0][1], m[1][2], m[2][0]))
        .add(&t(m[0][2], m[1][0], m[2][1]))
        .sub(&t(m[0][2], m[1][1], m[2][0]))
}

/// Whether the curve cut out by `gens` (codimension 3 in `P^4`) is smooth:
/// the ideal plus all 3x3 minors of the Jacobian has no projective zero.
pub fn fibre_is_smooth(gens: &[Polynomial], config: &GroebnerConfig) -> Result<bool> {
    let jac: Vec<Vec<Polynomial>> = gens.iter().map(|g| (0..5).map(|i| g.derivative(i)).collect()).collect();
    let mut ideal = gens.to_vec();
    let n = gens.len();
    let triples = |k: usize| -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for a in 0..k {
            for b in a + 1..k {
                for c in b + 1..k {
                    out.push([a, b, c]);
                }
            }
        }
        out
    };
    for r in triples(n) {
        for c in triples(5) {
            let m = r.map(|i| c.map(|j| &jac[i][j]));
            let d = det3(m);
            if !d.is_zero() {
                ideal.push(d);
            }
        }
    }
    projective_empty(&ideal, config)
}

fn smoothness_mode(mode: FieldMode) -> Vec<FieldMode> {
    match mode {
        FieldMode::Prime(_) => vec![mode],
        FieldMode::Rational => [SMOOTHNESS_PRIME, SMOOTHNESS_PRIME_ALT]
            .iter()
            .map(|&p| FieldMode::prime(p).expect("prime"))
            .collect(),
    }
}

/// Restricts the model to the fibre over `point` and tests it.
pub fn analyze_fibre(model: &SurfaceModel, point: &BasePoint, opts: &FibreOptions) -> Result<FibreReport> {
    let mode = model.mode;
    let t0 = mode.convert(&point.t0)?;
    let t1 = mode.convert(&point.t1)?;
    let mut gens = Vec::new();
    for g in &model.generators {
        let s = specialize_fibre(g, &t0, &t1)?;
        if !s.is_zero() {
            gens.push(s);
        }
    }
    let label = point.to_string();
    let gb = buchberger(&gens, MonomialOrder::Grevlex, &opts.groebner)?;
    let hilbert_values: Vec<i64> = (1..=4).map(|m| fibre_hilbert_function(&gb, m) as i64).collect();
    let quadric_dim = 15 - hilbert_values[1];
    let cubic_dim = 35 - hilbert_values[2];

    let quadrics = graded_piece(&gens, 2, mode);
    let mu_rank = multiplication_rank(&quadrics, mode) as i64;
    let coker_dim = cubic_dim - mu_rank;

    let classification = if gb.is_unit_ideal() {
        Classification::Degenerate("empty fibre".into())
    } else if hilbert_values[0] != 5 {
        Classification::Degenerate(format!("fibre is degenerate in P^4 (h(1) = {})", hilbert_values[0]))
    } else if quadric_dim != 3 || cubic_dim != 15 {
        Classification::Degenerate(format!("quadric_dim {quadric_dim}, cubic_dim {cubic_dim}"))
    } else {
        match coker_dim {
            0 => Classification::Nontrigonal,
            2 => Classification::Trigonal,
            k => Classification::Degenerate(format!("cokernel of dimension {k}")),
        }
    };

    let smooth = if opts.smoothness && !classification.is_degenerate() {
        // quadrics plus the cubics they do not generate
        let qgb = buchberger(&quadrics, MonomialOrder::Grevlex, &opts.groebner)?;
        let mut minimal = quadrics.clone();
        minimal.extend(gens.iter().filter(|g| g.total_degree() == Some(3) && !qgb.contains(g)).cloned());
        let mut verdict = None;
        for pm in smoothness_mode(mode) {
            let converted: Result<Vec<Polynomial>> = minimal.iter().map(|g| g.convert(pm)).collect();
            if let Ok(c) = converted {
                verdict = Some(fibre_is_smooth(&c, &opts.groebner)?);
                break;
            }
        }
        match verdict {
            Some(true) => Smoothness::Smooth,
            Some(false) => Smoothness::Singular,
            None => return Err(Error::InvalidParameter(format!("point {label} does not reduce modulo the smoothness primes"))),
        }
    } else {
        Smoothness::Skipped
    };

    Ok(FibreReport { point: label, quadric_dim, cubic_dim, mu_rank, coker_dim, classification, smooth, hilbert_values })
}
