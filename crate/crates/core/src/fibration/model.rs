use std::fmt;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{FieldMode, Scalar};
use crate::multipoly::{format_polynomial, parse_polynomial, BiDegree, Grading, Monomial, Polynomial};
use crate::pfaffian::{infer_twists, matrix_from_json, matrix_to_json, pfaffian_ideal, MatrixJson, SkewMatrix, TwistData};

/// Name of the pseudo-random generator used for the `q_i`.
pub const PRNG_NAME: &str = "chacha8-v1";

pub const MODEL_SCHEMA_VERSION: u32 = 1;

/// Which construction produced a model.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "lowercase")]
pub enum Family {
    Example1,
    Example2 { a: u32 },
    Example3 { d: u32 },
    Custom { label: String },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Example1 => write!(f, "Example1"),
            Family::Example2 { a } => write!(f, "Example2({a})"),
            Family::Example3 { d } => write!(f, "Example3({d})"),
            Family::Custom { label } => write!(f, "Custom({label})"),
        }
    }
}

/// Sign convention for the Cox-ring weights of a scroll `F(a_0, ..., a_4)`:
/// `deg x_i = (w_i, 1)` with `w_i = -a_i`, `0` or `+a_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Convention {
    CoxNegative,
    Product,
    CoxPositive,
}

impl Convention {
    /// Order in which the builders try the conventions.
    pub const ALL: [Convention; 3] = [Convention::CoxNegative, Convention::Product, Convention::CoxPositive];

    pub fn weights(self, a: [i64; 5]) -> [i64; 5] {
        match self {
            Convention::CoxNegative => a.map(|x| -x),
            Convention::Product => [0; 5],
            Convention::CoxPositive => a,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Convention::CoxNegative => "cox-negative",
            Convention::Product => "product",
            Convention::CoxPositive => "cox-positive",
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A fibred surface given by the sub-Pfaffians of a skew matrix on a
/// bigraded ambient ring `t0, t1 | x0..x4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceModel {
    pub family: Family,
    pub seed: u64,
    pub mode: FieldMode,
    pub grading: Grading,
    pub convention: Option<Convention>,
    /// Twist-consistent conventions other than the chosen one, in trial order.
    pub alternatives: Vec<Convention>,
    pub matrix: SkewMatrix,
    pub generators: Vec<Polynomial>,
    pub twists: TwistData,
    /// p_g as stated for the family, for cross-checking.
    pub expected_pg: Option<i64>,
}

impl SurfaceModel {
    /// Assembles a model from a matrix, computing generators and twists.
    pub fn from_matrix(family: Family, seed: u64, grading: Grading, matrix: SkewMatrix) -> Result<Self> {
        grading.validate_ambient()?;
        if grading.nvars() != 7 || matrix.nvars() != 7 {
            return Err(Error::InvalidModel("models live on the 7-variable ring t0,t1,x0..x4".into()));
        }
        let twists = infer_twists(&matrix, &grading)?;
        let generators = pfaffian_ideal(&matrix);
        if generators.iter().all(Polynomial::is_zero) {
            return Err(Error::InvalidModel("all sub-Pfaffians vanish".into()));
        }
        for g in &generators {
            g.bidegree(&grading)?;
        }
        let mode = generators.iter().find_map(Polynomial::mode).unwrap_or(FieldMode::Rational);
        Ok(SurfaceModel {
            family,
            seed,
            mode,
            grading,
            convention: None,
            alternatives: Vec::new(),
            matrix,
            generators,
            twists,
            expected_pg: None,
        })
    }

    /// The same model with coefficients mapped into another field.
    pub fn to_mode(&self, mode: FieldMode) -> Result<Self> {
        let conv = |p: &Polynomial| p.convert(mode);
        let mut upper = Vec::with_capacity(10);
        for (_, e) in self.matrix.upper_entries() {
            upper.push(conv(e)?);
        }
        let matrix = SkewMatrix::from_upper(upper)?;
        let generators = pfaffian_ideal(&matrix);
        Ok(SurfaceModel { mode, matrix, generators, ..self.clone() })
    }

    /// Generators of fibre degree 2 (the relative quadrics).
    pub fn quadric_generators(&self) -> Vec<Polynomial> {
        self.generators
            .iter()
            .filter(|g| g.bidegree(&self.grading).map(|d| d.fibre == 2).unwrap_or(false))
            .cloned()
            .collect()
    }

    /// Canonical bidegree `omega_S`: last resolution twist plus the ambient
    /// canonical class.
    pub fn canonical_bidegree(&self) -> BiDegree {
        self.twists.top_degree() + self.grading.ambient_canonical()
    }

    /// Relative canonical bidegree over `B = P^1` (`b = 0`): `omega_S + (2, 0)`.
    pub fn relative_canonical_bidegree(&self) -> BiDegree {
        self.canonical_bidegree() + BiDegree::new(2, 0)
    }

    pub fn to_json(&self) -> ModelJson {
        ModelJson {
            schema_version: MODEL_SCHEMA_VERSION,
            family: self.family.clone(),
            seed: self.seed,
            prng: PRNG_NAME.to_string(),
            field_mode: self.mode.to_string(),
            grading: self.grading.clone(),
            convention: self.convention,
            alternatives: self.alternatives.clone(),
            matrix: matrix_to_json(&self.matrix, &self.grading),
            generators: self.generators.iter().map(|g| format_polynomial(g, self.grading.names())).collect(),
            twists: self.twists,
            expected_pg: self.expected_pg,
        }
    }

    /// Rebuilds a model from JSON, checking the listed generators against
    /// the sub-Pfaffians of the matrix.
    pub fn from_json(json: &ModelJson) -> Result<Self> {
        if json.schema_version != MODEL_SCHEMA_VERSION {
            return Err(Error::InvalidModel(format!("unsupported schema version {}", json.schema_version)));
        }
        let mode: FieldMode = json.field_mode.parse()?;
        let grading = Grading::new(json.grading.names().to_vec(), json.grading.degrees().to_vec())?;
        let matrix = matrix_from_json(&json.matrix, &grading, mode)?;
        let mut model = SurfaceModel::from_matrix(json.family.clone(), json.seed, grading, matrix)?;
        model.mode = mode;
        for (k, text) in json.generators.iter().enumerate() {
            let g = parse_polynomial(text, model.grading.names(), mode)?;
            if model.generators.get(k) != Some(&g) {
                return Err(Error::InvalidModel(format!("generator {} is not the sub-Pfaffian of the matrix", k + 1)));
            }
        }
        if json.generators.len() != 5 {
            return Err(Error::InvalidModel("expected 5 generators".into()));
        }
        if json.twists != model.twists {
            return Err(Error::InvalidModel("twist data does not match the matrix".into()));
        }
        model.convention = json.convention;
        model.alternatives = json.alternatives.clone();
        model.expected_pg = json.expected_pg;
        Ok(model)
    }
}

/// Serialized form of a [`SurfaceModel`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelJson {
    pub schema_version: u32,
    pub family: Family,
    pub seed: u64,
    pub prng: String,
    pub field_mode: String,
    pub grading: Grading,
    pub convention: Option<Convention>,
    #[serde(default)]
    pub alternatives: Vec<Convention>,
    pub matrix: MatrixJson,
    pub generators: Vec<String>,
    pub twists: TwistData,
    pub expected_pg: Option<i64>,
}

/// Deterministic pseudo-random polynomial of bidegree `d`: one coefficient
/// in `[-9, 9]` per monomial, in descending grevlex order.
pub fn random_form(rng: &mut ChaCha8Rng, grading: &Grading, d: BiDegree) -> Polynomial {
    let q = FieldMode::Rational;
    let terms: Vec<(Monomial, Scalar)> = grading
        .monomials_of(d)
        .into_iter()
        .map(|m| (m, q.from_i64((rng.next_u32() % 19) as i64 - 9)))
        .collect();
    Polynomial::from_terms(grading.nvars(), terms)
}

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn var(i: usize) -> Polynomial {
    Polynomial::var(7, i, FieldMode::Rational)
}

fn t0_pow(e: u32) -> Polynomial {
    var(0).pow(e)
}

fn x(i: usize) -> Polynomial {
    var(2 + i)
}

/// Upper-triangle skeleton shared by all families: rows 1, 2 and the
/// placeholders `q1 = m34`, `q2 = m35`, `q3 = m45` filled in later.
struct Skeleton {
    m12: Polynomial,
    m13: Polynomial,
    m14: Polynomial,
    m15: Polynomial,
    m23: Polynomial,
    m24: Polynomial,
    m25: Polynomial,
}

impl Skeleton {
    fn matrix(&self, q: [Polynomial; 3]) -> SkewMatrix {
        let [q1, q2, q3] = q;
        SkewMatrix::from_upper(vec![
            self.m12.clone(),
            self.m13.clone(),
            self.m14.clone(),
            self.m15.clone(),
            self.m23.clone(),
            self.m24.clone(),
            self.m25.clone(),
            q1,
            q2,
            q3,
        ])
        .expect("ten entries")
    }

    /// Twists of the structural entries alone, giving the degrees of the
    /// `q_i`; `None` if the grading is inconsistent.
    fn q_degrees(&self, grading: &Grading) -> Result<[BiDegree; 3]> {
        let zero = Polynomial::zero(7);
        let m = self.matrix([zero.clone(), zero.clone(), zero]);
        let t = infer_twists(&m, grading)?;
        Ok([t.entry_degree(3, 4), t.entry_degree(3, 5), t.entry_degree(4, 5)])
    }

    fn build(&self, family: Family, seed: u64, grading: Grading) -> Result<SurfaceModel> {
        let degrees = self.q_degrees(&grading)?;
        let mut rng = rng_for(seed);
        let q = degrees.map(|d| random_form(&mut rng, &grading, d));
        if q.iter().any(Polynomial::is_zero) {
            return Err(Error::InvalidModel(format!("no quadrics of bidegrees {degrees:?}")));
        }
        SurfaceModel::from_matrix(family, seed, grading, self.matrix(q))
    }
}

fn example_skeleton(a: u32) -> Skeleton {
    Skeleton {
        m12: var(1),
        m13: t0_pow(a).mul(&x(0)),
        m14: x(2),
        m15: x(3),
        m23: t0_pow(a + 1).mul(&x(1)),
        m24: var(0).mul(&x(3)),
        m25: var(0).mul(&x(4)),
    }
}

fn example3_skeleton(d: u32) -> Skeleton {
    Skeleton {
        m12: var(1).pow(d + 1),
        m13: t0_pow(2 * d).mul(&x(0)),
        m14: x(2),
        m15: x(3),
        m23: t0_pow(d + 1).mul(&x(1)),
        m24: t0_pow(d).mul(&x(3)),
        m25: t0_pow(d).mul(&x(4)),
    }
}

/// Example 1 on `P^1 x P^4` with seeded generic quadrics `q_i` in `x0..x4`.
pub fn build_example1(seed: u64) -> SurfaceModel {
    let mut m = example_skeleton(0)
        .build(Family::Example1, seed, Grading::product())
        .expect("the product model is twist-homogeneous");
    m.convention = Some(Convention::Product);
    m.expected_pg = Some(5);
    m
}

/// Tries the conventions in order and keeps the twist-consistent ones; the
/// first becomes the model's grading, the rest are recorded as alternatives.
fn build_scroll(skel: &Skeleton, family: Family, seed: u64, a: [i64; 5], expected_pg: i64) -> Result<SurfaceModel> {
    let mut ok = Vec::new();
    let mut first_err = None;
    for c in Convention::ALL {
        let grading = Grading::scroll(c.weights(a));
        match skel.q_degrees(&grading) {
            Ok(_) if !ok.iter().any(|(_, g): &(Convention, Grading)| *g == grading) => ok.push((c, grading)),
            Ok(_) => {}
            Err(e) => {
                first_err.get_or_insert(e);
            }
        }
    }
    let Some((c, grading)) = ok.first().cloned() else {
        return Err(first_err.expect("some convention was tried"));
    };
    let mut m = skel.build(family, seed, grading)?;
    m.convention = Some(c);
    m.alternatives = ok[1..].iter().map(|(c, _)| *c).collect();
    m.expected_pg = Some(expected_pg);
    Ok(m)
}

/// Example 2 on `F(a, a, 0, 0, 0)`.
pub fn build_example2(a: u32, seed: u64) -> Result<SurfaceModel> {
    let ai = a as i64;
    build_scroll(&example_skeleton(a), Family::Example2 { a }, seed, [ai, ai, 0, 0, 0], 2 * ai + 5)
}

/// Example 3 on `F(2d - 1, 0, 0, 0, 0)`; requires `d >= 1`.
pub fn build_example3(d: u32, seed: u64) -> Result<SurfaceModel> {
    if d < 1 {
        return Err(Error::InvalidParameter("Example 3 needs d >= 1".into()));
    }
    let a = 2 * d as i64 - 1;
    build_scroll(&example3_skeleton(d), Family::Example3 { d }, seed, [a, 0, 0, 0, 0], 2 * d as i64 + 4)
}

/// Rebuilds a family model under an explicit convention.
pub fn build_with_convention(family: &Family, seed: u64, convention: Convention) -> Result<SurfaceModel> {
    let (skel, a, pg) = match *family {
        Family::Example1 => return Ok(build_example1(seed)),
        Family::Example2 { a } => (example_skeleton(a), [a as i64, a as i64, 0, 0, 0], 2 * a as i64 + 5),
        Family::Example3 { d } if d >= 1 => (example3_skeleton(d), [2 * d as i64 - 1, 0, 0, 0, 0], 2 * d as i64 + 4),
        Family::Example3 { .. } => return Err(Error::InvalidParameter("Example 3 needs d >= 1".into())),
        Family::Custom { .. } => return Err(Error::InvalidParameter("custom models have no conventions".into())),
    };
    let mut m = skel.build(family.clone(), seed, Grading::scroll(convention.weights(a)))?;
    m.convention = Some(convention);
    m.expected_pg = Some(pg);
    Ok(m)
}

/// A variant of Example 1 with trigonal fibres over every `(1 : r)` for the
/// given distinct integers `r`: `m12 = prod (t1 - r t0)` and row 2 carries
/// `t0^k`, `k` the number of roots.
pub fn build_trigonal_at(roots: &[i64], seed: u64) -> Result<SurfaceModel> {
    if roots.is_empty() {
        return Err(Error::InvalidParameter("need at least one root".into()));
    }
    let mut sorted = roots.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != roots.len() {
        return Err(Error::InvalidParameter("roots must be distinct".into()));
    }
    let q = FieldMode::Rational;
    let g = roots.iter().fold(Polynomial::constant(7, q.one()), |acc, &r| {
        acc.mul(&var(1).sub(&var(0).scale(&q.from_i64(r))))
    });
    let k = roots.len() as u32;
    let skel = Skeleton {
        m12: g,
        m13: x(0),
        m14: x(2),
        m15: x(3),
        m23: t0_pow(k).mul(&x(1)),
        m24: t0_pow(k).mul(&x(3)),
        m25: t0_pow(k).mul(&x(4)),
    };
    let label = format!("trigonal-at:{}", roots.iter().map(i64::to_string).collect::<Vec<_>>().join(","));
    let mut m = skel.build(Family::Custom { label }, seed, Grading::product())?;
    m.convention = Some(Convention::Product);
    Ok(m)
}
