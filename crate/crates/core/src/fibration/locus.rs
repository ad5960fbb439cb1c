use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde::{Deserialize, Serialize};

use super::fibre::{analyze_fibre, BasePoint, Classification, FibreOptions, FibreReport};
use super::model::SurfaceModel;
use crate::error::{Error, Result};
use crate::exactalg::{smith_form, squarefree_part, FieldMode, Scalar, SmithForm, UniPoly, UniPolyMatrix};
use crate::multipoly::{monomials_of_degree, Monomial, Polynomial, T0, T1};

/// Rank of the multiplication map on a nontrigonal fibre.
pub const GENERIC_RANK: usize = 15;

/// Largest constant or leading coefficient whose divisors are enumerated
/// when searching for rational roots.
const MAX_TRIAL: u64 = 1_000_000_000_000;

/// Salt separating the sample-point stream from the quadric stream.
const SAMPLE_SALT: u64 = 0x7472_6967_6f6e_616c;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrigonalLocus {
    /// Rank of the multiplication matrix over `k(s)` on the chart `t0 = 1`.
    pub chart_rank: usize,
    /// Non-unit invariant factors on the chart, in `s = t1/t0`.
    pub invariant_factors: Vec<String>,
    /// Squarefree part of the last invariant factor.
    pub squarefree_factor: String,
    /// Number of distinct trigonal fibres with `t0 != 0`.
    pub chart_count: usize,
    /// Rational roots of the squarefree factor, each confirmed by a fibre
    /// analysis at `(1 : s)`.
    pub rational_roots: Vec<String>,
    /// Whether every rational root was found (the root search is bounded).
    pub roots_complete: bool,
    /// Degree of the part of the squarefree factor without rational roots;
    /// those fibres are counted but not individually analysed.
    pub unconfirmed_degree: usize,
    pub infinity: Classification,
    /// Local torsion length at `(0 : 1)`, from the chart `t1 = 1`.
    pub infinity_length: usize,
    pub n: usize,
    pub torsion_length: usize,
    /// Fibre reports at the rational roots, at infinity and at the guard points.
    pub fibres: Vec<FibreReport>,
    /// The confirmed trigonal points (rational roots, then infinity).
    #[serde(skip)]
    pub trigonal_points: Vec<BasePoint>,
}

/// Multiplication matrix `x_j * q_k` over `k[s]` for quadrics written in
/// `(s, x0..x4)`.
pub fn chart_matrix(quadrics: &[Polynomial], mode: FieldMode) -> UniPolyMatrix {
    let cols = monomials_of_degree(5, 3);
    let index: HashMap<Monomial, usize> = cols.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut m = UniPolyMatrix::zeros(mode, quadrics.len() * 5, cols.len());
    for (k, q) in quadrics.iter().enumerate() {
        for j in 0..5 {
            let row = 5 * k + j;
            for (mono, c) in q.terms() {
                let e = mono.exp(0) as usize;
                let mut x = Monomial::ONE;
                for v in 0..5 {
                    x.set_exp(v, mono.exp(v + 1));
                }
                let col = index[&x.mul(&Monomial::var(j))];
                let entry = m.get(row, col).add(&UniPoly::monomial(c.clone(), e));
                m.set(row, col, entry);
            }
        }
    }
    m
}

/// Smith form of the multiplication matrix on the chart `t0 = 1`
/// (`at_infinity = false`, variable `s = t1`) or `t1 = 1` (variable `u = t0`).
pub fn chart_smith_form(model: &SurfaceModel, at_infinity: bool) -> Result<SmithForm> {
    let quadrics = model.quadric_generators();
    if quadrics.len() != 3 {
        return Err(Error::InvalidModel(format!("expected 3 relative quadrics, found {}", quadrics.len())));
    }
    let one = model.mode.one();
    let (fixed, free) = if at_infinity { (T1, T0) } else { (T0, T1) };
    let chart: Vec<Polynomial> = quadrics.iter().map(|q| q.substitute(&[(fixed, one.clone())], &[free, 2, 3, 4, 5, 6])).collect();
    Ok(smith_form(&chart_matrix(&chart, model.mode)))
}

fn int_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n > MAX_TRIAL {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Some(out)
}

/// Rational (or `F_p`) roots of `f`, and whether the search was exhaustive.
pub fn rational_roots(f: &UniPoly) -> (Vec<Scalar>, bool) {
    let Some(deg) = f.degree() else { return (Vec::new(), false) };
    if deg == 0 {
        return (Vec::new(), true);
    }
    let mode = f.coeffs()[0].mode();
    match mode {
        FieldMode::Prime(p) => {
            let roots = (0..p as i64).map(|v| mode.from_i64(v)).filter(|x| f.eval(x).is_zero()).collect();
            (roots, true)
        }
        FieldMode::Rational => {
            let rats: Vec<&BigRational> = f.coeffs().iter().map(|c| c.as_rational().expect("rational")).collect();
            let l = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
            let ints: Vec<BigInt> = rats.iter().map(|r| (*r * BigRational::from_integer(l.clone())).to_integer()).collect();
            let mut roots = Vec::new();
            let low = ints.iter().position(|c| !c.is_zero()).expect("nonzero");
            if low > 0 {
                roots.push(mode.zero());
            }
            let (a0, an) = (&ints[low], &ints[deg]);
            let (Some(ps), Some(qs)) = (int_divisors(a0), int_divisors(an)) else { return (roots, false) };
            let mut cands: Vec<BigRational> = Vec::new();
            for p in &ps {
                for q in &qs {
                    for sign in [1, -1] {
                        let r = BigRational::new(p * sign, q.clone());
                        if !cands.contains(&r) {
                            cands.push(r);
                        }
                    }
                }
            }
            cands.sort();
            for r in cands {
                let x = Scalar::Rational(r);
                if f.eval(&x).is_zero() {
                    roots.push(x);
                }
            }
            roots.sort_by(|a, b| a.as_rational().cmp(&b.as_rational()));
            (roots, true)
        }
    }
}

/// Deterministic sample points `(1 : s)` avoiding the roots of `avoid`.
pub fn sample_points(model: &SurfaceModel, avoid: &UniPoly, count: usize) -> Vec<BasePoint> {
    let mut rng = ChaCha8Rng::seed_from_u64(model.seed ^ SAMPLE_SALT);
    let mut used: Vec<i64> = Vec::new();
    let mut out = Vec::new();
    while out.len() < count {
        let v = (rng.next_u32() % 97) as i64 + 2;
        let s = model.mode.from_i64(v);
        if used.contains(&v) || (!avoid.is_zero() && avoid.eval(&s).is_zero()) {
            continue;
        }
        used.push(v);
        out.push(BasePoint::chart(s));
    }
    out
}

/// Counts trigonal fibres via the Smith form of the multiplication matrix.
pub fn trigonal_locus(model: &SurfaceModel, opts: &FibreOptions) -> Result<TrigonalLocus> {
    locus_with_factor(model, opts).map(|(l, _)| l)
}

/// The locus together with the last invariant factor on the chart.
pub(crate) fn locus_with_factor(model: &SurfaceModel, opts: &FibreOptions) -> Result<(TrigonalLocus, UniPoly)> {
    let mode = model.mode;
    let quick = FibreOptions { smoothness: false, ..opts.clone() };
    let smith = chart_smith_form(model, false)?;

    let last = smith.last_factor().cloned().unwrap_or_else(UniPoly::zero);
    let guards = sample_points(model, &last, 3);
    let mut fibres = Vec::new();
    for p in &guards {
        let r = analyze_fibre(model, p, &quick)?;
        match &r.classification {
            Classification::Trigonal => return Err(Error::GenericFibreTrigonal { point: r.point }),
            Classification::Degenerate(why) => {
                return Err(Error::DegenerateFibre(format!("general fibre {}: {why}", r.point)))
            }
            Classification::Nontrigonal => {}
        }
        fibres.push(r);
    }
    if smith.rank != GENERIC_RANK {
        return Err(Error::DegenerateFibre(format!("multiplication map has generic rank {}", smith.rank)));
    }

    let origin = analyze_fibre(model, &BasePoint::chart(mode.zero()), &quick)?;
    if origin.quadric_dim != 3 {
        return Err(Error::DegenerateFibre(format!("quadric_dim {} at {}", origin.quadric_dim, origin.point)));
    }

    let squarefree = squarefree_part(&last)?;
    let chart_count = squarefree.degree().unwrap_or(0);
    let (roots, roots_complete) = rational_roots(&squarefree);
    let mut root_fibres = Vec::new();
    for r in &roots {
        let rep = if r.is_zero() { origin.clone() } else { analyze_fibre(model, &BasePoint::chart(r.clone()), &quick)? };
        if rep.classification != Classification::Trigonal {
            return Err(Error::DegenerateFibre(format!("rank drops at {} but the fibre is {}", rep.point, rep.classification)));
        }
        root_fibres.push(rep);
    }
    if !roots.iter().any(Scalar::is_zero) {
        fibres.push(origin);
    }

    let infinity = analyze_fibre(model, &BasePoint::infinity(mode), &quick)?;
    let inf_smith = chart_smith_form(model, true)?;
    let infinity_length: usize = inf_smith.invariant_factors.iter().map(|d| d.valuation_at_zero().unwrap_or(0)).sum();
    let infinity_class = infinity.classification.clone();
    match (&infinity_class, infinity_length) {
        (Classification::Degenerate(why), _) => {
            return Err(Error::DegenerateFibre(format!("fibre at infinity: {why}")));
        }
        (Classification::Nontrigonal, 0) | (Classification::Trigonal, 1..) => {}
        (c, l) => {
            return Err(Error::DegenerateFibre(format!("fibre at infinity is {c} but local torsion length is {l}")));
        }
    }

    let n = chart_count + usize::from(infinity_class == Classification::Trigonal);
    let mut trigonal_points: Vec<BasePoint> = roots.iter().cloned().map(BasePoint::chart).collect();
    if infinity_class == Classification::Trigonal {
        trigonal_points.push(BasePoint::infinity(mode));
    }
    let mut all = root_fibres;
    all.push(infinity);
    all.extend(fibres);
    let locus = TrigonalLocus {
        chart_rank: smith.rank,
        invariant_factors: smith.nontrivial_factors().map(|d| d.to_string_in("s")).collect(),
        squarefree_factor: squarefree.to_string_in("s"),
        chart_count,
        rational_roots: roots.iter().map(Scalar::to_string).collect(),
        roots_complete,
        unconfirmed_degree: chart_count - roots.len(),
        infinity: infinity_class,
        infinity_length,
        n,
        torsion_length: smith.torsion_length + infinity_length,
        fibres: all,
        trigonal_points,
    };
    Ok((locus, last))
}
