use serde::{Deserialize, Serialize};

use super::model::{Convention, SurfaceModel};
use crate::error::{Error, Result};
use crate::groebner::{buchberger, standard_monomial_count, GroebnerBasis, GroebnerConfig, MonomialOrder};
use crate::multipoly::BiDegree;

/// Genus of the fibres.
pub const GENUS: i64 = 5;
/// Genus of the base; constructions are over `P^1`.
pub const BASE_GENUS: i64 = 0;

/// Values of `n` for which `h(n)` is computed by default.
pub const DEFAULT_RANGE: std::ops::RangeInclusive<u32> = 2..=6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsReport {
    pub g: i64,
    pub b: i64,
    pub convention: Option<Convention>,
    /// Bidegree of `omega_S` on the ambient ring.
    pub canonical_bidegree: BiDegree,
    /// Bidegree whose `n`-th multiple carries `R_n`.
    pub relative_canonical_bidegree: BiDegree,
    /// Standard-monomial count at the canonical bidegree.
    pub p_g: i64,
    /// Standard-monomial count at `(0, 1)`.
    pub sections_01: i64,
    pub chi_f: i64,
    #[serde(rename = "K_f_squared")]
    pub k_f_squared: i64,
    pub e_f: i64,
    /// `(n, h(n))` for every computed `n`.
    pub hilbert_values: Vec<(u32, i64)>,
    pub fit_window: Vec<u32>,
    pub fit_residuals: Vec<i64>,
    /// Whether `chi_f = 1 + p_g + 4` (the regular case).
    pub regularity_cross_check: bool,
    pub expected_pg: Option<i64>,
}

/// Options for [`extract_invariants`].
#[derive(Clone, Debug, Default)]
pub struct FitOptions {
    /// Explicit window overriding the automatic choice.
    pub window: Option<Vec<u32>>,
}

/// `(2n - 1)(g - 1)(1 - b)`.
fn rank_term(n: i64) -> i64 {
    (2 * n - 1) * (GENUS - 1) * (1 - BASE_GENUS)
}

fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// Fits `h(n) = chi + C(n,2) K + (2n-1)(g-1)(1-b)` through the first two
/// window points; returns `(chi, K, residuals)` or `None` if `K` is not an
/// integer.
pub fn fit_window(values: &[(u32, i64)]) -> Option<(i64, i64, Vec<i64>)> {
    let [(n1, h1), (n2, h2), ..] = values else { return None };
    let (n1, n2) = (*n1 as i64, *n2 as i64);
    let denom = binom2(n2) - binom2(n1);
    let num = (h2 - rank_term(n2)) - (h1 - rank_term(n1));
    if denom == 0 || num % denom != 0 {
        return None;
    }
    let k = num / denom;
    let chi = h1 - binom2(n1) * k - rank_term(n1);
    let residuals = values.iter().map(|&(n, h)| h - (chi + binom2(n as i64) * k + rank_term(n as i64))).collect();
    Some((chi, k, residuals))
}

/// Largest window of consecutive `n` (length >= 3, latest start on ties)
/// with zero residuals.
fn auto_window(values: &[(u32, i64)]) -> Option<(usize, usize)> {
    for len in (3..=values.len()).rev() {
        for start in (0..=values.len() - len).rev() {
            let w = &values[start..start + len];
            if let Some((_, _, res)) = fit_window(w) {
                if res.iter().all(|&r| r == 0) {
                    return Some((start, len));
                }
            }
        }
    }
    None
}

/// Reduced grevlex basis of the ambient ideal.
pub fn ambient_basis(model: &SurfaceModel, config: &GroebnerConfig) -> Result<GroebnerBasis> {
    let gens: Vec<_> = model.generators.iter().filter(|g| !g.is_zero()).cloned().collect();
    buchberger(&gens, MonomialOrder::FibreFirst, config)
}

/// Computes `p_g`, `chi_f` and `K_f^2` from standard-monomial counts.
pub fn extract_invariants(model: &SurfaceModel, config: &GroebnerConfig, opts: &FitOptions) -> Result<InvariantsReport> {
    let gb = ambient_basis(model, config)?;
    invariants_from_basis(model, &gb, opts)
}

pub fn invariants_from_basis(model: &SurfaceModel, gb: &GroebnerBasis, opts: &FitOptions) -> Result<InvariantsReport> {
    let grading = &model.grading;
    let omega = model.canonical_bidegree();
    let rho = model.relative_canonical_bidegree();
    let count = |d: BiDegree| standard_monomial_count(gb, grading, d) as i64;

    let ns: Vec<u32> = match &opts.window {
        Some(w) => {
            if w.len() < 2 || w.iter().any(|&n| n < 1) || w.windows(2).any(|p| p[0] >= p[1]) {
                return Err(Error::InvalidParameter("window needs at least two increasing n >= 1".into()));
            }
            w.clone()
        }
        None => DEFAULT_RANGE.collect(),
    };
    let values: Vec<(u32, i64)> = ns.iter().map(|&n| (n, count(n as i64 * rho))).collect();

    let (window, (chi, k, residuals)) = match &opts.window {
        Some(_) => match fit_window(&values) {
            Some(fit) if fit.2.iter().all(|&r| r == 0) => (ns.clone(), fit),
            _ => return Err(Error::FitFailed { values }),
        },
        None => match auto_window(&values) {
            Some((s, l)) => (ns[s..s + l].to_vec(), fit_window(&values[s..s + l]).expect("fit succeeded")),
            None => return Err(Error::FitFailed { values }),
        },
    };

    let p_g = count(omega);
    Ok(InvariantsReport {
        g: GENUS,
        b: BASE_GENUS,
        convention: model.convention,
        canonical_bidegree: omega,
        relative_canonical_bidegree: rho,
        p_g,
        sections_01: count(BiDegree::new(0, 1)),
        chi_f: chi,
        k_f_squared: k,
        e_f: 12 * chi - k,
        hilbert_values: values,
        fit_window: window,
        fit_residuals: residuals,
        regularity_cross_check: chi == 1 + p_g + 4,
        expected_pg: model.expected_pg,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fit_recovers_quadratic() {
        let h = |n: i64| 10 + binom2(n) * 41 + rank_term(n);
        let vals: Vec<_> = (2..=6).map(|n| (n as u32, h(n))).collect();
        assert_eq!(vals[..4].iter().map(|v| v.1).collect::<Vec<_>>(), vec![63, 153, 284, 456]);
        let (chi, k, res) = fit_window(&vals).unwrap();
        assert_eq!((chi, k), (10, 41));
        assert!(res.iter().all(|&r| r == 0));
        assert_eq!(auto_window(&vals), Some((0, 5)));
    }

    #[test]
    fn auto_window_skips_irregular_start() {
        let h = |n: i64| 10 + binom2(n) * 41 + rank_term(n);
        let mut vals: Vec<_> = (2..=6).map(|n| (n as u32, h(n))).collect();
        vals[0].1 += 1;
        assert_eq!(auto_window(&vals), Some((1, 4)));
        vals[2].1 += 1;
        assert_eq!(auto_window(&vals), None);
    }
}
