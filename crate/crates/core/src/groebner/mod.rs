//! Buchberger's algorithm, normal forms and Hilbert-function counts.
//!
//! Pairs are selected by the sugar strategy (normal strategy on homogeneous
//! input) and pruned with the Gebauer-Moeller criteria, which subsume the
//! coprime and chain criteria. The returned basis is the reduced one, sorted
//! by descending leading monomial, so it does not depend on the order of the
//! input generators.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::exactalg::{FieldMode, Scalar};
use crate::multipoly::{monomials_of_degree, BiDegree, Grading, Monomial, Polynomial};

pub use crate::multipoly::MonomialOrder;

pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Environment variable overriding the pair-reduction budget.
pub const BUDGET_ENV: &str = "PENCIL5_BUDGET";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroebnerConfig {
    /// Maximum number of S-pair reductions before giving up.
    pub budget: u64,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig { budget: DEFAULT_BUDGET }
    }
}

impl GroebnerConfig {
    /// Default config, with the budget taken from `PENCIL5_BUDGET` if set.
    pub fn from_env() -> Self {
        let budget = std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_BUDGET);
        GroebnerConfig { budget }
    }
}

type Terms = Vec<(Monomial, Scalar)>;

/// A reduced Groebner basis.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    nvars: usize,
    mode: Option<FieldMode>,
    /// Monic, sorted descending in `order`.
    polys: Vec<Terms>,
    pair_reductions: u64,
}

impl GroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn mode(&self) -> Option<FieldMode> {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Number of S-pair reductions the construction needed.
    pub fn pair_reductions(&self) -> u64 {
        self.pair_reductions
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(|p| p[0].0).collect()
    }

    /// The basis elements as ordinary (grevlex-canonical) polynomials.
    pub fn generators(&self) -> Vec<Polynomial> {
        self.polys.iter().map(|p| Polynomial::from_terms(self.nvars, p.clone())).collect()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.polys.iter().any(|p| p[0].0.is_one())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        assert_eq!(f.nvars(), self.nvars, "arity mismatch");
        let all: Vec<usize> = (0..self.polys.len()).collect();
        let r = reduce_full(sorted(f, self.order), &self.polys, &all, self.order);
        Polynomial::from_terms(self.nvars, r)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// True if no leading monomial divides `m`.
    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.polys.iter().any(|p| p[0].0.divides(m))
    }
}

fn sorted(f: &Polynomial, order: MonomialOrder) -> Terms {
    let mut t = f.terms().to_vec();
    if order != MonomialOrder::Grevlex {
        t.sort_by(|a, b| order.cmp(&b.0, &a.0));
    }
    t
}

/// `a + c * m * b` for descending term lists; `m * b` keeps `b` sorted.
fn merge_scaled(a: &[(Monomial, Scalar)], b: &[(Monomial, Scalar)], m: &Monomial, c: &Scalar, order: MonomialOrder) -> Terms {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let bm = b[j].0.mul(m);
        match order.cmp(&a[i].0, &bm) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((bm, &b[j].1 * c));
                j += 1;
            }
            Ordering::Equal => {
                let s = &a[i].1 + &(&b[j].1 * c);
                if !s.is_zero() {
                    out.push((bm, s));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|(bm, s)| (bm.mul(m), s * c)));
    out
}

/// Fully reduces `f` by the monic polynomials `basis[idx]`.
fn reduce_full(f: Terms, basis: &[Terms], idx: &[usize], order: MonomialOrder) -> Terms {
    let mut rem = Vec::new();
    let mut p = f;
    let mut start = 0;
    while start < p.len() {
        let (lm, lc) = (p[start].0, p[start].1.clone());
        match idx.iter().find(|&&k| basis[k][0].0.divides(&lm)) {
            Some(&k) => {
                let g = &basis[k];
                let q = g[0].0.quotient_of(&lm);
                p = merge_scaled(&p[start + 1..], &g[1..], &q, &-&lc, order);
                start = 0;
            }
            None => {
                rem.push(p[start].clone());
                start += 1;
            }
        }
    }
    rem
}

fn make_monic(mut t: Terms) -> Terms {
    if let Some((_, c)) = t.first() {
        if !c.is_one() {
            let inv = c.inv();
            for (_, a) in t.iter_mut() {
                *a = &*a * &inv;
            }
        }
    }
    t
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Builder {
    order: MonomialOrder,
    polys: Vec<Terms>,
    sugar: Vec<u32>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl Builder {
    fn lm(&self, i: usize) -> Monomial {
        self.polys[i][0].0
    }

    fn pair(&self, i: usize, j: usize) -> Pair {
        let (a, b) = (self.lm(i), self.lm(j));
        let lcm = a.lcm(&b);
        let deg = |m: &Monomial| self.order.sugar_degree(m);
        let si = self.sugar[i] + deg(&lcm) - deg(&a);
        let sj = self.sugar[j] + deg(&lcm) - deg(&b);
        Pair { i, j, lcm, sugar: si.max(sj) }
    }

    /// Gebauer-Moeller update with the new element `h`.
    fn insert(&mut self, poly: Terms, sugar: u32) {
        let h = self.polys.len();
        self.polys.push(poly);
        self.sugar.push(sugar);
        let lm_h = self.lm(h);

        let candidates: Vec<Pair> = self.active.iter().map(|&g| self.pair(g, h)).collect();
        let mut kept: Vec<Pair> = Vec::new();
        for (k, p) in candidates.iter().enumerate() {
            let coprime = self.lm(p.i).is_coprime(&lm_h);
            let dominated = candidates[k + 1..].iter().any(|q| q.lcm.divides(&p.lcm))
                || kept.iter().any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                kept.push(p.clone());
            }
        }
        let new_pairs: Vec<Pair> = kept.into_iter().filter(|p| !self.lm(p.i).is_coprime(&lm_h)).collect();

        let polys = &self.polys;
        self.pairs.retain(|p| {
            let a = polys[p.i][0].0.lcm(&lm_h);
            let b = polys[p.j][0].0.lcm(&lm_h);
            !(lm_h.divides(&p.lcm) && a != p.lcm && b != p.lcm)
        });
        self.pairs.extend(new_pairs);
        self.active.retain(|&g| !lm_h.divides(&polys[g][0].0));
        self.active.push(h);
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.sugar
                    .cmp(&b.sugar)
                    .then_with(|| order.cmp(&a.lcm, &b.lcm))
                    .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn s_poly(&self, p: &Pair) -> Terms {
        let (f, g) = (&self.polys[p.i], &self.polys[p.j]);
        let mf = f[0].0.quotient_of(&p.lcm);
        let mg = g[0].0.quotient_of(&p.lcm);
        let mode = f[0].1.mode();
        let lhs: Terms = f[1..].iter().map(|(m, c)| (m.mul(&mf), c.clone())).collect();
        merge_scaled(&lhs, &g[1..], &mg, &-&mode.one(), self.order)
    }
}

/// Reduced Groebner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[Polynomial], order: MonomialOrder, config: &GroebnerConfig) -> Result<GroebnerBasis> {
    let nvars = gens.first().map_or(0, Polynomial::nvars);
    assert!(gens.iter().all(|g| g.nvars() == nvars), "arity mismatch");
    let mode = gens.iter().find_map(Polynomial::mode);
    let mut b = Builder { order, polys: Vec::new(), sugar: Vec::new(), active: Vec::new(), pairs: Vec::new() };

    for g in gens {
        let t = reduce_full(sorted(g, order), &b.polys, &b.active, order);
        if !t.is_empty() {
            let sugar = g.terms().iter().map(|(m, _)| order.sugar_degree(m)).max().unwrap_or(0);
            b.insert(make_monic(t), sugar);
        }
    }

    let mut steps = 0u64;
    while let Some(p) = b.next_pair() {
        steps += 1;
        if steps > config.budget {
            return Err(Error::BudgetExceeded { budget: config.budget });
        }
        if steps % 500 == 0 {
            log::debug!(
                "{steps} pairs: sugar {}, basis {}, queue {}",
                p.sugar,
                b.active.len(),
                b.pairs.len()
            );
        }
        let s = b.s_poly(&p);
        let h = reduce_full(s, &b.polys, &b.active, order);
        if !h.is_empty() {
            let h = make_monic(h);
            if h[0].0.is_one() {
                let one = vec![(Monomial::ONE, h[0].1.clone())];
                return Ok(GroebnerBasis { order, nvars, mode, polys: vec![one], pair_reductions: steps });
            }
            log::trace!("new {:?} sugar {} len {}", &h[0].0.exponents()[..nvars], p.sugar, h.len());
            b.insert(h, p.sugar);
        }
    }

    // Inter-reduce the (already minimal) active set.
    let mut idx = b.active.clone();
    idx.sort_by(|&x, &y| order.cmp(&b.polys[y][0].0, &b.polys[x][0].0));
    let mut reduced = Vec::with_capacity(idx.len());
    for (k, &i) in idx.iter().enumerate() {
        let others: Vec<usize> = idx.iter().enumerate().filter(|(l, _)| *l != k).map(|(_, &j)| j).collect();
        let head = b.polys[i][0].clone();
        let mut tail = reduce_full(b.polys[i][1..].to_vec(), &b.polys, &others, order);
        tail.insert(0, head);
        reduced.push(tail);
    }
    Ok(GroebnerBasis { order, nvars, mode, polys: reduced, pair_reductions: steps })
}

pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Polynomial {
    gb.normal_form(f)
}

/// Number of monomials of the given bidegree outside the leading-term ideal,
/// i.e. the dimension of that graded piece of the quotient ring.
pub fn standard_monomial_count(gb: &GroebnerBasis, grading: &Grading, d: BiDegree) -> u64 {
    assert_eq!(gb.nvars(), grading.nvars(), "grading does not match the basis");
    grading.monomials_of(d).iter().filter(|m| gb.is_standard(m)).count() as u64
}

/// Dimension of the degree-`m` piece of the quotient of a standard-graded
/// polynomial ring (e.g. a fibre `P^4`).
pub fn fibre_hilbert_function(gb: &GroebnerBasis, m: u32) -> u64 {
    monomials_of_degree(gb.nvars(), m).iter().filter(|mm| gb.is_standard(mm)).count() as u64
}

/// Decides whether homogeneous generators have no common projective zero:
/// the leading-term ideal must contain a pure power of every variable.
pub fn projective_empty(gens: &[Polynomial], config: &GroebnerConfig) -> Result<bool> {
    let nvars = match gens.first() {
        Some(g) => g.nvars(),
        None => return Ok(false),
    };
    let gb = buchberger(gens, MonomialOrder::Grevlex, config)?;
    if gb.is_unit_ideal() {
        return Ok(true);
    }
    let lms = gb.leading_monomials();
    Ok((0..nvars).all(|v| lms.iter().any(|m| m.pure_power_var() == Some(v))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipoly::{fibre_names, parse_polynomial};

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, &fibre_names(), FieldMode::Rational).unwrap()
    }

    fn gb(gens: &[&str]) -> GroebnerBasis {
        let g: Vec<_> = gens.iter().map(|s| p(s)).collect();
        buchberger(&g, MonomialOrder::Grevlex, &GroebnerConfig::default()).unwrap()
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let b = gb(&["x0", "x1"]);
        assert_eq!(b.generators(), vec![p("x0"), p("x1")]);
    }

    #[test]
    fn redundant_generator_disappears() {
        let b = gb(&["x0^2 - x1^2", "x0 - x1"]);
        assert_eq!(b.generators(), vec![p("x0 - x1")]);
    }

    #[test]
    fn normal_form_basics() {
        let b = gb(&["x0^2 - x1*x2", "x1^2 - x0*x2"]);
        assert!(b.normal_form(&p("x0^2 - x1*x2")).is_zero());
        assert_eq!(b.normal_form(&p("1")), p("1"));
        let f = p("x0^3 + x1^3 + x2^3 + x0*x1");
        let nf = b.normal_form(&f);
        assert_eq!(b.normal_form(&nf), nf);
        assert!(b.contains(&f.sub(&nf)));
    }

    #[test]
    fn twisted_cubic_hilbert_function() {
        // rational normal curve in P^3 (x0..x3; x4 free): HF(m) of the cone
        let b = gb(&["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2", "x4"]);
        assert_eq!(b.len(), 4);
        for m in 0..5 {
            assert_eq!(fibre_hilbert_function(&b, m), 3 * m as u64 + 1);
        }
    }

    #[test]
    fn projective_emptiness() {
        let cfg = GroebnerConfig::default();
        let all: Vec<_> = ["x0", "x1", "x2", "x3", "x4"].iter().map(|s| p(s)).collect();
        assert!(projective_empty(&all, &cfg).unwrap());
        assert!(!projective_empty(&[p("x0")], &cfg).unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        let g: Vec<_> = ["x0^2 - x1*x2", "x1^2 - x0*x2", "x2^2 - x0*x1 + x3*x4"].iter().map(|s| p(s)).collect();
        let r = buchberger(&g, MonomialOrder::Grevlex, &GroebnerConfig { budget: 0 });
        assert!(matches!(r, Err(Error::BudgetExceeded { budget: 0 })));
    }
}
