use std::cmp::Ordering;
use std::collections::HashMap;

use super::grading::{BiDegree, Grading};
use super::monomial::{Monomial, MonomialOrder};
use crate::error::{Error, Result};
use crate::exactalg::{FieldMode, Scalar};

/// A sparse multivariate polynomial with exact coefficients.
///
/// Terms are kept sorted in descending grevlex order with no zero
/// coefficients, so structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: Vec<(Monomial, Scalar)>,
}

/// Alias used for polynomials on the bigraded ambient ring.
pub type BiPolynomial = Polynomial;

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: Vec::new() }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        Self::from_terms(nvars, vec![(Monomial::ONE, c)])
    }

    pub fn var(nvars: usize, i: usize, mode: FieldMode) -> Self {
        assert!(i < nvars);
        Self::from_terms(nvars, vec![(Monomial::var(i), mode.one())])
    }

    pub fn monomial(nvars: usize, m: Monomial, c: Scalar) -> Self {
        Self::from_terms(nvars, vec![(m, c)])
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(nvars: usize, terms: Vec<(Monomial, Scalar)>) -> Self {
        let mut acc: HashMap<Monomial, Scalar> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert!(m.exponents()[nvars..].iter().all(|&e| e == 0));
            match acc.get_mut(&m) {
                Some(v) => *v = &*v + &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| MonomialOrder::Grevlex.cmp(&b.0, &a.0));
        Polynomial { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Scalar)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Field of the coefficients; `None` for the zero polynomial.
    pub fn mode(&self) -> Option<FieldMode> {
        self.terms.first().map(|(_, c)| c.mode())
    }

    /// Leading term in grevlex.
    pub fn leading_term(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.first()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&Scalar> {
        self.terms
            .binary_search_by(|(t, _)| MonomialOrder::Grevlex.cmp(m, t))
            .ok()
            .map(|i| &self.terms[i].1)
    }

    /// Largest total degree of a term.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.iter().map(|(m, _)| m.degree());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.nvars, o.nvars, "arity mismatch");
        Polynomial { nvars: self.nvars, terms: merge(&self.terms, &o.terms, None) }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.nvars, o.nvars, "arity mismatch");
        let neg = o.neg();
        Polynomial { nvars: self.nvars, terms: merge(&self.terms, &neg.terms, None) }
    }

    pub fn neg(&self) -> Self {
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        // Multiplication by a monomial preserves any monomial order.
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.nvars, o.nvars, "arity mismatch");
        let mut terms = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                terms.push((m1.mul(m2), c1 * c2));
            }
        }
        Self::from_terms(self.nvars, terms)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mode = self.mode().unwrap_or(FieldMode::Rational);
        let mut acc = Self::constant(self.nvars, mode.one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Makes the leading coefficient 1.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    /// Substitutes scalar values for some variables and keeps the variables
    /// listed in `keep` (in that order) as the variables of the result.
    /// Every variable must either be substituted or kept.
    pub fn substitute(&self, values: &[(usize, Scalar)], keep: &[usize]) -> Polynomial {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            for (v, x) in values {
                for _ in 0..m.exp(*v) {
                    coeff = &coeff * x;
                }
            }
            let mut nm = Monomial::ONE;
            for (new_i, &old_i) in keep.iter().enumerate() {
                nm.set_exp(new_i, m.exp(old_i));
            }
            debug_assert!((0..self.nvars)
                .all(|i| m.exp(i) == 0 || keep.contains(&i) || values.iter().any(|(v, _)| *v == i)));
            terms.push((nm, coeff));
        }
        Polynomial::from_terms(keep.len(), terms)
    }

    /// Re-expresses the polynomial in a ring with more variables, mapping
    /// variable `i` to `map[i]`.
    pub fn embed(&self, nvars: usize, map: &[usize]) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut nm = Monomial::ONE;
                for (i, &j) in map.iter().enumerate() {
                    nm.set_exp(j, nm.exp(j) + m.exp(i));
                }
                (nm, c.clone())
            })
            .collect();
        Polynomial::from_terms(nvars, terms)
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(i) > 0)
            .map(|(m, c)| {
                let mut nm = *m;
                nm.set_exp(i, m.exp(i) - 1);
                (nm, c.mul_int(m.exp(i) as i64))
            })
            .collect();
        Polynomial::from_terms(self.nvars, terms)
    }

    /// Converts the coefficients into another field.
    pub fn convert(&self, mode: FieldMode) -> Result<Polynomial> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| Ok((*m, mode.convert(c)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::from_terms(self.nvars, terms))
    }

    /// The common bidegree of all terms.
    pub fn bidegree(&self, grading: &Grading) -> Result<BiDegree> {
        bidegree_of(self, grading)
    }
}

/// Merges two descending term lists, optionally scaling the second by `c`.
pub(crate) fn merge(
    a: &[(Monomial, Scalar)],
    b: &[(Monomial, Scalar)],
    c: Option<&Scalar>,
) -> Vec<(Monomial, Scalar)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let scaled = |s: &Scalar| match c {
        Some(c) => s * c,
        None => s.clone(),
    };
    while i < a.len() && j < b.len() {
        match MonomialOrder::Grevlex.cmp(&a[i].0, &b[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((b[j].0, scaled(&b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let s = &a[i].1 + &scaled(&b[j].1);
                if !s.is_zero() {
                    out.push((a[i].0, s));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|(m, s)| (*m, scaled(s))));
    out
}

/// The bidegree shared by every term of `f`.
pub fn bidegree_of(f: &Polynomial, grading: &Grading) -> Result<BiDegree> {
    let mut it = f.terms.iter();
    let (m0, _) = it.next().ok_or(Error::ZeroPolynomial)?;
    let d0 = grading.monomial_bidegree(m0);
    for (m, _) in it {
        if grading.monomial_bidegree(m) != d0 {
            let names = grading.names();
            return Err(Error::NotHomogeneous {
                first: super::parse::format_monomial(m0, names),
                second: super::parse::format_monomial(m, names),
            });
        }
    }
    Ok(d0)
}
