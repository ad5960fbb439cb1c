use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::monomial::{Monomial, MonomialOrder, MAX_VARS};
use crate::error::{Error, Result};

/// A `(base-degree, fibre-degree)` pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct BiDegree {
    pub base: i64,
    pub fibre: i64,
}

impl BiDegree {
    pub const ZERO: BiDegree = BiDegree { base: 0, fibre: 0 };

    pub const fn new(base: i64, fibre: i64) -> Self {
        BiDegree { base, fibre }
    }
}

impl From<[i64; 2]> for BiDegree {
    fn from(v: [i64; 2]) -> Self {
        BiDegree::new(v[0], v[1])
    }
}

impl From<BiDegree> for [i64; 2] {
    fn from(d: BiDegree) -> Self {
        [d.base, d.fibre]
    }
}

impl Add for BiDegree {
    type Output = BiDegree;
    fn add(self, o: BiDegree) -> BiDegree {
        BiDegree::new(self.base + o.base, self.fibre + o.fibre)
    }
}

impl Sub for BiDegree {
    type Output = BiDegree;
    fn sub(self, o: BiDegree) -> BiDegree {
        BiDegree::new(self.base - o.base, self.fibre - o.fibre)
    }
}

impl Neg for BiDegree {
    type Output = BiDegree;
    fn neg(self) -> BiDegree {
        BiDegree::new(-self.base, -self.fibre)
    }
}

impl Mul<BiDegree> for i64 {
    type Output = BiDegree;
    fn mul(self, d: BiDegree) -> BiDegree {
        BiDegree::new(self * d.base, self * d.fibre)
    }
}

impl fmt::Display for BiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.base, self.fibre)
    }
}

/// Variable names with one bidegree per variable.
///
/// Ambient gradings put the base coordinates `t0, t1` (bidegree `(1,0)`)
/// first, followed by the fibre coordinates `x0..x4` of bidegree `(w_i, 1)`.
/// Extra variables (symbolic placeholders) may follow with any bidegree of
/// positive fibre degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grading {
    names: Vec<String>,
    degrees: Vec<BiDegree>,
}

pub const FIBRE_NAMES: [&str; 5] = ["x0", "x1", "x2", "x3", "x4"];

impl Grading {
    pub fn new(names: Vec<String>, degrees: Vec<BiDegree>) -> Result<Self> {
        if names.len() != degrees.len() {
            return Err(Error::InvalidParameter("one bidegree per variable".into()));
        }
        if names.len() > MAX_VARS {
            return Err(Error::InvalidParameter(format!("at most {MAX_VARS} variables")));
        }
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || !n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(Error::InvalidParameter(format!("bad variable name `{n}`")));
            }
            if n.chars().next().is_some_and(|c| c.is_ascii_digit()) {
                return Err(Error::InvalidParameter(format!("bad variable name `{n}`")));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidParameter(format!("duplicate variable `{n}`")));
            }
        }
        Ok(Grading { names, degrees })
    }

    /// `P^1 x P^4` with coordinates `t0, t1, x0..x4`.
    pub fn product() -> Self {
        Self::scroll([0; 5])
    }

    /// Cox ring of a scroll over `P^1`: `deg t_i = (1,0)`, `deg x_i = (w_i, 1)`.
    pub fn scroll(weights: [i64; 5]) -> Self {
        let mut names = vec!["t0".to_string(), "t1".to_string()];
        names.extend(FIBRE_NAMES.iter().map(|s| s.to_string()));
        let mut degrees = vec![BiDegree::new(1, 0); 2];
        degrees.extend(weights.iter().map(|&w| BiDegree::new(w, 1)));
        Grading { names, degrees }
    }

    /// Appends extra variables, e.g. symbolic stand-ins for the `q_i`.
    pub fn with_extra(&self, extra: &[(&str, BiDegree)]) -> Result<Self> {
        let mut names = self.names.clone();
        let mut degrees = self.degrees.clone();
        for (n, d) in extra {
            if d.fibre <= 0 {
                return Err(Error::InvalidParameter(format!("`{n}` needs positive fibre degree")));
            }
            names.push(n.to_string());
            degrees.push(*d);
        }
        Self::new(names, degrees)
    }

    /// Checks the ambient layout: `t0, t1` of bidegree `(1,0)` then fibre
    /// variables of fibre degree 1.
    pub fn validate_ambient(&self) -> Result<()> {
        let ok = self.names.len() >= 7
            && self.degrees[..2].iter().all(|d| *d == BiDegree::new(1, 0))
            && self.degrees[2..7].iter().all(|d| d.fibre == 1)
            && self.degrees[7..].iter().all(|d| d.fibre > 0);
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter("grading is not of the form t0,t1 | x0..x4".into()))
        }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degrees(&self) -> &[BiDegree] {
        &self.degrees
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The weights `w_i` of `x0..x4`.
    pub fn fibre_weights(&self) -> [i64; 5] {
        let mut w = [0; 5];
        for (i, wi) in w.iter_mut().enumerate() {
            *wi = self.degrees[2 + i].base;
        }
        w
    }

    pub fn monomial_bidegree(&self, m: &Monomial) -> BiDegree {
        self.degrees
            .iter()
            .enumerate()
            .fold(BiDegree::ZERO, |acc, (i, d)| acc + (m.exp(i) as i64) * *d)
    }

    /// Canonical class of the ambient toric variety, minus the sum of the
    /// degrees of the ambient coordinates.
    pub fn ambient_canonical(&self) -> BiDegree {
        -self.degrees[..7].iter().fold(BiDegree::ZERO, |a, d| a + *d)
    }

    /// All monomials of the given bidegree, in descending grevlex order.
    /// Requires the ambient layout (base variables first).
    pub fn monomials_of(&self, d: BiDegree) -> Vec<Monomial> {
        assert!(self.degrees[2..].iter().all(|d| d.fibre > 0), "non-base variables need fibre degree > 0");
        let mut out = Vec::new();
        if d.fibre < 0 {
            return out;
        }
        let mut cur = Monomial::ONE;
        self.enumerate_fibre(2, d.fibre, &mut cur, &mut |m: &Monomial| {
            let partial = self.monomial_bidegree(m);
            let k = d.base - partial.base;
            if k < 0 {
                return;
            }
            for i in 0..=k {
                let mut mm = *m;
                mm.set_exp(0, (k - i) as u16);
                mm.set_exp(1, i as u16);
                out.push(mm);
            }
        });
        out.sort_by(|a, b| MonomialOrder::Grevlex.cmp(b, a));
        out
    }

    fn enumerate_fibre(&self, var: usize, remaining: i64, cur: &mut Monomial, f: &mut impl FnMut(&Monomial)) {
        if var == self.nvars() {
            if remaining == 0 {
                f(cur);
            }
            return;
        }
        let step = self.degrees[var].fibre;
        let mut e = 0;
        while e * step <= remaining {
            cur.set_exp(var, e as u16);
            self.enumerate_fibre(var + 1, remaining - e * step, cur, f);
            e += 1;
        }
        cur.set_exp(var, 0);
    }
}

/// All monomials of total degree `d` in `n` variables, descending grevlex.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(var: usize, n: usize, rem: u32, cur: &mut Monomial, out: &mut Vec<Monomial>) {
        if var == n - 1 {
            cur.set_exp(var, rem as u16);
            out.push(*cur);
            cur.set_exp(var, 0);
            return;
        }
        for e in 0..=rem {
            cur.set_exp(var, e as u16);
            rec(var + 1, n, rem - e, cur, out);
        }
        cur.set_exp(var, 0);
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::ONE);
        }
        return out;
    }
    let mut cur = Monomial::ONE;
    rec(0, n, d, &mut cur, &mut out);
    out.sort_by(|a, b| MonomialOrder::Grevlex.cmp(b, a));
    out
}
