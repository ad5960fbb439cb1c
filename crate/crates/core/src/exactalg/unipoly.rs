//! Dense univariate polynomials in the base-chart coordinate `s`.

use std::fmt;

use super::scalar::{FieldMode, Scalar};
use crate::error::{Error, Result};

/// Coefficients from the constant term upwards. The leading coefficient is
/// nonzero unless the polynomial is zero, which is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn one(mode: FieldMode) -> Self {
        Self::constant(mode.one())
    }

    /// The monomial `c * s^k`.
    pub fn monomial(c: Scalar, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mode = c.mode();
        let mut coeffs = vec![mode.zero(); k];
        coeffs.push(c);
        UniPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64s(mode: FieldMode, cs: &[i64]) -> Self {
        Self::from_coeffs(cs.iter().map(|&c| mode.from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.inv()),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UniPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            match (self.coeffs.get(i), o.coeffs.get(i)) {
                (Some(a), Some(b)) => out.push(a + b),
                (Some(a), None) => out.push(a.clone()),
                (None, Some(b)) => out.push(b.clone()),
                (None, None) => unreachable!(),
            }
        }
        Self::from_coeffs(out)
    }

    pub fn neg(&self) -> Self {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mode = self.coeffs[0].mode();
        let mut out = vec![mode.zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Self::from_coeffs(out)
    }

    /// Euclidean division `self = q * d + r` with `deg r < deg d`.
    /// Panics when `d` is zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let inv_lc = d.leading().unwrap().inv();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mode = inv_lc.mode();
        let mut q = vec![mode.zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &inv_lc;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] = &r[k + j] - &(&c * dc);
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::from_coeffs(q), Self::from_coeffs(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub fn divides(&self, f: &Self) -> bool {
        !self.is_zero() && f.rem(self).is_zero()
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul_int(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = x.mode().zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Order of vanishing at `s = 0`.
    pub fn valuation_at_zero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Human-readable form in the variable `s`, highest degree first.
    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let body = match k {
                0 => abs.to_string(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if k > 0 && !abs.is_one() {
                out.push_str(&format!("{abs}*{body}"));
            } else {
                out.push_str(&body);
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("s"))
    }
}

/// Monic `f / gcd(f, f')`: same roots as `f`, all simple. In prime mode the
/// result is only trustworthy when `deg f < p`, which is enforced.
pub fn squarefree_part(f: &UniPoly) -> Result<UniPoly> {
    let deg = f.degree().ok_or(Error::ZeroPolynomial)?;
    let p = f.coeffs()[0].mode().characteristic();
    if p != 0 && deg as u64 >= p {
        return Err(Error::Inseparable { degree: deg, prime: p });
    }
    let g = f.gcd(&f.derivative());
    Ok(f.div_rem(&g).0.monic())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qpoly(cs: &[i64]) -> UniPoly {
        UniPoly::from_i64s(FieldMode::Rational, cs)
    }

    #[test]
    fn squarefree_collapses_repeated_roots() {
        assert_eq!(squarefree_part(&qpoly(&[0, 0, 1])).unwrap(), qpoly(&[0, 1]));
        // (s-1)(s-2) = s^2 - 3s + 2
        assert_eq!(squarefree_part(&qpoly(&[2, -3, 1])).unwrap(), qpoly(&[2, -3, 1]));
        // s^3 - s^2 = s^2 (s - 1)
        let f = qpoly(&[0, 0, -1, 1]);
        let sf = squarefree_part(&f).unwrap();
        assert_eq!(sf, qpoly(&[0, -1, 1]));
        assert_eq!(sf.degree(), Some(2));
        let m = FieldMode::Rational;
        assert!(f.eval(&m.zero()).is_zero() && f.eval(&m.one()).is_zero());
    }

    #[test]
    fn squarefree_errors() {
        assert!(matches!(squarefree_part(&UniPoly::zero()), Err(Error::ZeroPolynomial)));
        let m = FieldMode::prime(3).unwrap();
        // s^3 - s over F_3 has degree = p
        let f = UniPoly::from_i64s(m, &[0, -1, 0, 1]);
        assert!(matches!(squarefree_part(&f), Err(Error::Inseparable { .. })));
    }

    #[test]
    fn division_identity() {
        let f = qpoly(&[3, 0, -2, 5, 1]);
        let d = qpoly(&[1, 2, 3]);
        let (q, r) = f.div_rem(&d);
        assert_eq!(q.mul(&d).add(&r), f);
        assert!(r.degree().unwrap() < 2);
        assert_eq!(qpoly(&[2, -3, 1]).gcd(&qpoly(&[-1, 1])), qpoly(&[-1, 1]));
    }

    #[test]
    fn printing() {
        assert_eq!(qpoly(&[0, -1, 1]).to_string(), "s^2 - s");
        assert_eq!(qpoly(&[2, 3]).to_string(), "3*s + 2");
        assert_eq!(UniPoly::zero().to_string(), "0");
    }
}
