//! Exact field elements: arbitrary-precision rationals or residues modulo an
//! odd prime.
//!
//! All scalars taking part in one computation must share a [`FieldMode`].
//! Mixing modes is a programming error and panics.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The coefficient field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldMode {
    Rational,
    Prime(u64),
}

impl FieldMode {
    /// Prime field of characteristic `p`. `p` must be an odd prime below 2^62.
    pub fn prime(p: u64) -> Result<Self> {
        if p < 3 || p >= (1 << 62) || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(FieldMode::Prime(p))
    }

    /// 0 for the rationals.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldMode::Rational => 0,
            FieldMode::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            FieldMode::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            FieldMode::Prime(p) => Scalar::Modular(Fp::new(v.rem_euclid(*p as i64) as u64, *p)),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match self {
            FieldMode::Rational => Scalar::Rational(BigRational::from_integer(v.clone())),
            FieldMode::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(*p));
                Scalar::Modular(Fp::new(r.to_u64().expect("residue fits"), *p))
            }
        }
    }

    /// Maps a rational number into this field; fails in prime mode when the
    /// denominator vanishes modulo p.
    pub fn from_rational(&self, v: &BigRational) -> Result<Scalar> {
        match self {
            FieldMode::Rational => Ok(Scalar::Rational(v.clone())),
            FieldMode::Prime(p) => {
                let den = self.from_bigint(v.denom());
                if den.is_zero() {
                    return Err(Error::InvalidParameter(format!(
                        "denominator of {v} vanishes modulo {p}"
                    )));
                }
                Ok(&self.from_bigint(v.numer()) * &den.inv())
            }
        }
    }

    /// Converts a scalar of some other mode into this one. Rational to prime
    /// reduction may fail on bad denominators; prime to rational lifts the
    /// symmetric representative.
    pub fn convert(&self, s: &Scalar) -> Result<Scalar> {
        match s {
            Scalar::Rational(r) => self.from_rational(r),
            Scalar::Modular(f) => Ok(self.from_i64(f.symmetric())),
        }
    }
}

impl fmt::Display for FieldMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldMode::Rational => write!(f, "rational"),
            FieldMode::Prime(p) => write!(f, "prime:{p}"),
        }
    }
}

impl FromStr for FieldMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "rational" {
            return Ok(FieldMode::Rational);
        }
        if let Some(p) = s.strip_prefix("prime:") {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("bad prime `{p}`")))?;
            return FieldMode::prime(p);
        }
        Err(Error::InvalidParameter(format!("unknown field mode `{s}`")))
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// A residue modulo an odd prime, kept in `[0, modulus)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    fn new(value: u64, modulus: u64) -> Self {
        debug_assert!(value < modulus);
        Fp { value, modulus }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Representative in `(-p/2, p/2]`.
    pub fn symmetric(&self) -> i64 {
        if self.value > self.modulus / 2 {
            self.value as i64 - self.modulus as i64
        } else {
            self.value as i64
        }
    }

    fn mul(self, o: Fp) -> Fp {
        let v = (self.value as u128 * o.value as u128) % self.modulus as u128;
        Fp::new(v as u64, self.modulus)
    }

    fn pow(self, mut e: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp::new(1, self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }
}

/// An exact field element.
#[derive(Clone, Debug)]
pub enum Scalar {
    Rational(BigRational),
    Modular(Fp),
}

impl Scalar {
    pub fn mode(&self) -> FieldMode {
        match self {
            Scalar::Rational(_) => FieldMode::Rational,
            Scalar::Modular(f) => FieldMode::Prime(f.modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Modular(f) => f.value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Modular(f) => f.value == 1,
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Modular(f) => Scalar::Modular(f.pow(f.modulus - 2)),
        }
    }

    pub fn mul_int(&self, k: i64) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(r * BigRational::from_integer(BigInt::from(k))),
            Scalar::Modular(f) => {
                let k = Fp::new(k.rem_euclid(f.modulus as i64) as u64, f.modulus);
                Scalar::Modular(f.mul(k))
            }
        }
    }

    /// The value as an `i64` when it is an integer that fits (rational mode),
    /// or the symmetric representative (prime mode).
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Rational(r) if r.is_integer() => r.numer().to_i64(),
            Scalar::Rational(_) => None,
            Scalar::Modular(f) => Some(f.symmetric()),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Modular(_) => None,
        }
    }

    /// True when the printed form starts with a minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_negative(),
            Scalar::Modular(f) => f.symmetric() < 0,
        }
    }

    fn mismatch(a: &Scalar, b: &Scalar) -> ! {
        panic!("{}", Error::FieldMismatch(format!("{} vs {}", a.mode(), b.mode())))
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a == b,
            (Scalar::Modular(a), Scalar::Modular(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Scalar {}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Modular(a), Scalar::Modular(b)) if a.modulus == b.modulus => {
                let mut v = a.value + b.value;
                if v >= a.modulus {
                    v -= a.modulus;
                }
                Scalar::Modular(Fp::new(v, a.modulus))
            }
            _ => Scalar::mismatch(self, o),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Modular(a), Scalar::Modular(b)) if a.modulus == b.modulus => {
                let v = if a.value >= b.value {
                    a.value - b.value
                } else {
                    a.value + a.modulus - b.value
                };
                Scalar::Modular(Fp::new(v, a.modulus))
            }
            _ => Scalar::mismatch(self, o),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        match (self, o) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular(a), Scalar::Modular(b)) if a.modulus == b.modulus => {
                Scalar::Modular(a.mul(*b))
            }
            _ => Scalar::mismatch(self, o),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular(a) => {
                let v = if a.value == 0 { 0 } else { a.modulus - a.value };
                Scalar::Modular(Fp::new(v, a.modulus))
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Modular(m) => write!(f, "{}", m.symmetric()),
        }
    }
}
