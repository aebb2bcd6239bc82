//! Exact coefficient fields: the rationals and prime fields `Z/pZ`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest admissible prime modulus; keeps products inside `u64`.
pub const MAX_PRIME: u64 = u32::MAX as u64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Field {
    #[default]
    Rational,
    Prime(u64),
}

/// A field element. Rationals are kept in lowest terms with positive
/// denominator by `BigRational`; modular values live in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rational(BigRational),
    Modular(u64),
}

impl Field {
    /// `0` selects the rationals, anything else must be a prime.
    pub fn from_characteristic(p: u64) -> Result<Self> {
        if p == 0 {
            return Ok(Field::Rational);
        }
        if p > MAX_PRIME {
            return Err(Error::Input(format!("modulus {p} exceeds {MAX_PRIME}")));
        }
        if !is_prime(p) {
            return Err(Error::Input(format!("characteristic {p} is not prime")));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Coeff {
        match self {
            Field::Rational => Coeff::Rational(BigRational::zero()),
            Field::Prime(_) => Coeff::Modular(0),
        }
    }

    pub fn one(self) -> Coeff {
        match self {
            Field::Rational => Coeff::Rational(BigRational::one()),
            Field::Prime(_) => Coeff::Modular(1),
        }
    }

    pub fn from_i64(self, v: i64) -> Coeff {
        match self {
            Field::Rational => Coeff::Rational(BigRational::from_integer(v.into())),
            Field::Prime(p) => Coeff::Modular(v.rem_euclid(p as i64) as u64),
        }
    }

    pub fn from_bigint(self, v: &BigInt) -> Coeff {
        match self {
            Field::Rational => Coeff::Rational(BigRational::from_integer(v.clone())),
            Field::Prime(p) => {
                let r = v % BigInt::from(p);
                let r = if r.is_negative() { r + BigInt::from(p) } else { r };
                Coeff::Modular(r.to_u64().expect("reduced residue fits u64"))
            }
        }
    }

    /// `num / den`; fails when the denominator vanishes in this field.
    pub fn from_ratio(self, num: &BigInt, den: &BigInt) -> Result<Coeff> {
        if den.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        match self {
            Field::Rational => Ok(Coeff::Rational(BigRational::new(num.clone(), den.clone()))),
            Field::Prime(p) => {
                let d = self.from_bigint(den);
                if self.is_zero(&d) {
                    return Err(Error::Domain(format!("denominator {den} vanishes mod {p}")));
                }
                Ok(self.div(&self.from_bigint(num), &d))
            }
        }
    }

    pub fn is_zero(self, a: &Coeff) -> bool {
        match a {
            Coeff::Rational(r) => r.is_zero(),
            Coeff::Modular(v) => *v == 0,
        }
    }

    pub fn is_one(self, a: &Coeff) -> bool {
        match a {
            Coeff::Rational(r) => r.is_one(),
            Coeff::Modular(v) => *v == 1,
        }
    }

    pub fn add(self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Rational, Coeff::Rational(x), Coeff::Rational(y)) => Coeff::Rational(x + y),
            (Field::Prime(p), Coeff::Modular(x), Coeff::Modular(y)) => Coeff::Modular((x + y) % p),
            _ => mixed(),
        }
    }

    pub fn sub(self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Rational, Coeff::Rational(x), Coeff::Rational(y)) => Coeff::Rational(x - y),
            (Field::Prime(p), Coeff::Modular(x), Coeff::Modular(y)) => {
                Coeff::Modular((x + p - y) % p)
            }
            _ => mixed(),
        }
    }

    pub fn neg(self, a: &Coeff) -> Coeff {
        match (self, a) {
            (Field::Rational, Coeff::Rational(x)) => Coeff::Rational(-x),
            (Field::Prime(p), Coeff::Modular(x)) => Coeff::Modular((p - x) % p),
            _ => mixed(),
        }
    }

    pub fn mul(self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Rational, Coeff::Rational(x), Coeff::Rational(y)) => Coeff::Rational(x * y),
            (Field::Prime(p), Coeff::Modular(x), Coeff::Modular(y)) => Coeff::Modular(x * y % p),
            _ => mixed(),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(self, a: &Coeff) -> Coeff {
        assert!(!self.is_zero(a), "inverse of zero");
        match (self, a) {
            (Field::Rational, Coeff::Rational(x)) => Coeff::Rational(x.recip()),
            (Field::Prime(p), Coeff::Modular(x)) => Coeff::Modular(pow_mod(*x, p - 2, p)),
            _ => mixed(),
        }
    }

    pub fn div(self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Field::Rational, Coeff::Rational(x), Coeff::Rational(y)) => {
                assert!(!y.is_zero(), "division by zero");
                Coeff::Rational(x / y)
            }
            _ => self.mul(a, &self.inv(b)),
        }
    }

    pub fn belongs(self, a: &Coeff) -> bool {
        match (self, a) {
            (Field::Rational, Coeff::Rational(_)) => true,
            (Field::Prime(p), Coeff::Modular(v)) => *v < p,
            _ => false,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => f.write_str("QQ"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl Coeff {
    /// Negative rationals report true; modular values are never negative.
    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Rational(r) => r.is_negative(),
            Coeff::Modular(_) => false,
        }
    }

    pub fn abs(&self) -> Coeff {
        match self {
            Coeff::Rational(r) => Coeff::Rational(r.abs()),
            Coeff::Modular(v) => Coeff::Modular(*v),
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Coeff::Modular(v) => write!(f, "{v}"),
        }
    }
}

#[cold]
fn mixed() -> Coeff {
    panic!("coefficient does not belong to the active field")
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}
