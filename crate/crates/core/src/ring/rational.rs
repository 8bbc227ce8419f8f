//! Exact rationals backed by `num-rational`'s big-integer fractions.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::CoeffRing;
use crate::error::{Error, Result};
use crate::ring::RingDescriptor;

/// A fraction in canonical form: positive denominator, coprime parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numer / denom`, reducing to lowest terms.
    ///
    /// Returns `None` when `denom` is zero.
    pub fn new(numer: BigInt, denom: BigInt) -> Option<Self> {
        if denom.is_zero() {
            return None;
        }
        Some(Self(BigRational::new(numer, denom)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self(BigRational::from_integer(n.into()))
    }

    /// Shorthand for small fractions; panics on a zero denominator.
    pub fn frac(numer: i64, denom: i64) -> Self {
        Self::new(numer.into(), denom.into()).expect("nonzero denominator")
    }

    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn one() -> Self {
        Self(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self(self.0.recip()))
        }
    }

    /// Integer power; negative exponents invert. `0^0 = 1`.
    pub fn pow(&self, exp: i32) -> Option<Self> {
        if exp < 0 && self.is_zero() {
            return None;
        }
        Some(Self(num_traits::Pow::pow(&self.0, exp)))
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for Rational {
    fn from(value: BigRational) -> Self {
        Self(value)
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Self::from_integer(value)
    }
}

impl From<BigInt> for Rational {
    fn from(value: BigInt) -> Self {
        Self::from_integer(value)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `[+-]digits` or `[+-]digits/digits`, surrounding whitespace allowed.
    fn from_str(s: &str) -> Result<Self> {
        let fail = |column: usize, reason: &str| Error::Parse {
            input: s.to_string(),
            column,
            reason: reason.to_string(),
        };
        let lead = s.len() - s.trim_start().len();
        let body = s.trim();
        if body.is_empty() {
            return Err(fail(1, "expected a number"));
        }
        let (num_part, den_part) = match body.find('/') {
            Some(idx) => (&body[..idx], Some((idx, &body[idx + 1..]))),
            None => (body, None),
        };
        let digits_start = usize::from(num_part.starts_with(['+', '-']));
        let check_digits = |part: &str, offset: usize, skip: usize| -> Result<()> {
            if part.len() <= skip {
                return Err(fail(lead + offset + part.len() + 1, "expected digits"));
            }
            match part[skip..]
                .char_indices()
                .find(|(_, c)| !c.is_ascii_digit())
            {
                Some((i, c)) => Err(fail(
                    lead + offset + skip + i + 1,
                    &format!("unexpected character {c:?}"),
                )),
                None => Ok(()),
            }
        };
        check_digits(num_part, 0, digits_start)?;
        let numer: BigInt = num_part
            .parse()
            .map_err(|_| fail(lead + 1, "bad integer"))?;
        let denom: BigInt = match den_part {
            Some((idx, den)) => {
                check_digits(den, idx + 1, 0)?;
                den.parse()
                    .map_err(|_| fail(lead + idx + 2, "bad integer"))?
            }
            None => BigInt::one(),
        };
        Rational::new(numer, denom).ok_or_else(|| fail(lead + body.len(), "zero denominator"))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div<&Rational> for &Rational {
    type Output = Rational;

    /// Panics on division by zero, like the integer types.
    fn div(self, rhs: &Rational) -> Rational {
        Rational(&self.0 / &rhs.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

/// The field of rationals as a coefficient ring.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct RationalField;

impl CoeffRing for RationalField {
    type Elem = Rational;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::Rational
    }

    fn zero(&self) -> Rational {
        Rational::zero()
    }

    fn one(&self) -> Rational {
        Rational::one()
    }

    fn from_integer(&self, n: &BigInt) -> Rational {
        Rational::from_integer(n.clone())
    }

    fn from_rational(&self, q: &Rational) -> Result<Rational> {
        Ok(q.clone())
    }

    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }

    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }

    fn neg(&self, a: &Rational) -> Rational {
        -a
    }

    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }

    fn inv(&self, a: &Rational) -> Result<Rational> {
        a.recip().ok_or_else(|| Error::NotAUnit(a.to_string()))
    }

    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }

    fn is_unit(&self, a: &Rational) -> bool {
        !a.is_zero()
    }

    fn congruent(&self, a: &Rational, b: &Rational, _precision: Option<u32>) -> bool {
        a == b
    }

    fn parse(&self, s: &str) -> Result<Rational> {
        s.parse()
    }

    fn pow(&self, a: &Rational, exp: u32) -> Rational {
        Rational(num_traits::Pow::pow(&a.0, exp))
    }
}
