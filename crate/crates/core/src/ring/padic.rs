//! p-adic integers at fixed absolute precision.
//!
//! An element of Z_p is stored as its residue modulo p^M. Addition and
//! multiplication reduce modulo p^min(M_x, M_y); since every element has
//! valuation >= 0 the absolute precision never drops below that minimum.
//! A zero residue has valuation M: at precision M it cannot be told apart
//! from an exact zero.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::legendre::is_prime;
use super::rational::Rational;
use super::{CoeffRing, RingDescriptor};
use crate::error::{Error, Result};

/// A residue modulo `p^precision`.
#[derive(Clone)]
pub struct PadicInt {
    p: u64,
    precision: u32,
    residue: BigUint,
}

impl PadicInt {
    /// Reduces `value` modulo `p^precision`. Negative values wrap around.
    pub fn new(value: &BigInt, p: u64, precision: u32) -> Self {
        let modulus = BigUint::from(p).pow(precision);
        Self {
            p,
            precision,
            residue: reduce_signed(value, &modulus),
        }
    }

    pub fn from_u64(value: u64, p: u64, precision: u32) -> Self {
        Self::new(&BigInt::from(value), p, precision)
    }

    /// Embeds a rational with p-unit denominator: the unique `r` with
    /// `r * den == num (mod p^M)`.
    pub fn from_rational(q: &Rational, p: u64, precision: u32) -> Result<Self> {
        let modulus = BigUint::from(p).pow(precision);
        let den = reduce_signed(q.denom(), &modulus);
        let den_inv = mod_inverse(&den, &modulus).ok_or_else(|| Error::DenominatorNotUnit {
            denominator: q.denom().to_string(),
            p,
        })?;
        let num = reduce_signed(q.numer(), &modulus);
        Ok(Self {
            p,
            precision,
            residue: (num * den_inv) % &modulus,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn residue(&self) -> &BigUint {
        &self.residue
    }

    /// Largest `v <= M` with `p^v | residue`; `M` for a zero residue.
    pub fn valuation(&self) -> u32 {
        if self.residue.is_zero() {
            return self.precision;
        }
        let p = BigUint::from(self.p);
        let mut r = self.residue.clone();
        let mut v = 0;
        while v < self.precision {
            let (q, rem) = r.div_rem(&p);
            if !rem.is_zero() {
                break;
            }
            r = q;
            v += 1;
        }
        v
    }

    pub fn is_unit(&self) -> bool {
        self.precision > 0 && self.valuation() == 0
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_prime(other)?;
        Ok(self.combine(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_prime(other)?;
        Ok(self.add_unchecked(&other.neg()))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_prime(other)?;
        Ok(self.combine(other, |a, b| a * b))
    }

    pub fn neg(&self) -> Self {
        let modulus = self.modulus();
        let residue = if self.residue.is_zero() {
            BigUint::zero()
        } else {
            modulus - &self.residue
        };
        Self {
            residue,
            ..self.clone()
        }
    }

    /// Inverse of a unit, at the same precision.
    pub fn inv(&self) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::NotAUnit(self.to_string()));
        }
        let modulus = self.modulus();
        let residue = mod_inverse(&self.residue, &modulus)
            .ok_or_else(|| Error::NotAUnit(self.to_string()))?;
        Ok(Self {
            residue,
            ..self.clone()
        })
    }

    /// Drops precision to `min(self.precision, precision)`.
    pub fn reduce_to(&self, precision: u32) -> Self {
        let precision = precision.min(self.precision);
        let modulus = BigUint::from(self.p).pow(precision);
        Self {
            p: self.p,
            precision,
            residue: &self.residue % modulus,
        }
    }

    fn modulus(&self) -> BigUint {
        BigUint::from(self.p).pow(self.precision)
    }

    fn check_prime(&self, other: &Self) -> Result<()> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(Error::PrimeMismatch {
                left: self.p,
                right: other.p,
            })
        }
    }

    fn add_unchecked(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a + b)
    }

    fn combine(&self, other: &Self, op: impl Fn(&BigUint, &BigUint) -> BigUint) -> Self {
        let precision = self.precision.min(other.precision);
        let modulus = BigUint::from(self.p).pow(precision);
        Self {
            p: self.p,
            precision,
            residue: op(&self.residue, &other.residue) % modulus,
        }
    }
}

/// Equality is congruence modulo `p^min(M_x, M_y)`; values with different
/// primes are never equal.
impl PartialEq for PadicInt {
    fn eq(&self, other: &Self) -> bool {
        if self.p != other.p {
            return false;
        }
        let precision = self.precision.min(other.precision);
        self.reduce_to(precision).residue == other.reduce_to(precision).residue
    }
}

impl fmt::Display for PadicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

impl fmt::Debug for PadicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}^{}", self.residue, self.p, self.precision)
    }
}

fn reduce_signed(value: &BigInt, modulus: &BigUint) -> BigUint {
    let m = BigInt::from_biguint(Sign::Plus, modulus.clone());
    value
        .mod_floor(&m)
        .to_biguint()
        .expect("mod_floor with positive modulus is nonnegative")
}

/// Inverse of `a` modulo `m` via extended Euclid, if `gcd(a, m) = 1`.
pub(crate) fn mod_inverse(a: &BigUint, m: &BigUint) -> Option<BigUint> {
    if m.is_one() {
        return Some(BigUint::zero());
    }
    let a = BigInt::from_biguint(Sign::Plus, a.clone());
    let m = BigInt::from_biguint(Sign::Plus, m.clone());
    let egcd = a.extended_gcd(&m);
    if !egcd.gcd.is_one() {
        return None;
    }
    egcd.x.mod_floor(&m).to_biguint()
}

/// The ring Z_p truncated at absolute precision M.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PadicRing {
    p: u64,
    precision: u32,
}

impl PadicRing {
    /// Validates that `p` is prime and `precision >= 1`.
    pub fn new(p: u64, precision: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if precision == 0 {
            return Err(Error::ZeroPrecision);
        }
        Ok(Self { p, precision })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn element(&self, value: i64) -> PadicInt {
        PadicInt::new(&BigInt::from(value), self.p, self.precision)
    }
}

impl CoeffRing for PadicRing {
    type Elem = PadicInt;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::Padic {
            p: self.p,
            precision: self.precision,
        }
    }

    fn zero(&self) -> PadicInt {
        self.element(0)
    }

    fn one(&self) -> PadicInt {
        self.element(1)
    }

    fn from_integer(&self, n: &BigInt) -> PadicInt {
        PadicInt::new(n, self.p, self.precision)
    }

    fn from_rational(&self, q: &Rational) -> Result<PadicInt> {
        PadicInt::from_rational(q, self.p, self.precision)
    }

    // Elements of one ring share its prime, so the unchecked paths apply.
    fn add(&self, a: &PadicInt, b: &PadicInt) -> PadicInt {
        debug_assert_eq!(a.p, b.p);
        a.add_unchecked(b)
    }

    fn sub(&self, a: &PadicInt, b: &PadicInt) -> PadicInt {
        debug_assert_eq!(a.p, b.p);
        a.add_unchecked(&b.neg())
    }

    fn neg(&self, a: &PadicInt) -> PadicInt {
        a.neg()
    }

    fn mul(&self, a: &PadicInt, b: &PadicInt) -> PadicInt {
        debug_assert_eq!(a.p, b.p);
        a.combine(b, |x, y| x * y)
    }

    fn inv(&self, a: &PadicInt) -> Result<PadicInt> {
        a.inv()
    }

    fn is_zero(&self, a: &PadicInt) -> bool {
        a.residue.is_zero()
    }

    fn is_unit(&self, a: &PadicInt) -> bool {
        a.is_unit()
    }

    fn congruent(&self, a: &PadicInt, b: &PadicInt, precision: Option<u32>) -> bool {
        match precision {
            Some(m) => a.reduce_to(m) == b.reduce_to(m),
            None => a == b,
        }
    }

    fn parse(&self, s: &str) -> Result<PadicInt> {
        let q: Rational = s.parse()?;
        self.from_rational(&q)
    }

    fn valuation(&self, a: &PadicInt) -> Option<u32> {
        Some(a.valuation())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(value: i64, p: u64, m: u32) -> PadicInt {
        PadicInt::new(&BigInt::from(value), p, m)
    }

    /// Brute-force inverse modulo a small modulus.
    fn inverse_by_search(a: u64, modulus: u64) -> Option<u64> {
        (0..modulus).find(|x| (a * x) % modulus == 1)
    }

    #[test]
    fn from_rational_examples() {
        let half = PadicInt::from_rational(&Rational::frac(1, 2), 3, 4).unwrap();
        assert_eq!(
            half.residue(),
            &BigUint::from(inverse_by_search(2, 81).unwrap())
        );
        assert_eq!(half.residue(), &BigUint::from(41u32));
        let zero = PadicInt::from_rational(&Rational::zero(), 5, 6).unwrap();
        assert_eq!(zero.residue(), &BigUint::zero());
        let seven = PadicInt::from_rational(&Rational::from(7), 2, 3).unwrap();
        assert_eq!(seven.residue(), &BigUint::from(7u32));
        let neg = PadicInt::from_rational(&Rational::frac(-3, 4), 5, 3).unwrap();
        assert_eq!(neg.mul(&z(4, 5, 3)).unwrap(), z(-3, 5, 3));
    }

    #[test]
    fn from_rational_rejects_p_in_denominator() {
        let err = PadicInt::from_rational(&Rational::frac(1, 6), 3, 4).unwrap_err();
        assert!(matches!(err, Error::DenominatorNotUnit { p: 3, .. }));
    }

    #[test]
    fn ring_operations() {
        assert_eq!(
            z(2, 3, 4).add(&z(80, 3, 4)).unwrap().residue(),
            &BigUint::one()
        );
        let x = z(55, 7, 3);
        assert_eq!(x.mul(&z(1, 7, 3)).unwrap(), x);
        assert_eq!(
            z(41, 3, 4).mul(&z(2, 3, 4)).unwrap().residue(),
            &BigUint::one()
        );
        assert_eq!(x.add(&x.neg()).unwrap().residue(), &BigUint::zero());
        assert_eq!(z(0, 7, 3).neg().residue(), &BigUint::zero());
    }

    #[test]
    fn precision_propagates_by_minimum() {
        let a = z(100, 3, 5);
        let b = z(1, 3, 2);
        let s = a.add(&b).unwrap();
        assert_eq!(s.precision(), 2);
        assert_eq!(s.residue(), &BigUint::from(101u32 % 9));
        assert_eq!(a.mul(&b).unwrap().precision(), 2);
    }

    #[test]
    fn prime_mismatch() {
        assert_eq!(
            z(1, 3, 2).add(&z(1, 5, 2)).unwrap_err(),
            Error::PrimeMismatch { left: 3, right: 5 }
        );
        assert!(z(1, 3, 2).mul(&z(1, 5, 2)).is_err());
        assert_ne!(z(0, 3, 2), z(0, 5, 2));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(z(1, 5, 6).inv().unwrap().residue(), &BigUint::one());
        assert_eq!(z(2, 3, 4).inv().unwrap().residue(), &BigUint::from(41u32));
        assert!(matches!(z(3, 3, 4).inv(), Err(Error::NotAUnit(_))));
        assert!(matches!(z(0, 3, 4).inv(), Err(Error::NotAUnit(_))));
    }

    #[test]
    fn inverse_matches_search_for_all_units() {
        for p in [2u64, 3, 5, 7] {
            let modulus = p.pow(3);
            for a in 0..modulus {
                let x = PadicInt::from_u64(a, p, 3);
                match inverse_by_search(a, modulus) {
                    Some(expected) => {
                        let inv = x.inv().unwrap();
                        assert_eq!(inv.residue(), &BigUint::from(expected));
                        assert_eq!(x.mul(&inv).unwrap().residue(), &BigUint::one());
                    }
                    None => assert!(x.inv().is_err()),
                }
            }
        }
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(z(18, 3, 4).valuation(), 2);
        assert_eq!(z(0, 5, 6).valuation(), 6);
        assert_eq!(z(41, 3, 4).valuation(), 0);
        assert_eq!(z(81 * 2, 3, 4).valuation(), 4);
    }

    #[test]
    fn valuation_is_additive_exhaustively() {
        let (p, m) = (3u64, 3u32);
        for a in 0..27 {
            for b in 0..27 {
                let (x, y) = (PadicInt::from_u64(a, p, m), PadicInt::from_u64(b, p, m));
                let prod = x.mul(&y).unwrap();
                assert_eq!(
                    prod.valuation(),
                    m.min(x.valuation() + y.valuation()),
                    "{a}*{b}"
                );
            }
        }
    }

    #[test]
    fn equality_is_congruence_at_min_precision() {
        assert_eq!(z(10, 3, 2), z(1, 3, 5));
        assert_ne!(z(10, 3, 3), z(1, 3, 5));
        let ring = PadicRing::new(3, 5).unwrap();
        assert!(ring.congruent(&z(1, 3, 5), &z(28, 3, 5), Some(3)));
        assert!(!ring.congruent(&z(1, 3, 5), &z(28, 3, 5), None));
    }

    #[test]
    fn ring_validation() {
        assert_eq!(PadicRing::new(9, 3).unwrap_err(), Error::NotPrime(9));
        assert_eq!(PadicRing::new(1, 3).unwrap_err(), Error::NotPrime(1));
        assert_eq!(PadicRing::new(7, 0).unwrap_err(), Error::ZeroPrecision);
        let ring = PadicRing::new(5, 3).unwrap();
        assert_eq!(ring.parse("-1").unwrap().residue(), &BigUint::from(124u32));
        assert_eq!(ring.parse("1/2").unwrap().residue(), &BigUint::from(63u32));
        assert!(ring.parse("1/5").is_err());
    }
}
