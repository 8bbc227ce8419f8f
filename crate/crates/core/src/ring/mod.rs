//! Coefficient rings: the rationals and p-adic integers at fixed precision.

mod legendre;
mod padic;
mod rational;

use std::fmt;

use num_bigint::BigInt;

pub use legendre::{factorial_valuation, is_prime, tail_cutoff};
pub use padic::{PadicInt, PadicRing};
pub use rational::{Rational, RationalField};

use crate::error::Result;

/// Which ring a value lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingDescriptor {
    Rational,
    Padic { p: u64, precision: u32 },
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Rational => f.write_str("Q"),
            RingDescriptor::Padic { p, precision } => write!(f, "Z_{p} mod {p}^{precision}"),
        }
    }
}

/// A commutative coefficient ring, carried as a context value.
///
/// Elements do not know their own ring; every operation goes through the
/// context so p-adic elements never need a global modulus.
#[allow(clippy::wrong_self_convention)]
pub trait CoeffRing: Clone + PartialEq + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync;

    fn descriptor(&self) -> RingDescriptor;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_integer(&self, n: &BigInt) -> Self::Elem;
    fn from_rational(&self, q: &Rational) -> Result<Self::Elem>;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Fails with `NotAUnit` for non-invertible elements.
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    /// At finite p-adic precision this means "zero modulo p^M".
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_unit(&self, a: &Self::Elem) -> bool;

    /// Equality, optionally coarsened to `p^min(M, precision)` for p-adic rings.
    fn congruent(&self, a: &Self::Elem, b: &Self::Elem, precision: Option<u32>) -> bool;

    fn parse(&self, s: &str) -> Result<Self::Elem>;

    /// The p-adic valuation, when the ring has one.
    fn valuation(&self, _a: &Self::Elem) -> Option<u32> {
        None
    }

    fn mul_integer(&self, a: &Self::Elem, n: &BigInt) -> Self::Elem {
        self.mul(a, &self.from_integer(n))
    }

    fn pow(&self, a: &Self::Elem, exp: u32) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}
