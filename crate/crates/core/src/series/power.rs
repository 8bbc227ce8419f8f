use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ring::CoeffRing;

/// A truncated formal power series `sum_{k=0}^{N} f_k x^k`.
///
/// Coefficients past the truncation order `N` are unknown, unless the
/// series is flagged exact, in which case they are zero and the series is
/// a polynomial.
#[derive(Debug, Clone)]
pub struct PowerSeries<R: CoeffRing> {
    ring: R,
    coeffs: Vec<R::Elem>,
    exact: bool,
}

pub(crate) fn check_ring<R: CoeffRing>(a: &R, b: &R) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::RingMismatch {
            left: a.descriptor().to_string(),
            right: b.descriptor().to_string(),
        })
    }
}

impl<R: CoeffRing> PowerSeries<R> {
    /// `coeffs[k]` is the coefficient of `x^k`. A non-exact series needs at
    /// least one coefficient; an empty exact series is the zero polynomial.
    pub fn new(ring: R, mut coeffs: Vec<R::Elem>, exact: bool) -> Result<Self> {
        if coeffs.is_empty() {
            if !exact {
                return Err(Error::InsufficientOrder {
                    needed: 1,
                    available: 0,
                });
            }
            coeffs.push(ring.zero());
        }
        Ok(Self {
            ring,
            coeffs,
            exact,
        })
    }

    pub fn polynomial(ring: R, coeffs: Vec<R::Elem>) -> Self {
        Self::new(ring, coeffs, true).expect("exact series accept any length")
    }

    /// Known through `x^{coeffs.len() - 1}`; panics on an empty vector.
    pub fn truncated(ring: R, coeffs: Vec<R::Elem>) -> Self {
        Self::new(ring, coeffs, false).expect("truncated series need a coefficient")
    }

    pub fn zero(ring: R) -> Self {
        Self::polynomial(ring, Vec::new())
    }

    /// Materializes `f_k = gen(k)` for `k = 0..=order`.
    pub fn from_fn(ring: R, order: usize, mut gen: impl FnMut(usize) -> R::Elem) -> Self {
        let coeffs = (0..=order).map(&mut gen).collect();
        Self::truncated(ring, coeffs)
    }

    /// Parses each coefficient in the ring.
    pub fn parse(ring: R, coeffs: &[impl AsRef<str>], exact: bool) -> Result<Self> {
        let parsed = coeffs
            .iter()
            .map(|c| ring.parse(c.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, parsed, exact)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R::Elem> {
        self.coeffs
    }

    pub fn trunc_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    /// Highest index whose coefficient is known; `None` means "all of them".
    pub fn known_order(&self) -> Option<usize> {
        (!self.exact).then(|| self.trunc_order())
    }

    /// Coefficient of `x^k`, or `None` past the truncation of an inexact series.
    pub fn coeff(&self, k: usize) -> Option<R::Elem> {
        match self.coeffs.get(k) {
            Some(c) => Some(c.clone()),
            None if self.exact => Some(self.ring.zero()),
            None => None,
        }
    }

    /// Highest nonzero index of an exact series; `None` for zero or inexact series.
    pub fn degree(&self) -> Option<usize> {
        if !self.exact {
            return None;
        }
        self.coeffs.iter().rposition(|c| !self.ring.is_zero(c))
    }

    /// Fails unless coefficients `0..=order` are known.
    pub fn require_order(&self, order: usize) -> Result<()> {
        match self.known_order() {
            Some(n) if n < order => Err(Error::InsufficientOrder {
                needed: order,
                available: n,
            }),
            _ => Ok(()),
        }
    }

    /// Keeps coefficients `0..=order` and drops the exactness flag.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        self.require_order(order)?;
        let coeffs = (0..=order)
            .map(|k| self.coeff(k).expect("order checked"))
            .collect();
        Ok(Self::truncated(self.ring.clone(), coeffs))
    }

    /// Extends an exact series with explicit zeros up to `order`.
    pub fn padded(&self, order: usize) -> Self {
        let mut out = self.clone();
        if self.exact {
            while out.coeffs.len() <= order {
                out.coeffs.push(self.ring.zero());
            }
        }
        out
    }

    /// `d/dx`: costs one order unless the series is exact.
    pub fn derivative(&self) -> Result<Self> {
        let n = self.trunc_order();
        if n == 0 && !self.exact {
            return Err(Error::InsufficientOrder {
                needed: 1,
                available: 0,
            });
        }
        let coeffs = (1..=n)
            .map(|k| self.ring.mul_integer(&self.coeffs[k], &BigInt::from(k)))
            .collect();
        Self::new(self.ring.clone(), coeffs, self.exact)
    }

    fn binary_order(&self, other: &Self) -> (usize, bool) {
        match (self.exact, other.exact) {
            (true, true) => (self.trunc_order().max(other.trunc_order()), true),
            (true, false) => (other.trunc_order(), false),
            (false, true) => (self.trunc_order(), false),
            (false, false) => (self.trunc_order().min(other.trunc_order()), false),
        }
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&R::Elem, &R::Elem) -> R::Elem) -> Result<Self> {
        check_ring(&self.ring, &other.ring)?;
        let (order, exact) = self.binary_order(other);
        let coeffs = (0..=order)
            .map(|k| {
                let a = self.coeff(k).expect("within binary order");
                let b = other.coeff(k).expect("within binary order");
                op(&a, &b)
            })
            .collect();
        Self::new(self.ring.clone(), coeffs, exact)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| self.ring.add(a, b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| self.ring.sub(a, b))
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|x| self.ring.mul(c, x)).collect();
        Self {
            ring: self.ring.clone(),
            coeffs,
            exact: self.exact,
        }
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|x| self.ring.neg(x)).collect();
        Self {
            ring: self.ring.clone(),
            coeffs,
            exact: self.exact,
        }
    }

    /// Cauchy product. Two polynomials multiply exactly; otherwise the
    /// result is known as far as the less-known inexact factor.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_ring(&self.ring, &other.ring)?;
        let (order, exact) = if self.exact && other.exact {
            (self.trunc_order() + other.trunc_order(), true)
        } else {
            self.binary_order(other)
        };
        let mut coeffs = vec![self.ring.zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if self.ring.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                let term = self.ring.mul(a, b);
                coeffs[i + j] = self.ring.add(&coeffs[i + j], &term);
            }
        }
        Self::new(self.ring.clone(), coeffs, exact)
    }

    /// True iff coefficients `0..=order` agree; p-adic coefficients are
    /// compared modulo `p^min(M, precision)`.
    pub fn eq_mod(&self, other: &Self, order: usize, precision: Option<u32>) -> Result<bool> {
        check_ring(&self.ring, &other.ring)?;
        self.require_order(order)?;
        other.require_order(order)?;
        Ok((0..=order).all(|k| {
            let a = self.coeff(k).expect("order checked");
            let b = other.coeff(k).expect("order checked");
            self.ring.congruent(&a, &b, precision)
        }))
    }
}

impl<R: CoeffRing> PartialEq for PowerSeries<R> {
    /// Structural equality: same ring, flag, order and coefficients.
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.exact == other.exact && self.coeffs == other.coeffs
    }
}
