use num_bigint::BigInt;

use super::power::check_ring;
use crate::error::{Error, Result};
use crate::ring::CoeffRing;

/// A truncated Laurent tail `sum_{j=1}^{N} g_j x^{-j}` in `(1/x) K[[1/x]]`.
///
/// `coeffs[0]` is the coefficient of `x^{-1}`. There is no constant or
/// positive-power part. When `exact` is set, all coefficients past depth
/// `N` are zero.
#[derive(Debug, Clone)]
pub struct LaurentTail<R: CoeffRing> {
    ring: R,
    coeffs: Vec<R::Elem>,
    exact: bool,
}

impl<R: CoeffRing> LaurentTail<R> {
    pub fn new(ring: R, coeffs: Vec<R::Elem>, exact: bool) -> Self {
        Self {
            ring,
            coeffs,
            exact,
        }
    }

    pub fn finite(ring: R, coeffs: Vec<R::Elem>) -> Self {
        Self::new(ring, coeffs, true)
    }

    pub fn truncated(ring: R, coeffs: Vec<R::Elem>) -> Self {
        Self::new(ring, coeffs, false)
    }

    pub fn zero(ring: R) -> Self {
        Self::finite(ring, Vec::new())
    }

    /// The tail `1/x`, the unit of the Hurwitz product.
    pub fn reciprocal_x(ring: R) -> Self {
        let one = ring.one();
        Self::finite(ring, vec![one])
    }

    pub fn parse(ring: R, coeffs: &[impl AsRef<str>], exact: bool) -> Result<Self> {
        let parsed = coeffs
            .iter()
            .map(|c| ring.parse(c.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(ring, parsed, exact))
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    /// `coeffs()[j - 1]` is the coefficient of `x^{-j}`.
    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn depth(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn known_depth(&self) -> Option<usize> {
        (!self.exact).then(|| self.depth())
    }

    /// Coefficient of `x^{-j}` for `j >= 1`.
    pub fn coeff(&self, j: usize) -> Option<R::Elem> {
        assert!(j >= 1, "Laurent tails start at x^-1");
        match self.coeffs.get(j - 1) {
            Some(c) => Some(c.clone()),
            None if self.exact => Some(self.ring.zero()),
            None => None,
        }
    }

    /// Index of the deepest nonzero coefficient of an exact tail.
    pub fn support_depth(&self) -> Option<usize> {
        if !self.exact {
            return None;
        }
        Some(
            self.coeffs
                .iter()
                .rposition(|c| !self.ring.is_zero(c))
                .map_or(0, |i| i + 1),
        )
    }

    pub fn require_depth(&self, depth: usize) -> Result<()> {
        match self.known_depth() {
            Some(n) if n < depth => Err(Error::InsufficientOrder {
                needed: depth,
                available: n,
            }),
            _ => Ok(()),
        }
    }

    /// Keeps `x^{-1}..x^{-depth}` and drops the exactness flag.
    pub fn truncate(&self, depth: usize) -> Result<Self> {
        self.require_depth(depth)?;
        let coeffs = (1..=depth)
            .map(|j| self.coeff(j).expect("depth checked"))
            .collect();
        Ok(Self::truncated(self.ring.clone(), coeffs))
    }

    /// `d/dx`: the `x^{-(j+1)}` coefficient is `-j g_j`; the `x^{-1}` slot is zero.
    ///
    /// An exact tail gains one slot of depth; an inexact one keeps its depth.
    pub fn derivative(&self) -> Self {
        let n = self.depth();
        let out_depth = if self.exact { n + 1 } else { n };
        let mut coeffs = Vec::with_capacity(out_depth);
        if out_depth > 0 {
            coeffs.push(self.ring.zero());
        }
        for j in 1..out_depth {
            let g = &self.coeffs[j - 1];
            coeffs.push(self.ring.mul_integer(g, &-BigInt::from(j)));
        }
        Self::new(self.ring.clone(), coeffs, self.exact)
    }

    fn binary_depth(&self, other: &Self) -> (usize, bool) {
        match (self.exact, other.exact) {
            (true, true) => (self.depth().max(other.depth()), true),
            (true, false) => (other.depth(), false),
            (false, true) => (self.depth(), false),
            (false, false) => (self.depth().min(other.depth()), false),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_ring(&self.ring, &other.ring)?;
        let (depth, exact) = self.binary_depth(other);
        let coeffs = (1..=depth)
            .map(|j| {
                let a = self.coeff(j).expect("within depth");
                let b = other.coeff(j).expect("within depth");
                self.ring.add(&a, &b)
            })
            .collect();
        Ok(Self::new(self.ring.clone(), coeffs, exact))
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|g| self.ring.mul(c, g)).collect();
        Self::new(self.ring.clone(), coeffs, self.exact)
    }

    /// Coefficients `x^{-1}..x^{-depth}` agree (p-adic: modulo `p^min(M, precision)`).
    pub fn eq_mod(&self, other: &Self, depth: usize, precision: Option<u32>) -> Result<bool> {
        check_ring(&self.ring, &other.ring)?;
        self.require_depth(depth)?;
        other.require_depth(depth)?;
        Ok((1..=depth).all(|j| {
            let a = self.coeff(j).expect("depth checked");
            let b = other.coeff(j).expect("depth checked");
            self.ring.congruent(&a, &b, precision)
        }))
    }
}

impl<R: CoeffRing> PartialEq for LaurentTail<R> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.exact == other.exact && self.coeffs == other.coeffs
    }
}
