//! The reciprocal of the operator symbol, `1 / P(t) = sum_k c_k t^k`.

use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::ring::CoeffRing;
use crate::series::PowerSeries;

use super::DiffOperator;

/// `c_0, ..., c_N` with `P(t) * sum c_k t^k = 1 + O(t^{N+1})`.
#[derive(Debug, Clone, PartialEq)]
pub struct CSequence<R: CoeffRing> {
    ring: R,
    c: Vec<R::Elem>,
}

impl<R: CoeffRing> CSequence<R> {
    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.c
    }

    pub fn get(&self, k: usize) -> Option<&R::Elem> {
        self.c.get(k)
    }

    pub fn trunc_order(&self) -> usize {
        self.c.len() - 1
    }

    /// The sequence as a truncated series in `t`.
    pub fn as_series(&self) -> PowerSeries<R> {
        PowerSeries::truncated(self.ring.clone(), self.c.clone())
    }
}

/// `a_0^{-1}`, or `NotInvertible` when `a_0` is not a unit.
pub(crate) fn a0_inverse<R: CoeffRing>(op: &DiffOperator<R>) -> Result<R::Elem> {
    op.ring()
        .inv(op.a0())
        .map_err(|_| Error::NotInvertible(op.a0().to_string()))
}

/// Runs `c_0 = a_0^{-1}`, `c_j = -a_0^{-1} sum_{i=1}^{min(j,m)} a_i c_{j-i}`.
pub fn invert_symbol<R: CoeffRing>(op: &DiffOperator<R>, order: usize) -> Result<CSequence<R>> {
    let ring = op.ring();
    let inv = a0_inverse(op)?;
    let neg_inv = ring.neg(&inv);
    let a = op.coeffs();
    let mut c = Vec::with_capacity(order + 1);
    c.push(inv);
    for j in 1..=order {
        let acc = (1..=op.order().min(j)).fold(ring.zero(), |acc, i| {
            ring.add(&acc, &ring.mul(&a[i], &c[j - i]))
        });
        c.push(ring.mul(&neg_inv, &acc));
    }
    Ok(CSequence {
        ring: ring.clone(),
        c,
    })
}

fn require_order<R: CoeffRing>(op: &DiffOperator<R>, expected: usize) -> Result<()> {
    if op.order() == expected {
        Ok(())
    } else {
        Err(Error::WrongOrder {
            expected,
            actual: op.order(),
        })
    }
}

fn signed<R: CoeffRing>(ring: &R, x: R::Elem, negative: bool) -> R::Elem {
    if negative {
        ring.neg(&x)
    } else {
        x
    }
}

/// First-order closed form `c_j = (-1)^j a_0^{-j-1} a_1^j`.
pub fn c_closed_m1<R: CoeffRing>(op: &DiffOperator<R>, j: usize) -> Result<R::Elem> {
    require_order(op, 1)?;
    let ring = op.ring();
    let inv = a0_inverse(op)?;
    let j32 = u32::try_from(j).expect("index fits in u32");
    let value = ring.mul(&ring.pow(&inv, j32 + 1), &ring.pow(&op.coeffs()[1], j32));
    Ok(signed(ring, value, j % 2 == 1))
}

/// Second-order closed form
/// `c_j = sum_{k=0}^{floor(j/2)} (-1)^{j-k} C(j-k, k) a_0^{-j+k-1} a_1^{j-2k} a_2^k`,
/// with `0^0 = 1`. Evaluated as `a_0^{-j-1} sum_k (-1)^{j-k} C(j-k, k) a_1^{j-2k} (a_0 a_2)^k`.
pub fn c_closed_m2<R: CoeffRing>(op: &DiffOperator<R>, j: usize) -> Result<R::Elem> {
    require_order(op, 2)?;
    let ring = op.ring();
    let inv = a0_inverse(op)?;
    let (a1, a2) = (&op.coeffs()[1], &op.coeffs()[2]);
    let u = ring.mul(op.a0(), a2);
    let powers = |x: &R::Elem, n: usize| {
        let mut out = Vec::with_capacity(n + 1);
        out.push(ring.one());
        for e in 1..=n {
            out.push(ring.mul(&out[e - 1], x));
        }
        out
    };
    let (a1_pow, u_pow) = (powers(a1, j), powers(&u, j / 2));
    let mut total = ring.zero();
    for k in 0..=j / 2 {
        let term = ring.mul_integer(
            &ring.mul(&a1_pow[j - 2 * k], &u_pow[k]),
            &binomial(j - k, k),
        );
        total = ring.add(&total, &signed(ring, term, (j - k) % 2 == 1));
    }
    let total = ring.mul(
        &total,
        &ring.pow(&inv, u32::try_from(j + 1).expect("index fits in u32")),
    );
    Ok(total)
}
