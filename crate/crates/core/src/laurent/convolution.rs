use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::ring::{CoeffRing, RingDescriptor};
use crate::series::{check_ring, LaurentTail, PowerSeries};

/// `(b * f)(x) = sum_i (-1)^i b_{i+1} f^{(i)}(x) / i!`, through `x^{order}`.
///
/// Coefficient `k` is `sum_i (-1)^i b_{i+1} C(k+i, i) f_{k+i}`. The sum runs
/// over the stored coefficients of `b`. For an inexact `b` this is only
/// meaningful when the missing coefficients are negligible, i.e. p-adically
/// below the working precision; over the rationals it is refused.
pub fn convolve_lt_ps<R: CoeffRing>(
    b: &LaurentTail<R>,
    f: &PowerSeries<R>,
    order: usize,
) -> Result<PowerSeries<R>> {
    check_ring(b.ring(), f.ring())?;
    let ring = b.ring();
    let terms = match b.support_depth() {
        Some(support) => support,
        None if ring.descriptor() == RingDescriptor::Rational => {
            return Err(Error::DivergentConvolution);
        }
        None => b.depth(),
    };
    f.require_order(order + terms.saturating_sub(1))?;
    let coeffs = (0..=order)
        .map(|k| {
            (0..terms).fold(ring.zero(), |acc, i| {
                let fk = f.coeff(k + i).expect("order checked");
                let bi = &b.coeffs()[i];
                if ring.is_zero(&fk) || ring.is_zero(bi) {
                    return acc;
                }
                let mut scale = binomial(k + i, i);
                if i % 2 == 1 {
                    scale = -scale;
                }
                ring.add(&acc, &ring.mul_integer(&ring.mul(bi, &fk), &scale))
            })
        })
        .collect();
    let exact = b.is_exact() && f.is_exact() && f.degree().is_none_or(|d| d <= order);
    PowerSeries::new(ring.clone(), coeffs, exact)
}

/// Hurwitz product of two Laurent tails. The `x^{-k}` coefficient is
/// `sum_{i=0}^{k-1} C(k-1, i) b_{i+1} g_{k-i}`, symmetric in `b` and `g`.
pub fn hurwitz_lt_lt<R: CoeffRing>(
    b: &LaurentTail<R>,
    g: &LaurentTail<R>,
) -> Result<LaurentTail<R>> {
    check_ring(b.ring(), g.ring())?;
    let ring = b.ring();
    let (depth, exact) = match (b.support_depth(), g.support_depth()) {
        (Some(0), Some(_)) | (Some(_), Some(0)) => (0, true),
        (Some(db), Some(dg)) => (db + dg - 1, true),
        (Some(_), None) => (g.depth(), false),
        (None, Some(_)) => (b.depth(), false),
        (None, None) => (b.depth().min(g.depth()), false),
    };
    let coeffs = (1..=depth)
        .map(|k| {
            (0..k).fold(ring.zero(), |acc, i| {
                let bi = b.coeff(i + 1).expect("within depth");
                let gk = g.coeff(k - i).expect("within depth");
                if ring.is_zero(&bi) || ring.is_zero(&gk) {
                    return acc;
                }
                ring.add(
                    &acc,
                    &ring.mul_integer(&ring.mul(&bi, &gk), &binomial(k - 1, i)),
                )
            })
        })
        .collect();
    Ok(LaurentTail::new(ring.clone(), coeffs, exact))
}
