//! Fundamental solutions in `(1/x) K[[1/x]]` and the Hurwitz products.
//!
//! The fundamental solution `E = sum_k (-1)^k k! c_k x^{-(k+1)}` solves
//! `P(D) E = 1/x`. Convolving it with a right-hand side solves the
//! equation: `E * g` on the Laurent side, `E * f` on the power-series side.

mod convolution;

pub use convolution::{convolve_lt_ps, hurwitz_lt_lt};

use num_bigint::BigInt;

use crate::combinatorics::{binomial, factorial};
use crate::error::Result;
use crate::ring::{CoeffRing, PadicRing};
use crate::series::{check_ring, LaurentTail};
use crate::solver::{invert_symbol, padic_plan, DiffOperator};

/// `E` through `x^{-depth}`: the `x^{-(k+1)}` coefficient is `(-1)^k k! c_k`.
///
/// The tail is exact only for scalar operators, where `E = a_0^{-1} / x`.
pub fn fundamental_solution<R: CoeffRing>(
    op: &DiffOperator<R>,
    depth: usize,
) -> Result<LaurentTail<R>> {
    let ring = op.ring();
    let c = invert_symbol(op, depth.saturating_sub(1))?;
    if op.is_scalar() {
        return Ok(LaurentTail::finite(
            ring.clone(),
            vec![c.coeffs()[0].clone()],
        ));
    }
    let coeffs = (0..depth)
        .map(|k| {
            let mut scale = factorial(k);
            if k % 2 == 1 {
                scale = -scale;
            }
            ring.mul_integer(&c.coeffs()[k], &scale)
        })
        .collect();
    Ok(LaurentTail::truncated(ring.clone(), coeffs))
}

/// `E` truncated at the tail cutoff `N*`: every dropped coefficient
/// `(-1)^k k! c_k` has valuation at least `M`, so the truncated tail is a
/// valid left factor for [`convolve_lt_ps`].
pub fn fundamental_solution_padic(op: &DiffOperator<PadicRing>) -> Result<LaurentTail<PadicRing>> {
    let plan = padic_plan(op)?;
    fundamental_solution(op, plan.tail_cutoff)
}

/// The unique Laurent-tail solution of `P(D) w = g`, through `x^{-depth}`.
///
/// The `x^{-k}` coefficient is the finite sum
/// `sum_{i=0}^{k-1} (-1)^i c_i g_{k-i} C(k-1, k-i-1) i!`.
pub fn solve_laurent<R: CoeffRing>(
    op: &DiffOperator<R>,
    g: &LaurentTail<R>,
    depth: usize,
) -> Result<LaurentTail<R>> {
    check_ring(op.ring(), g.ring())?;
    let ring = op.ring();
    let c = invert_symbol(op, depth.saturating_sub(1))?;
    g.require_depth(depth)?;
    if op.is_scalar() && g.is_exact() {
        return Ok(g.scale(&c.coeffs()[0]));
    }
    let coeffs = (1..=depth)
        .map(|k| {
            (0..k).fold(ring.zero(), |acc, i| {
                let gk = g.coeff(k - i).expect("depth checked");
                if ring.is_zero(&gk) {
                    return acc;
                }
                let mut scale: BigInt = binomial(k - 1, k - i - 1) * factorial(i);
                if i % 2 == 1 {
                    scale = -scale;
                }
                let term = ring.mul_integer(&ring.mul(&c.coeffs()[i], &gk), &scale);
                ring.add(&acc, &term)
            })
        })
        .collect();
    Ok(LaurentTail::truncated(ring.clone(), coeffs))
}
