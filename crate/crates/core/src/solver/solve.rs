use crate::combinatorics::falling_factorial;
use crate::error::{Error, Result};
use crate::ring::{CoeffRing, PadicRing, Rational, RationalField};
use crate::series::{check_ring, PowerSeries};

use super::regime::padic_plan;
use super::symbol::{invert_symbol, CSequence};
use super::DiffOperator;

/// Coefficient `k` of `sum_{n<terms} c_n f^{(n)}`, i.e.
/// `sum_n c_n (n+k)!/k! f_{k+n}`. Callers guarantee `f_{k+n}` is known.
pub(crate) fn derivative_sum_coeff<R: CoeffRing>(
    c: &CSequence<R>,
    f: &PowerSeries<R>,
    k: usize,
    terms: usize,
) -> R::Elem {
    let ring = c.ring();
    (0..terms).fold(ring.zero(), |acc, n| {
        let fk = f.coeff(k + n).expect("caller checked order");
        if ring.is_zero(&fk) {
            return acc;
        }
        let term = ring.mul(&c.coeffs()[n], &fk);
        ring.add(&acc, &ring.mul_integer(&term, &falling_factorial(n + k, n)))
    })
}

/// The unique polynomial solution `w = sum_k c_k f^{(k)}` of `P(D) w = f`.
///
/// The sum is finite because `f` is a polynomial; a right-hand side that is
/// not flagged exact is rejected with `NotPolynomial`, since the sum does not
/// converge over a field.
pub fn solve_polynomial<R: CoeffRing>(
    op: &DiffOperator<R>,
    f: &PowerSeries<R>,
) -> Result<PowerSeries<R>> {
    check_ring(op.ring(), f.ring())?;
    if !f.is_exact() {
        return Err(Error::NotPolynomial);
    }
    let Some(degree) = f.degree() else {
        invert_symbol(op, 0)?;
        return Ok(PowerSeries::zero(op.ring().clone()));
    };
    let c = invert_symbol(op, degree)?;
    let coeffs = (0..=degree)
        .map(|k| derivative_sum_coeff(&c, f, k, degree - k + 1))
        .collect();
    PowerSeries::new(op.ring().clone(), coeffs, true)
}

/// Whether a rational series has integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralityReport {
    pub integral: bool,
    /// First index with a non-integer coefficient, and that coefficient.
    pub witness: Option<(usize, Rational)>,
}

pub fn integrality_report(w: &PowerSeries<RationalField>) -> IntegralityReport {
    let witness = w
        .coeffs()
        .iter()
        .enumerate()
        .find(|(_, c)| !c.is_integer())
        .map(|(k, c)| (k, c.clone()));
    IntegralityReport {
        integral: witness.is_none(),
        witness,
    }
}

/// The solution in `Z_p[[x]]` through `x^{order}`, at the ring's precision.
///
/// Coefficient `k` is `sum_{n < N*} c_n C(n+k, n) n! f_{k+n}` where `N*`
/// comes from [`padic_plan`]; every dropped term has valuation `>= M`.
pub fn solve_padic(
    op: &DiffOperator<PadicRing>,
    f: &PowerSeries<PadicRing>,
    order: usize,
) -> Result<PowerSeries<PadicRing>> {
    let plan = padic_plan(op)?;
    solve_padic_with_cutoff(op, f, order, plan.tail_cutoff)
}

/// [`solve_padic`] with an explicit number of summed terms.
///
/// Any `terms >= N*` gives the same answer modulo `p^M`; smaller values
/// return a partial sum. The regime is still checked.
pub fn solve_padic_with_cutoff(
    op: &DiffOperator<PadicRing>,
    f: &PowerSeries<PadicRing>,
    order: usize,
    terms: usize,
) -> Result<PowerSeries<PadicRing>> {
    check_ring(op.ring(), f.ring())?;
    padic_plan(op)?;
    let terms = terms.max(1);
    f.require_order(order + terms - 1)?;
    let c = invert_symbol(op, terms - 1)?;
    let coeffs = (0..=order)
        .map(|k| derivative_sum_coeff(&c, f, k, terms))
        .collect();
    let exact = f.is_exact() && f.degree().is_none_or(|d| d <= order);
    PowerSeries::new(op.ring().clone(), coeffs, exact)
}
