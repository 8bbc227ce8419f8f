//! Fixtures shared by the criterion benches.

use formalode_core::{
    fundamental_solution, CoeffRing, DiffOperator, LaurentTail, PadicRing, PowerSeries, Rational,
    RationalField,
};

/// `2 + 3t - t^2 + 5t^3 / 7`.
pub fn rational_op() -> DiffOperator<RationalField> {
    DiffOperator::parse(RationalField, "2,3,-1,5/7").expect("valid operator")
}

pub fn padic_op(p: u64, precision: u32) -> DiffOperator<PadicRing> {
    let ring = PadicRing::new(p, precision).expect("prime");
    DiffOperator::parse(ring, "1,1,3").expect("valid operator")
}

/// `f_k = 1` through `order`.
pub fn ones(ring: &PadicRing, order: usize) -> PowerSeries<PadicRing> {
    PowerSeries::truncated(ring.clone(), vec![ring.one(); order + 1])
}

/// Finite tail with coefficients `1/1, -1/2, 1/3, ...`.
pub fn harmonic_tail(depth: usize) -> LaurentTail<RationalField> {
    let coeffs = (1..=depth as i64)
        .map(|k| Rational::frac(if k % 2 == 0 { -1 } else { 1 }, k))
        .collect();
    LaurentTail::finite(RationalField, coeffs)
}

pub fn euler_tail(depth: usize) -> LaurentTail<RationalField> {
    let op = DiffOperator::parse(RationalField, "1,-1").expect("valid operator");
    fundamental_solution(&op, depth).expect("a_0 = 1")
}
