#![allow(dead_code)]

use formalode_core::{
    DiffOperator, LaurentTail, PadicInt, PadicRing, PowerSeries, Rational, RationalField,
};
use proptest::prelude::*;

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rational::frac(n, d))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (1i64..=20, 1i64..=6, any::<bool>())
        .prop_map(|(n, d, neg)| Rational::frac(if neg { -n } else { n }, d))
}

/// Operators of order `1..=max_order` with nonzero `a_0` and `a_m`.
pub fn rational_op(max_order: usize) -> impl Strategy<Value = DiffOperator<RationalField>> {
    (1..=max_order)
        .prop_flat_map(|m| {
            (
                nonzero_rational(),
                proptest::collection::vec(small_rational(), m - 1),
                nonzero_rational(),
            )
        })
        .prop_map(|(a0, mid, am)| {
            let mut a = vec![a0];
            a.extend(mid);
            a.push(am);
            DiffOperator::new(RationalField, a).unwrap()
        })
}

pub fn rational_poly(max_degree: usize) -> impl Strategy<Value = PowerSeries<RationalField>> {
    proptest::collection::vec(small_rational(), 1..=max_degree + 1)
        .prop_map(|c| PowerSeries::polynomial(RationalField, c))
}

pub fn rational_tail(max_depth: usize) -> impl Strategy<Value = LaurentTail<RationalField>> {
    proptest::collection::vec(small_rational(), 1..=max_depth)
        .prop_map(|c| LaurentTail::finite(RationalField, c))
}

pub fn padic_elem(ring: &PadicRing) -> impl Strategy<Value = PadicInt> {
    let ring = ring.clone();
    (-1_000_000i64..=1_000_000).prop_map(move |v| ring.element(v))
}

pub fn padic_unit(ring: &PadicRing) -> impl Strategy<Value = PadicInt> {
    let ring = ring.clone();
    let p = ring.p() as i64;
    (-10_000i64..=10_000, 1..p).prop_map(move |(k, r)| ring.element(k * p + r))
}

/// Operators over `Z_p` with unit `a_0`, order `1..=max_order`, `a_m != 0`.
pub fn padic_op(
    ring: PadicRing,
    max_order: usize,
) -> impl Strategy<Value = DiffOperator<PadicRing>> {
    let r2 = ring.clone();
    (1..=max_order)
        .prop_flat_map(move |m| {
            (
                padic_unit(&ring),
                proptest::collection::vec(padic_elem(&ring), m - 1),
                padic_unit(&ring),
            )
        })
        .prop_map(move |(a0, mid, am)| {
            let mut a = vec![a0];
            a.extend(mid);
            a.push(am);
            DiffOperator::new(r2.clone(), a).unwrap()
        })
}

pub fn padic_series(
    ring: PadicRing,
    order: usize,
) -> impl Strategy<Value = PowerSeries<PadicRing>> {
    let r2 = ring.clone();
    proptest::collection::vec(padic_elem(&ring), order + 1)
        .prop_map(move |c| PowerSeries::truncated(r2.clone(), c))
}
