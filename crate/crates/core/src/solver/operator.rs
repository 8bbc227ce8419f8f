use crate::combinatorics::falling_factorial;
use crate::error::{Error, Result};
use crate::ring::CoeffRing;
use crate::series::{check_ring, LaurentTail, PowerSeries};

/// The operator `P(D) = a_m D^m + ... + a_1 D + a_0`.
///
/// Coefficients are stored constant term first: `coeffs()[i]` is `a_i`.
#[derive(Debug, Clone)]
pub struct DiffOperator<R: CoeffRing> {
    ring: R,
    a: Vec<R::Elem>,
}

impl<R: CoeffRing> DiffOperator<R> {
    /// Requires a nonzero leading coefficient `a_m` (p-adic: valuation < M).
    pub fn new(ring: R, a: Vec<R::Elem>) -> Result<Self> {
        let op = Self::with_nominal_order(ring, a)?;
        let m = op.order();
        if op.ring.is_zero(&op.a[m]) {
            return Err(Error::ZeroLeadingCoefficient(m));
        }
        Ok(op)
    }

    /// Keeps the nominal order `m = a.len() - 1` even when `a_m` vanishes.
    ///
    /// The closed forms for first- and second-order symbols are stated per
    /// nominal order, and their degenerate cases need this.
    pub fn with_nominal_order(ring: R, a: Vec<R::Elem>) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::EmptyOperator);
        }
        Ok(Self { ring, a })
    }

    /// Parses `"a0,a1,...,am"`. Parse errors report the column within `spec`.
    pub fn parse(ring: R, spec: &str) -> Result<Self> {
        let mut coeffs = Vec::new();
        let mut offset = 0;
        for field in spec.split(',') {
            let c = ring.parse(field).map_err(|e| match e {
                Error::Parse { column, reason, .. } => Error::Parse {
                    input: spec.to_string(),
                    column: offset + column,
                    reason,
                },
                other => other,
            })?;
            coeffs.push(c);
            offset += field.len() + 1;
        }
        Self::new(ring, coeffs)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.a
    }

    pub fn order(&self) -> usize {
        self.a.len() - 1
    }

    pub fn a0(&self) -> &R::Elem {
        &self.a[0]
    }

    /// True when `a_1 = ... = a_m = 0`, so the operator is multiplication by `a_0`.
    pub fn is_scalar(&self) -> bool {
        self.a[1..].iter().all(|c| self.ring.is_zero(c))
    }

    /// `sum_i a_i w^{(i)}`; coefficient `k` is `sum_i a_i (k+i)!/k! w_{k+i}`.
    ///
    /// An inexact `w` of order `N` yields order `N - m`.
    pub fn apply(&self, w: &PowerSeries<R>) -> Result<PowerSeries<R>> {
        check_ring(&self.ring, w.ring())?;
        let m = self.order();
        let out_order = if w.is_exact() {
            w.trunc_order()
        } else {
            w.trunc_order()
                .checked_sub(m)
                .ok_or(Error::InsufficientOrder {
                    needed: m,
                    available: w.trunc_order(),
                })?
        };
        let coeffs = (0..=out_order)
            .map(|k| {
                self.a
                    .iter()
                    .enumerate()
                    .fold(self.ring.zero(), |acc, (i, ai)| {
                        let wk = w.coeff(k + i).expect("order checked");
                        let term = self
                            .ring
                            .mul_integer(&self.ring.mul(ai, &wk), &falling_factorial(k + i, i));
                        self.ring.add(&acc, &term)
                    })
            })
            .collect();
        PowerSeries::new(self.ring.clone(), coeffs, w.is_exact())
    }

    /// `sum_i a_i w^{(i)}` on a Laurent tail. The `x^{-k}` coefficient is
    /// `sum_i a_i (-1)^i (k-1)!/(k-1-i)! w_{k-i}` over `k - i >= 1`.
    ///
    /// Depth is preserved for inexact tails; exact tails grow by `m`.
    pub fn apply_laurent(&self, w: &LaurentTail<R>) -> Result<LaurentTail<R>> {
        check_ring(&self.ring, w.ring())?;
        let depth = if w.is_exact() {
            w.support_depth()
                .map_or(0, |d| if d == 0 { 0 } else { d + self.order() })
        } else {
            w.depth()
        };
        let coeffs = (1..=depth)
            .map(|k| {
                let top = self.order().min(k - 1);
                (0..=top).fold(self.ring.zero(), |acc, i| {
                    let wk = w.coeff(k - i).expect("within depth");
                    let mut scale = falling_factorial(k - 1, i);
                    if i % 2 == 1 {
                        scale = -scale;
                    }
                    let term = self
                        .ring
                        .mul_integer(&self.ring.mul(&self.a[i], &wk), &scale);
                    self.ring.add(&acc, &term)
                })
            })
            .collect();
        Ok(LaurentTail::new(self.ring.clone(), coeffs, w.is_exact()))
    }

    /// The symbol `P(t) = a_0 + a_1 t + ... + a_m t^m` as an exact series.
    pub fn symbol(&self) -> PowerSeries<R> {
        PowerSeries::polynomial(self.ring.clone(), self.a.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{PadicRing, Rational, RationalField};

    fn q(coeffs: &[i64]) -> Vec<Rational> {
        coeffs.iter().map(|&c| Rational::from(c)).collect()
    }

    fn op(a: &[i64]) -> DiffOperator<RationalField> {
        DiffOperator::new(RationalField, q(a)).unwrap()
    }

    #[test]
    fn construction_rules() {
        assert_eq!(
            DiffOperator::new(RationalField, Vec::new()).unwrap_err(),
            Error::EmptyOperator
        );
        assert_eq!(
            DiffOperator::new(RationalField, q(&[1, 1, 0])).unwrap_err(),
            Error::ZeroLeadingCoefficient(2)
        );
        let nominal = DiffOperator::with_nominal_order(RationalField, q(&[1, 1, 0])).unwrap();
        assert_eq!(nominal.order(), 2);
        let ring = PadicRing::new(5, 2).unwrap();
        assert!(matches!(
            DiffOperator::new(ring.clone(), vec![ring.element(1), ring.element(25)]),
            Err(Error::ZeroLeadingCoefficient(1))
        ));
    }

    #[test]
    fn parse_reports_columns() {
        let parsed = DiffOperator::parse(RationalField, "2, 3/4,-1").unwrap();
        assert_eq!(
            parsed.coeffs(),
            &[Rational::from(2), Rational::frac(3, 4), Rational::from(-1)]
        );
        match DiffOperator::parse(RationalField, "1,2,x").unwrap_err() {
            Error::Parse { column, input, .. } => {
                assert_eq!(column, 5);
                assert_eq!(input, "1,2,x");
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            DiffOperator::parse(RationalField, "1,,2"),
            Err(Error::Parse { column: 3, .. })
        ));
    }

    #[test]
    fn apply_examples() {
        let w = PowerSeries::polynomial(RationalField, q(&[1, 1]));
        assert_eq!(
            op(&[2, 3]).apply(&w).unwrap().coeffs(),
            q(&[5, 2]).as_slice()
        );

        let f = PowerSeries::truncated(RationalField, q(&[4, -1, 7]));
        assert_eq!(op(&[1]).apply(&f).unwrap(), f);

        for m in 1..6usize {
            let mut a = vec![0i64; m + 1];
            a[m] = 3;
            let mut x_m = vec![0i64; m + 1];
            x_m[m] = 1;
            let out = op(&a)
                .apply(&PowerSeries::polynomial(RationalField, q(&x_m)))
                .unwrap();
            let fact: i64 = (1..=m as i64).product();
            assert_eq!(out.coeff(0), Some(Rational::from(3 * fact)));
            assert_eq!(out.degree(), Some(0));
        }
    }

    #[test]
    fn apply_costs_m_orders() {
        let w = PowerSeries::truncated(RationalField, q(&[1, 2, 3, 4]));
        assert_eq!(op(&[1, 1, 1]).apply(&w).unwrap().trunc_order(), 1);
        assert!(matches!(
            op(&[1, 0, 0, 0, 1]).apply(&w),
            Err(Error::InsufficientOrder { .. })
        ));
    }

    #[test]
    fn apply_laurent_matches_repeated_derivatives() {
        let operator = op(&[2, -3, 5]);
        let w = LaurentTail::finite(RationalField, q(&[1, 4, -2, 7]));
        let d1 = w.derivative();
        let d2 = d1.derivative();
        let expected = w
            .scale(&Rational::from(2))
            .add(&d1.scale(&Rational::from(-3)))
            .unwrap()
            .add(&d2.scale(&Rational::from(5)))
            .unwrap();
        let got = operator.apply_laurent(&w).unwrap();
        assert_eq!(got.depth(), 6);
        assert!(got.eq_mod(&expected, 8, None).unwrap());
    }

    #[test]
    fn apply_laurent_trivial_cases() {
        let w = LaurentTail::truncated(RationalField, q(&[3, 1, 4]));
        assert_eq!(op(&[1]).apply_laurent(&w).unwrap(), w);
        let zero = LaurentTail::zero(RationalField);
        assert_eq!(
            op(&[1, 2, 3]).apply_laurent(&zero).unwrap().support_depth(),
            Some(0)
        );
    }
}
