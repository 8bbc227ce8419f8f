use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{tail_cutoff, CoeffRing, PadicRing, RingDescriptor};

use super::DiffOperator;

/// Which existence result a solve relies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolveRegime {
    /// Field coefficients, polynomial right-hand side.
    ExactPolynomial,
    /// `p` does not divide `a_0`; convergence comes from `v_p(n!)` alone.
    PadicWeak,
    /// Additionally `v_p(a_i) >= beta >= 1` for every `i >= 1`.
    PadicStrict { beta: u32 },
}

impl SolveRegime {
    /// `min_{i>=1} v_p(a_i)` in the strict regime, zero otherwise.
    pub fn beta(&self) -> u32 {
        match self {
            SolveRegime::PadicStrict { beta } => *beta,
            _ => 0,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            SolveRegime::ExactPolynomial => "exact_polynomial",
            SolveRegime::PadicWeak => "padic_weak",
            SolveRegime::PadicStrict { .. } => "padic_strict",
        }
    }
}

impl fmt::Display for SolveRegime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Reads the regime off the valuations of the operator coefficients.
///
/// A p-adic operator whose `a_0` is divisible by `p` is rejected.
pub fn classify_regime<R: CoeffRing>(op: &DiffOperator<R>) -> Result<SolveRegime> {
    let ring = op.ring();
    let Some(v0) = ring.valuation(op.a0()) else {
        return Ok(SolveRegime::ExactPolynomial);
    };
    if v0 > 0 {
        return Err(Error::NotSolvable(format!(
            "p divides a_0 = {} (valuation {v0})",
            op.a0()
        )));
    }
    let higher = &op.coeffs()[1..];
    let beta = higher
        .iter()
        .map(|a| ring.valuation(a).expect("p-adic ring has valuations"))
        .min();
    Ok(match beta {
        Some(beta) if beta >= 1 => SolveRegime::PadicStrict { beta },
        _ => SolveRegime::PadicWeak,
    })
}

/// Regime plus the tail cutoff `N*` past which every dropped term of the
/// p-adic solution formula vanishes modulo `p^M`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PadicPlan {
    pub regime: SolveRegime,
    pub tail_cutoff: usize,
}

pub fn padic_plan(op: &DiffOperator<PadicRing>) -> Result<PadicPlan> {
    let regime = classify_regime(op)?;
    let RingDescriptor::Padic { p, precision } = op.ring().descriptor() else {
        unreachable!("PadicRing describes itself as padic");
    };
    Ok(PadicPlan {
        regime,
        tail_cutoff: tail_cutoff(p, precision, regime.beta(), op.order()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RationalField;

    fn padic(p: u64, m: u32, spec: &str) -> DiffOperator<PadicRing> {
        DiffOperator::parse(PadicRing::new(p, m).unwrap(), spec).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(
            classify_regime(&padic(5, 6, "1,1")).unwrap(),
            SolveRegime::PadicWeak
        );
        assert_eq!(
            classify_regime(&padic(5, 6, "1,5,25")).unwrap(),
            SolveRegime::PadicStrict { beta: 1 }
        );
        assert!(matches!(
            classify_regime(&padic(5, 6, "5,1")),
            Err(Error::NotSolvable(_))
        ));
        let rational = DiffOperator::parse(RationalField, "5,1").unwrap();
        assert_eq!(
            classify_regime(&rational).unwrap(),
            SolveRegime::ExactPolynomial
        );
    }

    #[test]
    fn mixed_valuations_are_weak() {
        assert_eq!(
            classify_regime(&padic(3, 6, "2,3,1")).unwrap(),
            SolveRegime::PadicWeak
        );
        assert_eq!(
            classify_regime(&padic(3, 6, "2,9,27")).unwrap(),
            SolveRegime::PadicStrict { beta: 2 }
        );
    }

    #[test]
    fn plan_uses_strict_beta() {
        let weak = padic_plan(&padic(2, 8, "1,1")).unwrap();
        assert_eq!(weak.tail_cutoff, 10);
        let strict = padic_plan(&padic(2, 8, "1,2")).unwrap();
        assert_eq!(strict.regime, SolveRegime::PadicStrict { beta: 1 });
        assert!(strict.tail_cutoff <= weak.tail_cutoff);
        // n + v_2(n!) >= 8 first at n = 5 (5 + 3).
        assert_eq!(strict.tail_cutoff, 5);
    }
}
