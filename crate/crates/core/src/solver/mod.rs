//! Solving `a_m w^{(m)} + ... + a_1 w' + a_0 w = f` in power series.
//!
//! The solution is `w = sum_k c_k f^{(k)}` where `sum_k c_k t^k` inverts the
//! symbol `P(t)`. Over a field the sum is finite exactly when `f` is a
//! polynomial; over `Z_p` it converges because `v_p(n!)` grows without bound.

mod operator;
mod regime;
mod solve;
mod symbol;

pub use operator::DiffOperator;
pub use regime::{classify_regime, padic_plan, PadicPlan, SolveRegime};
pub use solve::{
    integrality_report, solve_padic, solve_padic_with_cutoff, solve_polynomial, IntegralityReport,
};
pub use symbol::{c_closed_m1, c_closed_m2, invert_symbol, CSequence};
