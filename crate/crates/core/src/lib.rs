//! Exact solvers for linear constant-coefficient differential equations
//!
//! ```text
//! a_m w^{(m)}(x) + ... + a_1 w'(x) + a_0 w(x) = f(x)
//! ```
//!
//! in formal power series over the rationals and over the p-adic integers,
//! plus fundamental solutions and Hurwitz convolutions in the ring of
//! Laurent tails `(1/x) K[[1/x]]`.
//!
//! All arithmetic is exact: rationals are big-integer fractions, p-adic
//! integers are residues modulo `p^M` with tracked precision.

pub mod combinatorics;
pub mod error;
pub mod laurent;
pub mod ring;
pub mod series;
pub mod solver;

pub use error::{Error, Result};
pub use laurent::{
    convolve_lt_ps, fundamental_solution, fundamental_solution_padic, hurwitz_lt_lt, solve_laurent,
};
pub use ring::{
    factorial_valuation, tail_cutoff, CoeffRing, PadicInt, PadicRing, Rational, RationalField,
    RingDescriptor,
};
pub use series::{LaurentTail, PowerSeries};
pub use solver::{
    c_closed_m1, c_closed_m2, classify_regime, integrality_report, invert_symbol, padic_plan,
    solve_padic, solve_padic_with_cutoff, solve_polynomial, CSequence, DiffOperator,
    IntegralityReport, PadicPlan, SolveRegime,
};
