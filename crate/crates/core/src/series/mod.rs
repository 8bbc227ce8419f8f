//! Truncated power series in `K[[x]]` and Laurent tails in `(1/x) K[[1/x]]`.
//!
//! Order bookkeeping: a derivative costs one order, binary operations take
//! the minimum order of their inexact operands, and exact operands never
//! truncate anything.

mod laurent;
mod power;

pub use laurent::LaurentTail;
pub(crate) use power::check_ring;
pub use power::PowerSeries;
