//! Exact-arithmetic engine for partition maximal-excludant statistics.
//!
//! Everything here is computed over arbitrary-precision integers and
//! rationals; floating point appears only in the asymptotic diagnostics
//! of [`asymptotics`], and only after exact big-rational division.
//!
//! Module map:
//! - [`series`]: truncated formal power series, q-Pochhammer symbols,
//!   the substitution `q -> e^(-t)`, and bivariate coefficient grids.
//! - [`partitions`]: partition enumeration, the statistics mex / maex /
//!   largest part, brute-force oracles, and the generating-function
//!   evaluators for their sums.
//! - [`mock_theta`]: the q-hypergeometric functions sigma and sigma*,
//!   their dual expansions, the three-variable identity, the theta-series
//!   expansion of q*sigma(q^24), root-of-unity evaluations, and the
//!   t-expansion of -sigma*(e^(-t)).
//! - [`cyclotomic`]: exact arithmetic in Z[x]/Phi_N for root-of-unity work.
//! - [`pell`]: the coefficients T(n) computed from classes of solutions of
//!   u^2 - 6v^2 = n, from the multiplicative prime-power table, and from
//!   q-series extraction; S*(n); the Kronecker symbol (12/a).
//! - [`asymptotics`]: floating-point trend diagnostics against the
//!   closed-form growth predictions.

pub mod asymptotics;
pub mod check;
pub mod cyclotomic;
pub mod error;
pub mod mock_theta;
pub mod partitions;
pub mod pell;
pub mod series;

pub use check::CheckOutcome;
pub use error::Error;
pub use series::{BivariateSeries, TruncatedSeries, Variable};

/// Arbitrary-precision integer used for all exact counts.
pub type Int = num::BigInt;
/// Arbitrary-precision rational used for all series coefficients.
pub type Rat = num::BigRational;
