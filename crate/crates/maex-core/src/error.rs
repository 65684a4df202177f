//! Error type shared across the crate.

use crate::series::Variable;

/// Errors raised by precondition violations and resource limits.
///
/// Verification *failures* (an identity not holding) are not errors; the
/// check operations report those through [`crate::check::CheckOutcome`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Two series in different formal variables were combined.
    #[error("variable mismatch: {0} vs {1}")]
    VariableMismatch(Variable, Variable),

    /// Inversion of a series with zero constant term.
    #[error("cannot invert a series with zero constant term")]
    SingularSeries,

    /// Infinite product whose factor argument has a unit (order-0) term,
    /// so the product does not converge q-adically.
    #[error("divergent infinite product: argument has a nonzero constant term")]
    DivergentProduct,

    /// A partition statistic was requested for the empty partition.
    #[error("statistic undefined for the empty partition")]
    EmptyPartition,

    /// A sequence of parts that is not weakly decreasing or contains zero.
    #[error("invalid partition: parts must be positive and weakly decreasing")]
    InvalidPartition,

    /// An integer argument outside the congruence class an operation is
    /// defined on.
    #[error("argument {n} is not congruent to {residue} modulo {modulus}")]
    BadResidue { n: i64, residue: i64, modulus: i64 },

    /// A computation was asked to exceed its configured resource budget.
    #[error("{what} budget exceeded: requested {requested}, limit {limit}")]
    BudgetExceeded {
        what: &'static str,
        requested: i64,
        limit: i64,
    },

    /// An internal consistency assertion failed; indicates an engine bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}
