//! Outcome type returned by the identity-verification operations.

/// Result of running one verification: how many cases were examined and,
/// if the identity failed somewhere, a description of the first failure.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    /// Stable identifier of the check, e.g. `"cohen-identity"`.
    pub name: &'static str,
    /// Number of individual cases (coefficients, partitions, lattice
    /// points, ...) that were compared.
    pub cases: u64,
    /// `None` on success; otherwise a human-readable description of the
    /// first mismatching case.
    pub failure: Option<String>,
}

impl CheckOutcome {
    pub fn pass(name: &'static str, cases: u64) -> Self {
        CheckOutcome {
            name,
            cases,
            failure: None,
        }
    }

    pub fn fail(name: &'static str, cases: u64, failure: String) -> Self {
        CheckOutcome {
            name,
            cases,
            failure: Some(failure),
        }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}
