//! JSON report structures for the `verify` and `asymptotics` commands.
//!
//! Field order is fixed by the struct definitions, so identical runs
//! serialize identically; `timing_ms` is the only run-dependent field and
//! never appears in table data files.

use serde::Serialize;

use maex_core::CheckOutcome;

#[derive(Serialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: serde_json::Value,
    /// "pass" | "fail" | "error"
    pub status: String,
    pub checks: Vec<CheckEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub timing_ms: u128,
}

#[derive(Serialize)]
pub struct CheckEntry {
    pub name: String,
    pub status: String,
    pub cases: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl From<&CheckOutcome> for CheckEntry {
    fn from(outcome: &CheckOutcome) -> Self {
        CheckEntry {
            name: outcome.name.to_string(),
            status: if outcome.passed() { "pass" } else { "fail" }.to_string(),
            cases: outcome.cases,
            detail: outcome.failure.clone(),
        }
    }
}

#[derive(Serialize)]
pub struct ProbeEntry {
    pub n: u64,
    /// Exact statistic as a decimal string (these exceed 64-bit range
    /// long before the probe points of interest).
    pub exact: String,
    pub predicted: f64,
    pub ratio: f64,
}

#[derive(Serialize)]
pub struct EtaEntry {
    pub t: f64,
    pub product: f64,
    pub predicted: f64,
    pub ratio: f64,
}

#[derive(Serialize)]
pub struct AsymptoticsReport {
    pub command: String,
    pub probes: Vec<u64>,
    pub sigma_l: Vec<ProbeEntry>,
    pub sigma_l_deviation_decreasing: bool,
    pub difference: Vec<ProbeEntry>,
    pub difference_deviation_decreasing: bool,
    pub expectation: Vec<ExpectationEntry>,
    pub t_grid: Vec<f64>,
    pub eta: Vec<EtaEntry>,
    pub eta_deviation_decreasing: bool,
    pub timing_ms: u128,
}

#[derive(Serialize)]
pub struct ExpectationEntry {
    pub n: u64,
    /// Exact rational as "numerator/denominator".
    pub exact: String,
    pub value: f64,
}
