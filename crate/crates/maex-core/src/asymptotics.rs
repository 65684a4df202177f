//! Floating-point trend diagnostics for the growth of the statistic sums.
//!
//! The limits themselves are not finitely checkable, so these diagnostics
//! compare exact values against the closed-form predictions
//!
//! ```text
//! sigma_L(n)              ~ (log(6n/pi^2) + 2*gamma) / (4 pi sqrt(2n)) * e^(pi sqrt(2n/3))
//! sigma_L(n)-sigma_maex(n) ~ e^(pi sqrt(2n/3)) / (4 sqrt(3) n)
//! 1/(e^-t; e^-t)_inf      ~ sqrt(t/(2 pi)) * e^(pi^2/(6t))    (t -> 0+)
//! ```
//!
//! and report the ratio exact/predicted at probe points. Statistics stay
//! exact end to end; a ratio is formed by exact big-rational division
//! against the (rational) double value of the prediction, and only then
//! rounded — never as a float quotient of two astronomically large floats.

use num::{ToPrimitive, Zero};

use crate::error::Error;
use crate::partitions::StatTable;
use crate::Rat;

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.5772156649015329;

/// Growth prediction for `sigma_L(n)`.
pub fn predict_sigma_l(n: u64) -> f64 {
    let nf = n as f64;
    let main = (std::f64::consts::PI * (2.0 * nf / 3.0).sqrt()).exp();
    ((6.0 * nf / std::f64::consts::PI.powi(2)).ln() + 2.0 * EULER_GAMMA)
        / (4.0 * std::f64::consts::PI * (2.0 * nf).sqrt())
        * main
}

/// Growth prediction for `sigma_L(n) - sigma_maex(n)`; identical to the
/// leading term of p(n), so the predicted expectation is exactly 1.
pub fn predict_difference(n: u64) -> f64 {
    let nf = n as f64;
    (std::f64::consts::PI * (2.0 * nf / 3.0).sqrt()).exp() / (4.0 * 3.0_f64.sqrt() * nf)
}

/// Growth prediction for p(n): `e^(pi sqrt(2n/3)) / (4 sqrt(3) n)`, the
/// same expression as [`predict_difference`] — which is why E_n -> 1.
pub fn predict_partition_count(n: u64) -> f64 {
    predict_difference(n)
}

/// exact/predicted with the division done in exact rational arithmetic;
/// NaN when the prediction is not a finite nonzero number.
pub fn ratio_exact_to_predicted(exact: &Rat, predicted: f64) -> f64 {
    match Rat::from_float(predicted) {
        Some(p) if !p.numer().is_zero() => (exact / p).to_f64().unwrap_or(f64::NAN),
        _ => f64::NAN,
    }
}

/// One probe of an exact statistic against its prediction.
#[derive(Clone, Debug)]
pub struct ProbePoint {
    pub n: u64,
    pub exact: Rat,
    pub predicted: f64,
    pub ratio: f64,
}

fn probe<F, G>(table: &StatTable, probes: &[u64], exact: F, predicted: G) -> Result<Vec<ProbePoint>, Error>
where
    F: Fn(&StatTable, usize) -> Rat,
    G: Fn(u64) -> f64,
{
    probes
        .iter()
        .map(|&n| {
            if n == 0 || n as usize > table.max_n() {
                return Err(Error::BudgetExceeded {
                    what: "statistics table",
                    requested: n as i64,
                    limit: table.max_n() as i64,
                });
            }
            let exact_value = exact(table, n as usize);
            let predicted_value = predicted(n);
            let ratio = ratio_exact_to_predicted(&exact_value, predicted_value);
            Ok(ProbePoint {
                n,
                exact: exact_value,
                predicted: predicted_value,
                ratio,
            })
        })
        .collect()
}

/// Ratios of exact `sigma_L(n)` to its prediction at the probe points.
pub fn sigma_l_probes(table: &StatTable, probes: &[u64]) -> Result<Vec<ProbePoint>, Error> {
    probe(
        table,
        probes,
        |t, n| Rat::from_integer(t.sigma_l(n).clone()),
        predict_sigma_l,
    )
}

/// Ratios of exact `sigma_L(n) - sigma_maex(n)` to its prediction.
pub fn difference_probes(table: &StatTable, probes: &[u64]) -> Result<Vec<ProbePoint>, Error> {
    probe(
        table,
        probes,
        |t, n| Rat::from_integer(t.difference(n)),
        predict_difference,
    )
}

/// True when |ratio - 1| strictly decreases along the probe sequence.
pub fn deviation_strictly_decreasing(points: &[ProbePoint]) -> bool {
    points
        .windows(2)
        .all(|w| (w[1].ratio - 1.0).abs() < (w[0].ratio - 1.0).abs())
}

/// One evaluation of the eta-inversion comparison at a point t in (0, 1).
#[derive(Clone, Debug)]
pub struct EtaPoint {
    pub t: f64,
    /// `1 / prod_{k=1}^{M} (1 - e^(-kt))` with M large enough that the
    /// dropped tail is below double-precision noise.
    pub product: f64,
    /// `sqrt(t/(2 pi)) * e^(pi^2/(6t))`.
    pub predicted: f64,
    pub ratio: f64,
}

/// Evaluates `1/(e^-t; e^-t)_inf` against its t -> 0 form on the given
/// grid; the number of retained factors grows like 50/t so the truncated
/// tail cannot influence the reported digits.
pub fn eta_inversion_points(t_values: &[f64]) -> Result<Vec<EtaPoint>, Error> {
    t_values
        .iter()
        .map(|&t| {
            if !(t > 0.0 && t < 1.0) {
                return Err(Error::BudgetExceeded {
                    what: "eta grid point (must be in (0,1))",
                    requested: (t * 1000.0) as i64,
                    limit: 1000,
                });
            }
            let factors = (50.0 / t).ceil() as usize;
            let mut product = 1.0f64;
            for k in 1..=factors {
                product *= 1.0 - (-(k as f64) * t).exp();
            }
            let lhs = 1.0 / product;
            let predicted = (t / (2.0 * std::f64::consts::PI)).sqrt()
                * (std::f64::consts::PI.powi(2) / (6.0 * t)).exp();
            Ok(EtaPoint {
                t,
                product: lhs,
                predicted,
                ratio: lhs / predicted,
            })
        })
        .collect()
}

/// True when |ratio - 1| strictly decreases along the grid (expected for
/// a grid of decreasing t).
pub fn eta_deviation_strictly_decreasing(points: &[EtaPoint]) -> bool {
    points
        .windows(2)
        .all(|w| (w[1].ratio - 1.0).abs() < (w[0].ratio - 1.0).abs())
}
