//! The q-hypergeometric functions sigma and sigma*, their identities, and
//! exact root-of-unity evaluations.
//!
//! Both functions carry two independent expansions, computed separately and
//! compared coefficientwise:
//!
//! ```text
//! sigma(q)  = sum_{n>=0} q^{n(n+1)/2} / (-q;q)_n
//!           = 1 - sum_{n>=1} (-1)^n q^n (q;q)_{n-1}
//! sigma*(q) = 2 sum_{n>=1} (-1)^n q^{n^2} / (q;q^2)_n
//!           = -2 sum_{n>=1} q^n (q^2;q^2)_{n-1}
//! ```
//!
//! The equality of the two sigma* forms is Cohen's identity (scaled by 2);
//! [`cohen_check`] reports it directly. The identity generalizes to three
//! variables ([`three_variable_identity_check`]), specializing back at
//! x = -1, y = 1. Further structure verified here:
//!
//! - [`theta_expansion_check`]: `q sigma(q^24)` equals the signed lattice
//!   sum over a > 6|b| of `(12/a) (-1)^b q^(a^2-24b^2)`.
//! - [`root_of_unity_check`]: `sigma(zeta) = -sigma*(1/zeta)` exactly in
//!   Z[x]/Phi_N, where both sums terminate.
//! - [`zagier_t_expansion`]: the exact rational expansion of
//!   `-sigma*(e^(-t)) = 2 sum_{n>=1} e^(-nt) (e^(-2t);e^(-2t))_{n-1}`.

use num::{One, Signed, Zero};

use crate::check::CheckOutcome;
use crate::cyclotomic::{CyclotomicElement, CyclotomicField};
use crate::error::Error;
use crate::pell::kronecker12;
use crate::series::{TruncatedSeries, Variable};
use crate::{Int, Rat};

/// A pair of independently computed expansions of the same function.
#[derive(Clone, Debug)]
pub struct DualForms {
    /// The q-hypergeometric sum form.
    pub sum_form: TruncatedSeries,
    /// The finite-Pochhammer partial-sum form.
    pub partial_form: TruncatedSeries,
}

impl DualForms {
    /// Exponent of the first coefficient on which the forms disagree.
    pub fn first_difference(&self) -> Option<usize> {
        self.sum_form.first_difference(&self.partial_form)
    }
}

/// Both expansions of sigma(q), truncated at `order`.
pub fn sigma_forms(order: usize) -> DualForms {
    // sum_{n>=0} q^{n(n+1)/2} / (-q;q)_n with a running inverse product
    let mut sum_form = TruncatedSeries::zero(Variable::Q, order);
    let mut inv = TruncatedSeries::one(Variable::Q, order);
    let mut n = 0usize;
    loop {
        let tri = n * (n + 1) / 2;
        if tri > order {
            break;
        }
        if n >= 1 {
            inv.div_binomial_assign(&Rat::one(), n); // /(1 + q^n)
        }
        sum_form.add_scaled_shifted(&inv, tri, &Rat::one());
        n += 1;
    }

    // 1 - sum_{n>=1} (-1)^n q^n (q;q)_{n-1}
    let mut partial_form = TruncatedSeries::one(Variable::Q, order);
    let mut prod = TruncatedSeries::one(Variable::Q, order);
    let neg_one = -Rat::one();
    for n in 1..=order {
        if n >= 2 {
            prod.mul_binomial_assign(&neg_one, n - 1);
        }
        let scale = if n % 2 == 1 { Rat::one() } else { -Rat::one() };
        partial_form.add_scaled_shifted(&prod, n, &scale);
    }

    DualForms {
        sum_form,
        partial_form,
    }
}

/// sigma(q) with the two forms cross-asserted; a mismatch is an engine
/// bug, reported as an internal error.
pub fn sigma_series(order: usize) -> Result<TruncatedSeries, Error> {
    let forms = sigma_forms(order);
    if let Some(e) = forms.first_difference() {
        return Err(Error::Internal(format!(
            "sigma expansions disagree at q^{}: {} vs {}",
            e,
            forms.sum_form.coeff(e),
            forms.partial_form.coeff(e)
        )));
    }
    Ok(forms.sum_form)
}

/// Both expansions of sigma*(q), truncated at `order`.
pub fn sigma_star_forms(order: usize) -> DualForms {
    // 2 sum_{n>=1} (-1)^n q^{n^2} / (q;q^2)_n
    let mut sum_form = TruncatedSeries::zero(Variable::Q, order);
    let mut inv = TruncatedSeries::one(Variable::Q, order);
    let neg_one = -Rat::one();
    let mut n = 1usize;
    while n * n <= order {
        inv.div_binomial_assign(&neg_one, 2 * n - 1); // /(1 - q^{2n-1})
        let scale = Rat::from_integer(Int::from(if n % 2 == 1 { -2i64 } else { 2 }));
        sum_form.add_scaled_shifted(&inv, n * n, &scale);
        n += 1;
    }

    // -2 sum_{n>=1} q^n (q^2;q^2)_{n-1}
    let mut partial_form = TruncatedSeries::zero(Variable::Q, order);
    let mut prod = TruncatedSeries::one(Variable::Q, order);
    let minus_two = Rat::from_integer(Int::from(-2));
    for n in 1..=order {
        if n >= 2 {
            prod.mul_binomial_assign(&neg_one, 2 * (n - 1));
        }
        partial_form.add_scaled_shifted(&prod, n, &minus_two);
    }

    DualForms {
        sum_form,
        partial_form,
    }
}

/// sigma*(q) with the two forms cross-asserted. The assertion *is*
/// Cohen's identity; use [`cohen_check`] to obtain a report instead of an
/// error.
pub fn sigma_star_series(order: usize) -> Result<TruncatedSeries, Error> {
    let forms = sigma_star_forms(order);
    if let Some(e) = forms.first_difference() {
        return Err(Error::Internal(format!(
            "sigma* expansions disagree at q^{}: {} vs {}",
            e,
            forms.sum_form.coeff(e),
            forms.partial_form.coeff(e)
        )));
    }
    Ok(forms.sum_form)
}

/// Cohen's identity
/// `sum (-1)^n q^{n^2}/(q;q^2)_n = -sum q^n (q^2;q^2)_{n-1}`,
/// checked coefficientwise to `order` (as the agreement of the two
/// sigma* expansions, which are the two sides scaled by 2).
pub fn cohen_check(order: usize) -> CheckOutcome {
    let name = "cohen-identity";
    let forms = sigma_star_forms(order);
    match forms.first_difference() {
        None => CheckOutcome::pass(name, (order + 1) as u64),
        Some(e) => CheckOutcome::fail(
            name,
            (order + 1) as u64,
            format!(
                "coefficient of q^{}: {} vs {}",
                e,
                forms.sum_form.coeff(e),
                forms.partial_form.coeff(e)
            ),
        ),
    }
}

// ---------------------------------------------------------------------------
// Three-variable identity
// ---------------------------------------------------------------------------

/// Dense integer grid over (x-degree, y-degree, q-order).
struct TriGrid {
    y_dim: usize,
    q_dim: usize,
    cells: Vec<Int>,
}

impl TriGrid {
    fn zero(x_deg: usize, y_deg: usize, q_ord: usize) -> Self {
        TriGrid {
            y_dim: y_deg + 1,
            q_dim: q_ord + 1,
            cells: vec![Int::zero(); (x_deg + 1) * (y_deg + 1) * (q_ord + 1)],
        }
    }

    fn idx(&self, a: usize, b: usize, m: usize) -> usize {
        (a * self.y_dim + b) * self.q_dim + m
    }

    fn add(&mut self, a: usize, b: usize, m: usize, value: &Int) {
        let i = self.idx(a, b, m);
        self.cells[i] += value;
    }

    fn get(&self, a: usize, b: usize, m: usize) -> &Int {
        &self.cells[self.idx(a, b, m)]
    }
}

/// Verifies the three-variable identity
///
/// ```text
/// sum_{n>=1} x^n q^{n^2} / (yq;q^2)_n
///   = sum_{n>=1} x y^{n-1} q^n (-x q^2 / y; q^2)_{n-1}
/// ```
///
/// with independent truncation caps in all three gradings. On the right
/// the 1/y powers cancel against y^{n-1} after expansion; a surviving
/// negative power would be a representation error.
pub fn three_variable_identity_check(
    x_deg: usize,
    y_deg: usize,
    q_order: usize,
) -> Result<CheckOutcome, Error> {
    let name = "three-variable-identity";
    let mut lhs = TriGrid::zero(x_deg, y_deg, q_order);
    // Left side: term n carries x^n q^{n^2}; expand prod_k 1/(1 - y q^{2k+1})
    // as a (y, q) grid by repeated in-place division.
    for n in 1..=x_deg {
        if n * n > q_order {
            break;
        }
        let qq = q_order - n * n;
        let mut grid = vec![vec![Int::zero(); qq + 1]; y_deg + 1];
        grid[0][0] = Int::one();
        for k in 0..n {
            let e = 2 * k + 1;
            if e > qq {
                break;
            }
            for b in 1..=y_deg {
                for m in e..=qq {
                    let add = grid[b - 1][m - e].clone();
                    if !add.is_zero() {
                        grid[b][m] += add;
                    }
                }
            }
        }
        for (b, row) in grid.iter().enumerate() {
            for (m, value) in row.iter().enumerate() {
                if !value.is_zero() {
                    lhs.add(n, b, n * n + m, value);
                }
            }
        }
    }

    let mut rhs = TriGrid::zero(x_deg, y_deg, q_order);
    // Right side: term n is x y^{n-1} q^n prod_{k=0}^{n-2} (1 + u q^{2k+2})
    // with u = x/y, so the u-degree j lands at x^{1+j} y^{n-1-j}.
    for n in 1..=q_order {
        let qq = q_order - n;
        let j_max = (x_deg.saturating_sub(1)).min(n - 1);
        let mut grid = vec![vec![Int::zero(); qq + 1]; j_max + 1];
        grid[0][0] = Int::one();
        for k in 0..(n - 1) {
            let e = 2 * k + 2;
            if e > qq {
                break;
            }
            for j in (1..=j_max).rev() {
                for m in (e..=qq).rev() {
                    let add = grid[j - 1][m - e].clone();
                    if !add.is_zero() {
                        grid[j][m] += add;
                    }
                }
            }
        }
        for (j, row) in grid.iter().enumerate() {
            // y-exponent (n-1) - j is nonnegative because at most n-1
            // factors contribute a 1/y each
            let Some(b) = (n - 1).checked_sub(j) else {
                return Err(Error::Internal(format!(
                    "negative y-power survived at n={} j={}",
                    n, j
                )));
            };
            if b > y_deg {
                continue;
            }
            for (m, value) in row.iter().enumerate() {
                if !value.is_zero() {
                    rhs.add(1 + j, b, n + m, value);
                }
            }
        }
    }

    let mut cases = 0u64;
    for m in 0..=q_order {
        for a in 0..=x_deg {
            for b in 0..=y_deg {
                cases += 1;
                if lhs.get(a, b, m) != rhs.get(a, b, m) {
                    return Ok(CheckOutcome::fail(
                        name,
                        cases,
                        format!(
                            "coefficient of x^{} y^{} q^{}: {} vs {}",
                            a,
                            b,
                            m,
                            lhs.get(a, b, m),
                            rhs.get(a, b, m)
                        ),
                    ));
                }
            }
        }
    }
    Ok(CheckOutcome::pass(name, cases))
}

// ---------------------------------------------------------------------------
// Theta expansion
// ---------------------------------------------------------------------------

/// Verifies `q sigma(q^24) = sum_{a > 6|b|} (12/a) (-1)^b q^(a^2 - 24 b^2)`
/// for every exponent up to `max_exponent`, including the vanishing of all
/// coefficients off 24Z + 1.
pub fn theta_expansion_check(max_exponent: usize) -> Result<CheckOutcome, Error> {
    let name = "theta-lattice-expansion";
    let sigma_order = max_exponent.saturating_sub(1) / 24;
    let sigma = sigma_series(sigma_order)?.integer_coeffs()?;

    let mut lattice = vec![Int::zero(); max_exponent + 1];
    // a > 6|b| forces a^2 - 24b^2 >= 12b^2 + 12|b| + 1, so |b| is bounded
    let mut b = 0i64;
    while 12 * b * b <= max_exponent as i64 {
        for b_signed in if b == 0 { vec![0] } else { vec![b, -b] } {
            let sign = if b_signed.rem_euclid(2) == 0 { 1 } else { -1 };
            let mut a = 6 * b_signed.abs() + 1;
            loop {
                let e = a * a - 24 * b_signed * b_signed;
                if e > max_exponent as i64 {
                    break;
                }
                let chi = kronecker12(a as u64);
                if chi != 0 {
                    lattice[e as usize] += Int::from(chi * sign);
                }
                a += 1;
            }
        }
        b += 1;
    }

    let mut cases = 0u64;
    for (e, found) in lattice.iter().enumerate() {
        cases += 1;
        let expected = if e % 24 == 1 && (e - 1) / 24 <= sigma_order {
            sigma[(e - 1) / 24].clone()
        } else {
            Int::zero()
        };
        if *found != expected {
            return Ok(CheckOutcome::fail(
                name,
                cases,
                format!(
                    "exponent {}: lattice sum {} vs q sigma(q^24) coefficient {}",
                    e, found, expected
                ),
            ));
        }
    }
    Ok(CheckOutcome::pass(name, cases))
}

// ---------------------------------------------------------------------------
// Roots of unity
// ---------------------------------------------------------------------------

/// `sigma(zeta)` for the primitive root of `field`, via the terminating
/// partial-sum form `1 - sum_m (-1)^m zeta^m (zeta;zeta)_{m-1}`: every
/// term with m > N contains the factor `1 - zeta^N = 0`.
pub fn sigma_at_root_of_unity(field: &CyclotomicField) -> CyclotomicElement {
    let n = field.order();
    let mut acc = field.zero();
    let mut prod = field.one();
    for m in 1..=n {
        if m >= 2 {
            let factor = field.sub(&field.one(), &field.root_power(m as i64 - 1));
            prod = field.mul(&prod, &factor);
        }
        let term = field.mul(&field.root_power(m as i64), &prod);
        acc = if m % 2 == 1 {
            field.sub(&acc, &term)
        } else {
            field.add(&acc, &term)
        };
    }
    field.sub(&field.one(), &acc)
}

/// `sigma*(zeta^{-1})` via `-2 sum_m w^m (w^2;w^2)_{m-1}` with
/// `w = zeta^{-1}`, represented as `zeta^{N-1}` so no fraction field is
/// needed; the sum terminates once `w^{2k} = 1` enters the product.
pub fn sigma_star_at_inverse_root(field: &CyclotomicField) -> CyclotomicElement {
    let n = field.order();
    let mut star_sum = field.zero();
    let mut prod = field.one();
    for m in 1..=n {
        if m >= 2 {
            let factor = field.sub(&field.one(), &field.root_power(-2 * (m as i64 - 1)));
            prod = field.mul(&prod, &factor);
        }
        if prod.is_zero() {
            break;
        }
        star_sum = field.add(&star_sum, &field.mul(&field.root_power(-(m as i64)), &prod));
    }
    field.scale(&star_sum, -2)
}

/// Verifies `sigma(zeta) + sigma*(zeta^{-1}) = 0` exactly in Z[x]/Phi_N
/// for a primitive N-th root zeta. Both defining sums terminate at roots
/// of unity: each gains a vanishing Pochhammer factor once n is large
/// enough.
pub fn root_of_unity_check(n: usize) -> Result<CheckOutcome, Error> {
    let name = "sigma-root-of-unity";
    if n == 0 {
        return Err(Error::BadResidue {
            n: 0,
            residue: 1,
            modulus: 1,
        });
    }
    let field = CyclotomicField::new(n);
    let sigma = sigma_at_root_of_unity(&field);
    let star = sigma_star_at_inverse_root(&field);
    let residue = field.add(&sigma, &star);
    if residue.is_zero() {
        Ok(CheckOutcome::pass(name, 1))
    } else {
        Ok(CheckOutcome::fail(
            name,
            1,
            format!("N = {}: residue {} is nonzero in Z[x]/Phi_N", n, residue),
        ))
    }
}

// ---------------------------------------------------------------------------
// Zagier's t-expansion
// ---------------------------------------------------------------------------

/// The exact rational t-expansion of
/// `-sigma*(e^(-t)) = 2 sum_{n>=1} e^(-nt) (e^(-2t); e^(-2t))_{n-1}`.
///
/// Term n has t-valuation >= n-1 (each factor `1 - e^(-2kt)` vanishes to
/// first order), so `terms` summands determine the coefficients of
/// t^0..t^(terms-1) exactly; the default uses `t_order + 1` terms.
pub fn zagier_t_expansion(t_order: usize) -> Result<TruncatedSeries, Error> {
    zagier_t_expansion_with_terms(t_order, t_order + 1)
}

/// Same expansion with an explicit number of summands, for stability
/// experiments: extra terms beyond `t_order + 1` must not change any
/// reported coefficient.
pub fn zagier_t_expansion_with_terms(
    t_order: usize,
    terms: usize,
) -> Result<TruncatedSeries, Error> {
    let mut acc = TruncatedSeries::zero(Variable::T, t_order);
    let neg_one = -Rat::one();
    for n in 1..=terms {
        // q^n (q^2;q^2)_{n-1} as an exact polynomial of degree n^2
        let mut poly = TruncatedSeries::one(Variable::Q, n * (n - 1));
        for j in 1..n {
            poly.mul_binomial_assign(&neg_one, 2 * j);
        }
        let term = poly.shift_up(n).substitute_exp_neg_t(t_order)?;
        acc = acc.add(&term)?;
    }
    Ok(acc.scalar_mul(&Rat::from_integer(Int::from(2))))
}

// ---------------------------------------------------------------------------
// Coefficient-size diagnostics
// ---------------------------------------------------------------------------

/// Exponents whose coefficients fall outside `[-bound, bound]`, with the
/// offending values. The coefficients of sigma and sigma* stay remarkably
/// small but are not literally bounded: squares of primes with residue 1
/// mod 24 push isolated coefficients to 3, products of two such primes to
/// ±4, and so on. Outliers are therefore reported, not asserted away.
pub fn coefficient_outliers(series: &TruncatedSeries, bound: i64) -> Vec<(usize, Rat)> {
    let bound = Rat::from_integer(Int::from(bound));
    series
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.abs() > bound)
        .map(|(e, c)| (e, c.clone()))
        .collect()
}
