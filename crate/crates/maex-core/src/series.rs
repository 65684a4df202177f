//! Exact truncated formal power series over arbitrary-precision rationals.
//!
//! A [`TruncatedSeries`] stores the coefficients of exponents `0..=order`
//! in one formal variable ([`Variable::Q`] or [`Variable::T`]) and asserts
//! nothing about higher exponents. Every operation propagates truncation
//! honestly: the order of a result is the minimum of the operand orders,
//! so a series never claims more precision than its inputs carry.
//!
//! Building blocks provided here:
//! - ring arithmetic: [`TruncatedSeries::add`], [`sub`](TruncatedSeries::sub),
//!   [`mul`](TruncatedSeries::mul), [`scalar_mul`](TruncatedSeries::scalar_mul)
//! - unit inversion: [`TruncatedSeries::invert_unit`]
//! - q-Pochhammer symbols: [`pochhammer_finite`] for `(a; q^d)_n` and
//!   [`pochhammer_infinite`] for `(a; q^d)_inf`
//! - in-place binomial updates: multiply or divide by `1 + c*q^m` in O(order)
//! - the substitution `q -> e^(-t)`: [`TruncatedSeries::substitute_exp_neg_t`]
//! - [`BivariateSeries`]: an integer coefficient grid for two-variable
//!   generating functions.

use std::fmt;

use num::{One, Signed, Zero};

use crate::error::Error;
use crate::{Int, Rat};

/// Tag of the formal variable a series lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variable {
    /// The q-series variable.
    Q,
    /// The variable of expansions at `q = e^(-t)`.
    T,
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variable::Q => write!(f, "q"),
            Variable::T => write!(f, "t"),
        }
    }
}

/// A formal power series with exact rational coefficients, truncated at an
/// explicit order.
///
/// Invariant: `coeffs.len() == order + 1`, so the coefficient of every
/// exponent `0..=order` is stored (and exact).
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    variable: Variable,
    coeffs: Vec<Rat>,
}

impl TruncatedSeries {
    /// The zero series of the given order.
    pub fn zero(variable: Variable, order: usize) -> Self {
        TruncatedSeries {
            variable,
            coeffs: vec![Rat::zero(); order + 1],
        }
    }

    /// The constant series 1.
    pub fn one(variable: Variable, order: usize) -> Self {
        let mut s = Self::zero(variable, order);
        s.coeffs[0] = Rat::one();
        s
    }

    /// The monomial `coeff * var^exponent`; exponents beyond the order
    /// truncate to the zero series.
    pub fn monomial(variable: Variable, coeff: Rat, exponent: usize, order: usize) -> Self {
        let mut s = Self::zero(variable, order);
        if exponent <= order {
            s.coeffs[exponent] = coeff;
        }
        s
    }

    /// Series with the given integer coefficients (order = `coeffs.len()-1`).
    pub fn from_i64_coeffs(variable: Variable, coeffs: &[i64]) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least a constant term");
        TruncatedSeries {
            variable,
            coeffs: coeffs
                .iter()
                .map(|&c| Rat::from_integer(Int::from(c)))
                .collect(),
        }
    }

    /// Build from owned rational coefficients.
    pub fn from_coeffs(variable: Variable, coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least a constant term");
        TruncatedSeries { variable, coeffs }
    }

    pub fn variable(&self) -> Variable {
        self.variable
    }

    /// Truncation order: coefficients of exponents `0..=order()` are exact.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `var^exponent`. Panics if `exponent > order`.
    pub fn coeff(&self, exponent: usize) -> &Rat {
        &self.coeffs[exponent]
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// All coefficients as exact integers; `Internal` error if any
    /// coefficient has a nontrivial denominator.
    pub fn integer_coeffs(&self) -> Result<Vec<Int>, Error> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if c.is_integer() {
                    Ok(c.numer().clone())
                } else {
                    Err(Error::Internal(format!(
                        "coefficient of {}^{} is not an integer: {}",
                        self.variable, i, c
                    )))
                }
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Exponent of the first nonzero coefficient, if any.
    pub fn min_exponent(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn nonzero_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Copy truncated to `min(self.order(), order)`.
    pub fn truncated(&self, order: usize) -> Self {
        let order = order.min(self.order());
        TruncatedSeries {
            variable: self.variable,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Multiply by `var^shift`. The result has order `order() + shift`,
    /// which is still exact: low coefficients of the product depend only
    /// on stored coefficients.
    pub fn shift_up(&self, shift: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + shift];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i + shift] = c.clone();
        }
        TruncatedSeries {
            variable: self.variable,
            coeffs,
        }
    }

    fn check_variable(&self, other: &Self) -> Result<(), Error> {
        if self.variable == other.variable {
            Ok(())
        } else {
            Err(Error::VariableMismatch(self.variable, other.variable))
        }
    }

    /// Coefficientwise sum; order is the minimum of the operand orders.
    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.check_variable(other)?;
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] + &other.coeffs[i])
            .collect();
        Ok(TruncatedSeries {
            variable: self.variable,
            coeffs,
        })
    }

    /// Coefficientwise difference; order is the minimum of the orders.
    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.check_variable(other)?;
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|i| &self.coeffs[i] - &other.coeffs[i])
            .collect();
        Ok(TruncatedSeries {
            variable: self.variable,
            coeffs,
        })
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            variable: self.variable,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scalar_mul(&self, scale: &Rat) -> Self {
        TruncatedSeries {
            variable: self.variable,
            coeffs: self.coeffs.iter().map(|c| c * scale).collect(),
        }
    }

    /// Cauchy product truncated at the minimum of the operand orders.
    ///
    /// The sparser operand drives the outer loop, so multiplying by a
    /// polynomial with few terms costs O(terms * order).
    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        self.check_variable(other)?;
        let order = self.order().min(other.order());
        let (outer, inner) = if self.nonzero_count() <= other.nonzero_count() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = vec![Rat::zero(); order + 1];
        for (e, c) in outer.coeffs.iter().enumerate().take(order + 1) {
            if c.is_zero() {
                continue;
            }
            for (j, b) in inner.coeffs.iter().enumerate().take(order - e + 1) {
                if !b.is_zero() {
                    coeffs[e + j] += c * b;
                }
            }
        }
        Ok(TruncatedSeries {
            variable: self.variable,
            coeffs,
        })
    }

    /// Multiplicative inverse of a series with nonzero constant term,
    /// exact up to the same order.
    pub fn invert_unit(&self) -> Result<Self, Error> {
        if self.coeffs[0].is_zero() {
            return Err(Error::SingularSeries);
        }
        let order = self.order();
        let lead_inv = self.coeffs[0].recip();
        // Nonzero tail coefficients only: for sparse series (for example
        // (q;q)_inf, whose support is pentagonal) the recurrence is
        // O(order * support) instead of O(order^2).
        let tail: Vec<(usize, &Rat)> = (1..=order)
            .filter(|&k| !self.coeffs[k].is_zero())
            .map(|k| (k, &self.coeffs[k]))
            .collect();
        let mut out = vec![Rat::zero(); order + 1];
        out[0] = lead_inv.clone();
        for m in 1..=order {
            let mut acc = Rat::zero();
            for &(k, a_k) in &tail {
                if k > m {
                    break;
                }
                acc += a_k * &out[m - k];
            }
            if !acc.is_zero() {
                out[m] = -(acc * &lead_inv);
            }
        }
        Ok(TruncatedSeries {
            variable: self.variable,
            coeffs: out,
        })
    }

    /// In-place multiplication by the binomial `1 + c*var^m` (m >= 1).
    /// A no-op when `m` exceeds the order.
    pub fn mul_binomial_assign(&mut self, c: &Rat, m: usize) {
        assert!(m >= 1, "binomial exponent must be positive");
        let order = self.order();
        if m > order || c.is_zero() {
            return;
        }
        for i in (m..=order).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            if lo[i - m].is_zero() {
                continue;
            }
            let delta = &lo[i - m] * c;
            hi[0] += delta;
        }
    }

    /// In-place division by the binomial `1 + c*var^m` (m >= 1).
    /// A no-op when `m` exceeds the order.
    pub fn div_binomial_assign(&mut self, c: &Rat, m: usize) {
        assert!(m >= 1, "binomial exponent must be positive");
        let order = self.order();
        if m > order || c.is_zero() {
            return;
        }
        for i in m..=order {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            if lo[i - m].is_zero() {
                continue;
            }
            let delta = &lo[i - m] * c;
            hi[0] -= delta;
        }
    }

    /// In-place `self += scale * var^shift * other`.
    ///
    /// `other` must be exact at least to `self.order() - shift`, which all
    /// internal callers guarantee by constructing addends at full order.
    pub(crate) fn add_scaled_shifted(&mut self, other: &Self, shift: usize, scale: &Rat) {
        debug_assert_eq!(self.variable, other.variable);
        let order = self.order();
        if shift > order || scale.is_zero() {
            return;
        }
        debug_assert!(other.order() >= order - shift);
        for e in 0..=(order - shift) {
            let c = &other.coeffs[e];
            if c.is_zero() {
                continue;
            }
            if scale.is_one() {
                let delta = c.clone();
                self.coeffs[e + shift] += delta;
            } else {
                self.coeffs[e + shift] += c * scale;
            }
        }
    }

    /// Exponent of the first coefficient where the two series differ
    /// (compared up to the common order); `None` when they agree.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let order = self.order().min(other.order());
        (0..=order).find(|&i| self.coeffs[i] != other.coeffs[i])
    }

    /// Substitute `q = e^(-t)` term by term, treating the stored
    /// coefficients as a complete polynomial in q: the monomial `q^n`
    /// becomes `sum_j (-n)^j t^j / j!`, truncated at `t_order`.
    pub fn substitute_exp_neg_t(&self, t_order: usize) -> Result<TruncatedSeries, Error> {
        if self.variable != Variable::Q {
            return Err(Error::VariableMismatch(self.variable, Variable::Q));
        }
        let mut out = vec![Rat::zero(); t_order + 1];
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // term_j = c * (-n)^j / j!
            let mut term = c.clone();
            let neg_n = Rat::from_integer(-Int::from(n));
            for (j, slot) in out.iter_mut().enumerate() {
                *slot += &term;
                term = term * &neg_n / Rat::from_integer(Int::from(j as u64 + 1));
            }
        }
        Ok(TruncatedSeries {
            variable: Variable::T,
            coeffs: out,
        })
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut printed = 0;
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if printed == 12 {
                write!(f, " + ...")?;
                break;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if e == 0 {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "{}^{}", self.variable, e)?;
            } else {
                write!(f, "{}*{}^{}", mag, self.variable, e)?;
            }
            printed += 1;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O({}^{})", self.variable, self.order() + 1)
    }
}

/// Finite q-Pochhammer symbol `(a; q^step)_count`, the product
/// `prod_{k=0}^{count-1} (1 - a*q^(k*step))`, truncated at `order`.
///
/// The result order is `min(order, a.order())`; `count = 0` gives 1.
pub fn pochhammer_finite(
    a: &TruncatedSeries,
    step: usize,
    count: usize,
    order: usize,
) -> Result<TruncatedSeries, Error> {
    assert!(step >= 1, "pochhammer step must be positive");
    let order = order.min(a.order());
    let mut acc = TruncatedSeries::one(a.variable(), order);
    if count == 0 {
        return Ok(acc);
    }
    match monomial_form(a) {
        Some(None) => Ok(acc), // a = 0: every factor is 1
        Some(Some((coeff, exp))) => {
            for k in 0..count {
                let e = exp + k * step;
                if e > order {
                    break; // all later factors are 1 up to this order
                }
                if e == 0 {
                    // constant factor (1 - a)
                    acc = acc.scalar_mul(&(Rat::one() - &coeff));
                    if acc.is_zero() {
                        break;
                    }
                } else {
                    acc.mul_binomial_assign(&-&coeff, e);
                }
            }
            Ok(acc)
        }
        None => {
            // general series argument
            let min_exp = a.min_exponent().unwrap_or(usize::MAX);
            for k in 0..count {
                let shift = k * step;
                if min_exp.saturating_add(shift) > order {
                    break;
                }
                let factor =
                    TruncatedSeries::one(a.variable(), order).sub(&a.shift_up(shift))?;
                acc = acc.mul(&factor)?;
            }
            Ok(acc)
        }
    }
}

/// Infinite q-Pochhammer symbol `(a; q^step)_inf`, truncated at `order`.
///
/// Requires the minimal exponent of `a` to be >= 1 so the product
/// converges q-adically; factors contributing only above the order are
/// skipped.
pub fn pochhammer_infinite(
    a: &TruncatedSeries,
    step: usize,
    order: usize,
) -> Result<TruncatedSeries, Error> {
    assert!(step >= 1, "pochhammer step must be positive");
    let order = order.min(a.order());
    let min_exp = match a.min_exponent() {
        None => return Ok(TruncatedSeries::one(a.variable(), order)), // (0;q)_inf = 1
        Some(0) => return Err(Error::DivergentProduct),
        Some(e) => e,
    };
    let mut acc = TruncatedSeries::one(a.variable(), order);
    match monomial_form(a) {
        Some(Some((coeff, exp))) => {
            let mut e = exp;
            while e <= order {
                acc.mul_binomial_assign(&-&coeff, e);
                e += step;
            }
        }
        _ => {
            let mut shift = 0;
            while min_exp + shift <= order {
                let factor =
                    TruncatedSeries::one(a.variable(), order).sub(&a.shift_up(shift))?;
                acc = acc.mul(&factor)?;
                shift += step;
            }
        }
    }
    Ok(acc)
}

/// `Some(None)` for the zero series, `Some(Some((c, e)))` when `a` is the
/// single monomial `c*q^e`, `None` when `a` has two or more terms.
fn monomial_form(a: &TruncatedSeries) -> Option<Option<(Rat, usize)>> {
    let mut found = None;
    for (e, c) in a.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if found.is_some() {
            return None;
        }
        found = Some((c.clone(), e));
    }
    Some(found)
}

/// Integer coefficient grid `g(k, n)` for a two-variable generating
/// function truncated at z-degree `z_degree` and q-order `q_order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateSeries {
    z_degree: usize,
    q_order: usize,
    grid: Vec<Int>, // row-major by z-degree
}

impl BivariateSeries {
    pub fn zero(z_degree: usize, q_order: usize) -> Self {
        BivariateSeries {
            z_degree,
            q_order,
            grid: vec![Int::zero(); (z_degree + 1) * (q_order + 1)],
        }
    }

    pub fn z_degree(&self) -> usize {
        self.z_degree
    }

    pub fn q_order(&self) -> usize {
        self.q_order
    }

    pub fn get(&self, k: usize, n: usize) -> &Int {
        &self.grid[k * (self.q_order + 1) + n]
    }

    pub fn set(&mut self, k: usize, n: usize, value: Int) {
        self.grid[k * (self.q_order + 1) + n] = value;
    }

    /// The coefficients of `[d/dz]_{z=1}` applied to the series:
    /// for each n, `sum_k k * g(k, n)`.
    pub fn z_derivative_at_one(&self) -> Vec<Int> {
        let mut out = vec![Int::zero(); self.q_order + 1];
        for k in 1..=self.z_degree {
            for (n, slot) in out.iter_mut().enumerate() {
                let g = self.get(k, n);
                if !g.is_zero() {
                    *slot += g * Int::from(k as u64);
                }
            }
        }
        out
    }

    /// First grid entry with `k >= n` that is nonzero, if any. The maex
    /// grid must be strictly lower-triangular in this sense.
    pub fn first_support_violation(&self) -> Option<(usize, usize)> {
        for k in 0..=self.z_degree {
            for n in 0..=self.q_order.min(k) {
                if !self.get(k, n).is_zero() {
                    return Some((k, n));
                }
            }
        }
        None
    }
}
