//! The coefficients T(n), computed three independent ways.
//!
//! For n = 1 (mod 6), T(n) is the excess of the number of inequivalent
//! solutions of `u^2 - 6v^2 = n` with `u + 3v = ±1 (mod 12)` over those
//! with `u + 3v = ±5 (mod 12)`, where two solutions are equivalent when
//! they differ by a sign and a power of the fundamental unit `5 + 2*sqrt(6)`
//! (norm 1). The three evaluators:
//!
//! - [`enumerate_classes`] / [`t_by_pell`]: direct orbit enumeration —
//!   scan a fundamental window of v, reduce each solution to the canonical
//!   minimum of |u| on its orbit, deduplicate, and classify residues.
//! - [`TMultiplicative`]: the prime-power table
//!   `T(n) = T(p1^e1)...T(pr^er)` over the signed factorization in which
//!   every factor is either a prime = 1 (mod 6) or the negative of a prime
//!   = 5 (mod 6); for p = 1 (mod 24) the sign of T(p) = ±2 is resolved by
//!   a single orbit enumeration and cached.
//! - [`TQSeries`]: coefficient extraction from `q sigma(q^24)` (n > 0) and
//!   `q^{-1} sigma*(q^24)` (n < 0), which pins T on 24Z + 1.
//!
//! `S*(n) = T(1 - 24n)/2` is always an integer; [`s_star`] asserts it.

use std::collections::{BTreeSet, HashMap};

use num::integer::Roots;
use num::ToPrimitive;

use crate::error::Error;
use crate::mock_theta;
use crate::series::TruncatedSeries;

/// Default cap on |n| for direct Pell searches: covers T(1 - 24k) for
/// every k up to a series order of 200.
pub const DEFAULT_PELL_BUDGET: i64 = 4801;

/// The Kronecker symbol (12/a): +1 for a = ±1 (mod 12), -1 for
/// a = ±5 (mod 12), 0 when gcd(a, 12) > 1.
pub fn kronecker12(a: u64) -> i64 {
    match a % 12 {
        1 | 11 => 1,
        5 | 7 => -1,
        _ => 0,
    }
}

/// Which residue family `u + 3v` falls in modulo 12.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResidueClass {
    /// `u + 3v = ±1 (mod 12)`: counts positively toward T(n).
    PlusMinusOne,
    /// `u + 3v = ±5 (mod 12)`: counts negatively.
    PlusMinusFive,
    /// Any other residue: does not contribute.
    Neither,
}

/// One solution of `u^2 - 6v^2 = n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PellSolution {
    pub u: i64,
    pub v: i64,
}

impl PellSolution {
    /// The represented value `u^2 - 6v^2`.
    pub fn norm(&self) -> i64 {
        self.u * self.u - 6 * self.v * self.v
    }

    /// Multiplication by the fundamental unit `5 + 2*sqrt(6)`.
    pub fn unit_forward(&self) -> PellSolution {
        PellSolution {
            u: 5 * self.u + 12 * self.v,
            v: 2 * self.u + 5 * self.v,
        }
    }

    /// Multiplication by the inverse unit `5 - 2*sqrt(6)`.
    pub fn unit_backward(&self) -> PellSolution {
        PellSolution {
            u: 5 * self.u - 12 * self.v,
            v: 5 * self.v - 2 * self.u,
        }
    }

    pub fn negated(&self) -> PellSolution {
        PellSolution {
            u: -self.u,
            v: -self.v,
        }
    }

    /// Residue family of `u + 3v` modulo 12.
    pub fn residue_class(&self) -> ResidueClass {
        match (self.u + 3 * self.v).rem_euclid(12) {
            1 | 11 => ResidueClass::PlusMinusOne,
            5 | 7 => ResidueClass::PlusMinusFive,
            _ => ResidueClass::Neither,
        }
    }

    /// Canonical representative of the orbit
    /// `{±self * (5 + 2 sqrt 6)^k}`: |u| is strictly unimodal along the
    /// orbit and ties are impossible for n = 1 (mod 6), so greedy descent
    /// reaches the unique minimum; the sign is fixed by u > 0.
    fn reduce(mut self) -> PellSolution {
        loop {
            let forward = self.unit_forward();
            if forward.u.abs() < self.u.abs() {
                self = forward;
                continue;
            }
            let backward = self.unit_backward();
            if backward.u.abs() < self.u.abs() {
                self = backward;
                continue;
            }
            break;
        }
        if self.u < 0 {
            self = self.negated();
        }
        self
    }
}

/// The inequivalent solution classes of `u^2 - 6v^2 = n` with their
/// residue counts.
#[derive(Clone, Debug)]
pub struct PellClassSet {
    pub n: i64,
    /// One canonical representative per orbit, sorted.
    pub representatives: Vec<PellSolution>,
    /// Classes with `u + 3v = ±1 (mod 12)`.
    pub plus_count: usize,
    /// Classes with `u + 3v = ±5 (mod 12)`.
    pub minus_count: usize,
}

impl PellClassSet {
    /// T(n) = plus_count - minus_count.
    pub fn excess(&self) -> i64 {
        self.plus_count as i64 - self.minus_count as i64
    }
}

fn check_admissible(n: i64) -> Result<(), Error> {
    if n == 0 || n.rem_euclid(6) != 1 {
        return Err(Error::BadResidue {
            n,
            residue: 1,
            modulus: 6,
        });
    }
    Ok(())
}

/// Enumerates the solution classes of `u^2 - 6v^2 = n` for n = 1 (mod 6).
///
/// Every orbit has a member with `|v| <= ceil(sqrt(|n| * rho / 6))` where
/// `rho = 5 + 2*sqrt(6)`; the scan window adds a safety margin, and
/// correctness rests on reduce-and-deduplicate, not on the bound being
/// tight. The residue family is checked to be constant on each orbit; a
/// violation would invalidate the definition of T and raises a hard error.
pub fn enumerate_classes(n: i64, max_abs: i64) -> Result<PellClassSet, Error> {
    check_admissible(n)?;
    if n.abs() > max_abs {
        return Err(Error::BudgetExceeded {
            what: "pell search",
            requested: n.abs(),
            limit: max_abs,
        });
    }
    let rho = 5.0 + 2.0 * 6.0_f64.sqrt();
    let v_bound = ((n.abs() as f64) * rho / 6.0).sqrt().ceil() as i64 + 2;
    let mut classes: BTreeSet<PellSolution> = BTreeSet::new();
    for v in -v_bound..=v_bound {
        let u_squared = n + 6 * v * v;
        if u_squared <= 0 {
            continue;
        }
        let u = u_squared.sqrt();
        if u * u != u_squared {
            continue;
        }
        classes.insert(PellSolution { u, v }.reduce());
        classes.insert(PellSolution { u: -u, v }.reduce());
    }
    let mut plus_count = 0usize;
    let mut minus_count = 0usize;
    for rep in &classes {
        debug_assert_eq!(rep.norm(), n);
        let class = rep.residue_class();
        // the residue family must be invariant under the unit action and
        // negation, otherwise T(n) would be ill-defined
        for neighbor in [rep.unit_forward(), rep.unit_backward(), rep.negated()] {
            if neighbor.residue_class() != class {
                return Err(Error::Internal(format!(
                    "residue class not orbit-invariant at n={}: ({},{}) vs ({},{})",
                    n, rep.u, rep.v, neighbor.u, neighbor.v
                )));
            }
        }
        match class {
            ResidueClass::PlusMinusOne => plus_count += 1,
            ResidueClass::PlusMinusFive => minus_count += 1,
            ResidueClass::Neither => {}
        }
    }
    Ok(PellClassSet {
        n,
        representatives: classes.into_iter().collect(),
        plus_count,
        minus_count,
    })
}

/// T(n) by direct orbit enumeration.
pub fn t_by_pell(n: i64, max_abs: i64) -> Result<i64, Error> {
    Ok(enumerate_classes(n, max_abs)?.excess())
}

/// A factorization of n = 1 (mod 6) into signed prime powers: each base
/// is a prime = 1 (mod 6) or the negative of a prime = 5 (mod 6).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedFactorization {
    pub n: i64,
    /// (signed prime, exponent) pairs, by ascending |prime|.
    pub factors: Vec<(i64, u32)>,
}

/// Factors n = 1 (mod 6) into signed prime powers. The parity of negated
/// factors always reproduces the sign of n; this is asserted.
pub fn signed_factorization(n: i64) -> Result<SignedFactorization, Error> {
    check_admissible(n)?;
    let mut remaining = n.unsigned_abs();
    let mut factors: Vec<(i64, u32)> = Vec::new();
    let mut p = 2u64;
    while p * p <= remaining {
        if remaining.is_multiple_of(p) {
            let mut e = 0u32;
            while remaining.is_multiple_of(p) {
                remaining /= p;
                e += 1;
            }
            factors.push((signed_prime(p)?, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if remaining > 1 {
        factors.push((signed_prime(remaining)?, 1));
    }
    let product: i64 = factors
        .iter()
        .map(|&(p, e)| p.pow(e))
        .product();
    if product != n {
        return Err(Error::Internal(format!(
            "signed factorization of {} multiplied back to {}",
            n, product
        )));
    }
    Ok(SignedFactorization {
        n,
        factors,
    })
}

fn signed_prime(p: u64) -> Result<i64, Error> {
    match p % 6 {
        1 => Ok(p as i64),
        5 => Ok(-(p as i64)),
        _ => Err(Error::Internal(format!(
            "prime {} divides an argument coprime to 6",
            p
        ))),
    }
}

/// The multiplicative evaluator for T(n), with the case table
///
/// ```text
/// T(p^e) = 0            p != 1 (mod 24), e odd
///        = 1            p = 13 or 19 (mod 24), e even
///        = (-1)^(e/2)   p = 7 (mod 24), e even
///        = e + 1        p = 1 (mod 24), T(p) = 2
///        = (-1)^e (e+1) p = 1 (mod 24), T(p) = -2
/// ```
///
/// applied over the signed factorization; residues are those of the
/// *signed* primes. The sign of T(p) for p = 1 (mod 24) comes from one
/// orbit enumeration per prime, cached across calls. The cache is an
/// optimization only (same inputs always produce the same outputs) and is
/// confined to one owner through `&mut self`.
pub struct TMultiplicative {
    max_abs: i64,
    sign_cache: HashMap<i64, i64>,
}

impl TMultiplicative {
    pub fn new(max_abs: i64) -> Self {
        TMultiplicative {
            max_abs,
            sign_cache: HashMap::new(),
        }
    }

    /// T of a signed prime p = 1 (mod 24); always ±2.
    fn t_of_unit_residue_prime(&mut self, p: i64) -> Result<i64, Error> {
        if let Some(&t) = self.sign_cache.get(&p) {
            return Ok(t);
        }
        let t = t_by_pell(p, self.max_abs)?;
        if t != 2 && t != -2 {
            return Err(Error::Internal(format!(
                "T({}) = {} for a prime = 1 (mod 24); expected ±2",
                p, t
            )));
        }
        self.sign_cache.insert(p, t);
        Ok(t)
    }

    pub fn eval(&mut self, n: i64) -> Result<i64, Error> {
        if n.abs() > self.max_abs {
            return Err(Error::BudgetExceeded {
                what: "factorization",
                requested: n.abs(),
                limit: self.max_abs,
            });
        }
        let factorization = signed_factorization(n)?;
        let mut t = 1i64;
        for (p, e) in factorization.factors {
            let p24 = p.rem_euclid(24);
            let factor = match p24 {
                1 => {
                    // T(p^e) = e+1 when T(p) = 2, (-1)^e (e+1) when T(p) = -2
                    let sign = self.t_of_unit_residue_prime(p)?;
                    let magnitude = (e + 1) as i64;
                    if sign == -2 && !e.is_multiple_of(2) {
                        -magnitude
                    } else {
                        magnitude
                    }
                }
                _ if !e.is_multiple_of(2) => 0,
                13 | 19 => 1,
                7 => {
                    if (e / 2).is_multiple_of(2) {
                        1
                    } else {
                        -1
                    }
                }
                other => {
                    return Err(Error::Internal(format!(
                        "signed prime {} has residue {} mod 24, outside {{1,7,13,19}}",
                        p, other
                    )))
                }
            };
            if factor == 0 {
                return Ok(0);
            }
            t *= factor;
        }
        Ok(t)
    }
}

/// The q-series evaluator: T(24m+1) is the m-th coefficient of sigma(q)
/// and T(1-24m) the m-th coefficient of sigma*(q), via
/// `q sigma(q^24) = sum_{n>=0} T(n) q^n` and
/// `q^{-1} sigma*(q^24) = sum_{n<0} T(n) q^{-n}`.
pub struct TQSeries {
    sigma: TruncatedSeries,
    sigma_star: TruncatedSeries,
}

impl TQSeries {
    /// Expands both series to the given order, covering |n| <= 24*order+1.
    pub fn new(order: usize) -> Result<Self, Error> {
        Ok(TQSeries {
            sigma: mock_theta::sigma_series(order)?,
            sigma_star: mock_theta::sigma_star_series(order)?,
        })
    }

    /// Largest |n| this instance can serve.
    pub fn max_abs(&self) -> i64 {
        24 * self.sigma.order().min(self.sigma_star.order()) as i64 + 1
    }

    pub fn eval(&self, n: i64) -> Result<i64, Error> {
        if n.rem_euclid(24) != 1 {
            return Err(Error::BadResidue {
                n,
                residue: 1,
                modulus: 24,
            });
        }
        let (series, m) = if n >= 0 {
            (&self.sigma, (n - 1) / 24)
        } else {
            (&self.sigma_star, (1 - n) / 24)
        };
        if m as usize > series.order() {
            return Err(Error::BudgetExceeded {
                what: "q-series order",
                requested: n.abs(),
                limit: self.max_abs(),
            });
        }
        let coeff = series.coeff(m as usize);
        if !coeff.is_integer() {
            return Err(Error::Internal(format!(
                "series coefficient at {} is not an integer",
                m
            )));
        }
        coeff.numer().to_i64().ok_or_else(|| {
            Error::Internal(format!("T({}) does not fit in 64 bits", n))
        })
    }
}

/// `S*(n) = T(1 - 24n)/2`, using the supplied multiplicative evaluator.
/// T(1 - 24n) is always even; an odd value is an engine bug.
pub fn s_star(n: u32, t: &mut TMultiplicative) -> Result<i64, Error> {
    assert!(n >= 1, "S* is defined for n >= 1");
    let value = t.eval(1 - 24 * i64::from(n))?;
    if value % 2 != 0 {
        return Err(Error::Internal(format!(
            "T(1-24*{}) = {} is odd",
            n, value
        )));
    }
    Ok(value / 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kronecker_values() {
        assert_eq!(kronecker12(1), 1);
        assert_eq!(kronecker12(5), -1);
        assert_eq!(kronecker12(6), 0);
        assert_eq!(kronecker12(7), -1);
        assert_eq!(kronecker12(11), 1);
        assert_eq!(kronecker12(13), 1);
    }

    #[test]
    fn unit_action_preserves_norm() {
        let s = PellSolution { u: 5, v: 2 };
        assert_eq!(s.norm(), 1);
        assert_eq!(s.unit_forward().norm(), 1);
        assert_eq!(s.unit_backward(), PellSolution { u: 1, v: 0 });
    }

    #[test]
    fn classes_of_one() {
        let set = enumerate_classes(1, 100).unwrap();
        assert_eq!(set.representatives, vec![PellSolution { u: 1, v: 0 }]);
        assert_eq!(set.excess(), 1);
    }

    #[test]
    fn classes_of_twenty_five() {
        // three classes: (5,0) counts -1, (7,±2) count +1 each
        let set = enumerate_classes(25, 100).unwrap();
        assert_eq!(set.representatives.len(), 3);
        assert_eq!(set.excess(), 1);
    }

    #[test]
    fn t_of_minus_twenty_three() {
        assert_eq!(t_by_pell(-23, 100).unwrap(), -2);
        let mut mult = TMultiplicative::new(100);
        assert_eq!(mult.eval(-23).unwrap(), -2);
        let qs = TQSeries::new(2).unwrap();
        assert_eq!(qs.eval(-23).unwrap(), -2);
    }

    #[test]
    fn multiplicative_table_rows() {
        let mut t = TMultiplicative::new(10_000);
        // p = 7 (mod 24), e = 2: (-1)^{e/2} = -1
        assert_eq!(t.eval(49).unwrap(), -1);
        // p = 13 (mod 24), e odd: 0
        assert_eq!(t.eval(13).unwrap(), 0);
        // p = 19 (mod 24) squared: +1 (n = (-5)^2)
        assert_eq!(t.eval(25).unwrap(), 1);
        // empty factorization
        assert_eq!(t.eval(1).unwrap(), 1);
        // prime = 1 (mod 24): ±2 resolved by the Pell count
        let t73 = t.eval(73).unwrap();
        assert!(t73 == 2 || t73 == -2);
        assert_eq!(t.eval(73 * 73).unwrap(), 3);
    }

    #[test]
    fn multiplicative_matches_pell_on_coprime_products() {
        let mut t = TMultiplicative::new(5000);
        let candidates: Vec<i64> = (2..200)
            .flat_map(|k| [6 * k + 1, -(6 * k - 1)])
            .collect();
        let mut checked = 0;
        'outer: for (i, &a) in candidates.iter().enumerate() {
            for &b in &candidates[i + 1..] {
                if (a * b).abs() > 3000 || num::integer::gcd(a.abs(), b.abs()) != 1 {
                    continue;
                }
                let product = t.eval(a * b).unwrap();
                assert_eq!(
                    product,
                    t.eval(a).unwrap() * t.eval(b).unwrap(),
                    "T({} * {})",
                    a,
                    b
                );
                assert_eq!(product, t_by_pell(a * b, 5000).unwrap());
                checked += 1;
                if checked >= 50 {
                    break 'outer;
                }
            }
        }
        assert!(checked >= 50);
    }

    #[test]
    fn budget_errors() {
        assert!(matches!(
            enumerate_classes(24 * 1000 + 1, 100),
            Err(Error::BudgetExceeded { .. })
        ));
        let mut t = TMultiplicative::new(100);
        assert!(matches!(
            t.eval(9999961),
            Err(Error::BudgetExceeded { .. })
        ));
        let qs = TQSeries::new(3).unwrap();
        assert!(matches!(qs.eval(24 * 10 + 1), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn residue_preconditions() {
        assert!(matches!(
            enumerate_classes(2, 100),
            Err(Error::BadResidue { .. })
        ));
        let qs = TQSeries::new(3).unwrap();
        assert!(matches!(qs.eval(5), Err(Error::BadResidue { .. })));
    }

    #[test]
    fn s_star_values() {
        let mut t = TMultiplicative::new(2000);
        assert_eq!(s_star(1, &mut t).unwrap(), -1);
        // S*(n) equals half the coefficient of q^n in sigma*(q)
        let star = mock_theta::sigma_star_series(50).unwrap();
        let mut wide = TMultiplicative::new(24 * 50 + 1);
        for n in 1..=50u32 {
            let coeff = star.coeff(n as usize);
            assert!(coeff.is_integer());
            let expected = coeff.numer().to_i64().unwrap() / 2;
            assert_eq!(s_star(n, &mut wide).unwrap(), expected, "S*({})", n);
        }
    }

    #[test]
    fn triple_agreement_small_window() {
        let qs = TQSeries::new(20).unwrap();
        let mut mult = TMultiplicative::new(qs.max_abs());
        for m in -20i64..=20 {
            let n = 24 * m + 1;
            let by_pell = t_by_pell(n, qs.max_abs()).unwrap();
            assert_eq!(by_pell, mult.eval(n).unwrap(), "T({})", n);
            assert_eq!(by_pell, qs.eval(n).unwrap(), "T({})", n);
        }
    }
}
