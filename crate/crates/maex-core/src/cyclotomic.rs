//! Exact arithmetic in Z[x]/Phi_N, the ring generated by a primitive N-th
//! root of unity.
//!
//! Phi_N is computed by the standard recursive division: start from
//! x^N - 1 and divide out Phi_d for every proper divisor d of N. Elements
//! are integer coefficient vectors of degree < phi(N), reduced after every
//! product, so "equals zero" means the identity holds at every primitive
//! N-th root simultaneously.

use std::fmt;

use num::{One, Signed, Zero};

use crate::Int;

/// All divisors of `n` in ascending order.
fn divisors(n: usize) -> Vec<usize> {
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

/// Coefficients of x^n - 1, ascending.
fn x_n_minus_1(n: usize) -> Vec<Int> {
    let mut coeffs = vec![Int::zero(); n + 1];
    coeffs[0] = -Int::one();
    coeffs[n] = Int::one();
    coeffs
}

/// Exact division of integer polynomials with monic divisor; panics on a
/// nonzero remainder (never happens for cyclotomic factors).
fn exact_div_monic(num: &[Int], den: &[Int]) -> Vec<Int> {
    assert!(den.last().map(|c| c.is_one()).unwrap_or(false));
    let deg_d = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![Int::zero(); rem.len().saturating_sub(deg_d)];
    for i in (deg_d..rem.len()).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let f = std::mem::replace(&mut rem[i], Int::zero());
        for (j, d) in den.iter().enumerate().take(deg_d) {
            if !d.is_zero() {
                let sub = &f * d;
                rem[i - deg_d + j] -= sub;
            }
        }
        quot[i - deg_d] = f;
    }
    assert!(
        rem.iter().take(deg_d).all(|c| c.is_zero()),
        "division left a remainder"
    );
    quot
}

/// Coefficients of the N-th cyclotomic polynomial Phi_N, ascending, monic.
pub fn cyclotomic_polynomial(n: usize) -> Vec<Int> {
    assert!(n > 0, "cyclotomic polynomial needs n >= 1");
    if n == 1 {
        return vec![-Int::one(), Int::one()]; // x - 1
    }
    let mut result = x_n_minus_1(n);
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let phi_d = cyclotomic_polynomial(d);
        result = exact_div_monic(&result, &phi_d);
    }
    result
}

/// The ring Z[x]/Phi_N for a fixed N; hands out and combines
/// [`CyclotomicElement`] values.
#[derive(Clone, Debug)]
pub struct CyclotomicField {
    order: usize,
    modulus: Vec<Int>,
}

impl CyclotomicField {
    pub fn new(order: usize) -> Self {
        CyclotomicField {
            order,
            modulus: cyclotomic_polynomial(order),
        }
    }

    /// Order N of the root of unity.
    pub fn order(&self) -> usize {
        self.order
    }

    /// deg Phi_N = phi(N).
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    fn reduce(&self, mut coeffs: Vec<Int>) -> Vec<Int> {
        let deg = self.degree();
        for i in (deg..coeffs.len()).rev() {
            if coeffs[i].is_zero() {
                continue;
            }
            let f = std::mem::replace(&mut coeffs[i], Int::zero());
            for (j, m) in self.modulus.iter().enumerate().take(deg) {
                if !m.is_zero() {
                    let sub = &f * m;
                    coeffs[i - deg + j] -= sub;
                }
            }
        }
        coeffs.truncate(deg.max(1));
        coeffs.resize(deg.max(1), Int::zero());
        coeffs
    }

    fn element(&self, coeffs: Vec<Int>) -> CyclotomicElement {
        CyclotomicElement {
            order: self.order,
            coeffs: self.reduce(coeffs),
        }
    }

    pub fn zero(&self) -> CyclotomicElement {
        self.element(vec![Int::zero()])
    }

    pub fn one(&self) -> CyclotomicElement {
        self.element(vec![Int::one()])
    }

    pub fn integer(&self, value: i64) -> CyclotomicElement {
        self.element(vec![Int::from(value)])
    }

    /// zeta^k for the primitive root zeta, with k taken mod N (so negative
    /// exponents work without a fraction field).
    pub fn root_power(&self, k: i64) -> CyclotomicElement {
        let e = k.rem_euclid(self.order as i64) as usize;
        let mut coeffs = vec![Int::zero(); e + 1];
        coeffs[e] = Int::one();
        self.element(coeffs)
    }

    fn check(&self, a: &CyclotomicElement) {
        assert_eq!(a.order, self.order, "element from a different field");
    }

    pub fn add(&self, a: &CyclotomicElement, b: &CyclotomicElement) -> CyclotomicElement {
        self.check(a);
        self.check(b);
        let len = a.coeffs.len().max(b.coeffs.len());
        let mut coeffs = vec![Int::zero(); len];
        for (i, c) in a.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in b.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        self.element(coeffs)
    }

    pub fn sub(&self, a: &CyclotomicElement, b: &CyclotomicElement) -> CyclotomicElement {
        self.check(a);
        self.check(b);
        let len = a.coeffs.len().max(b.coeffs.len());
        let mut coeffs = vec![Int::zero(); len];
        for (i, c) in a.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in b.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        self.element(coeffs)
    }

    pub fn mul(&self, a: &CyclotomicElement, b: &CyclotomicElement) -> CyclotomicElement {
        self.check(a);
        self.check(b);
        let mut coeffs = vec![Int::zero(); a.coeffs.len() + b.coeffs.len()];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    coeffs[i + j] += x * y;
                }
            }
        }
        self.element(coeffs)
    }

    pub fn scale(&self, a: &CyclotomicElement, factor: i64) -> CyclotomicElement {
        self.check(a);
        let f = Int::from(factor);
        self.element(a.coeffs.iter().map(|c| c * &f).collect())
    }
}

/// An exact residue modulo Phi_N: integer coefficients of
/// 1, zeta, ..., zeta^(phi(N)-1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicElement {
    order: usize,
    coeffs: Vec<Int>,
}

impl CyclotomicElement {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl fmt::Display for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if e == 0 {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "z^{}", e)?;
            } else {
                write!(f, "{}*z^{}", mag, e)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
