//! Cross-module consistency checks beyond the acceptance criteria:
//! wider coefficient windows, the sigma*/difference linkage, and the
//! vanishing of T off 24Z + 1.

use num::{One, ToPrimitive, Zero};

use maex_core::mock_theta::{
    coefficient_outliers, sigma_series, sigma_star_series, zagier_t_expansion_with_terms,
};
use maex_core::partitions::{
    append_one_injection_check, divisor_sum_series, euler_first_sum_check, g_bivariate,
    gap_free_bijection_check, partition_count_series, sigma_l_minus_maex_series,
    sigma_maex_series_convolution, sigma_maex_series_even_product,
};
use maex_core::pell::{t_by_pell, TMultiplicative};
use maex_core::{Int, Rat};

/// The coefficients of sigma and sigma* are exactly the T values on
/// 24Z + 1, matched here against the multiplicative evaluator over a
/// window far wider than the acceptance anchor.
#[test]
fn sigma_coefficients_are_t_values_to_order_500() {
    let order = 500usize;
    let sigma = sigma_series(order).unwrap();
    let star = sigma_star_series(order).unwrap();
    let mut t = TMultiplicative::new(24 * order as i64 + 1);
    for m in 0..=order {
        let expected = Rat::from_integer(Int::from(t.eval(24 * m as i64 + 1).unwrap()));
        assert_eq!(sigma.coeff(m), &expected, "sigma coefficient at {}", m);
    }
    for m in 1..=order {
        let expected = Rat::from_integer(Int::from(t.eval(1 - 24 * m as i64).unwrap()));
        assert_eq!(star.coeff(m), &expected, "sigma* coefficient at {}", m);
    }
}

/// The coefficients of sigma stay in [-2, 2] up to order 500 except on
/// two structural families (arguments n = 24m + 1 in signed primes
/// p = 1 mod 24): squares p^2, where T = 3, and products of two distinct
/// such primes, where T = ±4. The exponent list is frozen from the
/// multiplicative oracle, which the previous test matches coefficientwise.
#[test]
fn sigma_coefficient_outliers_to_order_500() {
    let sigma = sigma_series(500).unwrap();
    let outliers = coefficient_outliers(&sigma, 2);
    let exponents: Vec<usize> = outliers.iter().map(|(e, _)| *e).collect();
    assert_eq!(
        exponents,
        vec![
            22, 45, 68, 92, 139, 160, 183, 210, 222, 229, 252, 295, 298, 327, 344, 367, 374,
            392, 413, 459, 468, 482, 494
        ]
    );
    // prime squares: (p^2 - 1)/24 for p in {-23, -47, -71, 73, 97}
    let squares = [22usize, 92, 210, 222, 392];
    for (e, value) in outliers {
        if squares.contains(&e) {
            assert_eq!(value, Rat::from_integer(Int::from(3)), "q^{}", e);
        } else {
            assert_eq!(
                value.numer().to_i64().unwrap().abs(),
                4,
                "q^{} carries {}",
                e,
                value
            );
        }
    }
}

/// Difference generating function written through sigma*:
/// `sum (sigma_L - sigma_maex)(n) q^n = -sigma*(q) / (2 (q;q)_inf)`.
#[test]
fn difference_series_equals_scaled_sigma_star() {
    let order = 200usize;
    let diff = sigma_l_minus_maex_series(order).unwrap();
    let via_star = sigma_star_series(order)
        .unwrap()
        .neg()
        .scalar_mul(&Rat::new(Int::from(1), Int::from(2)))
        .mul(&partition_count_series(order).unwrap())
        .unwrap();
    assert_eq!(diff.first_difference(&via_star), None);
}

/// T vanishes on arguments = 1 (mod 6) that are not = 1 (mod 24), both by
/// orbit counting and through the prime-power table.
#[test]
fn t_vanishes_off_24z_plus_1() {
    let mut mult = TMultiplicative::new(1000);
    let mut checked = 0;
    for n in -1000i64..=1000 {
        if n == 0 || n.rem_euclid(6) != 1 || n.rem_euclid(24) == 1 {
            continue;
        }
        assert_eq!(t_by_pell(n, 1000).unwrap(), 0, "pell count at T({})", n);
        assert_eq!(mult.eval(n).unwrap(), 0, "table at T({})", n);
        checked += 1;
    }
    assert!(checked > 200);
}

/// The maex-count grid g(k, n) weighted by k reproduces sigma_maex, and
/// its support stays strictly below the diagonal.
#[test]
fn bivariate_grid_derivative_reproduces_sigma_maex() {
    let order = 100usize;
    let grid = g_bivariate(order, order).unwrap();
    assert!(grid.first_support_violation().is_none());
    let weighted = grid.z_derivative_at_one();
    let series = sigma_maex_series_even_product(order).unwrap();
    for (n, column_sum) in weighted.iter().enumerate() {
        assert_eq!(
            &Rat::from_integer(column_sum.clone()),
            series.coeff(n),
            "weighted column sum at n = {}",
            n
        );
    }
}

/// Euler's first sum at the documented bounds.
#[test]
fn euler_first_sum_at_full_bounds() {
    let outcome = euler_first_sum_check(8, 60).unwrap();
    assert!(outcome.passed(), "{:?}", outcome.failure);
}

/// Conjugation bijection and the append-1 injection on enumerable sizes.
#[test]
fn combinatorial_checks_to_twenty() {
    for n in 1..=20 {
        assert!(gap_free_bijection_check(n).unwrap().passed());
    }
    for n in 1..=25 {
        assert!(append_one_injection_check(n).unwrap().passed());
    }
}

/// The n = 1 instance of the convolution formula,
/// `sigma_maex(1) = p(0) (d(1) + T(-23)/2) = 0`, forces T(-23) = -2.
#[test]
fn convolution_at_one_pins_t_minus_23() {
    assert_eq!(divisor_sum_series(1).coeff(1), &Rat::one());
    assert_eq!(t_by_pell(-23, 100).unwrap(), -2);
    let mut t = TMultiplicative::new(100);
    let series = sigma_maex_series_convolution(1, |n| t.eval(n)).unwrap();
    assert!(series.coeff(1).is_zero());
}

/// Extra summands beyond t_order + 1 cannot change the Zagier expansion:
/// term n has t-valuation >= n - 1.
#[test]
fn zagier_expansion_term_count_stability() {
    let narrow = zagier_t_expansion_with_terms(12, 13).unwrap();
    let wide = zagier_t_expansion_with_terms(12, 20).unwrap();
    assert_eq!(narrow, wide);
    // consistency with the root-of-unity endpoint: -sigma*(1) = 2
    assert_eq!(narrow.coeff(0).to_f64().unwrap(), 2.0);
}
