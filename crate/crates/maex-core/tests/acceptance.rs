//! Acceptance suite: one test per criterion, each printing a PASS line
//! (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Everything except the trend diagnostics of criterion 11 is an exact
//! zero-tolerance comparison of arbitrary-precision values.

use num::{One, ToPrimitive};
use once_cell::sync::Lazy;

use maex_core::asymptotics::{
    deviation_strictly_decreasing, difference_probes, eta_deviation_strictly_decreasing,
    eta_inversion_points, sigma_l_probes,
};
use maex_core::mock_theta::{
    cohen_check, root_of_unity_check, sigma_star_forms, theta_expansion_check,
    three_variable_identity_check, zagier_t_expansion,
};
use maex_core::partitions::{
    sigma_l_minus_maex_series, sigma_l_series, sigma_maex_by_enumeration,
    sigma_maex_series_convolution, sigma_maex_series_double_sum, sigma_maex_series_even_product,
    sigma_maex_series_mock_theta, sigma_mex_check, StatTable,
};
use maex_core::pell::{t_by_pell, TMultiplicative, TQSeries};
use maex_core::{Int, Rat};

/// Exact statistics to n = 2000, computed once and shared by the
/// monotonicity and asymptotics criteria.
static STATS: Lazy<StatTable> =
    Lazy::new(|| StatTable::compute(2000).expect("exact statistics to n = 2000"));

fn pass(number: u32, name: &str) {
    println!("acceptance criterion {:>2} ({}): PASS", number, name);
}

#[test]
fn criterion_01_bruteforce_equivalence_to_60() {
    let order = 60;
    let v1 = sigma_maex_series_double_sum(order).unwrap();
    let v2 = sigma_maex_series_even_product(order).unwrap();
    let v3 = sigma_maex_series_mock_theta(order).unwrap();
    let mut t = TMultiplicative::new(24 * order as i64 + 1);
    let formula = sigma_maex_series_convolution(order, |n| t.eval(n)).unwrap();
    for n in 1..=order {
        let oracle = Rat::from_integer(sigma_maex_by_enumeration(n as u32));
        assert_eq!(v1.coeff(n), &oracle, "double sum vs enumeration at n={}", n);
        assert_eq!(v2.coeff(n), &oracle, "even product vs enumeration at n={}", n);
        assert_eq!(v3.coeff(n), &oracle, "mock theta vs enumeration at n={}", n);
        assert_eq!(formula.coeff(n), &oracle, "convolution vs enumeration at n={}", n);
    }
    // spot anchor
    assert_eq!(v1.coeff(5), &Rat::from_integer(Int::from(10)));
    pass(1, "brute-force equivalence to n=60, sigma_maex(5)=10");
}

#[test]
fn criterion_02_four_way_agreement_to_200() {
    let order = 200;
    let v1 = sigma_maex_series_double_sum(order).unwrap();
    let v2 = sigma_maex_series_even_product(order).unwrap();
    let v3 = sigma_maex_series_mock_theta(order).unwrap();
    let mut t = TMultiplicative::new(24 * order as i64 + 1);
    let formula = sigma_maex_series_convolution(order, |n| t.eval(n)).unwrap();
    assert_eq!(v1.first_difference(&v2), None, "double sum vs even product");
    assert_eq!(v2.first_difference(&v3), None, "even product vs mock theta");
    assert_eq!(v3.first_difference(&formula), None, "mock theta vs convolution");
    pass(2, "four-way evaluator agreement to n=200");
}

#[test]
fn criterion_03_sigma_mex_product_to_60() {
    let outcome = sigma_mex_check(60, 60).unwrap();
    assert!(outcome.passed(), "{:?}", outcome.failure);
    pass(3, "sigma_mex equals (-q;q)_inf^2 coefficients to n=60");
}

#[test]
fn criterion_04_cohen_and_difference_gf_to_500() {
    let order = 500;
    let cohen = cohen_check(order);
    assert!(cohen.passed(), "{:?}", cohen.failure);
    let lhs = sigma_l_series(order)
        .unwrap()
        .sub(&sigma_maex_series_even_product(order).unwrap())
        .unwrap();
    let rhs = sigma_l_minus_maex_series(order).unwrap();
    assert_eq!(lhs.first_difference(&rhs), None, "difference generating function");
    pass(4, "Cohen identity and difference generating function to order 500");
}

#[test]
fn criterion_05_three_variable_identity() {
    let outcome = three_variable_identity_check(6, 6, 40).unwrap();
    assert!(outcome.passed(), "{:?}", outcome.failure);
    // x = -1, y = 1 specialization: the two sigma* forms are the two
    // sides scaled by 2
    let forms = sigma_star_forms(200);
    assert_eq!(forms.first_difference(), None, "x=-1, y=1 specialization");
    pass(5, "three-variable identity (6,6,40) and its Cohen specialization");
}

#[test]
fn criterion_06_t_triple_agreement_to_1201() {
    let qseries = TQSeries::new(50).unwrap();
    let budget = qseries.max_abs();
    assert!(budget >= 1201);
    let mut mult = TMultiplicative::new(budget);
    for m in -50i64..=50 {
        let n = 24 * m + 1;
        if n.abs() > 1201 {
            continue;
        }
        let pell = t_by_pell(n, budget).unwrap();
        assert_eq!(pell, mult.eval(n).unwrap(), "pell vs multiplicative at T({})", n);
        assert_eq!(pell, qseries.eval(n).unwrap(), "pell vs q-series at T({})", n);
    }
    // spot anchors
    assert_eq!(t_by_pell(1, budget).unwrap(), 1);
    assert_eq!(t_by_pell(-23, budget).unwrap(), -2);
    pass(6, "T triple agreement on 24Z+1 up to |n|=1201, T(1)=1, T(-23)=-2");
}

#[test]
fn criterion_07_theta_expansion_to_2401() {
    let outcome = theta_expansion_check(2401).unwrap();
    assert!(outcome.passed(), "{:?}", outcome.failure);
    pass(7, "q sigma(q^24) equals the signed lattice sum to exponent 2401");
}

#[test]
fn criterion_08_roots_of_unity_to_20() {
    for n in 1..=20 {
        let outcome = root_of_unity_check(n).unwrap();
        assert!(outcome.passed(), "N = {}: {:?}", n, outcome.failure);
    }
    pass(8, "sigma(zeta) = -sigma*(1/zeta) exactly in Z[x]/Phi_N for N <= 20");
}

#[test]
fn criterion_09_zagier_expansion_coefficients() {
    let expansion = zagier_t_expansion(6).unwrap();
    let expected = [
        Rat::from_integer(Int::from(2)),
        Rat::from_integer(Int::from(2)),
        Rat::from_integer(Int::from(5)),
        Rat::new(Int::from(55), Int::from(3)),
        Rat::new(Int::from(1073), Int::from(12)),
        Rat::new(Int::from(32671), Int::from(60)),
        Rat::new(Int::from(286333), Int::from(72)),
    ];
    for (j, want) in expected.iter().enumerate() {
        assert_eq!(expansion.coeff(j), want, "coefficient of t^{}", j);
    }
    pass(9, "-sigma*(e^-t) expansion: 2, 2, 5, 55/3, 1073/12, 32671/60, 286333/72");
}

#[test]
fn criterion_10_monotonicity_and_expectation() {
    let table = &*STATS;
    let mut prev = Int::from(0);
    for n in 1..=500usize {
        let diff = table.difference(n);
        assert!(diff >= prev, "difference decreases at n = {}", n);
        prev = diff;
    }
    assert_eq!(table.expectation(1), Rat::one());
    assert_eq!(table.expectation(2), Rat::one());
    for n in 3..=2000usize {
        assert!(table.expectation(n) > Rat::one(), "E_{} <= 1", n);
    }
    pass(10, "difference weakly increasing to 500; E_1=E_2=1, E_n>1 to 2000");
}

#[test]
fn criterion_11_asymptotic_trends() {
    let table = &*STATS;
    let probes = [500, 1000, 2000];
    let sigma_l = sigma_l_probes(table, &probes).unwrap();
    assert!(
        deviation_strictly_decreasing(&sigma_l),
        "sigma_L ratios: {:?}",
        sigma_l.iter().map(|p| p.ratio).collect::<Vec<_>>()
    );
    let difference = difference_probes(table, &probes).unwrap();
    assert!(
        deviation_strictly_decreasing(&difference),
        "difference ratios: {:?}",
        difference.iter().map(|p| p.ratio).collect::<Vec<_>>()
    );
    for point in sigma_l.iter().chain(&difference) {
        assert!(point.ratio.is_finite() && point.ratio > 0.0);
        assert!(point.exact.to_f64().is_some());
    }
    let eta = eta_inversion_points(&[0.5, 0.3, 0.2, 0.1, 0.05]).unwrap();
    assert!(
        eta_deviation_strictly_decreasing(&eta),
        "eta ratios: {:?}",
        eta.iter().map(|p| p.ratio).collect::<Vec<_>>()
    );
    pass(11, "asymptotic |ratio-1| strictly improves at n=500,1000,2000 and on the t-grid");
}
