use rug::{Float, Rational};

use painleve::elliptic::{eisenstein_from_laurent, eisenstein_q_oracle, EllipticCase};
use painleve::exact::mp::{agreeing_digits, Precision};
use painleve::exact::{Params, WeightedPolynomial};
use painleve::laurent::{decay_report, laurent_coeffs, modular_polynomials, nearest_pole_estimate};
use painleve::poles::{trusted_zeros, truncated_tau_poly};
use painleve::tau::{euler_homogeneity_violations, tau_polynomials, TauMethod};

#[test]
fn weight_scaling_of_modular_polynomials() {
    let polys = modular_polynomials(60);
    for zeta in [Rational::from(2), Rational::from(3), Rational::from(-1)] {
        for (n, p) in polys.iter() {
            let factor = Rational::from(rug::ops::Pow::pow(&zeta, n as i32));
            let scaled = p.scale_weights(&zeta);
            let want = WeightedPolynomial::from_terms(p.terms().map(|(m, c)| (*m, Rational::from(c * &factor))));
            assert_eq!(scaled, want, "P_{n}, zeta = {zeta}");
        }
    }
}

#[test]
fn symbolic_tau_coefficients_are_homogeneous() {
    for method in [TauMethod::Bilinear, TauMethod::Quartic, TauMethod::TripleSum] {
        let tau = tau_polynomials(40, method);
        assert!(euler_homogeneity_violations(&tau).is_empty(), "{method}");
    }
}

#[test]
fn eisenstein_oracles_agree_at_table_indices() {
    let digits = 30;
    let p = Precision::digits(digits);
    for case in [EllipticCase::equianharmonic(), EllipticCase::lemniscatic()] {
        let k = case.symmetry_order();
        let tau = case.tau_modular(p.bits()).unwrap();
        for n in [1u32, 2, 3, 4, 5, 6, 11, 12, 13, 14] {
            let a = eisenstein_from_laurent(&case, n * k, p).unwrap().value;
            let b = eisenstein_q_oracle(&tau, n * k, p).unwrap();
            assert!(agreeing_digits(&a, &b.re) >= digits - 2, "{:?} weight {}", case.kind(), n * k);
        }
    }
}

#[test]
fn elliptic_coefficients_vanish_off_the_symmetry() {
    let equi = laurent_coeffs(&Params::equianharmonic(), 120);
    let lem = laurent_coeffs(&Params::lemniscatic(), 120);
    for n in 1..=60 {
        assert_eq!(*equi.c(2 * n) == 0, n % 3 != 0, "equianharmonic c_{}", 2 * n);
        assert_eq!(*lem.c(2 * n) == 0, n % 2 != 0, "lemniscatic c_{}", 2 * n);
    }
    let case = EllipticCase::lemniscatic();
    let g6 = eisenstein_from_laurent(&case, 6, Precision::digits(20)).unwrap();
    assert!(g6.zero_by_symmetry && g6.value.is_zero());
}

#[test]
fn eisenstein_values_approach_their_limits() {
    let p = Precision::digits(30);
    for (case, limit) in [(EllipticCase::equianharmonic(), 6), (EllipticCase::lemniscatic(), 4)] {
        let k = case.symmetry_order();
        let values: Vec<Float> = (1..=14).map(|n| eisenstein_from_laurent(&case, n * k, p).unwrap().value).collect();
        let r = decay_report(&values, limit);
        assert!(r.decreasing() && r.stable() && r.rate() < 1.0, "{:?} {:?}", case.kind(), r.ratios);
    }
}

#[test]
fn truncation_is_in_gauge_and_supported_on_the_stride() {
    let p = truncated_tau_poly(&Params::pentagonal(), 101, Precision::digits(30)).unwrap();
    let c = p.coeffs();
    assert!(c[0].is_zero());
    assert_eq!(c[1].re, 1);
    assert!(p.support().iter().all(|e| e % 5 == 1));
    assert_eq!(p.reduced().len(), 21);
}

#[test]
fn pentagonal_pole_set() {
    let digits = 20;
    let set = trusted_zeros(&Params::pentagonal(), 201, digits).unwrap();
    let tol = set.tolerance();
    assert!(set.rotation_defect(5) < tol);
    for z in &set.zeros {
        assert!(z.residual < tol && z.stability < tol);
        assert!(z.derivative > 1e-3, "tau' nearly vanishes at {:?}", z.value.to_f64());
    }
    let conj_defect = set
        .zeros
        .iter()
        .map(|z| set.zeros.iter().map(|w| w.value.distance(&z.value.conj())).fold(f64::MAX, |a, d| a.min(d.to_f64())))
        .fold(0.0, f64::max);
    assert!(conj_defect < 1e-10);

    let ratio = nearest_pole_estimate(&Params::pentagonal(), 40, None, Precision::digits(30)).unwrap();
    let nearest = set.nearest().unwrap().value.abs();
    assert!(agreeing_digits(&ratio.modulus(), &nearest) >= digits / 2);
}

#[test]
fn zeros_settle_as_the_order_grows() {
    let digits = 20;
    let mut displacements = Vec::new();
    for order in [101, 151, 201] {
        let set = trusted_zeros(&Params::pentagonal(), order, digits).unwrap();
        displacements.push(set.nearest().unwrap().stability.to_f64());
    }
    assert!(displacements.windows(2).all(|w| w[1] < w[0]), "{displacements:?}");
}
