//! The `lambda = 0` reduction: `u` is Weierstrass' `p(z; g2, g3)` and
//! `c_{2n} = (2n - 1) G_{2n}(tau) / (2 omega_1)^{2n}`.
//!
//! Only the two symmetric lattices are treated in closed form: equianharmonic
//! `(g2, g3) = (0, 1)` with `tau = e^{i pi/3}` and lemniscatic `(4, 0)` with `tau = i`.

mod hurwitz;
mod quadrature;
mod qseries;

pub use hurwitz::{hurwitz_bridge, hurwitz_from_laurent, hurwitz_h1, hurwitz_numbers};
pub use quadrature::tanh_sinh;
pub use qseries::{bernoulli_numbers, eisenstein_lattice_sum, eisenstein_q_oracle, zeta_even};

use rug::ops::Pow;
use rug::{Float, Rational};

use crate::error::{Error, Result};
use crate::exact::mp::{pi, to_float, MpComplex, MpReal, Precision};
use crate::exact::Params;
use crate::laurent::laurent_coeffs;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EllipticKind {
    Equianharmonic,
    Lemniscatic,
    Custom,
}

impl EllipticKind {
    pub fn name(&self) -> &'static str {
        match self {
            EllipticKind::Equianharmonic => "equianharmonic",
            EllipticKind::Lemniscatic => "lemniscatic",
            EllipticKind::Custom => "custom",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EllipticCase {
    kind: EllipticKind,
    g2: Rational,
    g3: Rational,
}

impl EllipticCase {
    pub fn equianharmonic() -> Self {
        EllipticCase { kind: EllipticKind::Equianharmonic, g2: Rational::new(), g3: Rational::from(1) }
    }

    pub fn lemniscatic() -> Self {
        EllipticCase { kind: EllipticKind::Lemniscatic, g2: Rational::from(4), g3: Rational::new() }
    }

    pub fn custom(g2: Rational, g3: Rational) -> Self {
        EllipticCase { kind: EllipticKind::Custom, g2, g3 }
    }

    pub fn kind(&self) -> EllipticKind {
        self.kind
    }

    pub fn params(&self) -> Params {
        Params::new(self.g2.clone(), Rational::new(), self.g3.clone())
    }

    /// Weights `2n` with `G_{2n} != 0` are multiples of this (6 or 4; 2 otherwise).
    pub fn symmetry_order(&self) -> u32 {
        match self.kind {
            EllipticKind::Equianharmonic => 6,
            EllipticKind::Lemniscatic => 4,
            EllipticKind::Custom => 2,
        }
    }

    /// `tau = omega_2 / omega_1`.
    pub fn tau_modular(&self, bits: u32) -> Result<MpComplex> {
        match self.kind {
            EllipticKind::Equianharmonic => Ok(MpComplex::root_of_unity(1, 6, bits)),
            EllipticKind::Lemniscatic => Ok(MpComplex::from_f64(0.0, 1.0, bits)),
            EllipticKind::Custom => Err(Error::Unsupported("modular parameter of a custom lattice".into())),
        }
    }

    pub fn omega1(&self, precision: Precision) -> Result<MpReal> {
        half_period(self, precision)
    }
}

/// The real half-period `omega_1` by tanh-sinh quadrature of
/// `2 e1 int_0^1 dt / sqrt(1 - t^6)` (equianharmonic, `e1 = 4^{-1/3}`, from
/// `x = e1 / t^2` in `int_{e1}^inf dx / sqrt(4x^3 - 1)`) or
/// `int_0^1 dt / sqrt(1 - t^4)` (lemniscatic).
pub fn half_period(case: &EllipticCase, precision: Precision) -> Result<MpReal> {
    let p = match case.kind {
        EllipticKind::Equianharmonic => 6,
        EllipticKind::Lemniscatic => 4,
        EllipticKind::Custom => return Err(Error::Unsupported("half-periods of a custom lattice".into())),
    };
    let work = precision.widened(5);
    let bits = work.bits();
    let integrand = |t: &Float, u: &Float| {
        // 1 - t^p = (1 - t)(1 + t + ... + t^{p-1})
        let mut geometric = Float::with_val(bits, 1);
        let mut power = Float::with_val(bits, 1);
        for _ in 1..p {
            power *= t;
            geometric += &power;
        }
        Float::with_val(bits, u * &geometric).sqrt().recip()
    };
    let integral = tanh_sinh(integrand, bits, &work.epsilon())?;
    let value = match case.kind {
        EllipticKind::Equianharmonic => {
            let e1 = Float::with_val(bits, 4).cbrt().recip();
            integral * e1 * 2u32
        }
        _ => integral,
    };
    Ok(Float::with_val(precision.bits(), value))
}

/// Closed forms `Gamma(1/3)^3 / (4 pi)` and `pi / (2 AGM(1, sqrt 2))`.
pub fn half_period_reference(case: &EllipticCase, precision: Precision) -> Result<MpReal> {
    let bits = precision.bits();
    match case.kind {
        EllipticKind::Equianharmonic => {
            let g = Float::with_val(bits, Float::with_val(bits, 3).recip().gamma_ref());
            Ok(g.pow(3u32) / (pi(bits) * 4u32))
        }
        EllipticKind::Lemniscatic => {
            let root2 = Float::with_val(bits, 2).sqrt();
            let agm = Float::with_val(bits, Float::with_val(bits, 1).agm_ref(&root2));
            Ok(pi(bits) / (agm * 2u32))
        }
        EllipticKind::Custom => Err(Error::Unsupported("no closed form for a custom lattice".into())),
    }
}

/// `G_{2n}(tau)` recovered from the Laurent coefficient `c_{2n}`.
#[derive(Clone, Debug)]
pub struct EisensteinValue {
    pub weight: u32,
    pub value: MpReal,
    /// The weight is not a multiple of the lattice's symmetry order, so `c_{2n} = 0` exactly.
    pub zero_by_symmetry: bool,
}

/// `G_weight = c_weight (2 omega_1)^weight / (weight - 1)`.
pub fn eisenstein_from_laurent(case: &EllipticCase, weight: u32, precision: Precision) -> Result<EisensteinValue> {
    if weight < 4 || weight % 2 == 1 {
        return Err(Error::Domain(format!("weight must be even and at least 4, got {weight}")));
    }
    let work = precision.widened(3 + (weight as f64).log10().ceil() as u32);
    let bits = work.bits();
    let c = laurent_coeffs(&case.params(), weight as usize).c(weight as usize).clone();
    let zero_by_symmetry = !weight.is_multiple_of(case.symmetry_order());
    if zero_by_symmetry {
        debug_assert!(c == 0);
        return Ok(EisensteinValue { weight, value: Float::new(precision.bits()), zero_by_symmetry });
    }
    let two_omega = half_period(case, work)? * 2u32;
    let r = c / Rational::from(weight - 1);
    let value = to_float(&r, bits) * two_omega.pow(weight);
    Ok(EisensteinValue { weight, value: Float::with_val(precision.bits(), value), zero_by_symmetry })
}

/// `G_{k n}` for the listed `n`, `k` the symmetry order; shares one half-period.
pub fn eisenstein_table(case: &EllipticCase, ns: &[u32], precision: Precision) -> Result<Vec<(u32, MpReal)>> {
    let k = case.symmetry_order();
    let top = ns.iter().max().copied().unwrap_or(0) * k;
    let work = precision.widened(3 + (top.max(1) as f64).log10().ceil() as u32);
    let bits = work.bits();
    let expansion = laurent_coeffs(&case.params(), top as usize);
    let two_omega = half_period(case, work)? * 2u32;
    Ok(ns
        .iter()
        .map(|&n| {
            let w = n * k;
            let r = expansion.c(w as usize) / Rational::from(w - 1);
            let v = to_float(&r, bits) * two_omega.clone().pow(w);
            (n, Float::with_val(precision.bits(), v))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::mp::{agreeing_digits, format_truncated};

    #[test]
    fn half_periods_two_ways() {
        let p = Precision::digits(40);
        for case in [EllipticCase::equianharmonic(), EllipticCase::lemniscatic()] {
            let q = half_period(&case, p).unwrap();
            let r = half_period_reference(&case, p).unwrap();
            assert!(agreeing_digits(&q, &r) >= 40, "{:?}", case.kind());
        }
        let e = half_period(&EllipticCase::equianharmonic(), p).unwrap();
        assert_eq!(format_truncated(&e, 10), "1.5299540370");
        let l = half_period(&EllipticCase::lemniscatic(), p).unwrap();
        assert_eq!(format_truncated(&l, 10), "1.3110287771");
        assert!(matches!(
            half_period(&EllipticCase::custom(Rational::from(1), Rational::from(1)), p),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn first_table_entries() {
        let p = Precision::digits(22);
        let e = eisenstein_from_laurent(&EllipticCase::equianharmonic(), 6, p).unwrap();
        assert_eq!(format_truncated(&e.value, 20), "5.86303169342540159797");
        let l = eisenstein_from_laurent(&EllipticCase::lemniscatic(), 4, p).unwrap();
        assert_eq!(format_truncated(&l.value, 20), "3.15121200215389753821");
        let z = eisenstein_from_laurent(&EllipticCase::lemniscatic(), 6, p).unwrap();
        assert!(z.zero_by_symmetry && z.value.is_zero());
    }

    #[test]
    fn q_series_matches_laurent() {
        let p = Precision::digits(25);
        for case in [EllipticCase::equianharmonic(), EllipticCase::lemniscatic()] {
            let tau = case.tau_modular(p.bits()).unwrap();
            for weight in [12, 24, 36] {
                let a = eisenstein_from_laurent(&case, weight, p).unwrap().value;
                let b = eisenstein_q_oracle(&tau, weight, p).unwrap();
                assert!(agreeing_digits(&a, &b.re) >= 23, "{:?} {weight}", case.kind());
                assert!(Float::with_val(64, b.im.abs_ref()) < 1e-20);
            }
        }
    }

    #[test]
    fn lattice_sum_sanity() {
        let g = eisenstein_lattice_sum(num_complex::Complex64::new(0.0, 1.0), 4, 150);
        assert!((g.re - 3.151212002153897).abs() < 1e-3 && g.im.abs() < 1e-9);
    }
}
