//! Zeros of polynomial truncations of `tau`, which approximate the poles of `u`.
//!
//! When only exponents `z^{kj+1}` occur (one non-zero parameter), the
//! truncation is `z P(w)` with `w = z^k`, and roots are found for `P`.

mod export;
mod roots;

pub use export::{export_pole_map, pole_map_csv, pole_map_svg, PoleMapFormat};
pub use roots::{horner, polynomial_roots};

use std::cmp::Ordering;
use std::time::{Duration, Instant};

use rug::ops::Pow;
use rug::{Float, Integer};

use crate::error::{Error, Result};
use crate::exact::mp::{agreeing_digits, pi, ten_pow, to_float, MpComplex, MpReal, Precision};
use crate::exact::Params;
use crate::laurent::nearest_pole_estimate;
use crate::tau::tau_coeffs_bilinear;

/// Float image of `tau_N(z) = z + sum_{n=2}^{N} C_n z^{n+1}`.
#[derive(Clone, Debug)]
pub struct TruncatedTauPoly {
    params: Params,
    order: usize,
    /// Coefficients of `z^0..=z^{N+1}`.
    coeffs: Vec<MpComplex>,
    stride: u32,
    precision: Precision,
}

/// Working precision for root finding: twice the target plus padding that grows with the degree.
pub fn root_precision(digits: u32, degree: usize) -> Precision {
    Precision::digits(2 * digits + 20 + degree as u32 / 2)
}

pub fn truncated_tau_poly(params: &Params, order: usize, precision: Precision) -> Result<TruncatedTauPoly> {
    if order < 6 {
        return Err(Error::Domain(format!("truncation order must be at least 6, got {order}")));
    }
    let bits = precision.bits();
    let tau = tau_coeffs_bilinear(params, order);
    let mut coeffs = vec![MpComplex::zero(bits)];
    coeffs.extend(tau.coeffs().iter().map(|c| MpComplex::from_real(to_float(c, bits))));
    let stride = params.symmetry_stride().max(1);
    Ok(TruncatedTauPoly { params: params.clone(), order, coeffs, stride, precision })
}

impl TruncatedTauPoly {
    pub fn params(&self) -> &Params {
        &self.params
    }

    /// `N`, the largest `C_n` index used.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.coeffs.iter().rposition(|a| !a.is_zero()).unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[MpComplex] {
        &self.coeffs
    }

    pub fn precision(&self) -> Precision {
        self.precision
    }

    /// `k` such that only exponents `kj + 1` occur.
    pub fn stride(&self) -> u32 {
        self.stride
    }

    /// Exponents with non-zero coefficients.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&e| !self.coeffs[e].is_zero()).collect()
    }

    /// `P` with `tau_N(z) = z P(z^k)`; coefficient `j` is `C_{kj}`.
    pub fn reduced(&self) -> Vec<MpComplex> {
        let k = self.stride as usize;
        (0..).map(|j| k * j + 1).take_while(|&e| e < self.coeffs.len()).map(|e| self.coeffs[e].clone()).collect()
    }

    pub fn eval(&self, z: &MpComplex) -> (MpComplex, MpComplex) {
        horner(&self.coeffs, &z.with_prec(self.precision.bits()))
    }

    /// Non-zero roots of `tau_N`, obtained from the reduced polynomial and its `k` rotations.
    pub fn nonzero_roots(&self) -> Result<Vec<MpComplex>> {
        let reduced = self.reduced();
        let w_roots = polynomial_roots(&reduced)?;
        let bits = self.precision.bits();
        let k = self.stride;
        let rotations: Vec<MpComplex> = (0..k as i64).map(|j| MpComplex::root_of_unity(j, k as u64, bits)).collect();
        let mut out = Vec::with_capacity(w_roots.len() * k as usize);
        for w in w_roots.iter().filter(|w| !w.is_zero()) {
            let base = w.principal_root(k);
            for r in &rotations {
                out.push(&base * r);
            }
        }
        Ok(out)
    }
}

/// A root of `tau_N` that persisted when the order was raised.
#[derive(Clone, Debug)]
pub struct TrustedZero {
    pub value: MpComplex,
    /// Distance to the nearest root of the higher-order truncation.
    pub stability: MpReal,
    /// `|tau_N(value)|`.
    pub residual: MpReal,
    /// `|tau_N'(value)|`.
    pub derivative: MpReal,
}

#[derive(Clone, Debug)]
pub struct PoleSet {
    pub params: Params,
    pub order: usize,
    pub comparison_order: usize,
    pub digits: u32,
    /// Sorted by modulus, then argument in `[0, 2 pi)`.
    pub zeros: Vec<TrustedZero>,
    pub trust_radius: MpReal,
}

impl PoleSet {
    pub fn tolerance(&self) -> Float {
        stability_tolerance(self.digits, self.trust_radius.prec())
    }

    pub fn nearest(&self) -> Option<&TrustedZero> {
        self.zeros.first()
    }

    /// Largest distance from `e^{2 pi i / k} zeta` to the set, over all zeros `zeta`.
    pub fn rotation_defect(&self, k: u64) -> MpReal {
        let bits = self.trust_radius.prec();
        let xi = MpComplex::root_of_unity(1, k, bits);
        let mut worst = Float::new(bits);
        for z in &self.zeros {
            let rotated = &z.value * &xi;
            let d = self.zeros.iter().map(|w| w.value.distance(&rotated)).min_by(cmp_float).unwrap();
            if d > worst {
                worst = d;
            }
        }
        worst
    }
}

fn cmp_float(a: &Float, b: &Float) -> Ordering {
    a.partial_cmp(b).unwrap_or(Ordering::Equal)
}

fn stability_tolerance(digits: u32, bits: u32) -> Float {
    // 10^{-digits/2}
    let half = Float::with_val(bits, digits) / 2u32;
    Float::with_val(bits, 10).pow(-half)
}

/// `N' = N + N/4`, rounded to a multiple of the stride so both truncations
/// end on a non-zero coefficient.
pub fn comparison_order(order: usize, stride: u32) -> usize {
    let k = stride.max(1) as usize;
    let step = ((order / 4) as f64 / k as f64).round().max(1.0) as usize * k;
    order + step
}

/// Roots of the order-`N` truncation that move by less than `10^{-digits/2}`
/// when the order is raised to `N'`.
pub fn trusted_zeros(params: &Params, order: usize, digits: u32) -> Result<PoleSet> {
    let stride = params.symmetry_stride().max(1);
    let higher = comparison_order(order, stride);
    let precision = root_precision(digits, (higher + 1) / stride as usize);
    let bits = precision.bits();
    let low = truncated_tau_poly(params, order, precision)?;
    let high = truncated_tau_poly(params, higher, precision)?;
    let low_roots = low.nonzero_roots()?;
    let high_roots = high.nonzero_roots()?;
    let tol = stability_tolerance(digits, bits);
    let mut zeros = Vec::new();
    for z in low_roots {
        let Some(stability) = high_roots.iter().map(|w| w.distance(&z)).min_by(cmp_float) else { continue };
        if stability >= tol {
            continue;
        }
        let (p, dp) = low.eval(&z);
        zeros.push(TrustedZero { value: z, stability, residual: p.abs(), derivative: dp.abs() });
    }
    if zeros.is_empty() {
        return Err(Error::InsufficientOrder(format!(
            "no root of the order-{order} truncation is stable against order {higher}"
        )));
    }
    sort_zeros(&mut zeros, digits, bits);
    let trust_radius = zeros.iter().map(|z| z.value.abs()).max_by(cmp_float).unwrap();
    Ok(PoleSet { params: params.clone(), order, comparison_order: higher, digits, zeros, trust_radius })
}

/// Orders by modulus then argument, both quantized at the stability
/// tolerance so rotated copies sort deterministically.
fn sort_zeros(zeros: &mut [TrustedZero], digits: u32, bits: u32) {
    let scale = Float::with_val(bits, Integer::from(10).pow(digits / 2));
    let two_pi = Float::with_val(bits, pi(bits) * 2u32);
    let full_turn = Float::with_val(bits, &two_pi * &scale).to_integer().unwrap();
    let key = |z: &MpComplex| {
        let m = Float::with_val(bits, z.abs() * &scale).to_integer().unwrap();
        let mut a = z.arg();
        if a < 0 {
            a += &two_pi;
        }
        let a = Float::with_val(bits, a * &scale).to_integer().unwrap() % &full_turn;
        (m, a)
    };
    zeros.sort_by_cached_key(|z| key(&z.value));
}

/// `gamma` from the strided coefficient ratio and from the smallest positive
/// root of the reduced pentagonal truncation, with timings.
#[derive(Clone, Debug)]
pub struct GammaReport {
    pub value: MpReal,
    pub ratio: MpReal,
    pub ratio_n: usize,
    pub ratio_time: Duration,
    pub root: MpReal,
    pub root_order: usize,
    pub root_time: Duration,
    pub agreeing_digits: u32,
}

pub const GAMMA_ROOT_ORDER: usize = 501;

pub fn gamma_constant(digits: u32) -> Result<GammaReport> {
    gamma_constant_at(digits, GAMMA_ROOT_ORDER)
}

pub fn gamma_constant_at(digits: u32, root_order: usize) -> Result<GammaReport> {
    if digits > 40 {
        return Err(Error::Domain(format!("gamma_constant supports at most 40 digits, got {digits}")));
    }
    let precision = Precision::digits(digits);

    let start = Instant::now();
    let (ratio, ratio_n) = gamma_by_ratio(precision)?;
    let ratio_time = start.elapsed();

    let start = Instant::now();
    let root = gamma_by_root(root_order, digits)?;
    let root_time = start.elapsed();

    let agree = agreeing_digits(&ratio, &root);
    if agree < digits {
        return Err(Error::Inconsistency(format!(
            "ratio and root estimates of gamma agree to {agree} digits, {digits} requested"
        )));
    }
    let value = Float::with_val(precision.bits(), &root);
    Ok(GammaReport { value, ratio, ratio_n, ratio_time, root, root_order, root_time, agreeing_digits: agree })
}

/// Raises `n` until consecutive strided ratios agree well beyond the target.
fn gamma_by_ratio(precision: Precision) -> Result<(MpReal, usize)> {
    let work = precision.widened(5);
    let mut n = 30usize;
    loop {
        let est = nearest_pole_estimate(&Params::pentagonal(), n, Some(5), work)?;
        let d = est.differences.last().unwrap();
        let bound = Float::with_val(work.bits(), &est.value.re * precision.epsilon()) / 100u32;
        if *d < bound {
            return Ok((Float::with_val(precision.bits(), &est.value.re), n));
        }
        if n > 400 {
            return Err(Error::NumericalFailure { reason: "strided ratio did not settle".into(), partial: Vec::new() });
        }
        n += 10;
    }
}

fn gamma_by_root(order: usize, digits: u32) -> Result<MpReal> {
    let precision = root_precision(digits, order / 5);
    let poly = truncated_tau_poly(&Params::pentagonal(), order, precision)?;
    let roots = polynomial_roots(&poly.reduced())?;
    let bits = precision.bits();
    let small = ten_pow(-(digits as i64), bits);
    roots
        .into_iter()
        .filter(|w| w.re > 0 && Float::with_val(bits, w.im.abs_ref()) < Float::with_val(bits, &w.re * &small))
        .map(|w| w.re)
        .min_by(cmp_float)
        .map(|r| Float::with_val(Precision::digits(digits).bits(), r))
        .ok_or_else(|| Error::InsufficientOrder("reduced truncation has no positive real root".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::mp::format_fixed;
    use crate::exact::ratio;
    use rug::Rational;

    #[test]
    fn pentagonal_truncation_support() {
        let p = truncated_tau_poly(&Params::pentagonal(), 25, Precision::digits(30)).unwrap();
        assert_eq!(p.stride(), 5);
        assert!(p.support().iter().all(|e| e % 5 == 1));
        assert_eq!(p.degree(), 26);
        let c = p.coeffs();
        let expect = |e: usize, r: Rational| assert!(c[e].distance(&MpComplex::from_rational(&r, 128)) < 1e-35);
        expect(1, ratio(1, 1));
        expect(6, ratio(-1, 20));
        expect(11, ratio(-7, 26400));
        expect(16, ratio(1, 1232000));
        expect(21, Rational::from((83, 117976320000u64)));
    }

    #[test]
    fn sigma_truncation() {
        let p = truncated_tau_poly(&Params::from_ints(3, 0, 5), 8, Precision::digits(20)).unwrap();
        let c = p.coeffs();
        assert!(c[5].distance(&MpComplex::from_rational(&ratio(-3, 240), 128)) < 1e-25);
        assert!(c[7].distance(&MpComplex::from_rational(&ratio(-5, 840), 128)) < 1e-25);
        assert!(truncated_tau_poly(&Params::pentagonal(), 5, Precision::digits(20)).is_err());
    }

    #[test]
    fn comparison_orders() {
        assert_eq!(comparison_order(501, 5), 626);
        assert_eq!(comparison_order(100, 4), 124);
    }

    #[test]
    fn lemniscatic_zeros_on_lattice() {
        let set = trusted_zeros(&Params::lemniscatic(), 121, 20).unwrap();
        let nearest = set.nearest().unwrap();
        assert_eq!(format_fixed(&nearest.value.abs(), 10), "2.6220575543");
        assert!(Float::with_val(64, set.rotation_defect(4)) < 1e-10);
    }
}
