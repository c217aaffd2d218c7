//! Eisenstein series from the q-expansion, and a crude lattice sum.

use num_complex::Complex64;
use rug::ops::Pow;
use rug::{Float, Integer, Rational};

use crate::error::{Error, Result};
use crate::exact::mp::{pi, MpComplex, Precision};

/// `B_0..=B_n` from `sum_{j=0}^{m} binom(m+1, j) B_j = 0`.
pub fn bernoulli_numbers(n: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
    b.push(Rational::from(1));
    for m in 1..=n {
        let mut binom = Integer::from(1);
        let mut acc = Rational::new();
        for (j, bj) in b.iter().enumerate() {
            acc += Rational::from(bj * &binom);
            binom *= (m + 1 - j) as u64;
            binom /= (j + 1) as u64;
        }
        b.push(-acc / Integer::from(m + 1));
    }
    b
}

/// `zeta(2k) = (-1)^{k+1} B_{2k} (2 pi)^{2k} / (2 (2k)!)`.
pub fn zeta_even(k: u32, bits: u32) -> Float {
    let b = &bernoulli_numbers(2 * k as usize)[2 * k as usize];
    let fact = Integer::from(Integer::factorial(2 * k));
    let r = Rational::from(b / fact) / 2u32;
    let r = if k.is_multiple_of(2) { -r } else { r };
    let two_pi = Float::with_val(bits, pi(bits) * 2u32);
    Float::with_val(bits, &r) * two_pi.pow(2 * k)
}

fn divisor_power_sum(n: u64, e: u32) -> Integer {
    let mut total = Integer::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            total += Integer::from(d).pow(e);
            let other = n / d;
            if other != d {
                total += Integer::from(other).pow(e);
            }
        }
        d += 1;
    }
    total
}

/// `G_{2k}(tau) = 2 zeta(2k) (1 - (4k / B_{2k}) sum_{n>=1} sigma_{2k-1}(n) q^n)`, `q = e^{2 pi i tau}`.
pub fn eisenstein_q_oracle(tau: &MpComplex, weight: u32, precision: Precision) -> Result<MpComplex> {
    if weight < 4 || weight % 2 == 1 {
        return Err(Error::Domain(format!("weight must be even and at least 4, got {weight}")));
    }
    if tau.im <= 0 {
        return Err(Error::Domain("|q| >= 1: Im(tau) must be positive".into()));
    }
    let k = weight / 2;
    let bits = precision.widened(weight / 4 + 10).bits();
    let two_pi_i_tau = {
        let t = tau.with_prec(bits);
        let two_pi = Float::with_val(bits, pi(bits) * 2u32);
        MpComplex::new(-Float::with_val(bits, &t.im * &two_pi), Float::with_val(bits, &t.re * &two_pi))
    };
    let q = two_pi_i_tau.exp();
    let log_q = Float::with_val(bits, q.abs().ln()).abs().to_f64();
    let eps = Precision::digits(precision.target_digits() + 10).epsilon();
    let n_min = (weight as f64 / log_q).ceil() as u64 + 2;
    let mut sum = MpComplex::zero(bits);
    let mut qn = q.clone();
    let mut n = 1u64;
    loop {
        let sigma = Float::with_val(bits, divisor_power_sum(n, weight - 1));
        let term = qn.scale(&sigma);
        let small = term.abs() <= Float::with_val(bits, &eps * sum.abs());
        sum = &sum + &term;
        if n > n_min && small {
            break;
        }
        n += 1;
        qn = &qn * &q;
    }
    let b = &bernoulli_numbers(weight as usize)[weight as usize];
    let factor = Float::with_val(bits, &(Integer::from(4 * k) / b.clone()));
    let bracket = &MpComplex::from_real(Float::with_val(bits, 1)) - &sum.scale(&factor);
    let two_zeta = Float::with_val(bits, zeta_even(k, bits) * 2u32);
    Ok(bracket.scale(&two_zeta).with_prec(precision.bits()))
}

/// Truncated lattice sum `sum_{|p|,|q| <= radius} (p + q tau)^{-weight}` in
/// double precision. Converges only polynomially; a sanity check, not an oracle.
pub fn eisenstein_lattice_sum(tau: Complex64, weight: i32, radius: i64) -> Complex64 {
    let mut total = Complex64::new(0.0, 0.0);
    for q in -radius..=radius {
        let mut row = Complex64::new(0.0, 0.0);
        for p in -radius..=radius {
            if p == 0 && q == 0 {
                continue;
            }
            let w = Complex64::new(p as f64, 0.0) + tau * q as f64;
            row += w.powi(-weight);
        }
        total += row;
    }
    total
}
