//! Hurwitz numbers `H_n = (4n)! G_{4n}(i) / (4 omega_1)^{4n}`, with `omega_1`
//! the lemniscatic half-period.

use rug::ops::Pow;
use rug::{Float, Integer, Rational};

use super::{eisenstein_q_oracle, half_period, EllipticCase};
use crate::error::Result;
use crate::exact::mp::{MpReal, Precision};
use crate::exact::{CoefficientTable, Recursion};
use crate::laurent::laurent_coeffs;

/// `H_1`, confirmed numerically by [`hurwitz_bridge`] in the tests.
pub fn hurwitz_h1() -> Rational {
    Rational::from((1, 10))
}

/// `H_1..=H_N` by Hurwitz' recurrence
/// `H_n = 3 / ((2n-3)(16n^2-1)) sum_{k=1}^{n-1} (4k-1)(4n-4k-1) binom(4n, 4k) H_k H_{n-k}`.
pub fn hurwitz_numbers(count: usize) -> CoefficientTable<Rational> {
    let mut h: Vec<Rational> = Vec::with_capacity(count);
    for n in 1..=count {
        if n == 1 {
            h.push(hurwitz_h1());
            continue;
        }
        let n4 = 4 * n as u32;
        let mut acc = Rational::new();
        for k in 1..n {
            let w = Integer::from((4 * k as i64 - 1) * (4 * (n - k) as i64 - 1)) * Integer::from(Integer::binomial_u(n4, 4 * k as u32));
            acc += Rational::from(&h[k - 1] * &h[n - k - 1]) * w;
        }
        let ni = n as i64;
        h.push(acc * Rational::from((3, (2 * ni - 3) * (16 * ni * ni - 1))));
    }
    CoefficientTable::new(Recursion::Hurwitz, 1, h)
}

/// Exact `H_n = (4n)! c_{4n} / ((4n-1) 16^n)` from the Laurent coefficients at `(g2, g3) = (4, 0)`.
pub fn hurwitz_from_laurent(count: usize) -> CoefficientTable<Rational> {
    let e = laurent_coeffs(&EllipticCase::lemniscatic().params(), 4 * count);
    let h = (1..=count)
        .map(|n| {
            let fact = Integer::from(Integer::factorial(4 * n as u32));
            let denom = Integer::from(4 * n - 1) * Integer::from(16).pow(n as u32);
            Rational::from(e.c(4 * n) * fact) / denom
        })
        .collect();
    CoefficientTable::new(Recursion::Hurwitz, 1, h)
}

/// `(4n)! G_{4n}(i) / (4 omega_1)^{4n}` from the q-series and the quadrature half-period.
pub fn hurwitz_bridge(n: u32, precision: Precision) -> Result<MpReal> {
    let work = precision.widened(5);
    let bits = work.bits();
    let case = EllipticCase::lemniscatic();
    let g = eisenstein_q_oracle(&case.tau_modular(bits)?, 4 * n, work)?;
    let omega4 = half_period(&case, work)? * 4u32;
    let fact = Float::with_val(bits, Integer::from(Integer::factorial(4 * n)));
    Ok(Float::with_val(precision.bits(), g.re * fact / omega4.pow(4 * n)))
}
