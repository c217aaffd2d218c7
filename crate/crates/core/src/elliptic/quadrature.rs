//! Tanh-sinh quadrature on `[0, 1]` in MPFR arithmetic.

use rug::Float;

use crate::error::{Error, Result};
use crate::exact::mp::pi;

const MAX_LEVEL: u32 = 14;

/// `int_0^1 f(t, 1 - t) dt`. The integrand receives both `t` and `1 - t`,
/// each computed without cancellation, so endpoint singularities like
/// `(1 - t)^{-1/2}` are resolved to full precision.
pub fn tanh_sinh<F>(f: F, bits: u32, eps: &Float) -> Result<Float>
where
    F: Fn(&Float, &Float) -> Float,
{
    let pi = pi(bits);
    let tiny = Float::with_val(bits, eps * 1e-6);
    let mut h = Float::with_val(bits, 1);
    let mut sum = node_sum(&f, &pi, &h, 0, 1, &tiny);
    let mut estimate = Float::with_val(bits, &sum * &h);
    for _ in 1..=MAX_LEVEL {
        h /= 2;
        sum += node_sum(&f, &pi, &h, 1, 2, &tiny);
        let next = Float::with_val(bits, &sum * &h);
        let delta = Float::with_val(bits, &next - &estimate).abs();
        estimate = next;
        if delta <= Float::with_val(bits, estimate.abs_ref()) * eps {
            return Ok(estimate);
        }
    }
    Err(Error::NumericalFailure { reason: "tanh-sinh quadrature did not converge".into(), partial: Vec::new() })
}

/// Sum of `w(x) f` over the nodes `x = j h`, `j = start, start + stride, ...`
/// and their mirror images, until terms drop below `tiny`.
fn node_sum<F>(f: &F, pi: &Float, h: &Float, start: u64, stride: u64, tiny: &Float) -> Float
where
    F: Fn(&Float, &Float) -> Float,
{
    let bits = pi.prec();
    let mut total = Float::new(bits);
    let mut j = start;
    loop {
        let x = Float::with_val(bits, h * j);
        let mut level = Float::new(bits);
        for sign in [1i32, -1] {
            if j == 0 && sign < 0 {
                continue;
            }
            let xs = Float::with_val(bits, &x * sign);
            let (s, c) = xs.sinh_cosh(Float::new(bits));
            // t = 1/(1 + e^{-pi s}), 1 - t = 1/(1 + e^{pi s}), dt/dx = pi c e^{pi s}/(1 + e^{pi s})^2.
            let e = Float::with_val(bits, pi * &s).exp();
            let one_plus = Float::with_val(bits, &e + 1u32);
            let t = Float::with_val(bits, &e / &one_plus);
            let u = Float::with_val(bits, one_plus.recip_ref());
            if t.is_zero() || u.is_zero() {
                continue;
            }
            let w = Float::with_val(bits, pi * &c) * &t * &u;
            level += w * f(&t, &u);
        }
        let small = Float::with_val(bits, level.abs_ref()) < *tiny;
        total += &level;
        if small && j > start + 4 * stride {
            break;
        }
        j += stride;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::mp::{format_fixed, Precision};

    #[test]
    fn arcsine_integral() {
        // int_0^1 dt / sqrt(1 - t^2) = pi/2
        let p = Precision::digits(40);
        let bits = p.bits();
        let v = tanh_sinh(
            |t, u| {
                let one_minus = Float::with_val(bits, u * Float::with_val(bits, t + 1u32));
                one_minus.sqrt().recip()
            },
            bits,
            &p.epsilon(),
        )
        .unwrap();
        let half_pi = pi(bits) / 2u32;
        assert_eq!(format_fixed(&v, 38), format_fixed(&half_pi, 38));
    }
}
