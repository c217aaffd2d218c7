//! Aberth-Ehrlich simultaneous iteration for all roots of a polynomial.

use rug::Float;

use crate::error::{Error, Result};
use crate::exact::mp::{pi, MpComplex};

const MAX_SWEEPS: usize = 2000;

/// `p(z)` and `p'(z)` by Horner, coefficients in ascending order.
pub fn horner(coeffs: &[MpComplex], z: &MpComplex) -> (MpComplex, MpComplex) {
    let bits = z.prec();
    let mut p = MpComplex::zero(bits);
    let mut dp = MpComplex::zero(bits);
    for a in coeffs.iter().rev() {
        dp = &(&dp * z) + &p;
        p = &(&p * z) + a;
    }
    (p, dp)
}

/// Initial guesses on circles whose radii come from the upper convex hull of
/// `(i, log|a_i|)` (the Newton polygon), so widely spread moduli start near
/// the right scale.
fn initial_guesses(coeffs: &[MpComplex], bits: u32) -> Vec<MpComplex> {
    let logs: Vec<Option<f64>> = coeffs
        .iter()
        .map(|a| if a.is_zero() { None } else { Some(Float::with_val(bits, a.abs().ln()).to_f64()) })
        .collect();
    let mut hull: Vec<usize> = Vec::new();
    for (i, l) in logs.iter().enumerate() {
        let Some(li) = *l else { continue };
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            let (la, lb) = (logs[a].unwrap(), logs[b].unwrap());
            // drop b if it lies on or below the chord from a to i
            if (lb - la) * (i - a) as f64 <= (li - la) * (b - a) as f64 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(i);
    }
    let two_pi = Float::with_val(bits, pi(bits) * 2u32);
    let mut guesses = Vec::with_capacity(coeffs.len() - 1);
    for (segment, w) in hull.windows(2).enumerate() {
        let (i, j) = (w[0], w[1]);
        let count = j - i;
        let log_r = (logs[i].unwrap() - logs[j].unwrap()) / count as f64;
        let r = Float::with_val(bits, log_r).exp();
        for m in 0..count {
            let theta = Float::with_val(bits, &two_pi * m as u32) / count as u32
                + Float::with_val(bits, 0.4 + 0.7 * segment as f64);
            guesses.push(MpComplex::from_polar(&r, &theta));
        }
    }
    guesses
}

/// All roots of `sum a_i z^i`, with multiplicity, to relative accuracy about
/// `2^{-bits}` (computed at the precision of the coefficients).
pub fn polynomial_roots(coeffs: &[MpComplex]) -> Result<Vec<MpComplex>> {
    let degree = coeffs.iter().rposition(|a| !a.is_zero()).unwrap_or(0);
    if degree == 0 {
        return Err(Error::Domain("polynomial of degree 0 has no roots".into()));
    }
    let bits = coeffs[degree].prec();
    let zeros_at_origin = coeffs.iter().position(|a| !a.is_zero()).unwrap();
    let reduced: Vec<MpComplex> = coeffs[zeros_at_origin..=degree].to_vec();
    let mut roots = vec![MpComplex::zero(bits); zeros_at_origin];
    if reduced.len() == 1 {
        return Ok(roots);
    }
    let mut z = initial_guesses(&reduced, bits);
    let n = z.len();
    let tol = Float::with_val(bits, Float::i_exp(1, -(bits as i32) + 16));
    let mut done = vec![false; n];
    for _ in 0..MAX_SWEEPS {
        for i in 0..n {
            if done[i] {
                continue;
            }
            let (p, dp) = horner(&reduced, &z[i]);
            if p.is_zero() {
                done[i] = true;
                continue;
            }
            let ratio = p.div(&dp);
            let mut repulsion = MpComplex::zero(bits);
            for (j, zj) in z.iter().enumerate() {
                if j != i {
                    repulsion = &repulsion + &(&z[i] - zj).recip();
                }
            }
            let one = MpComplex::from_real(Float::with_val(bits, 1));
            let step = ratio.div(&(&one - &(&ratio * &repulsion)));
            z[i] = &z[i] - &step;
            let scale = z[i].abs().max(&Float::with_val(bits, 1));
            if step.abs() <= Float::with_val(bits, &tol * &scale) {
                done[i] = true;
            }
        }
        if done.iter().all(|&d| d) {
            roots.extend(z);
            return Ok(roots);
        }
    }
    roots.extend(z);
    Err(Error::NumericalFailure { reason: format!("Aberth iteration did not converge in {MAX_SWEEPS} sweeps"), partial: roots })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(v: &[f64], bits: u32) -> Vec<MpComplex> {
        v.iter().map(|&x| MpComplex::from_f64(x, 0.0, bits)).collect()
    }

    #[test]
    fn quadratic() {
        let mut r = polynomial_roots(&real(&[2.0, -3.0, 1.0], 200)).unwrap();
        r.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
        assert!(r[0].distance(&MpComplex::from_f64(1.0, 0.0, 200)) < 1e-50);
        assert!(r[1].distance(&MpComplex::from_f64(2.0, 0.0, 200)) < 1e-50);
    }

    #[test]
    fn fifth_roots() {
        let bits = 256;
        let gamma = Float::with_val(bits, 18.5);
        let mut c = real(&[0.0; 6], bits);
        c[0] = MpComplex::from_real(Float::with_val(bits, -&gamma));
        c[5] = MpComplex::from_f64(1.0, 0.0, bits);
        let roots = polynomial_roots(&c).unwrap();
        let base = gamma.root(5);
        for k in 0..5 {
            let expected = MpComplex::root_of_unity(k, 5, bits).scale(&base);
            assert!(roots.iter().any(|r| r.distance(&expected) < 1e-60));
        }
    }

    #[test]
    fn zero_roots_are_split_off() {
        let r = polynomial_roots(&real(&[0.0, 0.0, -1.0, 1.0], 128)).unwrap();
        assert_eq!(r.len(), 3);
        assert_eq!(r.iter().filter(|z| z.is_zero()).count(), 2);
    }
}
