//! Nearest-pole estimates, normalized power sums and partial-sum evaluation.

use rug::ops::Pow;
use rug::{Float, Rational};

use super::{laurent_coeffs, LaurentExpansion};
use crate::error::{Error, Result};
use crate::exact::mp::{to_float, MpComplex, MpReal, Precision};
use crate::exact::{CoefficientTable, Params, Scalar};

/// Successive estimates of `Omega*^k` from `k`-strided coefficient ratios.
#[derive(Clone, Debug)]
pub struct PoleEstimate {
    pub stride: u32,
    /// `Omega*^stride` (real for rational parameters).
    pub value: MpComplex,
    /// `(n, e_n)` with `e_n = (kn+k-1) c_{kn} / ((kn-1) c_{k(n+1)})`.
    pub estimates: Vec<(usize, MpReal)>,
    /// `|e_{n+1} - e_n|` along `estimates`.
    pub differences: Vec<MpReal>,
}

impl PoleEstimate {
    /// `|Omega*|`, the radius of convergence of the Laurent series.
    pub fn modulus(&self) -> MpReal {
        self.value.abs().root(self.stride.max(1))
    }
}

const CONTRACTION: f64 = 1.05;
const WINDOW: usize = 5;

/// Estimates the pole nearest the origin from coefficient ratios up to
/// `e_{n_max}` (so `c` is needed up to `k (n_max + 1)`).
///
/// `stride = None` picks the symmetry stride of `params` (5 in the
/// pentagonal case, 4 or 6 for the single-parameter elliptic cases).
pub fn nearest_pole_estimate(
    params: &Params,
    n_max: usize,
    stride: Option<u32>,
    precision: Precision,
) -> Result<PoleEstimate> {
    let k = resolve_stride(params, stride)?;
    let expansion = laurent_coeffs(params, k as usize * (n_max + 1));
    estimate_from(&expansion, n_max, k, precision)
}

fn resolve_stride(params: &Params, stride: Option<u32>) -> Result<u32> {
    match stride {
        Some(0) => Err(Error::Domain("stride must be positive".into())),
        Some(k) => Ok(k),
        None => match params.symmetry_stride() {
            0 => Err(Error::Domain("all parameters vanish: u = 1/z^2 has no other poles".into())),
            k => Ok(k),
        },
    }
}

pub(crate) fn estimate_from(
    expansion: &LaurentExpansion,
    n_max: usize,
    k: u32,
    precision: Precision,
) -> Result<PoleEstimate> {
    let ku = k as usize;
    if expansion.order() < ku * (n_max + 1) {
        return Err(Error::TruncationOrder {
            requested: (ku * (n_max + 1)) as i64,
            available: expansion.order() as i64 + 1,
        });
    }
    let bits = precision.bits();
    // c_7 = 0 always; start past it.
    let n_start = 8usize.div_ceil(ku).max(1);
    if n_max < n_start + WINDOW - 1 {
        return Err(Error::InsufficientOrder(format!(
            "need n_max >= {} for stride {k}",
            n_start + WINDOW - 1
        )));
    }
    let mut estimates = Vec::new();
    for n in n_start..=n_max {
        let a = expansion.c(ku * n);
        let b = expansion.c(ku * (n + 1));
        if a.is_zero() || b.is_zero() {
            return Err(Error::NonGeneric(format!(
                "c_{} or c_{} vanishes; the stride {k} does not match the symmetry of the parameters",
                ku * n,
                ku * (n + 1)
            )));
        }
        let kn = (ku * n) as i64;
        let r = Rational::from(a / b) * Rational::from((kn + k as i64 - 1, kn - 1));
        estimates.push((n, to_float(&r, bits)));
    }
    let differences: Vec<MpReal> = estimates
        .windows(2)
        .map(|w| Float::with_val(bits, &w[1].1 - &w[0].1).abs())
        .collect();
    let last = &estimates.last().unwrap().1;
    let floor = Float::with_val(bits, last.abs_ref()) * precision.epsilon() / 1e5;
    let tail = &differences[differences.len() - (WINDOW - 1)..];
    for pair in tail.windows(2) {
        if pair[1] <= floor {
            continue;
        }
        let contraction = Float::with_val(bits, &pair[0] / &pair[1]);
        if contraction < CONTRACTION {
            return Err(Error::NonGeneric(format!(
                "ratio estimates do not contract (factor {:.3} < {CONTRACTION}); several poles may share the minimal modulus",
                contraction.to_f64()
            )));
        }
    }
    Ok(PoleEstimate { stride: k, value: MpComplex::from_real(last.clone()), estimates, differences })
}

/// `F_n = c_n Omega*^n / (n - 1)` for each requested `n`.
pub fn power_sums_f(
    expansion: &LaurentExpansion,
    omega_star: &MpComplex,
    ns: impl IntoIterator<Item = usize>,
    precision: Precision,
) -> Result<Vec<MpComplex>> {
    let bits = precision.bits();
    let omega = omega_star.with_prec(bits);
    if omega.is_zero() {
        return Err(Error::Domain("Omega* must be non-zero".into()));
    }
    let mut out = Vec::new();
    for n in ns {
        if n < 3 {
            return Err(Error::Domain(format!("F_n needs n >= 3, got {n}")));
        }
        if n > expansion.order() {
            return Err(Error::TruncationOrder { requested: n as i64, available: expansion.order() as i64 + 1 });
        }
        let c = to_float(&(expansion.c(n) / Rational::from(n as i64 - 1)), bits);
        out.push(omega.powu(n as u32).scale(&c));
    }
    Ok(out)
}

/// `F~_n = v_n gamma^n / (5n - 1)`, which equals `F_{5n}` with `Omega*^5 = gamma`.
pub fn pentagonal_f_tilde(
    v: &CoefficientTable<Rational>,
    gamma: &MpReal,
    ns: impl IntoIterator<Item = usize>,
    precision: Precision,
) -> Vec<MpReal> {
    let bits = precision.bits();
    let gamma = Float::with_val(bits, gamma);
    ns.into_iter()
        .map(|n| {
            let c = to_float(&(&v[n] / Rational::from(5 * n as i64 - 1)), bits);
            c * gamma.clone().pow(n as u32)
        })
        .collect()
}

/// `|F_{kn} - k|` along a run of values, with the successive ratios.
#[derive(Clone, Debug)]
pub struct DecayReport {
    pub limit: u32,
    pub deviations: Vec<f64>,
    pub ratios: Vec<f64>,
}

impl DecayReport {
    pub fn decreasing(&self) -> bool {
        self.deviations.windows(2).all(|w| w[1] < w[0])
    }

    /// Every ratio is below 1 and the last four agree to within 5%.
    pub fn stable(&self) -> bool {
        if self.ratios.len() < 4 || self.ratios.iter().any(|&r| r >= 1.0) {
            return false;
        }
        let tail = &self.ratios[self.ratios.len() - 4..];
        let hi = tail.iter().cloned().fold(f64::MIN, f64::max);
        let lo = tail.iter().cloned().fold(f64::MAX, f64::min);
        (hi - lo) / hi < 0.05
    }

    /// Mean of the last four ratios.
    pub fn rate(&self) -> f64 {
        let tail = &self.ratios[self.ratios.len().saturating_sub(4)..];
        tail.iter().sum::<f64>() / tail.len() as f64
    }
}

/// Decay of `values[i] = F_{k(i+1)}` towards `limit`.
pub fn decay_report(values: &[MpReal], limit: u32) -> DecayReport {
    let deviations: Vec<f64> = values.iter().map(|f| Float::with_val(f.prec(), f - limit).abs().to_f64()).collect();
    let ratios = deviations.windows(2).map(|w| w[1] / w[0]).collect();
    DecayReport { limit, deviations, ratios }
}

/// Partial sum of the Laurent series at one point.
#[derive(Clone, Debug)]
pub struct UEvaluation {
    pub value: MpComplex,
    /// `|u'' - 6u^2 + 6 lambda z + g2/2|` for the term-wise differentiated partial sums.
    pub residual: MpReal,
    /// Estimated radius of convergence, when one could be obtained.
    pub radius: Option<MpReal>,
    /// False when `|z|` is not known to lie strictly inside the radius.
    pub inside_radius: bool,
}

/// `u(z) ~ sum_{n <= N} c_n z^{n-2}`.
pub fn evaluate_u(params: &Params, z: &MpComplex, order: usize, precision: Precision) -> Result<UEvaluation> {
    if z.is_zero() {
        return Err(Error::Pole);
    }
    let bits = precision.bits();
    let z = z.with_prec(bits);
    let expansion = laurent_coeffs(params, order);
    // Horner for P(z) = sum c_n z^n and P2(z) = sum (n-2)(n-3) c_n z^n.
    let mut p = MpComplex::zero(bits);
    let mut p2 = MpComplex::zero(bits);
    for n in (0..=order).rev() {
        let c = to_float(expansion.c(n), bits);
        let c2 = Float::with_val(bits, &c * ((n as i64 - 2) * (n as i64 - 3)));
        p = &(&p * &z) + &MpComplex::from_real(c);
        p2 = &(&p2 * &z) + &MpComplex::from_real(c2);
    }
    let z2 = &z * &z;
    let u = p.div(&z2);
    let upp = p2.div(&(&z2 * &z2));
    let lambda6 = to_float(&Rational::from(&params.lambda * 6u32), bits);
    let g2half = MpComplex::from_real(to_float(&Rational::from(&params.g2 / 2u32), bits));
    let six_u2 = (&u * &u).scale(&Float::with_val(bits, 6));
    let r = &(&(&upp - &six_u2) + &z.scale(&lambda6)) + &g2half;
    let radius = convergence_radius(&expansion, precision);
    let inside_radius = radius.as_ref().map(|r| z.abs() < *r).unwrap_or(false);
    Ok(UEvaluation { value: u, residual: r.abs(), radius, inside_radius })
}

fn convergence_radius(expansion: &LaurentExpansion, precision: Precision) -> Option<MpReal> {
    let k = expansion.params().symmetry_stride();
    if k == 0 {
        return None;
    }
    let n_max = (expansion.order() / k as usize).checked_sub(1)?;
    if let Ok(est) = estimate_from(expansion, n_max, k, precision) {
        return Some(est.modulus());
    }
    // Root test over the last few non-zero coefficients.
    let bits = precision.bits();
    (0..=expansion.order())
        .rev()
        .filter(|&n| n > 7 && !expansion.c(n).is_zero())
        .take(10)
        .map(|n| {
            let c = Float::with_val(bits, to_float(expansion.c(n), bits).abs());
            (c.ln() / -(n as f64)).exp()
        })
        .min_by(|a, b| a.partial_cmp(b).unwrap())
}
