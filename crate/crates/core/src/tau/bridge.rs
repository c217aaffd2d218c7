//! Passing between `tau` and `u`, and residual checks on a tau table.

use rug::Rational;

use super::TauExpansion;
use crate::error::{Error, Result};
use crate::exact::{CoefficientTable, PowerSeries, Recursion, Scalar, WeightedPolynomial};
use crate::laurent::LaurentExpansion;

/// `log(tau / z)` in the normalized gauge, exact below `z^{N+1}`.
fn log_tau_over_z<S: Scalar>(tau: &TauExpansion<S>) -> PowerSeries<S> {
    let unit = PowerSeries::new(0, tau.coeffs().to_vec());
    unit.log_unit(unit.order()).expect("C_0 = 1")
}

/// `c_0..=c_N` of `u = -(log tau)''`: `c_0 = 1` and `c_n = -n(n-1) L_n` with `L = log(tau/z)`.
pub fn u_from_tau<S: Scalar>(tau: &TauExpansion<S>) -> LaurentExpansion<S> {
    let log = log_tau_over_z(tau);
    let c = (0..=tau.order())
        .map(|n| match n {
            0 => S::one(),
            _ => log.coeffs()[n].scale_int(-((n * (n - 1)) as i64)),
        })
        .collect();
    LaurentExpansion::from_table(tau.params().clone(), CoefficientTable::new(Recursion::UFromTau, 0, c))
}

/// `u = -(log tau)''` for a tau series in any gauge with a simple zero at the
/// origin, `tau = A z + ...` with `A != 0`.
pub fn u_from_tau_series(tau: &PowerSeries<Rational>) -> Result<PowerSeries<Rational>> {
    let (e, a) = tau.first_nonzero().ok_or_else(|| Error::Domain("tau vanishes to the known order".into()))?;
    if e != 1 {
        return Err(Error::Domain(format!("tau must have a simple zero at the origin, leading power is z^{e}")));
    }
    let inv = Rational::from(a.recip_ref());
    let unit = tau.shift(-1).scale(&inv);
    let log = unit.log_unit(unit.order())?;
    let order = log.order();
    let mut c = Vec::with_capacity(order.max(0) as usize);
    for n in 0..order {
        c.push(if n == 0 {
            Rational::from(1)
        } else {
            Rational::from(&log.coeffs()[n as usize] * -(n * (n - 1)))
        });
    }
    Ok(PowerSeries::new(-2, c))
}

/// `scale * exp(a z) * tau`, which changes `tau` but not `u`.
pub fn gauge_transform(tau: &TauExpansion, scale: &Rational, a: &Rational) -> PowerSeries<Rational> {
    let t = tau.series();
    let az = PowerSeries::monomial(a.clone(), 1, t.order());
    let e = az.exp().expect("zero constant term");
    e.mul(&t).scale(scale)
}

/// Residuals of the Hamiltonian identities with `h = -6 lambda (log tau)'`:
/// `h' - 6 lambda u` and `h - (v^2/2 - 2u^3 + g2 u/2 + 6 lambda z u + g3/2)`, `v = u'`.
#[derive(Clone, Debug)]
pub struct HamiltonianReport<S> {
    pub hamiltonian: PowerSeries<S>,
    pub derivative_residual: PowerSeries<S>,
    pub identity_residual: PowerSeries<S>,
}

impl<S: Scalar> HamiltonianReport<S> {
    pub fn vanishes(&self) -> bool {
        self.derivative_residual.is_zero() && self.identity_residual.is_zero()
    }
}

pub fn hamiltonian_check<S: Scalar>(tau: &TauExpansion<S>) -> HamiltonianReport<S> {
    let p = tau.params();
    let log = log_tau_over_z(tau);
    let dlog = PowerSeries::monomial(S::one(), -1, log.order()).add(&log.derivative());
    let h = dlog.scale_by(&p.lambda.scale_int(-6));
    let u = u_from_tau(tau).series();
    let derivative_residual = h.derivative().sub(&u.scale_by(&p.lambda.scale_int(6)));
    let v = u.derivative();
    let big = order_cap(&u);
    let mut rhs = v.mul(&v).scale(&Rational::from((1, 2)));
    rhs = rhs.sub(&u.mul(&u).mul(&u).scale(&Rational::from(2)));
    rhs = rhs.add(&u.scale_by(&p.g2.scale(&Rational::from((1, 2)))));
    rhs = rhs.add(&PowerSeries::monomial(p.lambda.scale_int(6), 1, big).mul(&u));
    rhs = rhs.add(&PowerSeries::monomial(p.g3.scale(&Rational::from((1, 2))), 0, big));
    let identity_residual = h.sub(&rhs);
    HamiltonianReport { hamiltonian: h, derivative_residual, identity_residual }
}

/// An order comfortably beyond anything derived from `s`.
fn order_cap<S: Scalar>(s: &PowerSeries<S>) -> i64 {
    s.order() + 16
}

/// `D_z^4 tau.tau - (12 lambda z + g2) tau^2` with
/// `D_z^4 tau.tau = 2 (tau tau'''' - 4 tau' tau''' + 3 tau''^2)`.
pub fn bilinear_residual<S: Scalar>(tau: &TauExpansion<S>) -> PowerSeries<S> {
    let p = tau.params();
    let d = derivatives(&tau.series(), 4);
    let mut hirota = d[0].mul(&d[4]);
    hirota = hirota.sub(&d[1].mul(&d[3]).scale(&Rational::from(4)));
    hirota = hirota.add(&d[2].mul(&d[2]).scale(&Rational::from(3)));
    hirota = hirota.scale(&Rational::from(2));
    let big = order_cap(&d[0]);
    let factor = PowerSeries::monomial(p.lambda.scale_int(12), 1, big).add(&PowerSeries::monomial(p.g2.clone(), 0, big));
    hirota.sub(&factor.mul(&d[0].mul(&d[0])))
}

/// Left side of the degree-four equation evaluated on the tau table.
pub fn quartic_residual<S: Scalar>(tau: &TauExpansion<S>) -> PowerSeries<S> {
    let p = tau.params();
    let d = derivatives(&tau.series(), 3);
    let (t, t1, t2, t3) = (&d[0], &d[1], &d[2], &d[3]);
    let tt = t.mul(t);
    let big = order_cap(t);
    let mut r = tt.mul(&t3.mul(t3));
    r = r.sub(&t.mul(t1).mul(&t2.mul(t3)).scale(&Rational::from(6)));
    r = r.add(&t1.mul(t1).mul(&t1.mul(t3)).scale(&Rational::from(4)));
    r = r.add(&t.mul(t2).mul(&t2.mul(t2)).scale(&Rational::from(4)));
    let t1t2 = t1.mul(t2);
    r = r.sub(&t1t2.mul(&t1t2).scale(&Rational::from(3)));
    let inner = t.mul(t2).sub(&t1.mul(t1));
    r = r.sub(&tt.mul(&inner).scale_by(&p.g2));
    let t3t2 = tt.mul(&t.mul(t2));
    let tt1 = t.mul(t1);
    let z = PowerSeries::monomial(S::one(), 1, big);
    let lam = z.mul(&t3t2.sub(&tt1.mul(&tt1))).sub(&tt.mul(&tt1));
    r = r.sub(&lam.scale_by(&p.lambda.scale_int(12)));
    r.add(&tt.mul(&tt).scale_by(&p.g3))
}

fn derivatives<S: Scalar>(s: &PowerSeries<S>, k: usize) -> Vec<PowerSeries<S>> {
    let mut out = vec![s.clone()];
    for _ in 0..k {
        let next = out.last().unwrap().derivative();
        out.push(next);
    }
    out
}

/// Indices `n` at which `C_n(zeta^4 g2, zeta^5 lambda, zeta^6 g3) != zeta^n C_n`.
pub fn euler_homogeneity_violations(tau: &TauExpansion<WeightedPolynomial>) -> Vec<usize> {
    let zeta = Rational::from((3, 2));
    tau.coeffs()
        .iter()
        .enumerate()
        .filter(|(n, c)| {
            let expected = c.scale(&Rational::from(rug::ops::Pow::pow(&zeta, *n as u32)));
            c.scale_weights(&zeta) != expected || !c.is_homogeneous_of(*n as u32)
        })
        .map(|(n, _)| n)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{ratio, Params};
    use crate::laurent::laurent_coeffs;
    use crate::tau::{tau_coeffs_bilinear, tau_coeffs_quartic, tau_polynomials, TauMethod};

    fn generic() -> Params {
        Params::new(ratio(2, 3), ratio(-5, 7), ratio(9, 4))
    }

    #[test]
    fn u_from_tau_matches_laurent() {
        let tau = tau_coeffs_bilinear(&generic(), 30);
        let u = u_from_tau(&tau);
        assert_eq!(u.coeffs(), laurent_coeffs(&generic(), 30).coeffs());
    }

    #[test]
    fn gauge_freedom() {
        let tau = tau_coeffs_bilinear(&generic(), 20);
        let moved = gauge_transform(&tau, &ratio(-7, 3), &ratio(5, 2));
        let u = u_from_tau_series(&moved).unwrap();
        let reference = laurent_coeffs(&generic(), 20).series().truncate(u.order()).unwrap();
        assert_eq!(u, reference);
        assert!(u_from_tau_series(&moved.shift(1)).is_err());
    }

    #[test]
    fn residuals_vanish() {
        let tau = tau_coeffs_quartic(&generic(), 24);
        let b = bilinear_residual(&tau);
        assert!(b.order() >= 20 && b.is_zero());
        let q = quartic_residual(&tau);
        assert!(q.order() >= 20 && q.is_zero());
        let h = hamiltonian_check(&tau);
        assert!(h.vanishes(), "{:?}", h.identity_residual.first_nonzero());
        assert_eq!(h.identity_residual.order(), 24 - 5);
    }

    #[test]
    fn perturbed_table_is_caught() {
        let tau = tau_coeffs_bilinear(&generic(), 16);
        let mut c = tau.coeffs().to_vec();
        c[9] += Rational::from((1, 1000));
        let bad = TauExpansion::new(tau.params().clone(), tau.method(), c);
        assert!(!bilinear_residual(&bad).is_zero());
        assert!(!quartic_residual(&bad).is_zero());
        assert!(!hamiltonian_check(&bad).vanishes());
    }

    #[test]
    fn symbolic_coefficients_are_weighted_homogeneous() {
        let t = tau_polynomials(24, TauMethod::Bilinear);
        assert!(euler_homogeneity_violations(&t).is_empty());
    }
}
