//! Laurent expansion `u(z) = sum_n c_n z^{n-2}` of the solution with a double
//! pole at the origin.
//!
//! The coefficients obey
//! `(n+1)(n-6) c_n = 6 sum_{j=1}^{n-1} c_j c_{n-j} - (g2/2) [n=4] - 6 lambda [n=5]`
//! with `c_0 = 1` and the resonance fixed by `c_6 = g3/28`.

mod pentagonal;
mod pole;
mod stratified;

pub use pentagonal::{
    extend_pentagonal, generating_function_residual, pentagonal_coeffs, recwn_step, recxin_step, twisted_w, twisted_w_hat,
};
pub use pole::{
    decay_report, evaluate_u, nearest_pole_estimate, pentagonal_f_tilde, power_sums_f, DecayReport, PoleEstimate,
    UEvaluation,
};
pub use stratified::{stratified_g2zero, stratified_g3zero, StratifiedCase, StratifiedTable};

use rug::Rational;

use crate::exact::{CoefficientTable, ParameterTriple, Params, PowerSeries, Recursion, Scalar, WeightedPolynomial};

/// Exact coefficients `c_0..=c_N` together with the parameters that produced them.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentExpansion<S = Rational> {
    params: ParameterTriple<S>,
    coeffs: CoefficientTable<S>,
}

impl<S: Scalar> LaurentExpansion<S> {
    pub fn from_table(params: ParameterTriple<S>, coeffs: CoefficientTable<S>) -> Self {
        assert_eq!(coeffs.start(), 0, "Laurent tables start at c_0");
        LaurentExpansion { params, coeffs }
    }

    pub fn params(&self) -> &ParameterTriple<S> {
        &self.params
    }

    pub fn table(&self) -> &CoefficientTable<S> {
        &self.coeffs
    }

    pub fn order(&self) -> usize {
        self.coeffs.order()
    }

    pub fn c(&self, n: usize) -> &S {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[S] {
        self.coeffs.values()
    }

    /// Continues the recursion up to `order`; a no-op if already there.
    pub fn extend(&mut self, order: usize) {
        if order <= self.order() {
            return;
        }
        let mut c = std::mem::replace(&mut self.coeffs, CoefficientTable::new(Recursion::Laurent, 0, Vec::new()))
            .into_values();
        for n in c.len()..=order {
            let next = orec_step(&c, n, &self.params);
            c.push(next);
        }
        self.coeffs = CoefficientTable::new(Recursion::Laurent, 0, c);
    }

    /// `u` as a Laurent series, exact below `z^{N-1}`.
    pub fn series(&self) -> PowerSeries<S> {
        PowerSeries::new(-2, self.coeffs.values().to_vec())
    }
}

impl LaurentExpansion<WeightedPolynomial> {
    /// Substitutes concrete parameter values into every `P_n`.
    pub fn evaluate(&self, params: &Params) -> LaurentExpansion<Rational> {
        let values = self.coeffs.values().iter().map(|p| p.evaluate(params)).collect();
        LaurentExpansion::from_table(params.clone(), CoefficientTable::new(Recursion::Laurent, 0, values))
    }
}

/// One step of the Laurent recursion, given `c_0..c_{n-1}`.
fn orec_step<S: Scalar>(c: &[S], n: usize, params: &ParameterTriple<S>) -> S {
    match n {
        0 => return S::one(),
        6 => return params.g3.scale(&Rational::from((1, 28))),
        _ => {}
    }
    let mut sum = S::zero();
    for j in 1..n.div_ceil(2) {
        sum.add_product(&c[j], &c[n - j]);
    }
    sum = sum.scale_int(2);
    if n.is_multiple_of(2) {
        sum.add_product(&c[n / 2], &c[n / 2]);
    }
    let mut rhs = sum.scale_int(6);
    if n == 4 {
        rhs.sub_assign_ref(&params.g2.scale(&Rational::from((1, 2))));
    }
    if n == 5 {
        rhs.sub_assign_ref(&params.lambda.scale_int(6));
    }
    let denom = (n as i64 + 1) * (n as i64 - 6);
    rhs.scale(&Rational::from((1, denom)))
}

/// Laurent coefficients in any scalar ring (rational or symbolic parameters).
pub fn laurent_coeffs_in<S: Scalar>(params: &ParameterTriple<S>, order: usize) -> LaurentExpansion<S> {
    let mut expansion =
        LaurentExpansion { params: params.clone(), coeffs: CoefficientTable::new(Recursion::Laurent, 0, vec![S::one()]) };
    expansion.extend(order);
    expansion
}

/// Exact `c_0..=c_N` for rational parameters.
pub fn laurent_coeffs(params: &Params, order: usize) -> LaurentExpansion {
    laurent_coeffs_in(params, order)
}

/// The modular polynomials `P_0..=P_N` (so `c_n = P_n(g2, lambda, g3)`).
pub fn modular_polynomials(order: usize) -> CoefficientTable<WeightedPolynomial> {
    laurent_coeffs_in(&ParameterTriple::symbolic(), order).coeffs
}

/// `u'' - 6u^2 + 6 lambda z + g2/2`, recomputed from the coefficient table by
/// series multiplication and differentiation. Exact below `z^{N-3}`, so it
/// tests the recursion at every index up to `N`.
pub fn ode_residual<S: Scalar>(expansion: &LaurentExpansion<S>) -> PowerSeries<S> {
    let u = expansion.series();
    let order = u.order();
    let params = expansion.params();
    let upp = u.derivative().derivative();
    let u2 = u.mul(&u).scale(&Rational::from(6));
    let z_term = PowerSeries::monomial(params.lambda.scale_int(6), 1, order);
    let constant = PowerSeries::monomial(params.g2.scale(&Rational::from((1, 2))), 0, order);
    upp.sub(&u2).add(&z_term).add(&constant)
}
