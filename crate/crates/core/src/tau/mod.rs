//! Taylor coefficients of the tau-function `tau(z) = z + sum_{n>=2} C_n z^{n+1}`,
//! with `u = -(log tau)''`, in the gauge where the `z` coefficient is 1 and
//! the `z^2` coefficient vanishes.
//!
//! Three independent recursions produce the same `C_n`: one from the Hirota
//! bilinear equation `D_z^4 tau.tau - (12 lambda z + g2) tau^2 = 0`, one from the
//! degree-four equation obtained from the Hamiltonian, and one from the
//! triple-sum expansion in `(g2/2)^l (6 lambda)^m (2 g3)^n`.

mod bridge;
mod quartic;
mod triple;

pub use bridge::{
    bilinear_residual, euler_homogeneity_violations, gauge_transform, hamiltonian_check, quartic_residual,
    u_from_tau, u_from_tau_series, HamiltonianReport,
};
pub use quartic::tau_coeffs_quartic_in;
pub use triple::{integrality_report, tau_from_triple_sum, triple_sum_coeffs, TripleSumTable};

use std::fmt;

use rug::Rational;

use crate::exact::{CoefficientTable, ParameterTriple, Params, PowerSeries, Recursion, Scalar, WeightedPolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TauMethod {
    Bilinear,
    Quartic,
    TripleSum,
}

impl TauMethod {
    pub fn name(&self) -> &'static str {
        match self {
            TauMethod::Bilinear => "bilinear",
            TauMethod::Quartic => "quartic",
            TauMethod::TripleSum => "triple-sum",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        [TauMethod::Bilinear, TauMethod::Quartic, TauMethod::TripleSum].into_iter().find(|m| m.name() == name)
    }

    fn recursion(&self) -> Recursion {
        match self {
            TauMethod::Bilinear => Recursion::TauBilinear,
            TauMethod::Quartic => Recursion::TauQuartic,
            TauMethod::TripleSum => Recursion::TauTripleSum,
        }
    }
}

impl fmt::Display for TauMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `C_0..=C_N` and the method that produced them.
#[derive(Clone, Debug, PartialEq)]
pub struct TauExpansion<S = Rational> {
    params: ParameterTriple<S>,
    method: TauMethod,
    coeffs: CoefficientTable<S>,
}

impl<S: Scalar> TauExpansion<S> {
    pub fn new(params: ParameterTriple<S>, method: TauMethod, coeffs: Vec<S>) -> Self {
        TauExpansion { params, method, coeffs: CoefficientTable::new(method.recursion(), 0, coeffs) }
    }

    pub fn params(&self) -> &ParameterTriple<S> {
        &self.params
    }

    pub fn method(&self) -> TauMethod {
        self.method
    }

    pub fn table(&self) -> &CoefficientTable<S> {
        &self.coeffs
    }

    pub fn coeffs(&self) -> &[S] {
        self.coeffs.values()
    }

    pub fn order(&self) -> usize {
        self.coeffs.order()
    }

    /// `C_n`, the coefficient of `z^{n+1}`.
    pub fn c(&self, n: usize) -> &S {
        &self.coeffs[n]
    }

    /// `tau` itself as a power series, exact below `z^{N+2}`.
    pub fn series(&self) -> PowerSeries<S> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(S::zero());
        coeffs.extend(self.coeffs.values().iter().cloned());
        PowerSeries::new(0, coeffs)
    }
}

impl TauExpansion<WeightedPolynomial> {
    pub fn evaluate(&self, params: &Params) -> TauExpansion<Rational> {
        let values = self.coeffs.values().iter().map(|p| p.evaluate(params)).collect();
        TauExpansion::new(params.clone(), self.method, values)
    }
}

/// `b_{j,k} = 4! sum_l (-1)^l binom(j, l) binom(k, 4-l)`, so that
/// `D_z^4 z^j . z^k = b_{j,k} z^{j+k-4}`.
pub fn hirota_b(j: u64, k: u64) -> i64 {
    let mut total: i128 = 0;
    for l in 0..=4u64 {
        let term = binom_small(j, l) * binom_small(k, 4 - l);
        total += if l % 2 == 0 { term } else { -term };
    }
    i64::try_from(24 * total).expect("b_{j,k} overflows i64")
}

fn binom_small(n: u64, k: u64) -> i128 {
    if k > n {
        return 0;
    }
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) as i128 / (i + 1) as i128;
    }
    r
}

/// Bilinear recursion in any scalar ring:
/// `n(n^2-1)(n-6) C_n = -1/2 sum_{j=1}^{n-1} b_{j+1,n-j+1} C_j C_{n-j}
///   + g2/2 sum C_j C_{n-4-j} + 6 lambda sum C_j C_{n-5-j}`, with `C_6 = -g3/840`.
pub fn tau_coeffs_bilinear_in<S: Scalar>(params: &ParameterTriple<S>, order: usize) -> TauExpansion<S> {
    extend_bilinear(params, Vec::with_capacity(order + 1), order)
}

/// Continues a bilinear prefix `C_0..C_M` up to `C_N`.
pub fn extend_bilinear<S: Scalar>(params: &ParameterTriple<S>, prefix: Vec<S>, order: usize) -> TauExpansion<S> {
    let mut c = prefix;
    for n in c.len()..=order {
        let next = match n {
            0 => S::one(),
            1 => S::zero(),
            6 => params.g3.scale(&Rational::from((-1, 840))),
            _ => bilinear_step(&c, n, params),
        };
        c.push(next);
    }
    TauExpansion::new(params.clone(), TauMethod::Bilinear, c)
}

fn bilinear_step<S: Scalar>(c: &[S], n: usize, params: &ParameterTriple<S>) -> S {
    // b is symmetric, so pair j with n - j.
    let mut quad = S::zero();
    for j in 1..n.div_ceil(2) {
        if c[j].is_zero() || c[n - j].is_zero() {
            continue;
        }
        let b = hirota_b(j as u64 + 1, (n - j) as u64 + 1);
        quad.add_assign_ref(&c[j].mul_ref(&c[n - j]).scale_int(2 * b));
    }
    if n.is_multiple_of(2) && !c[n / 2].is_zero() {
        let b = hirota_b(n as u64 / 2 + 1, n as u64 / 2 + 1);
        quad.add_assign_ref(&c[n / 2].mul_ref(&c[n / 2]).scale_int(b));
    }
    let mut rhs = quad.scale(&Rational::from((-1, 2)));
    if n >= 4 && !params.g2.is_zero() {
        let s = pair_sum(c, n - 4);
        rhs.add_assign_ref(&s.mul_ref(&params.g2).scale(&Rational::from((1, 2))));
    }
    if n >= 5 && !params.lambda.is_zero() {
        let s = pair_sum(c, n - 5);
        rhs.add_assign_ref(&s.mul_ref(&params.lambda).scale_int(6));
    }
    let n = n as i64;
    rhs.scale(&Rational::from((1, n * (n * n - 1) * (n - 6))))
}

/// `sum_{j=0}^{r} C_j C_{r-j}`.
fn pair_sum<S: Scalar>(c: &[S], r: usize) -> S {
    let mut s = S::zero();
    for j in 0..r.div_ceil(2) {
        if !c[j].is_zero() && !c[r - j].is_zero() {
            s.add_product(&c[j], &c[r - j]);
        }
    }
    s = s.scale_int(2);
    if r.is_multiple_of(2) {
        s.add_product(&c[r / 2], &c[r / 2]);
    }
    s
}

pub fn tau_coeffs_bilinear(params: &Params, order: usize) -> TauExpansion {
    tau_coeffs_bilinear_in(params, order)
}

pub fn tau_coeffs_quartic(params: &Params, order: usize) -> TauExpansion {
    tau_coeffs_quartic_in(params, order)
}

/// Symbolic `C_n` as weighted polynomials.
pub fn tau_polynomials(order: usize, method: TauMethod) -> TauExpansion<WeightedPolynomial> {
    let symbolic = ParameterTriple::symbolic();
    match method {
        TauMethod::Bilinear => tau_coeffs_bilinear_in(&symbolic, order),
        TauMethod::Quartic => tau_coeffs_quartic_in(&symbolic, order),
        TauMethod::TripleSum => {
            let table = triple_sum_coeffs(order as u32 + 1);
            tau_from_triple_sum(&table, &symbolic, order).expect("table built to the required depth")
        }
    }
}

/// Runs the chosen recursion at rational parameters.
pub fn tau_coeffs(params: &Params, order: usize, method: TauMethod) -> TauExpansion {
    match method {
        TauMethod::Bilinear => tau_coeffs_bilinear(params, order),
        TauMethod::Quartic => tau_coeffs_quartic(params, order),
        TauMethod::TripleSum => {
            let table = triple_sum_coeffs(order as u32 + 1);
            tau_from_triple_sum(&table, params, order).expect("table built to the required depth")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{ratio, Monomial};

    #[test]
    fn hirota_b_values() {
        assert_eq!(hirota_b(1, 1), 0);
        assert_eq!(hirota_b(4, 0), 24);
        assert_eq!(hirota_b(2, 3), 24);
        assert_eq!(hirota_b(3, 2), 24);
        for j in 0..12 {
            for k in 0..12 {
                assert_eq!(hirota_b(j, k), hirota_b(k, j));
            }
        }
    }

    #[test]
    fn symbolic_low_orders() {
        let t = tau_polynomials(6, TauMethod::Bilinear);
        assert_eq!(t.c(4), &WeightedPolynomial::term(Monomial::new(1, 0, 0), ratio(-1, 240)));
        assert_eq!(t.c(5), &WeightedPolynomial::term(Monomial::new(0, 1, 0), ratio(-1, 20)));
        assert_eq!(t.c(6), &WeightedPolynomial::term(Monomial::new(0, 0, 1), ratio(-1, 840)));
        assert!(t.c(2).is_zero() && t.c(3).is_zero());
    }

    #[test]
    fn pentagonal_display_terms() {
        let t = tau_coeffs_bilinear(&Params::pentagonal(), 20);
        assert_eq!(t.c(5), &ratio(-1, 20));
        assert_eq!(t.c(10), &ratio(-7, 26400));
        assert_eq!(t.c(15), &ratio(1, 1232000));
        assert_eq!(t.c(20), &Rational::from((83, 117976320000u64)));
    }

    #[test]
    fn quartic_matches_bilinear_symbolically() {
        let q = tau_polynomials(20, TauMethod::Quartic);
        let b = tau_polynomials(20, TauMethod::Bilinear);
        assert!(q.c(2).is_zero() && q.c(3).is_zero());
        assert_eq!(q.coeffs(), b.coeffs());
        let p = tau_coeffs_quartic(&Params::pentagonal(), 15);
        assert_eq!(p.c(15), &ratio(1, 1232000));
    }
}
