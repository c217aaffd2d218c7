//! Recursion from the degree-four equation
//! `tau^2 tau'''^2 - 6 tau tau' tau'' tau''' + 4 tau'^3 tau''' + 4 tau tau''^3 - 3 (tau' tau'')^2
//!  - g2 tau^2 (tau tau'' - tau'^2) - 12 lambda (z (tau^3 tau'' - (tau tau')^2) - tau^3 tau') + g3 tau^4 = 0`.
//!
//! It reads
//! `4n(n^2-1) C_n = -sum b~_{j,k,l,m} C_j C_k C_l C_m + g2 S4 + 12 lambda S5 - g3 S6`
//! over `j+k+l+m = n`, `0 <= j,k,l,m <= n-1`, where
//! `b~ = j(j+1)(k+1)((j-1)(k(k-6l-7) + 4(l+1)(m+1)) + k(l+1)(4l-3m-3))`.
//!
//! The quadruple sum is evaluated in O(n) per step: the bracket is affine in
//! `j - 1`, and its `(l, m)` dependence spans `{1, l, m, lm, l^2}`, so it
//! factors through the pair sums `P_ab(r) = sum_{l+m=r} l^a m^b C_l C_m`.

use rug::Rational;

use super::{TauExpansion, TauMethod};
use crate::exact::{ParameterTriple, Scalar};

/// `(a, b)` exponents of `l^a m^b`.
const BASIS: [(u32, u32); 5] = [(0, 0), (1, 0), (0, 1), (1, 1), (2, 0)];

/// Bracket coefficient of `l^a m^b` as `(j-1) A(k) + B(k)`.
fn basis_weights(k: i64) -> ([i64; 5], [i64; 5]) {
    let a = [k * k - 7 * k + 4, 4 - 6 * k, 4, 4, 0];
    let b = [-3 * k, k, -3 * k, -3 * k, 4 * k];
    (a, b)
}

struct State<S> {
    c: Vec<S>,
    /// `pairs[i][r] = P_{BASIS[i]}(r)`.
    pairs: Vec<Vec<S>>,
    /// `sum_{k+r=t} (k+1) C_k sum_i A_i(k) P_i(r)`, likewise with `B`.
    xa: Vec<S>,
    xb: Vec<S>,
    /// `R4(s) = sum_{j+k=s} (j+1)(j-k-1) C_j C_k`, `R5` with `j-k-2`.
    r4: Vec<S>,
    r5: Vec<S>,
}

impl<S: Scalar> State<S> {
    fn new() -> Self {
        State { c: Vec::new(), pairs: vec![Vec::new(); BASIS.len()], xa: Vec::new(), xb: Vec::new(), r4: Vec::new(), r5: Vec::new() }
    }

    /// Appends `C_t` and every auxiliary sum whose top index is `t`.
    fn push(&mut self, value: S) {
        self.c.push(value);
        let t = self.c.len() - 1;
        for (i, &(a, b)) in BASIS.iter().enumerate() {
            let mut s = S::zero();
            for l in 0..=t {
                let m = t - l;
                let w = (l as i64).pow(a) * (m as i64).pow(b);
                if w == 0 || self.c[l].is_zero() || self.c[m].is_zero() {
                    continue;
                }
                s.add_assign_ref(&self.c[l].mul_ref(&self.c[m]).scale_int(w));
            }
            self.pairs[i].push(s);
        }
        let mut xa = S::zero();
        let mut xb = S::zero();
        for k in 0..=t {
            if self.c[k].is_zero() {
                continue;
            }
            let r = t - k;
            let (wa, wb) = basis_weights(k as i64);
            let mut inner_a = S::zero();
            let mut inner_b = S::zero();
            for i in 0..BASIS.len() {
                let p = &self.pairs[i][r];
                if p.is_zero() {
                    continue;
                }
                if wa[i] != 0 {
                    inner_a.add_assign_ref(&p.scale_int(wa[i]));
                }
                if wb[i] != 0 {
                    inner_b.add_assign_ref(&p.scale_int(wb[i]));
                }
            }
            let ck = self.c[k].scale_int(k as i64 + 1);
            xa.add_assign_ref(&ck.mul_ref(&inner_a));
            xb.add_assign_ref(&ck.mul_ref(&inner_b));
        }
        self.xa.push(xa);
        self.xb.push(xb);
        let mut r4 = S::zero();
        let mut r5 = S::zero();
        for j in 0..=t {
            let k = t - j;
            if self.c[j].is_zero() || self.c[k].is_zero() {
                continue;
            }
            let prod = self.c[j].mul_ref(&self.c[k]);
            let (ji, ki) = (j as i64, k as i64);
            r4.add_assign_ref(&prod.scale_int((ji + 1) * (ji - ki - 1)));
            r5.add_assign_ref(&prod.scale_int((ji + 1) * (ji - ki - 2)));
        }
        self.r4.push(r4);
        self.r5.push(r5);
    }

    /// `sum_{s=0}^{r} x(s) T(r-s)` with `T = P_00`.
    fn convolve_t(&self, x: &[S], r: usize) -> S {
        let t = &self.pairs[0];
        let mut out = S::zero();
        for s in 0..=r {
            if x[s].is_zero() || t[r - s].is_zero() {
                continue;
            }
            out.add_product(&x[s], &t[r - s]);
        }
        out
    }

    fn next(&self, n: usize, params: &ParameterTriple<S>) -> S {
        let mut quartic = S::zero();
        for j in 1..n {
            if self.c[j].is_zero() {
                continue;
            }
            let ji = j as i64;
            let mut x = self.xa[n - j].scale_int(ji - 1);
            x.add_assign_ref(&self.xb[n - j]);
            if x.is_zero() {
                continue;
            }
            quartic.add_assign_ref(&self.c[j].mul_ref(&x).scale_int(ji * (ji + 1)));
        }
        let mut rhs = quartic.neg();
        if n >= 4 && !params.g2.is_zero() {
            rhs.add_assign_ref(&self.convolve_t(&self.r4, n - 4).mul_ref(&params.g2));
        }
        if n >= 5 && !params.lambda.is_zero() {
            rhs.add_assign_ref(&self.convolve_t(&self.r5, n - 5).mul_ref(&params.lambda).scale_int(12));
        }
        if n >= 6 && !params.g3.is_zero() {
            rhs.sub_assign_ref(&self.convolve_t(&self.pairs[0], n - 6).mul_ref(&params.g3));
        }
        let n = n as i64;
        rhs.scale(&Rational::from((1, 4 * n * (n * n - 1))))
    }
}

/// Quartic-equation recursion in any scalar ring; only `C_0 = 1`, `C_1 = 0` are seeded.
pub fn tau_coeffs_quartic_in<S: Scalar>(params: &ParameterTriple<S>, order: usize) -> TauExpansion<S> {
    let mut state = State::new();
    state.push(S::one());
    if order >= 1 {
        state.push(S::zero());
    }
    for n in 2..=order {
        let next = state.next(n, params);
        state.push(next);
    }
    let mut c = state.c;
    c.truncate(order + 1);
    TauExpansion::new(params.clone(), TauMethod::Quartic, c)
}
