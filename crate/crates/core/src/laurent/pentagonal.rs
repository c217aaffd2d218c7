//! The pentagonal sequence `v_n = c_{5n}` at `g2 = g3 = 0`, `lambda = 1`, and
//! the two linear sequences it drives.

use rug::Rational;

use crate::exact::{CoefficientTable, PowerSeries, Recursion};

/// `v_1..=v_N` from `v_n = 6/((5n+1)(5n-6)) sum_{k=1}^{n-1} v_k v_{n-k}`.
pub fn pentagonal_coeffs(count: usize) -> CoefficientTable<Rational> {
    extend_pentagonal(CoefficientTable::new(Recursion::Pentagonal, 1, Vec::new()), count)
}

/// Continues a prefix `v_1..v_M` up to `v_N`.
pub fn extend_pentagonal(prefix: CoefficientTable<Rational>, count: usize) -> CoefficientTable<Rational> {
    assert_eq!(prefix.start(), 1, "pentagonal tables start at v_1");
    let mut v = prefix.into_values();
    for n in v.len() + 1..=count {
        if n == 1 {
            v.push(Rational::from(1));
            continue;
        }
        let mut sum = Rational::new();
        for k in 1..n.div_ceil(2) {
            sum += Rational::from(&v[k - 1] * &v[n - k - 1]);
        }
        sum *= 2;
        if n % 2 == 0 {
            sum += Rational::from(v[n / 2 - 1].square_ref());
        }
        let n = n as i64;
        v.push(sum * Rational::from((6, (5 * n + 1) * (5 * n - 6))));
    }
    CoefficientTable::new(Recursion::Pentagonal, 1, v)
}

fn linear_step(w: &[Rational], v: &[Rational], num: i64, denom: i64) -> Rational {
    let n = w.len() + 1;
    let mut sum = Rational::new();
    for k in 1..n {
        sum += Rational::from(&w[k - 1] * &v[n - k - 1]);
    }
    sum * Rational::from((num, denom))
}

/// Next `w_n` given `w_1..w_{n-1}` and `v_1..v_{n-1}`:
/// `w_n = 12/((5n+2)(5n-5)) sum_k w_k v_{n-k}`.
pub fn recwn_step(w: &[Rational], v: &[Rational]) -> Rational {
    let n = w.len() as i64 + 1;
    assert!(n >= 2 && v.len() as i64 >= n - 1);
    linear_step(w, v, 12, (5 * n + 2) * (5 * n - 5))
}

/// Next `w^_n`: `w^_n = 12/((5n)(5n-7)) sum_k w^_k v_{n-k}`.
pub fn recxin_step(w: &[Rational], v: &[Rational]) -> Rational {
    let n = w.len() as i64 + 1;
    assert!(n >= 2 && v.len() as i64 >= n - 1);
    linear_step(w, v, 12, 5 * n * (5 * n - 7))
}

fn run_linear(v: &[Rational], count: usize, step: fn(&[Rational], &[Rational]) -> Rational) -> Vec<Rational> {
    let mut w = Vec::with_capacity(count);
    if count > 0 {
        w.push(Rational::from(1));
    }
    while w.len() < count {
        let next = step(&w, v);
        w.push(next);
    }
    w
}

/// `w_1..=w_N` with `w_1 = 1`, i.e. the coefficients `c^(0)_{5n+1}` of `alpha`.
pub fn twisted_w(v: &CoefficientTable<Rational>, count: usize) -> Vec<Rational> {
    run_linear(v.values(), count, recwn_step)
}

/// `w^_1..=w^_N` with `w^_1 = 1`, i.e. the coefficients `c^(0)_{5n-1}` of `beta`.
pub fn twisted_w_hat(v: &CoefficientTable<Rational>, count: usize) -> Vec<Rational> {
    run_linear(v.values(), count, recxin_step)
}

/// `x G'' + (12/5) G' - (12/25) G psi` for `G = sum w_n x^{n-1}`,
/// `psi = sum v_n x^{n-1}`, truncated to what `w` and `v` determine.
pub fn generating_function_residual(w: &[Rational], v: &[Rational]) -> PowerSeries<Rational> {
    let g = PowerSeries::new(0, w.to_vec());
    let psi = PowerSeries::new(0, v.to_vec());
    let g1 = g.derivative();
    let xg2 = g1.derivative().shift(1);
    let lhs = xg2.add(&g1.scale(&Rational::from((12, 5))));
    let prod = g.mul(&psi).scale(&Rational::from((12, 25)));
    lhs.sub(&prod)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn first_values() {
        let v = pentagonal_coeffs(3);
        assert_eq!(v[1], ratio(1, 1));
        assert_eq!(v[2], ratio(3, 22));
        assert_eq!(v[3], ratio(1, 88));
    }

    #[test]
    fn twisted_second_terms() {
        let v = pentagonal_coeffs(5);
        assert_eq!(twisted_w(&v, 2)[1], ratio(1, 5));
        let w_hat = twisted_w_hat(&v, 2);
        assert_eq!(w_hat[0], ratio(1, 1));
        assert_eq!(w_hat[1], ratio(2, 5));
    }

    #[test]
    fn generating_function_ode() {
        let v = pentagonal_coeffs(25);
        let w = twisted_w(&v, 25);
        let r = generating_function_residual(&w, v.values());
        assert!(r.order() >= 23);
        assert!(r.is_zero());
    }
}
