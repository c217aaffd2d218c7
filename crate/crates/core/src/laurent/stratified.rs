//! Coefficients `c_n` split by powers of one elliptic parameter.
//!
//! With `g2 = 0` and `alpha = g3/28`:
//! `c_{5n+p} = sum_m c^(m)_{5n+p} alpha^{5m+p} lambda^{n-6m-p}`.
//! With `g3 = 0` and `beta = g2/20`:
//! `c_{5n-p} = sum_m c^(m)_{5n-p} beta^{5m+p} lambda^{n-4m-p}`.
//! Each family satisfies a recursion that is linear once the `m = 0, p = 0`
//! row (the pentagonal sequence) is known.

use rug::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StratifiedCase {
    G2Zero,
    G3Zero,
}

/// Values stored by Laurent index `k` and stratum `m`.
#[derive(Clone, Debug, PartialEq)]
pub struct StratifiedTable {
    case: StratifiedCase,
    n_max: usize,
    m_max: usize,
    values: Vec<Vec<Rational>>,
}

/// `6 / ((k+1)(k-6))` for Laurent index `k = 5n + p` (or `5n - p`).
fn k_factor(index: usize) -> Rational {
    let k = index as i64;
    Rational::from((6, (k + 1) * (k - 6)))
}

impl StratifiedTable {
    pub fn case(&self) -> StratifiedCase {
        self.case
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn m_max(&self) -> usize {
        self.m_max
    }

    /// Largest Laurent index covered.
    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    /// `c^(m)_k` (or the hatted analogue) by Laurent index.
    pub fn by_index(&self, m: usize, index: usize) -> Option<&Rational> {
        self.values.get(index).and_then(|row| row.get(m))
    }

    fn index_of(&self, n: usize, p: usize) -> Option<usize> {
        if p > 4 {
            return None;
        }
        match self.case {
            StratifiedCase::G2Zero => Some(5 * n + p),
            StratifiedCase::G3Zero => (5 * n).checked_sub(p),
        }
    }

    /// `c^(m)_{5n+p}` in the `g2 = 0` case, `c^(m)_{5n-p}` in the `g3 = 0` case.
    pub fn get(&self, m: usize, n: usize, p: usize) -> Option<&Rational> {
        self.index_of(n, p).and_then(|k| self.by_index(m, k))
    }

    /// Exponent of `lambda` attached to `(m, n, p)`; negative means the entry must vanish.
    pub fn lambda_exponent(&self, m: usize, n: usize, p: usize) -> i64 {
        let (m, n, p) = (m as i64, n as i64, p as i64);
        match self.case {
            StratifiedCase::G2Zero => n - 6 * m - p,
            StratifiedCase::G3Zero => n - 4 * m - p,
        }
    }

    /// All entries as `((m, n, p), value)`, by increasing index then `m`.
    pub fn entries(&self) -> Vec<((usize, usize, usize), &Rational)> {
        let mut out = Vec::new();
        for (k, row) in self.values.iter().enumerate() {
            let (n, p) = match self.case {
                StratifiedCase::G2Zero => (k / 5, k % 5),
                StratifiedCase::G3Zero => (k.div_ceil(5), (5 - k % 5) % 5),
            };
            for (m, v) in row.iter().enumerate() {
                out.push(((m, n, p), v));
            }
        }
        out
    }

    /// `sum_m c^(m) t^{5m+p} lambda^{...}` for the Laurent index of `(n, p)`,
    /// with `t = alpha` or `beta`.
    pub fn reassemble(&self, n: usize, p: usize, t: &Rational, lambda: &Rational) -> Option<Rational> {
        let k = self.index_of(n, p)?;
        let row = self.values.get(k)?;
        let mut total = Rational::new();
        for (m, c) in row.iter().enumerate() {
            let e = self.lambda_exponent(m, n, p);
            if e < 0 {
                continue;
            }
            let tp = Rational::from(rug::ops::Pow::pow(t, (5 * m + p) as i32));
            let lp = Rational::from(rug::ops::Pow::pow(lambda, e as i32));
            total += Rational::from(c * &tp) * lp;
        }
        Some(total)
    }
}

/// Table of `c^(m)_{5n+p}` for `n <= n_max`, `m <= m_max`, `p = 0..4`.
pub fn stratified_g2zero(n_max: usize, m_max: usize) -> StratifiedTable {
    let top = 5 * n_max + 4;
    let mut c: Vec<Vec<Rational>> = Vec::with_capacity(top + 1);
    for index in 0..=top {
        let mut row = vec![Rational::new(); m_max + 1];
        if index <= 9 {
            if matches!(index, 0 | 5 | 6) {
                row[0] = Rational::from(1);
            }
            c.push(row);
            continue;
        }
        let (n, p) = (index / 5, index % 5);
        let factor = k_factor(index);
        for (m, slot) in row.iter_mut().enumerate() {
            let mut sum = Rational::new();
            for k in 1..n {
                for j in 0..=m {
                    for l in 0..=p {
                        sum += Rational::from(&c[5 * k + l][j] * &c[5 * (n - k) + p - l][m - j]);
                    }
                }
                for j in 0..m {
                    for l in 1..=(4 - p) {
                        sum += Rational::from(&c[5 * k + l + p][j] * &c[5 * (n - k) - l][m - j - 1]);
                    }
                }
            }
            *slot = sum * &factor;
        }
        c.push(row);
    }
    StratifiedTable { case: StratifiedCase::G2Zero, n_max, m_max, values: c }
}

/// Table of hatted `c^(m)_{5n-p}` for `n <= n_max`, `m <= m_max`, `p = 0..4`.
pub fn stratified_g3zero(n_max: usize, m_max: usize) -> StratifiedTable {
    let top = 5 * n_max;
    let mut c: Vec<Vec<Rational>> = Vec::with_capacity(top + 1);
    for index in 0..=top {
        let mut row = vec![Rational::new(); m_max + 1];
        if index <= 6 {
            if matches!(index, 0 | 4 | 5) {
                row[0] = Rational::from(1);
            }
            c.push(row);
            continue;
        }
        let n = index.div_ceil(5);
        let p = 5 * n - index;
        let factor = k_factor(index);
        for (m, slot) in row.iter_mut().enumerate() {
            let mut sum = Rational::new();
            for j in 0..=m {
                for l in 0..=p {
                    for k in 1..n {
                        sum += Rational::from(&c[5 * k - l][j] * &c[5 * (n - k) + l - p][m - j]);
                    }
                }
            }
            for j in 0..m {
                for l in 1..=(4 - p) {
                    for k in 1..=n {
                        sum += Rational::from(&c[5 * k - l - p][j] * &c[5 * (n - k) + l][m - j - 1]);
                    }
                }
            }
            *slot = sum * &factor;
        }
        c.push(row);
    }
    StratifiedTable { case: StratifiedCase::G3Zero, n_max, m_max, values: c }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;
    use crate::laurent::{laurent_coeffs, pentagonal_coeffs};
    use crate::exact::{Params, Scalar};

    #[test]
    fn g2zero_initial_conditions_and_w2() {
        let t = stratified_g2zero(6, 2);
        assert_eq!(t.get(0, 1, 0), Some(&ratio(1, 1)));
        assert_eq!(t.get(0, 1, 1), Some(&ratio(1, 1)));
        for k in 1..=9 {
            for m in 0..=2 {
                if m == 0 && (k == 5 || k == 6) {
                    continue;
                }
                assert!(t.by_index(m, k).unwrap().is_zero(), "m={m} k={k}");
            }
        }
        assert_eq!(t.get(0, 2, 1), Some(&ratio(1, 5)));
    }

    #[test]
    fn g3zero_initial_conditions_and_w_hat2() {
        let t = stratified_g3zero(6, 2);
        assert_eq!(t.get(0, 1, 1), Some(&ratio(1, 1)));
        assert_eq!(t.get(0, 1, 0), Some(&ratio(1, 1)));
        assert_eq!(t.get(0, 2, 1), Some(&ratio(2, 5)));
    }

    #[test]
    fn zero_row_is_pentagonal() {
        let v = pentagonal_coeffs(12);
        let a = stratified_g2zero(12, 1);
        let b = stratified_g3zero(12, 1);
        for n in 1..=12 {
            assert_eq!(a.get(0, n, 0), Some(&v[n]));
            assert_eq!(b.get(0, n, 0), Some(&v[n]));
        }
    }

    #[test]
    fn reassembly_small() {
        let (alpha, lambda) = (ratio(3, 7), ratio(-2, 3));
        let t = stratified_g2zero(14, 3);
        let e = laurent_coeffs(&Params::new(ratio(0, 1), lambda.clone(), alpha.clone() * 28u32), 74);
        for n in 0..=14 {
            for p in 0..5 {
                if 5 * n + p == 0 {
                    continue;
                }
                assert_eq!(t.reassemble(n, p, &alpha, &lambda).unwrap(), *e.c(5 * n + p), "n={n} p={p}");
            }
        }
        let beta = ratio(5, 2);
        let t = stratified_g3zero(14, 4);
        let e = laurent_coeffs(&Params::new(beta.clone() * 20u32, lambda.clone(), ratio(0, 1)), 70);
        for n in 1..=14 {
            for p in 0..5 {
                assert_eq!(t.reassemble(n, p, &beta, &lambda).unwrap(), *e.c(5 * n - p), "n={n} p={p}");
            }
        }
    }
}
