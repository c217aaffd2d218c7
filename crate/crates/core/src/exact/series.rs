//! Truncated Laurent/power series with dense storage and order bookkeeping.
//!
//! A [`PowerSeries`] stands for `sum_{e = offset}^{order - 1} a_e z^e + O(z^order)`.
//! Every operation returns a series whose `order` is the exponent up to which
//! the result is still exact, so precision loss is always visible.

use rug::Rational;

use super::scalar::Scalar;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries<S> {
    offset: i64,
    coeffs: Vec<S>,
}

impl<S: Scalar> PowerSeries<S> {
    /// Coefficients of `z^offset, z^{offset+1}, ...`; exact below
    /// `offset + coeffs.len()`.
    pub fn new(offset: i64, coeffs: Vec<S>) -> Self {
        PowerSeries { offset, coeffs }
    }

    /// The zero series known exactly on `offset..order`.
    pub fn zero(offset: i64, order: i64) -> Self {
        let len = (order - offset).max(0) as usize;
        PowerSeries::new(offset, vec![S::zero(); len])
    }

    /// `c z^e + O(z^order)`.
    pub fn monomial(c: S, e: i64, order: i64) -> Self {
        let mut s = PowerSeries::zero(e.min(order), order);
        if e < order {
            s.coeffs[0] = c;
        }
        s
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    /// First exponent that is no longer exact.
    pub fn order(&self) -> i64 {
        self.offset + self.coeffs.len() as i64
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Coefficient of `z^e`; `None` at or beyond the truncation order.
    pub fn coeff(&self, e: i64) -> Option<S> {
        if e < self.offset {
            Some(S::zero())
        } else if e < self.order() {
            Some(self.coeffs[(e - self.offset) as usize].clone())
        } else {
            None
        }
    }

    fn at(&self, e: i64) -> &S {
        &self.coeffs[(e - self.offset) as usize]
    }

    /// Drops terms of exponent `>= order`.
    pub fn truncate(&self, order: i64) -> Result<Self> {
        if order > self.order() {
            return Err(Error::TruncationOrder { requested: order, available: self.order() });
        }
        let keep = (order - self.offset).max(0) as usize;
        Ok(PowerSeries::new(self.offset.min(order), self.coeffs[..keep].to_vec()))
    }

    /// Re-expresses the series with a lower offset (padding zeros).
    fn widened(&self, offset: i64) -> Self {
        if offset >= self.offset {
            return self.clone();
        }
        let pad = (self.offset - offset) as usize;
        let mut coeffs = vec![S::zero(); pad];
        coeffs.extend(self.coeffs.iter().cloned());
        PowerSeries::new(offset, coeffs)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.combine(rhs, |a, b| a.add_assign_ref(b))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.combine(rhs, |a, b| a.sub_assign_ref(b))
    }

    fn combine(&self, rhs: &Self, op: impl Fn(&mut S, &S)) -> Self {
        let offset = self.offset.min(rhs.offset);
        let order = self.order().min(rhs.order());
        let mut out = self.widened(offset);
        out.coeffs.truncate((order - offset).max(0) as usize);
        for e in rhs.offset..order {
            op(&mut out.coeffs[(e - offset) as usize], rhs.at(e));
        }
        out
    }

    pub fn scale(&self, r: &Rational) -> Self {
        PowerSeries::new(self.offset, self.coeffs.iter().map(|c| c.scale(r)).collect())
    }

    pub fn scale_by(&self, s: &S) -> Self {
        PowerSeries::new(self.offset, self.coeffs.iter().map(|c| c.mul_ref(s)).collect())
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: i64) -> Self {
        PowerSeries::new(self.offset + k, self.coeffs.clone())
    }

    /// Cauchy product, exact up to the combined order
    /// `min(a.order + b.offset, b.order + a.offset)`.
    pub fn mul(&self, rhs: &Self) -> Self {
        let offset = self.offset + rhs.offset;
        let order = (self.order() + rhs.offset).min(rhs.order() + self.offset);
        let len = (order - offset).max(0) as usize;
        let mut out = vec![S::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(len.saturating_sub(i)) {
                out[i + j].add_product(a, b);
            }
        }
        PowerSeries::new(offset, out)
    }

    /// Term-wise derivative; the `z^0` term is dropped and the order drops by one.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c.scale_int(self.offset + i as i64))
            .collect();
        PowerSeries::new(self.offset - 1, coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// First exponent with a non-zero coefficient.
    pub fn first_nonzero(&self) -> Option<(i64, &S)> {
        self.coeffs
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.offset + i as i64, c))
    }

    fn check_unit(&self) -> Result<()> {
        let negative_ok = (self.offset..0.min(self.order())).all(|e| self.at(e).is_zero());
        let constant = self.coeff(0).ok_or_else(|| Error::Domain("series has no exact constant term".into()))?;
        if !negative_ok || constant != S::one() {
            return Err(Error::Domain("expected a power series with constant term 1".into()));
        }
        Ok(())
    }

    fn nonnegative_part(&self) -> Vec<S> {
        (0..self.order()).map(|e| self.coeff(e).unwrap()).collect()
    }

    /// `1 / self` for a unit series (constant term 1), to the series' own order.
    pub fn inverse_unit(&self) -> Result<Self> {
        self.check_unit()?;
        let a = self.nonnegative_part();
        let mut inv: Vec<S> = Vec::with_capacity(a.len());
        inv.push(S::one());
        for k in 1..a.len() {
            let mut acc = S::zero();
            for j in 1..=k {
                acc.add_product(&a[j], &inv[k - j]);
            }
            inv.push(acc.neg());
        }
        Ok(PowerSeries::new(0, inv))
    }

    /// Logarithm of a unit series, from `L' = a'/a`:
    /// `k L_k = k a_k - sum_{j=1}^{k-1} j L_j a_{k-j}`.
    pub fn log_unit(&self, order: i64) -> Result<Self> {
        self.check_unit()?;
        if order > self.order() {
            return Err(Error::TruncationOrder { requested: order, available: self.order() });
        }
        let a = self.nonnegative_part();
        let len = order.max(0) as usize;
        let mut log: Vec<S> = vec![S::zero(); len];
        for k in 1..len {
            let mut acc = a[k].scale_int(k as i64);
            for j in 1..k {
                if log[j].is_zero() {
                    continue;
                }
                let t = log[j].mul_ref(&a[k - j]).scale_int(j as i64);
                acc.sub_assign_ref(&t);
            }
            log[k] = acc.scale(&Rational::from((1, k as i64)));
        }
        Ok(PowerSeries::new(0, log))
    }

    /// Exponential of a series with vanishing constant term:
    /// `k E_k = sum_{j=1}^{k} j L_j E_{k-j}`.
    pub fn exp(&self) -> Result<Self> {
        let lows_vanish = (self.offset..1.min(self.order())).all(|e| self.at(e).is_zero());
        if !lows_vanish || self.order() < 1 {
            return Err(Error::Domain("exp needs a series with zero constant term".into()));
        }
        let l = self.nonnegative_part();
        let mut e: Vec<S> = Vec::with_capacity(l.len());
        e.push(S::one());
        for k in 1..l.len() {
            let mut acc = S::zero();
            for j in 1..=k {
                if l[j].is_zero() {
                    continue;
                }
                acc.add_assign_ref(&l[j].mul_ref(&e[k - j]).scale_int(j as i64));
            }
            e.push(acc.scale(&Rational::from((1, k as i64))));
        }
        Ok(PowerSeries::new(0, e))
    }
}

/// Truncated product exact to exponent `order` (exclusive).
pub fn series_product<S: Scalar>(a: &PowerSeries<S>, b: &PowerSeries<S>, order: i64) -> Result<PowerSeries<S>> {
    let full = a.mul(b);
    full.truncate(order)
}

/// Logarithm of a unit series to `order` (exclusive).
pub fn series_log_unit<S: Scalar>(a: &PowerSeries<S>, order: i64) -> Result<PowerSeries<S>> {
    a.log_unit(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::ratio;

    fn rs(offset: i64, v: &[i64]) -> PowerSeries<Rational> {
        PowerSeries::new(offset, v.iter().map(|&x| Rational::from(x)).collect())
    }

    #[test]
    fn products_of_small_series() {
        let p = series_product(&rs(0, &[1, 1, 0, 0]), &rs(0, &[1, -1, 0, 0]), 4).unwrap();
        assert_eq!(p, rs(0, &[1, 0, -1, 0]));

        let geometric = rs(0, &[1; 6]);
        let sq = series_product(&geometric, &geometric, 6).unwrap();
        assert_eq!(sq, rs(0, &[1, 2, 3, 4, 5, 6]));

        // (z^-2 + z^3)^2 with both factors exact through z^6
        let mut c = vec![0; 9];
        c[0] = 1;
        c[5] = 1;
        let a = rs(-2, &c);
        let sq = a.mul(&a);
        assert_eq!(sq.offset(), -4);
        assert_eq!(sq.order(), 5);
        assert_eq!(sq.coeff(-4), Some(Rational::from(1)));
        assert_eq!(sq.coeff(1), Some(Rational::from(2)));
        assert_eq!(sq.coeff(2), Some(Rational::from(0)));
        // z^6 needs the inputs exact through z^8
        let long = {
            let mut c = vec![0; 12];
            c[0] = 1;
            c[5] = 1;
            rs(-2, &c)
        };
        let sq = series_product(&long, &long, 7).unwrap();
        assert_eq!(sq.coeff(6), Some(Rational::from(1)));
    }

    #[test]
    fn product_beyond_exact_range_is_refused() {
        let a = rs(0, &[1, 1, 1]);
        let b = rs(0, &[1, 2]);
        assert!(matches!(series_product(&a, &b, 3), Err(Error::TruncationOrder { .. })));
    }

    #[test]
    fn log_of_one_plus_z() {
        let l = series_log_unit(&rs(0, &[1, 1, 0, 0, 0, 0]), 6).unwrap();
        let expected: Vec<Rational> = [0, 1, -2, 3, -4, 5]
            .iter()
            .map(|&k: &i64| if k == 0 { ratio(0, 1) } else { ratio(k.signum(), k.abs()) })
            .collect();
        assert_eq!(l.coeffs(), &expected[..]);
        assert!(series_log_unit(&rs(0, &[1, 0, 0]), 3).unwrap().is_zero());
    }

    #[test]
    fn log_of_one_minus_z5_over_20() {
        // log(1 - w) = -w - w^2/2 - ..., w = z^5/20
        let mut c = vec![Rational::from(0); 16];
        c[0] = Rational::from(1);
        c[5] = ratio(-1, 20);
        let l = series_log_unit(&PowerSeries::new(0, c), 16).unwrap();
        assert_eq!(l.coeff(5), Some(ratio(-1, 20)));
        assert_eq!(l.coeff(10), Some(ratio(-1, 800)));
        assert_eq!(l.coeff(15), Some(ratio(-1, 24000)));
        assert_eq!(l.coeff(7), Some(ratio(0, 1)));
    }

    #[test]
    fn log_rejects_non_units() {
        assert!(matches!(series_log_unit(&rs(0, &[2, 1]), 2), Err(Error::Domain(_))));
        assert!(matches!(series_log_unit(&rs(1, &[1, 1]), 2), Err(Error::Domain(_))));
    }

    #[test]
    fn derivative_and_shift() {
        let s = rs(-2, &[1, 0, 0, 4]);
        let d = s.derivative();
        assert_eq!(d.offset(), -3);
        assert_eq!(d.coeff(-3), Some(Rational::from(-2)));
        assert_eq!(d.coeff(0), Some(Rational::from(4)));
        assert_eq!(d.order(), 1);
        assert_eq!(s.shift(2).coeff(3), Some(Rational::from(4)));
    }

    #[test]
    fn inverse_of_unit() {
        let a = rs(0, &[1, -1, 0, 0, 0]);
        assert_eq!(a.inverse_unit().unwrap(), rs(0, &[1, 1, 1, 1, 1]));
    }
}
