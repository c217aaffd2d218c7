use std::fmt;

use rug::Rational;

/// Exact coefficient ring used by every recursion in the crate.
///
/// The two instantiations are [`Rational`] (numeric mode) and
/// [`WeightedPolynomial`](super::WeightedPolynomial) (symbolic mode), so each
/// recursion is written once and run in both modes.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;

    fn from_rational(r: &Rational) -> Self;

    fn is_zero(&self) -> bool;

    fn add_assign_ref(&mut self, rhs: &Self);

    fn sub_assign_ref(&mut self, rhs: &Self);

    fn mul_ref(&self, rhs: &Self) -> Self;

    fn scale(&self, r: &Rational) -> Self;

    fn one() -> Self {
        Self::from_rational(&Rational::from(1))
    }

    fn from_int(k: i64) -> Self {
        Self::from_rational(&Rational::from(k))
    }

    fn scale_int(&self, k: i64) -> Self {
        self.scale(&Rational::from(k))
    }

    fn neg(&self) -> Self {
        self.scale_int(-1)
    }

    /// `self += a * b`
    fn add_product(&mut self, a: &Self, b: &Self) {
        let p = a.mul_ref(b);
        self.add_assign_ref(&p);
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Rational::new()
    }

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn is_zero(&self) -> bool {
        self.cmp0() == std::cmp::Ordering::Equal
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }

    fn sub_assign_ref(&mut self, rhs: &Self) {
        *self -= rhs;
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        Rational::from(self * rhs)
    }

    fn scale(&self, r: &Rational) -> Self {
        Rational::from(self * r)
    }

    fn scale_int(&self, k: i64) -> Self {
        Rational::from(self * k)
    }

    fn add_product(&mut self, a: &Self, b: &Self) {
        *self += Rational::from(a * b);
    }
}
