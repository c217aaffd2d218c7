//! Weighted-homogeneous polynomials in `(g2, lambda, g3)` with weights `(4, 5, 6)`.

use std::collections::BTreeMap;
use std::fmt;

use rug::ops::Pow;
use rug::Rational;

use super::params::{ParameterTriple, Params};
use super::scalar::Scalar;

/// Exponent triple of `g2^i lambda^j g3^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    pub g2: u32,
    pub lambda: u32,
    pub g3: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { g2: 0, lambda: 0, g3: 0 };

    pub const fn new(g2: u32, lambda: u32, g3: u32) -> Self {
        Monomial { g2, lambda, g3 }
    }

    pub fn weight(&self) -> u32 {
        4 * self.g2 + 5 * self.lambda + 6 * self.g3
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.g2 + other.g2, self.lambda + other.lambda, self.g3 + other.g3)
    }
}

/// Sparse polynomial over the rationals; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct WeightedPolynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl WeightedPolynomial {
    pub fn constant(c: Rational) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        WeightedPolynomial { terms }
    }

    pub fn g2() -> Self {
        Self::term(Monomial::new(1, 0, 0), Rational::from(1))
    }

    pub fn lambda() -> Self {
        Self::term(Monomial::new(0, 1, 0), Rational::from(1))
    }

    pub fn g3() -> Self {
        Self::term(Monomial::new(0, 0, 1), Rational::from(1))
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I) -> Self {
        let mut p = WeightedPolynomial::default();
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, m: Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Common weight of all terms, `None` for mixed weights. The zero
    /// polynomial is homogeneous of every weight and reports `None` here too.
    pub fn homogeneous_weight(&self) -> Option<u32> {
        let mut weights = self.terms.keys().map(Monomial::weight);
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    pub fn is_homogeneous_of(&self, weight: u32) -> bool {
        self.terms.keys().all(|m| m.weight() == weight)
    }

    /// Exact substitution of concrete parameter values.
    pub fn evaluate(&self, params: &Params) -> Rational {
        self.evaluate_in(params)
    }

    /// Substitution into any scalar ring.
    pub fn evaluate_in<S: Scalar>(&self, params: &ParameterTriple<S>) -> S {
        let mut total = S::zero();
        let mut powers = PowerCache::new(params);
        for (m, c) in &self.terms {
            let mut v = powers.g2(m.g2).mul_ref(&powers.lambda(m.lambda));
            v = v.mul_ref(&powers.g3(m.g3));
            total.add_assign_ref(&v.scale(c));
        }
        total
    }

    /// Substitutes `g2 -> zeta^4 g2, lambda -> zeta^5 lambda, g3 -> zeta^6 g3`.
    pub fn scale_weights(&self, zeta: &Rational) -> Self {
        let terms = self.terms.iter().map(|(m, c)| {
            let factor = Rational::from(zeta.pow(m.weight()));
            (*m, Rational::from(c * &factor))
        });
        WeightedPolynomial::from_terms(terms)
    }
}

struct PowerCache<'a, S> {
    params: &'a ParameterTriple<S>,
    g2: Vec<S>,
    lambda: Vec<S>,
    g3: Vec<S>,
}

impl<'a, S: Scalar> PowerCache<'a, S> {
    fn new(params: &'a ParameterTriple<S>) -> Self {
        PowerCache { params, g2: vec![S::one()], lambda: vec![S::one()], g3: vec![S::one()] }
    }

    fn grow(cache: &mut Vec<S>, base: &S, k: u32) -> S {
        while cache.len() <= k as usize {
            let next = cache.last().unwrap().mul_ref(base);
            cache.push(next);
        }
        cache[k as usize].clone()
    }

    fn g2(&mut self, k: u32) -> S {
        Self::grow(&mut self.g2, &self.params.g2, k)
    }

    fn lambda(&mut self, k: u32) -> S {
        Self::grow(&mut self.lambda, &self.params.lambda, k)
    }

    fn g3(&mut self, k: u32) -> S {
        Self::grow(&mut self.g3, &self.params.g3, k)
    }
}

impl Scalar for WeightedPolynomial {
    fn zero() -> Self {
        WeightedPolynomial::default()
    }

    fn from_rational(r: &Rational) -> Self {
        WeightedPolynomial::constant(r.clone())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c);
        }
    }

    fn sub_assign_ref(&mut self, rhs: &Self) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, &Rational::from(-c));
        }
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = WeightedPolynomial::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.times(mb), &Rational::from(ca * cb));
            }
        }
        out
    }

    fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return WeightedPolynomial::default();
        }
        WeightedPolynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, Rational::from(c * r))).collect(),
        }
    }

    fn add_product(&mut self, a: &Self, b: &Self) {
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                self.add_term(ma.times(mb), &Rational::from(ca * cb));
            }
        }
    }
}

impl fmt::Display for WeightedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            for (name, e) in [("g2", m.g2), ("lambda", m.lambda), ("g3", m.g3)] {
                match e {
                    0 => {}
                    1 => write!(f, "*{name}")?,
                    _ => write!(f, "*{name}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::ratio;

    fn p10() -> WeightedPolynomial {
        // (3/22)(lambda^2 + g2 g3 / 280)
        WeightedPolynomial::from_terms([
            (Monomial::new(0, 2, 0), ratio(3, 22)),
            (Monomial::new(1, 0, 1), ratio(3, 22 * 280)),
        ])
    }

    #[test]
    fn evaluates_listed_polynomials() {
        let p8 = WeightedPolynomial::term(Monomial::new(2, 0, 0), ratio(1, 1200));
        assert_eq!(p8.evaluate(&Params::from_ints(1, 0, 0)), ratio(1, 1200));
        let p4 = WeightedPolynomial::term(Monomial::new(1, 0, 0), ratio(1, 20));
        assert_eq!(p4.evaluate(&Params::from_ints(20, 0, 0)), ratio(1, 1));
        assert_eq!(WeightedPolynomial::zero().evaluate(&Params::from_ints(3, -1, 7)), ratio(0, 1));
        assert_eq!(p10().evaluate(&Params::from_ints(2, 1, 5)), ratio(3, 22) * (ratio(1, 1) + ratio(10, 280)));
    }

    #[test]
    fn weight_scaling_multiplies_by_power_of_zeta() {
        let two = ratio(2, 1);
        let p5 = WeightedPolynomial::lambda();
        assert_eq!(p5.scale_weights(&two), p5.scale_int(32));
        let p4 = WeightedPolynomial::g2().scale(&ratio(1, 20));
        assert_eq!(p4.scale_weights(&two), p4.scale_int(16));
        assert_eq!(p10().scale_weights(&two), p10().scale_int(1024));
    }

    #[test]
    fn arithmetic_drops_cancelled_terms() {
        let mut p = WeightedPolynomial::g2();
        p.sub_assign_ref(&WeightedPolynomial::g2());
        assert!(p.is_zero());
        assert_eq!(p.homogeneous_weight(), None);
        let sq = p10().mul_ref(&p10());
        assert_eq!(sq.homogeneous_weight(), Some(20));
        assert_eq!(p10().to_string(), "3/22*lambda^2 + 3/6160*g2*g3");
    }
}
