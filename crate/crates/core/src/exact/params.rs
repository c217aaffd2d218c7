use std::fmt;

use rug::Rational;

use super::poly::WeightedPolynomial;
use super::rational::format_fraction;
use super::scalar::Scalar;

/// A point `(g2, lambda, g3)` of parameter space.
#[derive(Clone, Debug, PartialEq)]
pub struct ParameterTriple<S> {
    pub g2: S,
    pub lambda: S,
    pub g3: S,
}

/// Rational-valued parameters.
pub type Params = ParameterTriple<Rational>;

impl<S: Scalar> ParameterTriple<S> {
    pub fn new(g2: S, lambda: S, g3: S) -> Self {
        ParameterTriple { g2, lambda, g3 }
    }

    /// gcd of the weights of the non-vanishing parameters.
    ///
    /// Laurent coefficients `c_n` (and tau coefficients `C_n`) vanish unless
    /// the stride divides `n`: 4 in the lemniscatic-type case (only `g2`),
    /// 5 in the pentagonal case (only `lambda`), 6 in the equianharmonic-type
    /// case (only `g3`), 2 for `lambda = 0` with both elliptic invariants.
    /// Returns 0 when every parameter vanishes (then `u = 1/z^2`).
    pub fn symmetry_stride(&self) -> u32 {
        let mut g = 0u32;
        for (value, weight) in [(&self.g2, 4), (&self.lambda, 5), (&self.g3, 6)] {
            if !value.is_zero() {
                g = gcd(g, weight);
            }
        }
        g
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl Params {
    pub fn from_ints(g2: i64, lambda: i64, g3: i64) -> Self {
        ParameterTriple::new(Rational::from(g2), Rational::from(lambda), Rational::from(g3))
    }

    /// `(0, 1, 0)`: the solution with fivefold rotational symmetry.
    pub fn pentagonal() -> Self {
        Self::from_ints(0, 1, 0)
    }

    /// `(4, 0, 0)`: the square lattice, `tau_modular = i`.
    pub fn lemniscatic() -> Self {
        Self::from_ints(4, 0, 0)
    }

    /// `(0, 0, 1)`: the hexagonal lattice, `tau_modular = exp(i pi / 3)`.
    pub fn equianharmonic() -> Self {
        Self::from_ints(0, 0, 1)
    }

    pub fn to_symbolic(&self) -> ParameterTriple<WeightedPolynomial> {
        ParameterTriple::new(
            WeightedPolynomial::constant(self.g2.clone()),
            WeightedPolynomial::constant(self.lambda.clone()),
            WeightedPolynomial::constant(self.g3.clone()),
        )
    }
}

impl ParameterTriple<WeightedPolynomial> {
    /// The formal variables `g2`, `lambda`, `g3`.
    pub fn symbolic() -> Self {
        ParameterTriple::new(WeightedPolynomial::g2(), WeightedPolynomial::lambda(), WeightedPolynomial::g3())
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "g2={} lambda={} g3={}",
            format_fraction(&self.g2),
            format_fraction(&self.lambda),
            format_fraction(&self.g3)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stride_follows_vanishing_pattern() {
        assert_eq!(Params::pentagonal().symmetry_stride(), 5);
        assert_eq!(Params::lemniscatic().symmetry_stride(), 4);
        assert_eq!(Params::equianharmonic().symmetry_stride(), 6);
        assert_eq!(Params::from_ints(1, 0, 1).symmetry_stride(), 2);
        assert_eq!(Params::from_ints(1, 1, 0).symmetry_stride(), 1);
        assert_eq!(Params::from_ints(0, 0, 0).symmetry_stride(), 0);
        assert_eq!(ParameterTriple::symbolic().symmetry_stride(), 1);
    }
}
