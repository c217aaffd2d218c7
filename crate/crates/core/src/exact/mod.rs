//! Exact arithmetic: rationals, weighted polynomials in `(g2, lambda, g3)`,
//! truncated power series, and the multiprecision float/complex scalars used
//! for evaluation.

pub mod mp;
pub mod params;
pub mod poly;
pub mod rational;
pub mod scalar;
pub mod series;
pub mod table;

pub use mp::{MpComplex, MpReal, Precision};
pub use params::{ParameterTriple, Params};
pub use poly::{Monomial, WeightedPolynomial};
pub use rational::{format_fraction, parse_rational, ratio};
pub use rug::{Integer, Rational};
pub use scalar::Scalar;
pub use series::{series_log_unit, series_product, PowerSeries};
pub use table::{CoefficientTable, Recursion};
