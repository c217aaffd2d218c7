//! Series expansions for the first Painleve equation `u'' = 6u^2 + 6 lambda z + g2/2`
//! (rescaled form) and its tau-function.
//!
//! Everything is computed exactly over the rationals (or over
//! [`WeightedPolynomial`](exact::WeightedPolynomial) for symbolic
//! coefficients) and converted to MPFR floats only at evaluation time.

pub mod cli;
pub mod elliptic;
pub mod error;
pub mod exact;
pub mod laurent;
pub mod poles;
pub mod tau;

pub use error::{Error, Result};
