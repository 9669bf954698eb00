//! Exact truncated multivariate power series and a catalog-driven verifier
//! for (p,q)-identities involving divisor functions, Lambert series and
//! Carlitz q-Eulerian polynomials.

pub mod cli;
pub mod error;
pub mod identities;
pub mod numbers;
pub mod qtools;
pub mod series;

pub use error::{Error, Result};
pub use series::{geometric_factor, Monomial, MultiSeries, Rational, Truncation, VarId};
