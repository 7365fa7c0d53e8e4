//! Exact sparse multivariate polynomials and rational functions over the
//! rationals, with graded-lex canonical ordering and a canonical JSON form.

pub mod error;
mod gcd;
pub mod json;
pub mod monomial;
pub mod mpoly;
pub mod ratfunc;
pub mod rational;
pub mod scalar;

pub use error::AlgError;
pub use monomial::Monomial;
pub use mpoly::{vars_of, CoefficientAudit, MPoly, Vars};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use ratfunc::RatFunc;
pub use rational::{binomial, factorial, format_rational, int, parse_rational, ratio};
pub use scalar::Scalar;
