//! Exact degree analysis of elimination equations for bivariate polynomial
//! systems.
//!
//! Given two polynomial equations `f(x, y) = 0` and `theta(x, y) = 0`, the
//! degree of the equation obtained by eliminating one variable is bounded by
//! the product of the total degrees (the Bezout bound) but is usually lower.
//! This crate computes the exact generic degree from the Newton polygon of
//! the eliminated variable's coefficient structure, analyzes how many
//! solutions escape to infinity in each elimination order, and verifies the
//! predictions against exact Sylvester-resultant computations on randomly
//! instantiated coefficients.

pub mod degree;
pub mod error;
#[cfg(test)]
pub(crate) mod fixtures;
pub mod oracle;
pub mod parse;
pub mod poly;
pub mod polygon;

pub use error::{Error, Result};
