//! Exact arbitrary-precision rational arithmetic and univariate/bivariate
//! polynomial operations that every other module consumes.
//!
//! All arithmetic is exact; there is no floating point anywhere in the
//! crate. The zero polynomial's degree is the distinguished value
//! [`Degree::NegInfinity`], never `-1`, which keeps degree arithmetic total.

mod bi;
mod rat;
mod uni;

pub use bi::BiPoly;
pub use rat::{clear_denominators, rat, rat_int, rat_to_int, rat_to_string, Rat};
pub use uni::UniPoly;

use std::fmt;
use std::ops::Add;

/// Degree of a polynomial in one variable; the zero polynomial gets
/// `NegInfinity` so that `deg(p*q) = deg(p) + deg(q)` holds without
/// sentinel-collision bugs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }

    /// Finite value, panicking with `what` on the zero polynomial.
    pub fn expect_finite(self, what: &str) -> usize {
        match self {
            Degree::NegInfinity => panic!("degree of {what} is -inf (zero polynomial)"),
            Degree::Finite(d) => d,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Degree::Finite(_))
    }
}

impl Add for Degree {
    type Output = Degree;
    fn add(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInfinity,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_ordering_and_addition() {
        assert!(Degree::NegInfinity < Degree::Finite(0));
        assert!(Degree::Finite(2) < Degree::Finite(3));
        assert_eq!(
            Degree::Finite(2) + Degree::Finite(3),
            Degree::Finite(5)
        );
        assert_eq!(
            Degree::NegInfinity + Degree::Finite(3),
            Degree::NegInfinity
        );
    }
}
