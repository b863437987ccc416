//! Exact rational scalars.
//!
//! `Rat` is an arbitrary-precision rational, always stored reduced with a
//! positive denominator, so equality is structural.

use num_bigint::BigInt;
use num_traits::{One, Signed};

pub type Rat = num_rational::BigRational;

/// `n/d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as an exact rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Canonical text form: `p/q` for proper fractions, bare `p` for integers.
pub fn rat_to_string(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact integer value of `r`; panics unless `r` is an integer.
pub fn rat_to_int(r: &Rat) -> BigInt {
    assert!(r.is_integer(), "expected an integer rational, got {r}");
    r.numer().clone()
}

/// Multiplies out the denominators of `values`, returning the matching
/// integer numerators and the common (positive) denominator.
pub fn clear_denominators(values: &[Rat]) -> (Vec<BigInt>, BigInt) {
    let mut common = BigInt::one();
    for v in values {
        common = num_integer::lcm(common, v.denom().clone());
    }
    let numerators = values
        .iter()
        .map(|v| v.numer() * (&common / v.denom()))
        .collect();
    (numerators, common)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn stored_reduced_with_positive_denominator() {
        let r = rat(4, -6);
        assert_eq!(r.numer(), &BigInt::from(-2));
        assert_eq!(r.denom(), &BigInt::from(3));
        assert_eq!(r, rat(-2, 3));
    }

    #[test]
    fn text_form() {
        assert_eq!(rat_to_string(&rat(6, 3)), "2");
        assert_eq!(rat_to_string(&rat(-5, 3)), "-5/3");
        assert_eq!(rat_to_string(&rat_int(0)), "0");
    }

    #[test]
    fn denominator_clearing() {
        let (nums, den) = clear_denominators(&[rat(1, 2), rat(2, 3), rat_int(1)]);
        assert_eq!(den, BigInt::from(6));
        assert_eq!(nums, vec![BigInt::from(3), BigInt::from(4), BigInt::from(6)]);
    }

    #[test]
    fn zero_is_integer() {
        assert!(Rat::zero().is_integer());
    }
}
