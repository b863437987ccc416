//! Fraction-free Bareiss elimination, generic over any exact ring with
//! exact division, so the same kernel serves both scalar matrices (rational
//! entries at an interpolation node) and matrices of polynomials.
//!
//! Rational inputs are integerized up front: each row is scaled by the
//! least common multiple of its denominators and the product of the scale
//! factors is divided back out of the determinant. All elimination then
//! runs over plain big integers, which avoids per-operation normalization
//! of rational values that are integers anyway.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::poly::{Rat, UniPoly};

pub(crate) trait DetEntry: Clone {
    fn det_zero() -> Self;
    fn det_one() -> Self;
    fn det_is_zero(&self) -> bool;
    fn det_mul(&self, other: &Self) -> Self;
    fn det_sub(&self, other: &Self) -> Self;
    /// Division guaranteed exact by the Bareiss identity.
    fn det_exact_div(&self, other: &Self) -> Self;
    fn det_neg(self) -> Self;
}

impl DetEntry for Rat {
    fn det_zero() -> Self {
        <Rat as Zero>::zero()
    }
    fn det_one() -> Self {
        <Rat as One>::one()
    }
    fn det_is_zero(&self) -> bool {
        <Rat as Zero>::is_zero(self)
    }
    fn det_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn det_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn det_exact_div(&self, other: &Self) -> Self {
        self / other
    }
    fn det_neg(self) -> Self {
        -self
    }
}

impl DetEntry for UniPoly {
    fn det_zero() -> Self {
        UniPoly::zero()
    }
    fn det_one() -> Self {
        UniPoly::one()
    }
    fn det_is_zero(&self) -> bool {
        UniPoly::is_zero(self)
    }
    fn det_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn det_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn det_exact_div(&self, other: &Self) -> Self {
        UniPoly::exact_div(self, other)
    }
    fn det_neg(self) -> Self {
        -&self
    }
}

impl DetEntry for BigInt {
    fn det_zero() -> Self {
        <BigInt as Zero>::zero()
    }
    fn det_one() -> Self {
        <BigInt as One>::one()
    }
    fn det_is_zero(&self) -> bool {
        <BigInt as Zero>::is_zero(self)
    }
    fn det_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn det_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn det_exact_div(&self, other: &Self) -> Self {
        let (q, r) = self.div_rem(other);
        assert!(r.is_zero(), "inexact integer division in Bareiss step");
        q
    }
    fn det_neg(self) -> Self {
        -self
    }
}

/// Dense integer-coefficient polynomial used inside the determinant
/// kernels; trimmed like [`UniPoly`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    fn trim(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// `p * factor`, where `factor` clears every denominator of `p`.
    pub(crate) fn from_scaled_uni(p: &UniPoly, factor: &BigInt) -> Self {
        IntPoly::trim(
            p.coeffs()
                .iter()
                .map(|c| c.numer() * (factor / c.denom()))
                .collect(),
        )
    }

    /// Back to rational coefficients, dividing the given scale out.
    pub(crate) fn into_uni_scaled(self, scale: &BigInt) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .into_iter()
                .map(|c| Rat::new(c, scale.clone()))
                .collect(),
        )
    }

    pub(crate) fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

impl DetEntry for IntPoly {
    fn det_zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }
    fn det_one() -> Self {
        IntPoly {
            coeffs: vec![BigInt::one()],
        }
    }
    fn det_is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn det_mul(&self, other: &Self) -> Self {
        if self.det_is_zero() || other.det_is_zero() {
            return <IntPoly as DetEntry>::det_zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::trim(coeffs)
    }
    fn det_sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = BigInt::zero();
        let coeffs = (0..n)
            .map(|k| {
                self.coeffs.get(k).unwrap_or(&zero) - other.coeffs.get(k).unwrap_or(&zero)
            })
            .collect();
        IntPoly::trim(coeffs)
    }
    fn det_exact_div(&self, other: &Self) -> Self {
        assert!(!other.det_is_zero(), "exact_div by the zero polynomial");
        let dd = other.coeffs.len() - 1;
        let lead_d = other.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let (c, r) = rem.last().unwrap().div_rem(lead_d);
            assert!(r.is_zero(), "inexact polynomial division in Bareiss step");
            for (i, di) in other.coeffs.iter().enumerate() {
                let v = &rem[k + i] - di * &c;
                rem[k + i] = v;
            }
            debug_assert!(rem.last().unwrap().is_zero());
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
            quot[k] = c;
        }
        assert!(rem.is_empty(), "inexact polynomial division in Bareiss step");
        IntPoly::trim(quot)
    }
    fn det_neg(self) -> Self {
        IntPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

/// Scales each row of a rational-polynomial matrix to integer coefficients;
/// the determinant of the result is the original determinant times the
/// returned scale.
pub(crate) fn integerize_rows(rows: &[Vec<UniPoly>]) -> (Vec<Vec<IntPoly>>, BigInt) {
    let mut scale = BigInt::one();
    let int_rows = rows
        .iter()
        .map(|row| {
            let mut row_lcm = BigInt::one();
            for entry in row {
                for c in entry.coeffs() {
                    row_lcm = row_lcm.lcm(c.denom());
                }
            }
            scale *= &row_lcm;
            row.iter()
                .map(|entry| IntPoly::from_scaled_uni(entry, &row_lcm))
                .collect()
        })
        .collect();
    (int_rows, scale)
}

/// Exact determinant by fraction-free elimination: every interior division
/// by the previous pivot is exact, keeping intermediate entries in the ring.
pub(crate) fn bareiss_determinant<T: DetEntry>(mut m: Vec<Vec<T>>) -> T {
    let n = m.len();
    if n == 0 {
        return T::det_one();
    }
    debug_assert!(m.iter().all(|row| row.len() == n));
    let mut negate = false;
    let mut prev = T::det_one();
    for k in 0..n - 1 {
        if m[k][k].det_is_zero() {
            let Some(pivot_row) = (k + 1..n).find(|&r| !m[r][k].det_is_zero()) else {
                return T::det_zero();
            };
            m.swap(k, pivot_row);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j]
                    .det_mul(&m[k][k])
                    .det_sub(&m[i][k].det_mul(&m[k][j]))
                    .det_exact_div(&prev);
                m[i][j] = v;
            }
            m[i][k] = T::det_zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        det.det_neg()
    } else {
        det
    }
}
