//! Dense univariate polynomials over exact rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rat::{clear_denominators, rat_to_string, Rat};
use super::Degree;
use crate::error::{Error, Result};

/// Univariate polynomial; `coeffs[k]` is the coefficient of the k-th power.
/// The highest stored coefficient is nonzero, or the list is empty (the
/// zero polynomial). The variable is positional context supplied by the
/// caller, not part of the value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        UniPoly::new(vec![c])
    }

    /// `c * var^exp`
    pub fn monomial(exp: usize, c: Rat) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); exp + 1];
        coeffs[exp] = c;
        UniPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rat) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Long division; errors on a zero divisor.
    pub fn div_rem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        if d.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let dd = d.coeffs.len() - 1;
        let lead_d = d.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap() / lead_d;
            for (i, di) in d.coeffs.iter().enumerate() {
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
        Ok((UniPoly::new(quot), UniPoly { coeffs: rem }))
    }

    /// True iff dividing `p` by `self` leaves zero remainder.
    pub fn divides(&self, p: &UniPoly) -> Result<bool> {
        let (_, r) = p.div_rem(self)?;
        Ok(r.is_zero())
    }

    /// Division known to be exact; panics otherwise (used where an algebraic
    /// identity guarantees exactness).
    pub fn exact_div(&self, d: &UniPoly) -> UniPoly {
        let (q, r) = self.div_rem(d).expect("exact_div by zero polynomial");
        assert!(r.is_zero(), "exact_div left a nonzero remainder");
        q
    }

    /// Leading coefficient normalized to 1; the zero polynomial stays zero.
    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => UniPoly::zero(),
            Some(lead) => self.scale(&lead.recip()),
        }
    }

    /// Monic greatest common divisor via the primitive Euclidean scheme over
    /// the integers after clearing denominators: pseudo-remainders with the
    /// content divided out at every step, so coefficients stay bounded while
    /// the computation remains exact.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let mut a = int_primitive(int_coeffs(self));
        let mut b = int_primitive(int_coeffs(other));
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            let r = int_pseudo_rem(a, &b);
            if r.is_empty() {
                return from_int_coeffs(&b).monic();
            }
            a = b;
            b = int_primitive(r);
            if a.len() < b.len() {
                std::mem::swap(&mut a, &mut b);
            }
        }
    }

    /// Human-readable form in the given variable, highest power first.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let coeff_part = if mag.is_one() && k > 0 {
                None
            } else {
                Some(rat_to_string(&mag))
            };
            let var_part = match k {
                0 => None,
                1 => Some(var.to_string()),
                _ => Some(format!("{var}^{k}")),
            };
            match (coeff_part, var_part) {
                (Some(c), Some(v)) => {
                    out.push_str(&c);
                    out.push('*');
                    out.push_str(&v);
                }
                (Some(c), None) => out.push_str(&c),
                (None, Some(v)) => out.push_str(&v),
                (None, None) => unreachable!(),
            }
        }
        out
    }
}

fn int_coeffs(p: &UniPoly) -> Vec<BigInt> {
    let (nums, _) = clear_denominators(&p.coeffs);
    nums
}

fn from_int_coeffs(coeffs: &[BigInt]) -> UniPoly {
    UniPoly::new(coeffs.iter().map(|n| Rat::from_integer(n.clone())).collect())
}

fn int_trim(coeffs: &mut Vec<BigInt>) {
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
}

/// Divides out the content (gcd of the coefficients).
fn int_primitive(mut coeffs: Vec<BigInt>) -> Vec<BigInt> {
    int_trim(&mut coeffs);
    let mut content = BigInt::zero();
    for c in &coeffs {
        content = content.gcd(c);
    }
    if content > BigInt::one() {
        for c in &mut coeffs {
            *c = &*c / &content;
        }
    }
    coeffs
}

/// Remainder of `a` by `b` up to a scalar multiple: each round scales `a` by
/// the leading coefficient of `b`, which the primitive scheme divides out
/// again. `b` must be nonzero.
fn int_pseudo_rem(mut a: Vec<BigInt>, b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lead_b = b.last().unwrap();
    while a.len() > db {
        let shift = a.len() - 1 - db;
        let lead_a = a.last().unwrap().clone();
        for c in &mut a {
            *c = &*c * lead_b;
        }
        for (i, bi) in b.iter().enumerate() {
            let v = &a[shift + i] - bi * &lead_a;
            a[shift + i] = v;
        }
        int_trim(&mut a);
    }
    a
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        UniPoly::new(coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        UniPoly::new(coeffs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let v = &coeffs[i + j] + a * b;
                coeffs[i + j] = v;
            }
        }
        UniPoly::new(coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("x"))
    }
}
