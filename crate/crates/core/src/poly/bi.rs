//! Sparse bivariate polynomials over exact rationals.

use std::collections::BTreeMap;
use std::ops::{Add, Mul};

use num_traits::{One, Zero};

use super::rat::Rat;
use super::uni::UniPoly;
use super::Degree;
use crate::error::{Error, Result};

/// Bivariate polynomial as a finite map from exponent pairs to nonzero
/// coefficients. The exponent pair is `(i, j)` with `i` the power of the
/// first variable and `j` the power of the second.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiPoly {
    vars: (String, String),
    support: BTreeMap<(usize, usize), Rat>,
}

impl BiPoly {
    pub fn new<I>(vars: (&str, &str), terms: I) -> Self
    where
        I: IntoIterator<Item = ((usize, usize), Rat)>,
    {
        assert_ne!(vars.0, vars.1, "variables must be distinct");
        let mut support: BTreeMap<(usize, usize), Rat> = BTreeMap::new();
        for (exps, c) in terms {
            if c.is_zero() {
                continue;
            }
            let entry = support.entry(exps).or_insert_with(Rat::zero);
            *entry = &*entry + &c;
            if entry.is_zero() {
                support.remove(&exps);
            }
        }
        BiPoly {
            vars: (vars.0.to_string(), vars.1.to_string()),
            support,
        }
    }

    pub fn zero(vars: (&str, &str)) -> Self {
        BiPoly::new(vars, std::iter::empty())
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn vars(&self) -> (&str, &str) {
        (&self.vars.0, &self.vars.1)
    }

    pub fn support(&self) -> impl Iterator<Item = ((usize, usize), &Rat)> {
        self.support.iter().map(|(&e, c)| (e, c))
    }

    fn axis(&self, var: &str) -> usize {
        if var == self.vars.0 {
            0
        } else if var == self.vars.1 {
            1
        } else {
            panic!("variable `{var}` does not belong to this polynomial");
        }
    }

    fn exp_on(&self, exps: (usize, usize), axis: usize) -> usize {
        if axis == 0 {
            exps.0
        } else {
            exps.1
        }
    }

    pub fn degree_in(&self, var: &str) -> Degree {
        let axis = self.axis(var);
        self.support
            .keys()
            .map(|&e| self.exp_on(e, axis))
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    /// Coefficients with respect to `main_var`, from the highest power down
    /// to power 0; each entry is a polynomial in the other variable. The
    /// first entry is nonzero by construction.
    pub fn coeffs_in(&self, main_var: &str) -> Result<Vec<UniPoly>> {
        let axis = self.axis(main_var);
        let deg = match self.degree_in(main_var).finite() {
            Some(d) => d,
            None => {
                return Err(Error::DegenerateInput(
                    "cannot take coefficients of the zero polynomial".into(),
                ))
            }
        };
        let mut buckets: Vec<Vec<Rat>> = vec![Vec::new(); deg + 1];
        for (&exps, c) in &self.support {
            let main = self.exp_on(exps, axis);
            let other = self.exp_on(exps, 1 - axis);
            let bucket = &mut buckets[main];
            if bucket.len() <= other {
                bucket.resize(other + 1, Rat::zero());
            }
            bucket[other] = c.clone();
        }
        Ok(buckets.into_iter().rev().map(UniPoly::new).collect())
    }

    /// Inverse of [`coeffs_in`](Self::coeffs_in): rebuilds the bivariate
    /// polynomial from coefficients listed highest power first.
    pub fn from_coeffs_in(vars: (&str, &str), main_var: &str, coeffs: &[UniPoly]) -> Self {
        let main_axis = if main_var == vars.0 { 0 } else { 1 };
        let deg = coeffs.len().saturating_sub(1);
        let mut terms = Vec::new();
        for (k, c) in coeffs.iter().enumerate() {
            let main = deg - k;
            for (other, v) in c.coeffs().iter().enumerate() {
                let exps = if main_axis == 0 {
                    (main, other)
                } else {
                    (other, main)
                };
                terms.push((exps, v.clone()));
            }
        }
        BiPoly::new(vars, terms)
    }

    /// Leading coefficient with respect to `main_var`, as a polynomial in
    /// the other variable; zero for the zero polynomial.
    pub fn leading_coeff_in(&self, main_var: &str) -> UniPoly {
        match self.coeffs_in(main_var) {
            Ok(coeffs) => coeffs.into_iter().next().unwrap(),
            Err(_) => UniPoly::zero(),
        }
    }

    /// Substitutes the first variable with `x0`, returning the resulting
    /// polynomial in the second variable.
    pub fn eval_x(&self, x0: &Rat) -> UniPoly {
        let deg_y = match self.degree_in(&self.vars.1).finite() {
            Some(d) => d,
            None => return UniPoly::zero(),
        };
        // powers of x0 up to the x-degree, computed once
        let deg_x = self.degree_in(&self.vars.0).finite().unwrap_or(0);
        let mut powers = Vec::with_capacity(deg_x + 1);
        powers.push(Rat::one());
        for _ in 0..deg_x {
            powers.push(powers.last().unwrap() * x0);
        }
        let mut coeffs = vec![Rat::zero(); deg_y + 1];
        for (&(i, j), c) in &self.support {
            let v = &coeffs[j] + c * &powers[i];
            coeffs[j] = v;
        }
        UniPoly::new(coeffs)
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        assert_eq!(self.vars, rhs.vars, "variable pairs must match");
        let terms = self
            .support()
            .map(|(e, c)| (e, c.clone()))
            .chain(rhs.support().map(|(e, c)| (e, c.clone())));
        BiPoly::new(self.vars(), terms)
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        assert_eq!(self.vars, rhs.vars, "variable pairs must match");
        let mut terms = Vec::new();
        for ((i1, j1), a) in self.support() {
            for ((i2, j2), b) in rhs.support() {
                terms.push(((i1 + i2, j1 + j2), a * b));
            }
        }
        BiPoly::new(self.vars(), terms)
    }
}
