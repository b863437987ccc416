//! Problem files: parsing, pattern polynomials, canonical printing, and
//! report rendering.
//!
//! A problem file defines the two input polynomials, either with concrete
//! rational coefficients or as shapes with generic coefficients. The token
//! `(x^d)` stands for a generic dense polynomial of degree `d` in `x`, and
//! `#` marks a single generic coefficient; either token switches the whole
//! file to pattern mode.

mod grammar;
mod printer;
mod render;

pub use grammar::parse_problem;
pub use printer::canonical_text;
pub use render::{
    degree_report_value, infinity_report_value, pretty, rat_value, render_report,
    verification_value, Format, Report,
};

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::poly::{BiPoly, Degree};

/// A bivariate polynomial shape: monomials that carry generic (symbolically
/// nonzero, algebraically independent) coefficients. Stored as the set of
/// exponent pairs `(i, j)` with `i` the power of the first variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternPoly {
    vars: (String, String),
    support: BTreeSet<(usize, usize)>,
}

impl PatternPoly {
    pub fn new<I>(vars: (&str, &str), members: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        assert_ne!(vars.0, vars.1, "variables must be distinct");
        PatternPoly {
            vars: (vars.0.to_string(), vars.1.to_string()),
            support: members.into_iter().collect(),
        }
    }

    pub fn vars(&self) -> (&str, &str) {
        (&self.vars.0, &self.vars.1)
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn members(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.support.iter().copied()
    }

    pub fn contains(&self, member: (usize, usize)) -> bool {
        self.support.contains(&member)
    }

    /// Copy with one more generic monomial.
    pub fn with_member(&self, member: (usize, usize)) -> PatternPoly {
        let mut out = self.clone();
        out.support.insert(member);
        out
    }

    fn axis(&self, var: &str) -> usize {
        if var == self.vars.0 {
            0
        } else if var == self.vars.1 {
            1
        } else {
            panic!("variable `{var}` does not belong to this pattern");
        }
    }

    pub fn degree_in(&self, var: &str) -> Degree {
        let axis = self.axis(var);
        self.support
            .iter()
            .map(|&(i, j)| if axis == 0 { i } else { j })
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    /// Maximum of `i + j` over the support.
    pub fn total_degree(&self) -> Degree {
        self.support
            .iter()
            .map(|&(i, j)| i + j)
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    /// Support sets with respect to `main_var`: for each present power `j`
    /// of `main_var`, the set of exponents of the other variable carrying a
    /// generic coefficient. Every returned set is nonempty; an absent `j`
    /// means the coefficient of `main_var^j` is identically zero.
    pub fn coeff_supports(&self, main_var: &str) -> BTreeMap<usize, BTreeSet<usize>> {
        let axis = self.axis(main_var);
        let mut sets: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
        for &(i, j) in &self.support {
            let (main, other) = if axis == 0 { (i, j) } else { (j, i) };
            sets.entry(main).or_default().insert(other);
        }
        sets
    }
}

/// Shape of a concrete polynomial: one generic member per nonzero
/// coefficient.
pub fn pattern_of(p: &BiPoly) -> Result<PatternPoly> {
    if p.is_zero() {
        return Err(Error::DegenerateInput(
            "the zero polynomial has no pattern".into(),
        ));
    }
    Ok(PatternPoly::new(
        p.vars(),
        p.support().map(|(exps, _)| exps),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Concrete,
    Pattern,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Concrete => "concrete",
            Mode::Pattern => "pattern",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProblemPolys {
    Concrete { f: BiPoly, theta: BiPoly },
    Pattern { f: PatternPoly, theta: PatternPoly },
}

/// A parsed problem: the pair `(f, theta)` in one of the two modes, plus a
/// flag recording that concrete coefficients were absorbed into a pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemSpec {
    vars: (String, String),
    polys: ProblemPolys,
    mixed_warning: bool,
}

impl ProblemSpec {
    pub fn new_concrete(f: BiPoly, theta: BiPoly) -> Self {
        assert_eq!(f.vars(), theta.vars(), "variable pairs must match");
        let vars = (f.vars().0.to_string(), f.vars().1.to_string());
        ProblemSpec {
            vars,
            polys: ProblemPolys::Concrete { f, theta },
            mixed_warning: false,
        }
    }

    pub fn new_pattern(f: PatternPoly, theta: PatternPoly, mixed_warning: bool) -> Self {
        assert_eq!(f.vars(), theta.vars(), "variable pairs must match");
        let vars = (f.vars().0.to_string(), f.vars().1.to_string());
        ProblemSpec {
            vars,
            polys: ProblemPolys::Pattern { f, theta },
            mixed_warning,
        }
    }

    pub fn mode(&self) -> Mode {
        match self.polys {
            ProblemPolys::Concrete { .. } => Mode::Concrete,
            ProblemPolys::Pattern { .. } => Mode::Pattern,
        }
    }

    pub fn vars(&self) -> (&str, &str) {
        (&self.vars.0, &self.vars.1)
    }

    pub fn polys(&self) -> &ProblemPolys {
        &self.polys
    }

    pub fn mixed_warning(&self) -> bool {
        self.mixed_warning
    }

    /// The concrete pair, when the problem is in concrete mode.
    pub fn concrete(&self) -> Option<(&BiPoly, &BiPoly)> {
        match &self.polys {
            ProblemPolys::Concrete { f, theta } => Some((f, theta)),
            ProblemPolys::Pattern { .. } => None,
        }
    }

    /// The pattern pair, taking shapes of concrete inputs when necessary.
    pub fn patterns(&self) -> Result<(PatternPoly, PatternPoly)> {
        match &self.polys {
            ProblemPolys::Pattern { f, theta } => Ok((f.clone(), theta.clone())),
            ProblemPolys::Concrete { f, theta } => Ok((pattern_of(f)?, pattern_of(theta)?)),
        }
    }
}
