//! Newton polygon at infinity: the points `(j, b_j)` formed by each present
//! power `j` of the eliminated variable and the parameter-degree `b_j` of
//! its coefficient, their upper convex hull, and the resulting multiset of
//! root degrees.
//!
//! Expanding the roots of `theta(x, y) = 0` in falling powers of `x`, each
//! root behaves like `c * x^h` for some rational leading exponent `h`. The
//! exponents are read off the hull: every edge of slope `s` contributes
//! `j_end - j_start` roots of degree `h = -s`.

use crate::error::{Error, Result};
use crate::parse::PatternPoly;
use crate::poly::{rat, Rat};

/// One point of the Newton diagram: the coefficient of `main_var^j` has
/// degree `b` in the other variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NewtonPoint {
    pub j: usize,
    pub b: usize,
}

/// An edge of the upper hull between the points at `j_start` and `j_end`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HullEdge {
    pub j_start: usize,
    pub j_end: usize,
    pub slope: Rat,
}

impl HullEdge {
    /// Leading exponent of the roots attached to this edge.
    pub fn root_degree(&self) -> Rat {
        -self.slope.clone()
    }

    /// Number of roots with this leading exponent.
    pub fn multiplicity(&self) -> usize {
        self.j_end - self.j_start
    }
}

/// Root degrees of a polynomial in `main_var`: `t` identically-zero roots
/// (one per missing low power up to the smallest present `j`) and one hull
/// edge per distinct finite leading exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDegreeSummary {
    pub edges: Vec<HullEdge>,
    /// Count of identically-zero roots: the smallest present power of
    /// `main_var`.
    pub t: usize,
    /// Degree in `main_var` after leading trim.
    pub n: usize,
}

/// The Newton points of `p` with respect to `main_var`, sorted by rising
/// `j`. Pattern-level `b` values take the maximum of the support set:
/// generic coefficients cannot cancel the top term.
pub fn newton_points(p: &PatternPoly, main_var: &str) -> Result<Vec<NewtonPoint>> {
    if p.is_zero() {
        return Err(Error::DegenerateInput(
            "cannot form Newton points of an empty support".into(),
        ));
    }
    Ok(p.coeff_supports(main_var)
        .iter()
        .map(|(&j, set)| NewtonPoint {
            j,
            b: *set.iter().next_back().unwrap(),
        })
        .collect())
}

/// Upper convex hull from the smallest `j` to the largest. Collinear
/// interior points are absorbed into a single edge. A single point yields
/// no edges.
pub fn upper_hull(points: &[NewtonPoint]) -> Vec<HullEdge> {
    debug_assert!(points.windows(2).all(|w| w[0].j < w[1].j));
    let mut hull: Vec<NewtonPoint> = Vec::new();
    for &p in points {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) >= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    hull.windows(2)
        .map(|w| HullEdge {
            j_start: w[0].j,
            j_end: w[1].j,
            slope: rat(
                w[1].b as i64 - w[0].b as i64,
                w[1].j as i64 - w[0].j as i64,
            ),
        })
        .collect()
}

fn cross(o: NewtonPoint, a: NewtonPoint, b: NewtonPoint) -> i128 {
    let (oj, ob) = (o.j as i128, o.b as i128);
    let (aj, ab) = (a.j as i128, a.b as i128);
    let (bj, bb) = (b.j as i128, b.b as i128);
    (aj - oj) * (bb - ob) - (ab - ob) * (bj - oj)
}

/// Newton points plus hull, with the zero-root count split out.
pub fn root_degrees(p: &PatternPoly, main_var: &str) -> Result<RootDegreeSummary> {
    let points = newton_points(p, main_var)?;
    let t = points[0].j;
    let n = points[points.len() - 1].j;
    if n == 0 {
        return Err(Error::DegenerateInput(format!(
            "input does not involve `{main_var}`"
        )));
    }
    let edges = upper_hull(&points);
    debug_assert_eq!(
        t + edges.iter().map(HullEdge::multiplicity).sum::<usize>(),
        n
    );
    Ok(RootDegreeSummary { edges, t, n })
}
