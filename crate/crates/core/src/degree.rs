//! The exact generic degree of the elimination equation.
//!
//! Eliminating `y` from `f(x, y) = 0` and `theta(x, y) = 0` produces a
//! polynomial equation in `x` alone. Writing `m` for the `y`-degree of `f`,
//! `b` for the `x`-degree of theta's leading coefficient, and `k_i` for the
//! `x`-degree of `f(x, y_i(x))` along each root `y_i` of theta, the degree
//! of the elimination equation is
//!
//! ```text
//!     m*b + k_1 + k_2 + ... + k_n
//! ```
//!
//! which is always an exact integer even though the individual `k_i` may be
//! fractional. The `k_i` come straight off the Newton polygon: a hull edge
//! with root degree `h` contributes `max_j (b_j + j*h)` once per root.
//!
//! Comparing the two elimination orders counts solutions at infinity: a
//! common factor of the leading coefficients makes some solutions escape,
//! and restoring a generic constant term (genericization) brings them back.

use crate::error::{Error, Result};
use crate::parse::PatternPoly;
use crate::poly::{rat_int, rat_to_int, BiPoly, Degree, Rat, UniPoly};
use crate::polygon::{root_degrees, RootDegreeSummary};

use num_traits::Signed;

/// One hull edge's share of the total degree: `multiplicity` roots of
/// degree `h`, each contributing `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeContribution {
    pub h: Rat,
    pub multiplicity: usize,
    pub k: Rat,
}

/// Full account of the degree computation for one elimination order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeReport {
    /// The eliminated variable.
    pub elim_var: String,
    /// Degree of `f` in the eliminated variable.
    pub m: usize,
    /// Degree of `theta` in the eliminated variable.
    pub n: usize,
    /// Degree (in the other variable) of theta's leading coefficient.
    pub b: usize,
    pub edges: Vec<EdgeContribution>,
    /// Identically-zero roots of theta.
    pub t_theta: usize,
    /// Their share of the degree: `t_theta * deg(A_m)`.
    pub t_contribution: i64,
    pub minding_degree: i64,
    pub bezout_bound: i64,
    pub finck_degree: Option<i64>,
}

/// Degrees in both elimination orders, the genericized degree, and the
/// derived solutions-at-infinity counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfinityReport {
    /// The variable pair `(x, y)` of the analyzed problem.
    pub vars: (String, String),
    /// Degree of the equation in `x` (eliminating `y`).
    pub d_x: i64,
    /// Degree of the equation in `y` (eliminating `x`).
    pub d_y: i64,
    /// Common degree after genericizing the leading coefficients of `f`.
    pub d_gen: i64,
    pub lost_x: i64,
    pub lost_y: i64,
    /// `d_x + d_y - d_gen`, assuming every escaped solution has exactly one
    /// infinite coordinate.
    pub finite_count: i64,
    /// `gcd(A_0, B_0)` of the leading coefficients in the `y` order, known
    /// only for concrete inputs.
    pub gcd_lead_y_order: Option<UniPoly>,
    /// `gcd(alpha_0, beta_0)` in the `x` order, concrete inputs only.
    pub gcd_lead_x_order: Option<UniPoly>,
}

/// Degree of `f(x, c*x^h)` for a root of degree `h`: the maximum of
/// `b_j + j*h` over the present powers `j` of the eliminated variable.
/// Never negative when `f` has a term free of the eliminated variable.
pub fn factor_degree(f: &PatternPoly, elim_var: &str, h: &Rat) -> Result<Rat> {
    if f.is_zero() {
        return Err(Error::DegenerateInput(
            "cannot take the factor degree of an empty support".into(),
        ));
    }
    Ok(f.coeff_supports(elim_var)
        .iter()
        .map(|(&j, set)| {
            let b_j = *set.iter().next_back().unwrap();
            rat_int(b_j as i64) + rat_int(j as i64) * h
        })
        .max()
        .unwrap())
}

/// Product of the total degrees of the two inputs; the classical upper
/// bound on the degree of the elimination equation.
pub fn bezout_bound(f: &PatternPoly, theta: &PatternPoly) -> i64 {
    let df = f.total_degree().finite().unwrap_or(0);
    let dt = theta.total_degree().finite().unwrap_or(0);
    (df * dt) as i64
}

/// The uniform-coefficient special case: when every coefficient of `f` is a
/// dense polynomial of one common degree `m'` with none absent, and likewise
/// `theta` with `n'`, the degree is `m*n' + n*m'`. Any other shape returns
/// `None`; near-misses are deliberately not estimated.
pub fn finck_degree(f: &PatternPoly, theta: &PatternPoly, elim_var: &str) -> Option<i64> {
    let m = f.degree_in(elim_var).finite()?;
    let n = theta.degree_in(elim_var).finite()?;
    let m_prime = uniform_coeff_degree(f, elim_var, m)?;
    let n_prime = uniform_coeff_degree(theta, elim_var, n)?;
    Some((m * n_prime + n * m_prime) as i64)
}

/// The common dense degree of all coefficients, if there is one.
fn uniform_coeff_degree(p: &PatternPoly, elim_var: &str, deg: usize) -> Option<usize> {
    let sets = p.coeff_supports(elim_var);
    let first = sets.get(&0)?;
    let d = *first.iter().next_back().unwrap();
    for j in 0..=deg {
        let set = sets.get(&j)?;
        if set.len() != d + 1 || *set.iter().next_back().unwrap() != d {
            return None;
        }
    }
    Some(d)
}

/// Restores a generic constant term to both leading coefficients of `f`:
/// exponent 0 joins the support of the leading-in-`y` coefficient, and the
/// monomial `x^mu` (with `mu` the `x`-degree of `f`) joins the support so
/// the leading-in-`x` coefficient gains a `y`-free member. `theta` is left
/// unchanged unless `symmetric` is set.
pub fn genericize_leading(
    f: &PatternPoly,
    theta: &PatternPoly,
    symmetric: bool,
) -> (PatternPoly, PatternPoly) {
    (
        genericize_one(f),
        if symmetric {
            genericize_one(theta)
        } else {
            theta.clone()
        },
    )
}

fn genericize_one(p: &PatternPoly) -> PatternPoly {
    let (x, y) = p.vars();
    let (x, y) = (x.to_string(), y.to_string());
    let mut out = p.clone();
    if let Some(m) = p.degree_in(&y).finite() {
        out = out.with_member((0, m));
    }
    if let Some(mu) = p.degree_in(&x).finite() {
        out = out.with_member((mu, 0));
    }
    out
}

/// The degree formula for one elimination order, with all intermediate
/// quantities reported.
pub fn minding_degree(
    f: &PatternPoly,
    theta: &PatternPoly,
    elim_var: &str,
) -> Result<DegreeReport> {
    assert_eq!(f.vars(), theta.vars(), "variable pairs must match");
    let m = match f.degree_in(elim_var) {
        Degree::Finite(m) if m >= 1 => m,
        _ => {
            return Err(Error::DegenerateInput(format!(
                "`f` has no positive degree in `{elim_var}`"
            )))
        }
    };
    if !matches!(theta.degree_in(elim_var), Degree::Finite(n) if n >= 1) {
        return Err(Error::DegenerateInput(format!(
            "`theta` has no positive degree in `{elim_var}`"
        )));
    }

    let summary: RootDegreeSummary = root_degrees(theta, elim_var)?;
    let theta_sets = theta.coeff_supports(elim_var);
    let b = *theta_sets[&summary.n].iter().next_back().unwrap();

    let mut total = rat_int((m * b) as i64);
    let mut edges = Vec::with_capacity(summary.edges.len());
    for edge in &summary.edges {
        let h = edge.root_degree();
        let k = factor_degree(f, elim_var, &h)?;
        total += rat_int(edge.multiplicity() as i64) * &k;
        edges.push(EdgeContribution {
            h,
            multiplicity: edge.multiplicity(),
            k,
        });
    }

    let t_contribution = if summary.t == 0 {
        0
    } else {
        // theta = elim_var^t * rest, so the resultant picks up the factor
        // A_m^t; without a term of f free of the eliminated variable both
        // inputs share that variable as a factor and the resultant is
        // identically zero.
        match f.coeff_supports(elim_var).get(&0) {
            None => {
                return Err(Error::DegenerateSharedFactor {
                    var: elim_var.to_string(),
                })
            }
            Some(set) => (summary.t * set.iter().next_back().unwrap()) as i64,
        }
    };
    total += rat_int(t_contribution);

    if !total.is_integer() || total.is_negative() {
        return Err(Error::InternalInvariant(format!(
            "degree total {total} is not a nonnegative integer (hull bug)"
        )));
    }
    let minding: i64 = rat_to_int(&total)
        .try_into()
        .map_err(|_| Error::InternalInvariant("degree total overflows i64".into()))?;

    let n = summary.n;
    Ok(DegreeReport {
        elim_var: elim_var.to_string(),
        m,
        n,
        b,
        edges,
        t_theta: summary.t,
        t_contribution,
        minding_degree: minding,
        bezout_bound: bezout_bound(f, theta),
        finck_degree: finck_degree(f, theta, elim_var),
    })
}

/// Degrees in both elimination orders plus the genericized degree, which
/// together count the finite solutions and those lost to infinity. When the
/// concrete polynomials are available, the leading-coefficient gcds are
/// reported as well.
pub fn dual_order_analysis(
    f: &PatternPoly,
    theta: &PatternPoly,
    concrete: Option<(&BiPoly, &BiPoly)>,
) -> Result<InfinityReport> {
    assert_eq!(f.vars(), theta.vars(), "variable pairs must match");
    let (x_var, y_var) = f.vars();
    let (x_var, y_var) = (x_var.to_string(), y_var.to_string());
    for (p, name) in [(f, "f"), (theta, "theta")] {
        for v in [&x_var, &y_var] {
            if !matches!(p.degree_in(v), Degree::Finite(d) if d >= 1) {
                return Err(Error::DegenerateInput(format!(
                    "`{name}` must involve both variables (degree in `{v}` is too small)"
                )));
            }
        }
    }

    let d_x = minding_degree(f, theta, &y_var)?.minding_degree;
    let d_y = minding_degree(f, theta, &x_var)?.minding_degree;

    let (f_gen, theta_gen) = genericize_leading(f, theta, false);
    let gen_y = minding_degree(&f_gen, &theta_gen, &y_var)?.minding_degree;
    let gen_x = minding_degree(&f_gen, &theta_gen, &x_var)?.minding_degree;
    if gen_y != gen_x {
        return Err(Error::InternalInvariant(format!(
            "genericized degrees disagree: {gen_y} eliminating `{y_var}` vs {gen_x} eliminating `{x_var}`"
        )));
    }
    let d_gen = gen_y;

    let (gcd_lead_y_order, gcd_lead_x_order) = match concrete {
        None => (None, None),
        Some((fc, tc)) => (
            Some(
                fc.leading_coeff_in(&y_var)
                    .gcd(&tc.leading_coeff_in(&y_var)),
            ),
            Some(
                fc.leading_coeff_in(&x_var)
                    .gcd(&tc.leading_coeff_in(&x_var)),
            ),
        ),
    };

    Ok(InfinityReport {
        vars: (x_var, y_var),
        d_x,
        d_y,
        d_gen,
        lost_x: d_gen - d_x,
        lost_y: d_gen - d_y,
        finite_count: d_x + d_y - d_gen,
        gcd_lead_y_order,
        gcd_lead_x_order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_problem;
    use crate::poly::rat;
    use proptest::prelude::*;

    use crate::fixtures::{EXAMPLE_1, EXAMPLE_2_DEGENERATE, EXAMPLE_2_GENERIC};

    fn patterns_of(text: &str) -> (PatternPoly, PatternPoly) {
        parse_problem(text).unwrap().patterns().unwrap()
    }

    #[test]
    fn factor_degree_examples() {
        let (f, _) = patterns_of(EXAMPLE_1);
        assert_eq!(factor_degree(&f, "y", &rat(1, 2)).unwrap(), rat(11, 2));
        assert_eq!(factor_degree(&f, "y", &rat(-5, 3)).unwrap(), rat_int(5));

        // f = y - x: points (1, 0) and (0, 1), h = 1 gives max(0+1, 1+0) = 1
        let f = PatternPoly::new(("x", "y"), [(0, 1), (1, 0)]);
        assert_eq!(factor_degree(&f, "y", &rat_int(1)).unwrap(), rat_int(1));
    }

    #[test]
    fn first_example_degree_58() {
        let (f, theta) = patterns_of(EXAMPLE_1);
        let report = minding_degree(&f, &theta, "y").unwrap();
        assert_eq!(report.m, 4);
        assert_eq!(report.n, 5);
        assert_eq!(report.b, 8);
        assert_eq!(report.t_theta, 0);
        assert_eq!(report.minding_degree, 58);
        assert_eq!(report.bezout_bound, 78);
        assert_eq!(report.finck_degree, None);
        // m*b = 32, edge contributions 3*5 + 2*(11/2)
        assert_eq!(report.edges.len(), 2);
        assert_eq!(report.edges[0].h, rat(-5, 3));
        assert_eq!(report.edges[0].multiplicity, 3);
        assert_eq!(report.edges[0].k, rat_int(5));
        assert_eq!(report.edges[1].h, rat(1, 2));
        assert_eq!(report.edges[1].multiplicity, 2);
        assert_eq!(report.edges[1].k, rat(11, 2));
    }

    #[test]
    fn second_example_generic_agrees_in_both_orders() {
        let (f, theta) = patterns_of(EXAMPLE_2_GENERIC);
        assert_eq!(minding_degree(&f, &theta, "y").unwrap().minding_degree, 26);
        assert_eq!(minding_degree(&f, &theta, "x").unwrap().minding_degree, 26);
    }

    #[test]
    fn second_example_degenerate_splits() {
        let (f, theta) = patterns_of(EXAMPLE_2_DEGENERATE);
        assert_eq!(minding_degree(&f, &theta, "y").unwrap().minding_degree, 25);
        assert_eq!(minding_degree(&f, &theta, "x").unwrap().minding_degree, 24);
    }

    #[test]
    fn zero_roots_contribute_through_the_constant_coefficient() {
        // f = y - 1, theta = x*y^3 + x^2*y^2
        let f = PatternPoly::new(("x", "y"), [(0, 1), (0, 0)]);
        let theta = PatternPoly::new(("x", "y"), [(1, 3), (2, 2)]);
        let report = minding_degree(&f, &theta, "y").unwrap();
        assert_eq!(report.m, 1);
        assert_eq!(report.b, 1);
        assert_eq!(report.t_theta, 2);
        assert_eq!(report.t_contribution, 0);
        assert_eq!(report.edges.len(), 1);
        assert_eq!(report.edges[0].k, rat_int(1));
        assert_eq!(report.minding_degree, 2);
    }

    #[test]
    fn shared_elimination_variable_factor_is_degenerate() {
        // both divisible by y
        let f = PatternPoly::new(("x", "y"), [(1, 1), (0, 2)]);
        let theta = PatternPoly::new(("x", "y"), [(0, 1)]);
        assert_eq!(
            minding_degree(&f, &theta, "y"),
            Err(Error::DegenerateSharedFactor { var: "y".into() })
        );
    }

    #[test]
    fn bezout_examples() {
        let (f1, t1) = patterns_of(EXAMPLE_1);
        assert_eq!(bezout_bound(&f1, &t1), 78);
        let f = PatternPoly::new(("x", "y"), [(0, 1), (1, 0)]);
        let t = PatternPoly::new(("x", "y"), [(0, 1), (1, 0)]);
        assert_eq!(bezout_bound(&f, &t), 1);
        let (f2, t2) = patterns_of(EXAMPLE_2_GENERIC);
        assert_eq!(bezout_bound(&f2, &t2), 42);
    }

    #[test]
    fn finck_rule_applies_to_uniform_dense_shapes() {
        // m = n = 2, f coefficients all (x^3), theta coefficients all (x^1)
        let f = PatternPoly::new(
            ("x", "y"),
            (0..=2usize).flat_map(|j| (0..=3usize).map(move |i| (i, j))),
        );
        let theta = PatternPoly::new(
            ("x", "y"),
            (0..=2usize).flat_map(|j| (0..=1usize).map(move |i| (i, j))),
        );
        assert_eq!(finck_degree(&f, &theta, "y"), Some(8));
        assert_eq!(minding_degree(&f, &theta, "y").unwrap().minding_degree, 8);

        // all-constant coefficients: resultant is a constant
        let f = PatternPoly::new(("x", "y"), [(0, 0), (0, 1), (0, 2)]);
        let theta = PatternPoly::new(("x", "y"), [(0, 0), (0, 1)]);
        assert_eq!(finck_degree(&f, &theta, "y"), Some(0));

        // first example: coefficient degrees differ
        let (f1, t1) = patterns_of(EXAMPLE_1);
        assert_eq!(finck_degree(&f1, &t1, "y"), None);

        // a missing coefficient disqualifies the rule
        let gap = PatternPoly::new(("x", "y"), [(0, 0), (0, 2)]);
        let theta = PatternPoly::new(("x", "y"), [(0, 0), (0, 1)]);
        assert_eq!(finck_degree(&gap, &theta, "y"), None);
    }

    #[test]
    fn genericize_restores_the_degenerate_coefficients() {
        let (f_deg, theta_deg) = patterns_of(EXAMPLE_2_DEGENERATE);
        let (f_gen, theta_gen) = patterns_of(EXAMPLE_2_GENERIC);
        let (f_fixed, theta_fixed) = genericize_leading(&f_deg, &theta_deg, false);
        assert_eq!(f_fixed, f_gen);
        assert_eq!(theta_fixed, theta_deg);
        assert_eq!(theta_gen, theta_deg);

        // idempotent on already-generic inputs
        let (again, _) = genericize_leading(&f_gen, &theta_gen, false);
        assert_eq!(again, f_gen);

        // literal rule on f = x*y
        let f = PatternPoly::new(("x", "y"), [(1, 1)]);
        let theta = PatternPoly::new(("x", "y"), [(0, 1)]);
        let (f2, _) = genericize_leading(&f, &theta, false);
        assert!(f2.contains((0, 1)));
        assert!(f2.contains((1, 0)));
        assert!(f2.contains((1, 1)));
        assert_eq!(f2.members().count(), 3);
    }

    #[test]
    fn symmetric_genericization_also_touches_theta() {
        let f = PatternPoly::new(("x", "y"), [(1, 1)]);
        let theta = PatternPoly::new(("x", "y"), [(2, 2)]);
        let (_, theta_sym) = genericize_leading(&f, &theta, true);
        assert!(theta_sym.contains((0, 2)));
        assert!(theta_sym.contains((2, 0)));
        let (_, theta_plain) = genericize_leading(&f, &theta, false);
        assert_eq!(theta_plain, theta);
    }

    #[test]
    fn dual_order_of_second_example() {
        let (f, theta) = patterns_of(EXAMPLE_2_DEGENERATE);
        let report = dual_order_analysis(&f, &theta, None).unwrap();
        assert_eq!(report.d_x, 25);
        assert_eq!(report.d_y, 24);
        assert_eq!(report.d_gen, 26);
        assert_eq!(report.lost_x, 1);
        assert_eq!(report.lost_y, 2);
        assert_eq!(report.finite_count, 23);

        let (f, theta) = patterns_of(EXAMPLE_2_GENERIC);
        let report = dual_order_analysis(&f, &theta, None).unwrap();
        assert_eq!((report.d_x, report.d_y, report.d_gen), (26, 26, 26));
        assert_eq!(report.finite_count, 26);
    }

    #[test]
    fn dual_order_of_a_single_intersection() {
        let spec = parse_problem("f = y - x\ntheta = y + x").unwrap();
        let (f, theta) = spec.patterns().unwrap();
        let (fc, tc) = spec.concrete().unwrap();
        let report = dual_order_analysis(&f, &theta, Some((fc, tc))).unwrap();
        assert_eq!((report.d_x, report.d_y, report.d_gen), (1, 1, 1));
        assert_eq!(report.finite_count, 1);
        assert_eq!(report.gcd_lead_y_order.unwrap(), UniPoly::one());
        assert_eq!(report.gcd_lead_x_order.unwrap(), UniPoly::one());
    }

    #[test]
    fn dual_order_gcds_of_concrete_second_example() {
        // a = l = 0 instance: f = 2x^2y^4 + (3+5x)y^2 + 7x^3y + 11 + 13x^2
        //                      theta = 2x^5y^2 + (3+5x^2)y + 7 + 11x^4
        let text = "f = 2*x^2*y^4 + 3*y^2 + 5*x*y^2 + 7*x^3*y + 11 + 13*x^2\n\
                    theta = 2*x^5*y^2 + 3*y + 5*x^2*y + 7 + 11*x^4";
        let spec = parse_problem(text).unwrap();
        let (f, theta) = spec.patterns().unwrap();
        let (fc, tc) = spec.concrete().unwrap();
        let report = dual_order_analysis(&f, &theta, Some((fc, tc))).unwrap();
        assert_eq!((report.d_x, report.d_y, report.d_gen), (25, 24, 26));
        assert_eq!(report.finite_count, 23);
        // gcd(A_0, B_0) = gcd(2x^2, 2x^5) = x^2
        assert_eq!(
            report.gcd_lead_y_order.unwrap(),
            UniPoly::monomial(2, rat_int(1))
        );
        // gcd(alpha_0, beta_0) = gcd(7y, 2y^2) = y
        assert_eq!(
            report.gcd_lead_x_order.unwrap(),
            UniPoly::monomial(1, rat_int(1))
        );
    }

    #[test]
    fn first_example_has_no_infinite_solutions() {
        let (f, theta) = patterns_of(EXAMPLE_1);
        let report = dual_order_analysis(&f, &theta, None).unwrap();
        assert_eq!((report.d_x, report.d_y, report.d_gen), (58, 58, 58));
    }

    pub(crate) fn arbitrary_pattern(
        max_main_deg: usize,
        max_coeff_deg: usize,
    ) -> impl Strategy<Value = PatternPoly> {
        (1..=max_main_deg, proptest::collection::btree_set((0usize..=max_coeff_deg, 0usize..=max_main_deg), 1..10))
            .prop_map(move |(m, mut members)| {
                // force a presence at the top power so the pattern's degree is m
                members.insert((0, m));
                members.retain(|&(_, j)| j <= m);
                PatternPoly::new(("x", "y"), members)
            })
    }

    proptest! {
        #[test]
        fn degree_is_integer_and_bounded(
            f in arbitrary_pattern(5, 6),
            theta in arbitrary_pattern(5, 6),
        ) {
            match minding_degree(&f, &theta, "y") {
                Ok(report) => {
                    prop_assert!(report.minding_degree >= 0);
                    prop_assert!(report.minding_degree <= report.bezout_bound);
                }
                Err(Error::DegenerateSharedFactor { .. }) => {}
                Err(other) => return Err(TestCaseError::fail(format!("{other}"))),
            }
        }

        #[test]
        fn finck_agrees_with_the_general_formula(
            m in 1usize..=4, n in 1usize..=4,
            m_prime in 0usize..=4, n_prime in 0usize..=4,
        ) {
            let f = PatternPoly::new(
                ("x", "y"),
                (0..=m).flat_map(|j| (0..=m_prime).map(move |i| (i, j))),
            );
            let theta = PatternPoly::new(
                ("x", "y"),
                (0..=n).flat_map(|j| (0..=n_prime).map(move |i| (i, j))),
            );
            let expected = (m * n_prime + n * m_prime) as i64;
            prop_assert_eq!(finck_degree(&f, &theta, "y"), Some(expected));
            prop_assert_eq!(minding_degree(&f, &theta, "y").unwrap().minding_degree, expected);
        }

        #[test]
        fn genericization_never_lowers_the_degree(
            f in arbitrary_pattern(4, 5),
            theta in arbitrary_pattern(4, 5),
        ) {
            prop_assume!(matches!(f.degree_in("x"), Degree::Finite(d) if d >= 1));
            prop_assume!(matches!(theta.degree_in("x"), Degree::Finite(d) if d >= 1));
            match dual_order_analysis(&f, &theta, None) {
                Ok(report) => {
                    prop_assert!(report.lost_x >= 0);
                    prop_assert!(report.lost_y >= 0);
                    prop_assert!(report.finite_count <= report.d_x.min(report.d_y));
                }
                Err(Error::DegenerateSharedFactor { .. }) => {}
                Err(other) => return Err(TestCaseError::fail(format!("{other}"))),
            }
        }

        #[test]
        fn constant_leading_gcds_mean_equal_degrees(
            f in arbitrary_pattern(4, 5),
            theta in arbitrary_pattern(4, 5),
        ) {
            prop_assume!(matches!(f.degree_in("x"), Degree::Finite(d) if d >= 1));
            prop_assume!(matches!(theta.degree_in("x"), Degree::Finite(d) if d >= 1));
            // generic leading coefficients share only a forced power of the
            // parameter; the gcd is constant iff one of the two supports
            // reaches exponent zero
            let const_gcd = |p: &PatternPoly, q: &PatternPoly, main: &str| {
                let top_p = p.degree_in(main).finite().unwrap();
                let top_q = q.degree_in(main).finite().unwrap();
                let min_p = *p.coeff_supports(main)[&top_p].iter().next().unwrap();
                let min_q = *q.coeff_supports(main)[&top_q].iter().next().unwrap();
                min_p.min(min_q) == 0
            };
            prop_assume!(const_gcd(&f, &theta, "y") && const_gcd(&f, &theta, "x"));
            match (minding_degree(&f, &theta, "y"), minding_degree(&f, &theta, "x")) {
                (Ok(ry), Ok(rx)) => prop_assert_eq!(ry.minding_degree, rx.minding_degree),
                (Err(Error::DegenerateSharedFactor { .. }), _)
                | (_, Err(Error::DegenerateSharedFactor { .. })) => {}
                (Err(e), _) | (_, Err(e)) => return Err(TestCaseError::fail(format!("{e}"))),
            }
        }
    }
}
