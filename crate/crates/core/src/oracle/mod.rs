//! Ground truth for the degree predictions: exact resultants via the
//! Sylvester matrix, deterministic random instantiation of patterns, and
//! statistical verification that the predicted degree is attained.
//!
//! Two independent determinant backends are kept deliberately: Bareiss
//! elimination directly over polynomial entries, and evaluation at enough
//! integer nodes followed by exact interpolation. They must agree bit for
//! bit; a mismatch signals an implementation bug, never a property of the
//! input.

mod det;

use det::{bareiss_determinant, integerize_rows};
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::degree::minding_degree;
use crate::error::{Error, Result};
use crate::parse::{PatternPoly, ProblemSpec};
use crate::poly::{rat, rat_int, BiPoly, Degree, Rat, UniPoly};

/// The classical `(m+n) x (m+n)` elimination matrix: `n` shifted rows of
/// `f`'s coefficients `[A_0 ... A_m]` followed by `m` shifted rows of
/// theta's `[B_0 ... B_n]`, all polynomials in the non-eliminated variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SylvesterMatrix {
    elim_var: String,
    other_var: String,
    /// Degree of `f` in the eliminated variable.
    m: usize,
    /// Degree of `theta` in the eliminated variable.
    n: usize,
    entries: Vec<Vec<UniPoly>>,
    degree_bound: usize,
}

impl SylvesterMatrix {
    pub fn size(&self) -> usize {
        self.m + self.n
    }

    pub fn entry(&self, row: usize, col: usize) -> &UniPoly {
        &self.entries[row][col]
    }

    pub fn rows(&self) -> &[Vec<UniPoly>] {
        &self.entries
    }

    /// `n * max_j deg(A_j) + m * max_j deg(B_j)`: no determinant term can
    /// exceed this degree.
    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn elim_var(&self) -> &str {
        &self.elim_var
    }

    pub fn other_var(&self) -> &str {
        &self.other_var
    }
}

/// Builds the Sylvester matrix of `f` and `theta` with respect to
/// `elim_var`.
pub fn sylvester(f: &BiPoly, theta: &BiPoly, elim_var: &str) -> Result<SylvesterMatrix> {
    assert_eq!(f.vars(), theta.vars(), "variable pairs must match");
    let (x, y) = f.vars();
    let other_var = if elim_var == y { x } else { y };
    let m = match f.degree_in(elim_var) {
        Degree::Finite(d) if d >= 1 => d,
        _ => {
            return Err(Error::DegenerateInput(format!(
                "`f` is constant in `{elim_var}`"
            )))
        }
    };
    let n = match theta.degree_in(elim_var) {
        Degree::Finite(d) if d >= 1 => d,
        _ => {
            return Err(Error::DegenerateInput(format!(
                "`theta` is constant in `{elim_var}`"
            )))
        }
    };
    let f_coeffs = f.coeffs_in(elim_var)?;
    let t_coeffs = theta.coeffs_in(elim_var)?;
    let max_deg = |coeffs: &[UniPoly]| {
        coeffs
            .iter()
            .filter_map(|c| c.degree().finite())
            .max()
            .unwrap_or(0)
    };
    let degree_bound = n * max_deg(&f_coeffs) + m * max_deg(&t_coeffs);

    let size = m + n;
    let mut entries = vec![vec![UniPoly::zero(); size]; size];
    for row in 0..n {
        for (k, c) in f_coeffs.iter().enumerate() {
            entries[row][row + k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in t_coeffs.iter().enumerate() {
            entries[n + row][row + k] = c.clone();
        }
    }
    Ok(SylvesterMatrix {
        elim_var: elim_var.to_string(),
        other_var: other_var.to_string(),
        m,
        n,
        entries,
        degree_bound,
    })
}

/// Determinant backend selection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Evaluate at integer nodes, take exact scalar determinants, and
    /// interpolate.
    Interp,
    /// Bareiss elimination over the polynomial entries.
    FractionFree,
    /// Run both and insist they agree.
    Both,
}

impl Method {
    /// Default policy: cross-check both backends at desk scale, fall back
    /// to interpolation for larger matrices.
    pub fn auto(size: usize) -> Method {
        if size <= 12 {
            Method::Both
        } else {
            Method::Interp
        }
    }
}

/// Exact resultant of `f` and `theta` with respect to `elim_var`: the
/// determinant of their Sylvester matrix, a polynomial in the remaining
/// variable.
pub fn resultant(f: &BiPoly, theta: &BiPoly, elim_var: &str, method: Method) -> Result<UniPoly> {
    let matrix = sylvester(f, theta, elim_var)?;
    matrix_determinant(&matrix, method)
}

fn matrix_determinant(matrix: &SylvesterMatrix, method: Method) -> Result<UniPoly> {
    match method {
        Method::FractionFree => Ok(det_fraction_free(matrix)),
        Method::Interp => Ok(det_by_interpolation(matrix)),
        Method::Both => {
            let direct = det_fraction_free(matrix);
            let interpolated = det_by_interpolation(matrix);
            if direct != interpolated {
                return Err(Error::MethodMismatch);
            }
            Ok(direct)
        }
    }
}

fn det_fraction_free(matrix: &SylvesterMatrix) -> UniPoly {
    let (rows, scale) = integerize_rows(&matrix.entries);
    bareiss_determinant(rows).into_uni_scaled(&scale)
}

/// Interpolation node sequence 0, 1, -1, 2, -2, ...
fn node(idx: usize) -> i64 {
    let k = idx.div_ceil(2) as i64;
    if idx % 2 == 1 {
        k
    } else {
        -k
    }
}

fn det_by_interpolation(matrix: &SylvesterMatrix) -> UniPoly {
    // The determinant is a polynomial identity in the entries, so nodes
    // where leading coefficients vanish are still correct pointwise and are
    // not skipped.
    let (rows, scale) = integerize_rows(&matrix.entries);
    let count = matrix.degree_bound() + 1;
    let xs: Vec<Rat> = (0..count).map(|i| rat_int(node(i))).collect();
    let ys: Vec<Rat> = (0..count)
        .map(|i| {
            let x0 = BigInt::from(node(i));
            let scalar: Vec<Vec<BigInt>> = rows
                .iter()
                .map(|row| row.iter().map(|e| e.eval(&x0)).collect())
                .collect();
            Rat::new(bareiss_determinant(scalar), scale.clone())
        })
        .collect();
    interpolate(&xs, ys)
}

/// Newton divided-difference interpolation through distinct nodes.
fn interpolate(xs: &[Rat], mut dd: Vec<Rat>) -> UniPoly {
    let count = xs.len();
    for level in 1..count {
        for i in (level..count).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = &xs[i] - &xs[i - level];
            dd[i] = num / den;
        }
    }
    let mut result = UniPoly::zero();
    let mut basis = UniPoly::one();
    for (i, coeff) in dd.iter().enumerate() {
        result = &result + &basis.scale(coeff);
        if i + 1 < count {
            basis = &basis * &UniPoly::new(vec![-&xs[i], Rat::one()]);
        }
    }
    result
}

/// Resultant of two univariate polynomials (used to cross-check the
/// bivariate computation after specialization).
pub fn uni_resultant(p: &UniPoly, q: &UniPoly) -> Rat {
    let (dp, dq) = match (p.degree().finite(), q.degree().finite()) {
        (Some(dp), Some(dq)) => (dp, dq),
        _ => return Rat::zero(),
    };
    if dp == 0 {
        return pow_rat(p.coeff(0), dq);
    }
    if dq == 0 {
        return pow_rat(q.coeff(0), dp);
    }
    let size = dp + dq;
    let mut entries = vec![vec![Rat::zero(); size]; size];
    for row in 0..dq {
        for k in 0..=dp {
            entries[row][row + k] = p.coeff(dp - k);
        }
    }
    for row in 0..dp {
        for k in 0..=dq {
            entries[dq + row][row + k] = q.coeff(dq - k);
        }
    }
    bareiss_determinant(entries)
}

fn pow_rat(base: Rat, mut exp: usize) -> Rat {
    let mut result = Rat::one();
    let mut base = base;
    while exp > 0 {
        if exp & 1 == 1 {
            result *= &base;
        }
        base = &base * &base;
        exp >>= 1;
    }
    result
}

/// The fixed 64-bit mixing function keying all random draws; reproducible
/// across platforms and independent of iteration order.
pub fn splitmix64(seed: u64) -> u64 {
    let mut z = seed.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn coefficient_key(seed: u64, i: usize, j: usize) -> u64 {
    let a = splitmix64(seed ^ splitmix64(i as u64));
    splitmix64(a ^ splitmix64((j as u64) << 1 | 1))
}

/// Instantiates a pattern: every generic member `(i, j)` receives an
/// integer drawn uniformly from `[-bound, bound]` excluding zero, keyed by
/// `(seed, i, j)` so the draw does not depend on iteration order.
pub fn sample_instance(p: &PatternPoly, seed: u64, bound: u64) -> BiPoly {
    assert!(bound >= 1, "coefficient bound must be at least 1");
    assert!(bound <= (1 << 62), "coefficient bound too large");
    let terms = p.members().map(|(i, j)| {
        let key = coefficient_key(seed, i, j);
        let r = (key % (2 * bound)) as i64;
        let c = r - bound as i64;
        let c = if c >= 0 { c + 1 } else { c };
        ((i, j), rat_int(c))
    });
    BiPoly::new(p.vars(), terms)
}

/// One sampled instance and the degree its resultant came out at.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialOutcome {
    /// Seed-derived instance id.
    pub id: u64,
    /// Degree of the sampled resultant; `None` when it vanished.
    pub observed_degree: Option<i64>,
    /// The resultant was identically zero.
    pub zero: bool,
}

/// Outcome of a verification run: the prediction, per-trial observations,
/// and the fraction of trials that attained the prediction exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationResult {
    pub predicted: i64,
    pub trials: Vec<TrialOutcome>,
    pub agreement: Rat,
    pub max_observed: Option<i64>,
}

fn trial_seed(seed: u64, trial: usize) -> u64 {
    splitmix64(seed ^ splitmix64(trial as u64 ^ 0x5EED_0000_0000_0001))
}

/// Samples `trials` instances of the problem and checks each resultant's
/// degree against the prediction. An observation above the prediction is an
/// internal invariant violation: the formula is a generic upper bound.
pub fn verify_degree(
    problem: &ProblemSpec,
    elim_var: &str,
    trials: usize,
    seed: u64,
    bound: u64,
) -> Result<VerificationResult> {
    if trials == 0 {
        return Err(Error::DegenerateInput("at least one trial is required".into()));
    }
    let (f_pat, theta_pat) = problem.patterns()?;
    let predicted = minding_degree(&f_pat, &theta_pat, elim_var)?.minding_degree;

    let mut outcomes = Vec::with_capacity(trials);
    let mut matches = 0usize;
    let mut max_observed: Option<i64> = None;
    for trial in 0..trials {
        let id = trial_seed(seed, trial);
        let f_inst = sample_instance(&f_pat, splitmix64(id ^ u64::from(b'f')), bound);
        let theta_inst = sample_instance(&theta_pat, splitmix64(id ^ u64::from(b't')), bound);
        let matrix = sylvester(&f_inst, &theta_inst, elim_var)?;
        let res = matrix_determinant(&matrix, Method::auto(matrix.size()))?;
        let observed = res.degree().finite().map(|d| d as i64);
        if let Some(d) = observed {
            if d > predicted {
                return Err(Error::InternalInvariant(format!(
                    "observed resultant degree {d} exceeds the predicted {predicted}"
                )));
            }
            if observed == Some(predicted) {
                matches += 1;
            }
            max_observed = Some(max_observed.map_or(d, |m| m.max(d)));
        }
        outcomes.push(TrialOutcome {
            id,
            observed_degree: observed,
            zero: observed.is_none(),
        });
    }
    Ok(VerificationResult {
        predicted,
        trials: outcomes,
        agreement: rat(matches as i64, trials as i64),
        max_observed,
    })
}

/// Checks the order-swap sign law: swapping the two inputs multiplies the
/// resultant by `(-1)^(m*n)`.
pub fn order_swap_check(f: &BiPoly, theta: &BiPoly, elim_var: &str) -> Result<bool> {
    let m = f
        .degree_in(elim_var)
        .finite()
        .ok_or_else(|| Error::DegenerateInput("`f` is zero".into()))?;
    let n = theta
        .degree_in(elim_var)
        .finite()
        .ok_or_else(|| Error::DegenerateInput("`theta` is zero".into()))?;
    let forward = resultant(f, theta, elim_var, Method::FractionFree)?;
    let backward = resultant(theta, f, elim_var, Method::FractionFree)?;
    let expected = if (m * n) % 2 == 1 {
        -&forward
    } else {
        forward
    };
    Ok(backward == expected)
}
