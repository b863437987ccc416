//! Acceptance suite: one test per criterion, each printing a PASS line with
//! its measured numbers (run with `--nocapture` to see them).
//!
//! 1. First worked example: exact regression of every reported quantity.
//! 2. First worked example: the oracle attains the predicted degree 58.
//! 3. Second worked example: both orders, genericization, infinity counts,
//!    leading-coefficient gcds, and resultant divisibility.
//! 4. Uniform dense shapes: the special-case rule agrees everywhere.
//! 5. Fuzzed sparse shapes: the degree is an integer within the Bezout
//!    bound, always.
//! 6. Small-scale oracle equivalence: predictions attained, backends agree,
//!    swap law holds.
//! 7. Parser round-trip and total parsing on malformed input.

use std::collections::BTreeSet;
use std::time::Instant;

use elimdeg_core::degree::{bezout_bound, dual_order_analysis, finck_degree, minding_degree};
use elimdeg_core::error::Error;
use elimdeg_core::oracle::{
    order_swap_check, resultant, sample_instance, splitmix64, verify_degree, Method,
};
use elimdeg_core::parse::{
    canonical_text, parse_problem, pattern_of, PatternPoly, ProblemSpec,
};
use elimdeg_core::poly::{rat, rat_int, BiPoly, Rat, UniPoly};

const MINDING_1: &str = include_str!("../../../problems/minding1.poly");
const MINDING_2: &str = include_str!("../../../problems/minding2.poly");
const MINDING_2_DEGENERATE: &str = include_str!("../../../problems/minding2-degenerate.poly");
const MINDING_2_INSTANCE: &str = include_str!("../../../problems/minding2-instance.poly");

/// Deterministic test-local generator chained from the oracle's mixer.
struct Rng(u64);

impl Rng {
    fn new(seed: u64) -> Self {
        Rng(splitmix64(seed ^ 0xACCE_97AB_1E5E_ED00))
    }

    fn next(&mut self) -> u64 {
        self.0 = splitmix64(self.0);
        self.0
    }

    fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }

    fn range(&mut self, lo: usize, hi: usize) -> usize {
        lo + self.below(hi - lo + 1)
    }

    fn chance(&mut self, num: u64, den: u64) -> bool {
        self.next() % den < num
    }
}

/// Random sparse pattern with degree exactly `m` in `y`, coefficient
/// degrees at most `max_b`. The constant-in-`y` coefficient is present with
/// high probability so that shared-factor degeneracies stay rare.
fn random_pattern(rng: &mut Rng, max_m: usize, max_b: usize, force_const: bool) -> PatternPoly {
    let m = rng.range(1, max_m);
    let mut members = BTreeSet::new();
    for j in 0..=m {
        let present = j == m
            || (j == 0 && force_const)
            || (j == 0 && rng.chance(3, 4))
            || rng.chance(1, 2);
        if !present {
            continue;
        }
        let count = rng.range(1, 3);
        for _ in 0..count {
            members.insert((rng.below(max_b + 1), j));
        }
    }
    PatternPoly::new(("x", "y"), members)
}

fn random_concrete(rng: &mut Rng) -> BiPoly {
    let pattern = random_pattern(rng, 3, 3, false);
    sample_instance(&pattern, rng.next(), 9)
}

#[test]
fn criterion_1_first_example_regression() {
    let start = Instant::now();
    let spec = parse_problem(MINDING_1).expect("example 1 parses");
    let (f, theta) = spec.patterns().unwrap();
    let report = minding_degree(&f, &theta, "y").unwrap();
    let elapsed = start.elapsed();

    assert_eq!(report.minding_degree, 58);
    assert_eq!(report.bezout_bound, 78);
    assert_eq!(report.m, 4);
    assert_eq!(report.b, 8);
    let edges: BTreeSet<(Rat, usize, Rat)> = report
        .edges
        .iter()
        .map(|e| (e.h.clone(), e.multiplicity, e.k.clone()))
        .collect();
    let expected: BTreeSet<(Rat, usize, Rat)> = [
        (rat(1, 2), 2, rat(11, 2)),
        (rat(-5, 3), 3, rat_int(5)),
    ]
    .into_iter()
    .collect();
    assert_eq!(edges, expected);
    assert!(
        elapsed.as_secs_f64() < 0.1,
        "analysis took {elapsed:?}, budget is 0.1 s"
    );
    println!(
        "criterion 1: PASS - degree 58 / bound 78, edges exact, {:.3} ms",
        elapsed.as_secs_f64() * 1e3
    );
}

#[test]
fn criterion_2_first_example_oracle() {
    let start = Instant::now();
    let spec = parse_problem(MINDING_1).expect("example 1 parses");
    let result = verify_degree(&spec, "y", 20, 0, 1_000_000).expect("verification runs");
    let elapsed = start.elapsed();

    assert_eq!(result.predicted, 58);
    assert_eq!(result.trials.len(), 20);
    for t in &result.trials {
        let d = t.observed_degree.expect("resultant must not vanish");
        assert!(d <= 58, "observed {d} exceeds 58");
    }
    assert_eq!(result.max_observed, Some(58));
    assert!(
        result.agreement >= rat(95, 100),
        "agreement {} below 95%",
        result.agreement
    );
    assert!(
        elapsed.as_secs_f64() < 30.0,
        "verification took {elapsed:?}, budget is 30 s"
    );
    println!(
        "criterion 2: PASS - 20 trials, agreement {}, {:.2} s",
        result.agreement,
        elapsed.as_secs_f64()
    );
}

#[test]
fn criterion_3_second_example_regression() {
    let start = Instant::now();

    // generic coefficients: both orders agree at 26
    let (f, theta) = parse_problem(MINDING_2).unwrap().patterns().unwrap();
    assert_eq!(minding_degree(&f, &theta, "y").unwrap().minding_degree, 26);
    assert_eq!(minding_degree(&f, &theta, "x").unwrap().minding_degree, 26);

    // two coefficients zeroed: 25 eliminating y, 24 eliminating x
    let (f_deg, theta_deg) = parse_problem(MINDING_2_DEGENERATE)
        .unwrap()
        .patterns()
        .unwrap();
    assert_eq!(
        minding_degree(&f_deg, &theta_deg, "y").unwrap().minding_degree,
        25
    );
    assert_eq!(
        minding_degree(&f_deg, &theta_deg, "x").unwrap().minding_degree,
        24
    );

    // infinity analysis of the degenerate shape
    let report = dual_order_analysis(&f_deg, &theta_deg, None).unwrap();
    assert_eq!(report.d_gen, 26);
    assert_eq!(report.lost_x, 1);
    assert_eq!(report.lost_y, 2);
    assert_eq!(report.finite_count, 23);

    // concrete instance: gcds and exact divisibility of both resultants
    let spec = parse_problem(MINDING_2_INSTANCE).unwrap();
    let (fc, tc) = spec.concrete().expect("instance file is concrete");
    let (fp, tp) = spec.patterns().unwrap();
    let concrete_report = dual_order_analysis(&fp, &tp, Some((fc, tc))).unwrap();
    let x_squared = UniPoly::monomial(2, rat_int(1));
    let y_poly = UniPoly::monomial(1, rat_int(1));
    assert_eq!(concrete_report.gcd_lead_y_order.as_ref(), Some(&x_squared));
    assert_eq!(concrete_report.gcd_lead_x_order.as_ref(), Some(&y_poly));

    let res_y = resultant(fc, tc, "y", Method::Both).unwrap();
    assert!(x_squared.divides(&res_y).unwrap(), "x^2 must divide the y-order resultant");
    let res_x = resultant(fc, tc, "x", Method::Both).unwrap();
    assert!(y_poly.divides(&res_x).unwrap(), "y must divide the x-order resultant");

    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 5.0,
        "regression took {elapsed:?}, budget is 5 s"
    );
    println!(
        "criterion 3: PASS - 26/26, 25/24, finite 23, gcds x^2 and y, divisibility exact, {:.2} s",
        elapsed.as_secs_f64()
    );
}

#[test]
fn criterion_4_uniform_dense_consistency() {
    let mut cases = 0;
    for m in 1..=4usize {
        for n in 1..=4usize {
            for m_prime in 0..=4usize {
                for n_prime in 0..=4usize {
                    let f = PatternPoly::new(
                        ("x", "y"),
                        (0..=m).flat_map(|j| (0..=m_prime).map(move |i| (i, j))),
                    );
                    let theta = PatternPoly::new(
                        ("x", "y"),
                        (0..=n).flat_map(|j| (0..=n_prime).map(move |i| (i, j))),
                    );
                    let expected = (m * n_prime + n * m_prime) as i64;
                    assert_eq!(
                        finck_degree(&f, &theta, "y"),
                        Some(expected),
                        "rule applicability failed at m={m} n={n} m'={m_prime} n'={n_prime}"
                    );
                    let report = minding_degree(&f, &theta, "y").unwrap();
                    assert_eq!(
                        report.minding_degree, expected,
                        "formula disagreement at m={m} n={n} m'={m_prime} n'={n_prime}"
                    );
                    assert_eq!(report.finck_degree, Some(expected));
                    cases += 1;
                }
            }
        }
    }
    assert!(cases >= 200);
    println!("criterion 4: PASS - {cases} uniform dense shapes agree");
}

#[test]
fn criterion_5_integrality_and_bound() {
    let mut rng = Rng::new(5);
    let mut valid = 0usize;
    let mut shared_factor = 0usize;
    while valid < 1000 {
        let f = random_pattern(&mut rng, 5, 6, false);
        let theta = random_pattern(&mut rng, 5, 6, false);
        match minding_degree(&f, &theta, "y") {
            Ok(report) => {
                // the total reached an i64 only by being an exact integer;
                // check the bounds explicitly
                assert!(report.minding_degree >= 0);
                assert!(
                    report.minding_degree <= report.bezout_bound,
                    "degree {} above Bezout {} for f={f:?} theta={theta:?}",
                    report.minding_degree,
                    report.bezout_bound
                );
                assert_eq!(report.bezout_bound, bezout_bound(&f, &theta));
                valid += 1;
            }
            Err(Error::DegenerateSharedFactor { .. }) => shared_factor += 1,
            Err(other) => panic!("unexpected error on fuzzed pattern: {other}"),
        }
    }
    println!(
        "criterion 5: PASS - 1000 sparse shapes integral and bounded ({shared_factor} shared-factor shapes skipped)"
    );
}

#[test]
fn criterion_6_oracle_equivalence_small_scale() {
    let start = Instant::now();
    let mut rng = Rng::new(6);
    let mut checked = 0usize;
    let mut attained = 0usize;
    while checked < 200 {
        let f_pat = random_pattern(&mut rng, 3, 3, true);
        let theta_pat = random_pattern(&mut rng, 3, 3, false);
        let predicted = match minding_degree(&f_pat, &theta_pat, "y") {
            Ok(r) => r.minding_degree,
            Err(Error::DegenerateSharedFactor { .. }) => continue,
            Err(other) => panic!("unexpected error: {other}"),
        };
        let f = sample_instance(&f_pat, rng.next(), 1_000_000);
        let theta = sample_instance(&theta_pat, rng.next(), 1_000_000);

        // Method::Both runs the Bareiss and interpolation backends and
        // errors out unless they produce identical polynomials
        let res = resultant(&f, &theta, "y", Method::Both).expect("backends agree");
        if let Some(d) = res.degree().finite() {
            assert!(
                (d as i64) <= predicted,
                "observed {d} above predicted {predicted}"
            );
            if d as i64 == predicted {
                attained += 1;
            }
        }
        assert!(
            order_swap_check(&f, &theta, "y").unwrap(),
            "swap sign law failed"
        );
        checked += 1;
    }
    let elapsed = start.elapsed();
    assert!(
        attained * 100 >= checked * 95,
        "only {attained}/{checked} instances attained the prediction"
    );
    assert!(
        elapsed.as_secs_f64() < 120.0,
        "oracle comparison took {elapsed:?}, budget is 2 min"
    );
    println!(
        "criterion 6: PASS - {attained}/{checked} attained, backends and swap law exact, {:.2} s",
        elapsed.as_secs_f64()
    );
}

#[test]
fn criterion_7_parser_round_trip_and_totality() {
    let mut rng = Rng::new(7);

    let mut round_trips = 0usize;
    while round_trips < 500 {
        let spec = if round_trips.is_multiple_of(2) {
            let f = random_concrete(&mut rng);
            let theta = random_concrete(&mut rng);
            ProblemSpec::new_concrete(f, theta)
        } else {
            let f = random_pattern(&mut rng, 4, 5, false);
            let theta = random_pattern(&mut rng, 4, 5, false);
            ProblemSpec::new_pattern(f, theta, false)
        };
        let printed = canonical_text(&spec);
        let reparsed = parse_problem(&printed)
            .unwrap_or_else(|e| panic!("canonical text failed to parse: {e}\n{printed}"));
        assert_eq!(reparsed, spec, "round trip changed the problem:\n{printed}");
        round_trips += 1;
    }

    // malformed inputs: mutate valid texts and feed byte noise; every
    // outcome must be a clean Ok or Err, and syntax errors carry positions
    let mut mutations = 0usize;
    let base = canonical_text(&parse_problem(MINDING_2).unwrap());
    while mutations < 500 {
        let mut text = base.as_bytes().to_vec();
        for _ in 0..rng.range(1, 4) {
            let pos = rng.below(text.len());
            match rng.below(3) {
                0 => {
                    text[pos] = b"#^*+-/()=xy0123456789 \n"[rng.below(23)];
                }
                1 => {
                    text.remove(pos);
                }
                _ => {
                    let ch = b"#^*+-/()=qz"[rng.below(11)];
                    text.insert(pos, ch);
                }
            }
        }
        let Ok(text) = String::from_utf8(text) else {
            continue;
        };
        match parse_problem(&text) {
            Ok(_) => {}
            Err(Error::Syntax { pos, .. }) => {
                assert!(pos <= text.len(), "position {pos} outside input");
            }
            Err(_) => {}
        }
        mutations += 1;
    }

    // pattern_of inverts sampling whenever no coefficient vanishes, which
    // the nonzero draw guarantees
    for _ in 0..100 {
        let pat = random_pattern(&mut rng, 4, 4, false);
        let inst = sample_instance(&pat, rng.next(), 1_000_000);
        assert_eq!(pattern_of(&inst).unwrap(), pat);
    }

    println!(
        "criterion 7: PASS - 500 round trips, {mutations} mutated inputs handled, sampling inverts"
    );
}
