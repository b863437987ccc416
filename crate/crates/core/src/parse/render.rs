//! Deterministic report rendering: human-readable text and canonical JSON.
//!
//! JSON output never contains floating point: exact rationals are emitted
//! as strings `"p/q"`, integer values (however large) as bare JSON
//! integers. Keys keep a fixed order, so parsing and re-rendering a report
//! is byte-identical.

use serde_json::{Map, Value};

use crate::degree::{DegreeReport, InfinityReport};
use crate::oracle::VerificationResult;
use crate::poly::{rat_to_string, Rat, UniPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// A report of any kind, ready for rendering.
#[derive(Debug, Clone, Copy)]
pub enum Report<'a> {
    Degree(&'a DegreeReport),
    Infinity(&'a InfinityReport),
    Verification(&'a VerificationResult),
}

/// Renders one report in the requested format (JSON output is the bare
/// report object; the command-line tool wraps it in its envelope).
pub fn render_report(report: Report<'_>, format: Format) -> String {
    match (report, format) {
        (Report::Degree(r), Format::Text) => degree_report_text(r),
        (Report::Infinity(r), Format::Text) => infinity_report_text(r),
        (Report::Verification(r), Format::Text) => verification_text(r),
        (Report::Degree(r), Format::Json) => pretty(&degree_report_value(r)),
        (Report::Infinity(r), Format::Json) => pretty(&infinity_report_value(r)),
        (Report::Verification(r), Format::Json) => pretty(&verification_value(r)),
    }
}

pub fn pretty(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("report values serialize")
}

/// Exact rational as JSON: a bare (arbitrary-precision) integer when
/// integral, the string `"p/q"` otherwise.
pub fn rat_value(r: &Rat) -> Value {
    if r.is_integer() {
        let n: serde_json::Number = r
            .numer()
            .to_string()
            .parse()
            .expect("integer digits parse as a JSON number");
        Value::Number(n)
    } else {
        Value::String(rat_to_string(r))
    }
}

fn poly_value(p: &UniPoly, var: &str) -> Value {
    Value::String(p.render(var))
}

pub fn degree_report_value(r: &DegreeReport) -> Value {
    let edges: Vec<Value> = r
        .edges
        .iter()
        .map(|e| {
            json_object([
                ("h", rat_value(&e.h)),
                ("multiplicity", Value::from(e.multiplicity)),
                ("k", rat_value(&e.k)),
            ])
        })
        .collect();
    json_object([
        ("m", Value::from(r.m)),
        ("n", Value::from(r.n)),
        ("b", Value::from(r.b)),
        ("edges", Value::Array(edges)),
        ("t", Value::from(r.t_theta)),
        ("minding_degree", Value::from(r.minding_degree)),
        ("bezout_bound", Value::from(r.bezout_bound)),
        (
            "finck_degree",
            r.finck_degree.map_or(Value::Null, Value::from),
        ),
    ])
}

pub fn infinity_report_value(r: &InfinityReport) -> Value {
    let mut entries = vec![
        ("D_x", Value::from(r.d_x)),
        ("D_y", Value::from(r.d_y)),
        ("D_gen", Value::from(r.d_gen)),
        ("lost_x", Value::from(r.lost_x)),
        ("lost_y", Value::from(r.lost_y)),
        ("finite_count", Value::from(r.finite_count)),
    ];
    if let Some(g) = &r.gcd_lead_y_order {
        entries.push(("gcd_lead_y_order", poly_value(g, &r.vars.0)));
    }
    if let Some(g) = &r.gcd_lead_x_order {
        entries.push(("gcd_lead_x_order", poly_value(g, &r.vars.1)));
    }
    entries_to_object(entries)
}

pub fn verification_value(r: &VerificationResult) -> Value {
    let trials: Vec<Value> = r
        .trials
        .iter()
        .map(|t| {
            json_object([
                ("id", Value::from(t.id)),
                (
                    "observed_degree",
                    t.observed_degree.map_or(Value::Null, Value::from),
                ),
                ("zero", Value::from(t.zero)),
            ])
        })
        .collect();
    json_object([
        ("predicted", Value::from(r.predicted)),
        ("trials", Value::Array(trials)),
        ("agreement", rat_value(&r.agreement)),
    ])
}

fn json_object<const N: usize>(entries: [(&str, Value); N]) -> Value {
    entries_to_object(entries)
}

fn entries_to_object<'a, I>(entries: I) -> Value
where
    I: IntoIterator<Item = (&'a str, Value)>,
{
    let mut map = Map::new();
    for (k, v) in entries {
        map.insert(k.to_string(), v);
    }
    Value::Object(map)
}

fn degree_report_text(r: &DegreeReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("eliminate: {}\n", r.elim_var));
    out.push_str(&format!("m: {}\n", r.m));
    out.push_str(&format!("n: {}\n", r.n));
    out.push_str(&format!("b: {}\n", r.b));
    out.push_str("edges:\n");
    for e in &r.edges {
        out.push_str(&format!(
            "  h = {}, multiplicity {}, k = {}\n",
            rat_to_string(&e.h),
            e.multiplicity,
            rat_to_string(&e.k)
        ));
    }
    out.push_str(&format!("t: {}\n", r.t_theta));
    if r.t_theta > 0 {
        out.push_str(&format!("t_contribution: {}\n", r.t_contribution));
    }
    out.push_str(&format!("minding_degree: {}\n", r.minding_degree));
    out.push_str(&format!("bezout_bound: {}\n", r.bezout_bound));
    match r.finck_degree {
        Some(d) => out.push_str(&format!("finck_degree: {d}\n")),
        None => out.push_str("finck_degree: n/a\n"),
    }
    out
}

fn infinity_report_text(r: &InfinityReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("D_x: {}\n", r.d_x));
    out.push_str(&format!("D_y: {}\n", r.d_y));
    out.push_str(&format!("D_gen: {}\n", r.d_gen));
    out.push_str(&format!("lost_x: {}\n", r.lost_x));
    out.push_str(&format!("lost_y: {}\n", r.lost_y));
    out.push_str(&format!("finite solutions: {}\n", r.finite_count));
    if let Some(g) = &r.gcd_lead_y_order {
        out.push_str(&format!("gcd(A_0, B_0): {}\n", g.render(&r.vars.0)));
    }
    if let Some(g) = &r.gcd_lead_x_order {
        out.push_str(&format!("gcd(alpha_0, beta_0): {}\n", g.render(&r.vars.1)));
    }
    out
}

fn verification_text(r: &VerificationResult) -> String {
    let mut out = String::new();
    out.push_str(&format!("predicted: {}\n", r.predicted));
    out.push_str(&format!("trials: {}\n", r.trials.len()));
    for t in &r.trials {
        match t.observed_degree {
            Some(d) => out.push_str(&format!("  id {}: degree {}\n", t.id, d)),
            None => out.push_str(&format!("  id {}: resultant identically zero\n", t.id)),
        }
    }
    out.push_str(&format!("agreement: {}\n", rat_to_string(&r.agreement)));
    if let Some(m) = r.max_observed {
        out.push_str(&format!("max observed: {m}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degree::{dual_order_analysis, minding_degree};
    use crate::fixtures::{EXAMPLE_1, EXAMPLE_2_DEGENERATE};
    use crate::parse::parse_problem;

    fn example_1_report() -> DegreeReport {
        let (f, theta) = parse_problem(EXAMPLE_1).unwrap().patterns().unwrap();
        minding_degree(&f, &theta, "y").unwrap()
    }

    #[test]
    fn degree_json_carries_the_headline_numbers() {
        let text = render_report(Report::Degree(&example_1_report()), Format::Json);
        assert!(text.contains("\"minding_degree\": 58"));
        assert!(text.contains("\"bezout_bound\": 78"));
        assert!(text.contains("\"finck_degree\": null"));
        assert!(text.contains("\"h\": \"-5/3\""));
        assert!(text.contains("\"k\": \"11/2\""));
    }

    #[test]
    fn json_reparses_byte_identically() {
        let degree = example_1_report();
        let (f, theta) = parse_problem(EXAMPLE_2_DEGENERATE)
            .unwrap()
            .patterns()
            .unwrap();
        let infinity = dual_order_analysis(&f, &theta, None).unwrap();
        let spec = parse_problem("f = y - x\ntheta = y + x").unwrap();
        let verification =
            crate::oracle::verify_degree(&spec, "y", 2, 0, 1_000_000).unwrap();
        for r in [
            Report::Degree(&degree),
            Report::Infinity(&infinity),
            Report::Verification(&verification),
        ] {
            let rendered = render_report(r, Format::Json);
            let value: Value = serde_json::from_str(&rendered).unwrap();
            assert_eq!(pretty(&value), rendered);
        }
    }

    #[test]
    fn degree_text_has_exact_lines() {
        let text = render_report(Report::Degree(&example_1_report()), Format::Text);
        assert!(text.contains("minding_degree: 58\n"));
        assert!(text.contains("bezout_bound: 78\n"));
        assert!(text.contains("m: 4\n"));
        assert!(text.contains("b: 8\n"));
    }

    #[test]
    fn infinity_text_counts_finite_solutions() {
        let (f, theta) = parse_problem(EXAMPLE_2_DEGENERATE)
            .unwrap()
            .patterns()
            .unwrap();
        let report = dual_order_analysis(&f, &theta, None).unwrap();
        let text = render_report(Report::Infinity(&report), Format::Text);
        assert!(text.contains("finite solutions: 23\n"));
        let json = render_report(Report::Infinity(&report), Format::Json);
        assert!(json.contains("\"finite_count\": 23"));
        assert!(!json.contains("gcd_lead_y_order"));
    }

    #[test]
    fn big_integers_stay_exact_in_json() {
        let huge = "123456789012345678901234567890123456789";
        let r: Rat = Rat::new(huge.parse().unwrap(), 1.into());
        let v = rat_value(&r);
        assert_eq!(serde_json::to_string(&v).unwrap(), huge);
        let back: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), huge);
    }
}
