//! Canonical text form of a [`ProblemSpec`], printing exactly the grammar
//! the parser reads, so that print-then-parse is the identity.

use std::collections::BTreeSet;
use std::fmt::Write;

use num_traits::{One, Signed};

use super::{PatternPoly, ProblemPolys, ProblemSpec};
use crate::poly::{rat_to_string, BiPoly, Rat};

/// Renders a problem in canonical form: `f` first, terms ordered by falling
/// power of the eliminated variable and, within it, falling power of the
/// parameter for concrete inputs (rising for pattern supports, which reads
/// closer to the dense `(x^d)` notation).
pub fn canonical_text(spec: &ProblemSpec) -> String {
    let vars = spec.vars();
    match spec.polys() {
        ProblemPolys::Concrete { f, theta } => format!(
            "f = {}\ntheta = {}",
            concrete_expr(f, vars),
            concrete_expr(theta, vars)
        ),
        ProblemPolys::Pattern { f, theta } => format!(
            "f = {}\ntheta = {}",
            pattern_expr(f, vars),
            pattern_expr(theta, vars)
        ),
    }
}

fn push_var_powers(out: &mut String, vars: (&str, &str), i: usize, j: usize) {
    if i > 0 {
        out.push('*');
        out.push_str(vars.0);
        if i > 1 {
            write!(out, "^{i}").unwrap();
        }
    }
    if j > 0 {
        out.push('*');
        out.push_str(vars.1);
        if j > 1 {
            write!(out, "^{j}").unwrap();
        }
    }
}

fn concrete_expr(p: &BiPoly, vars: (&str, &str)) -> String {
    let mut terms: Vec<((usize, usize), &Rat)> = p.support().collect();
    // falling powers of the eliminated variable, then of the parameter
    terms.sort_by_key(|&((i, j), _)| (std::cmp::Reverse(j), std::cmp::Reverse(i)));
    let mut out = String::new();
    for (&((i, j), c), idx) in terms.iter().zip(0..) {
        let mag = c.abs();
        if idx == 0 {
            // a leading minus sign must stay attached to a rational literal
            if c.is_negative() {
                out.push_str(&rat_to_string(c));
                push_var_powers(&mut out, vars, i, j);
                continue;
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        if mag.is_one() && (i > 0 || j > 0) {
            let mut powers = String::new();
            push_var_powers(&mut powers, vars, i, j);
            out.push_str(&powers[1..]); // drop the leading '*'
        } else {
            out.push_str(&rat_to_string(&mag));
            push_var_powers(&mut out, vars, i, j);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn pattern_expr(p: &PatternPoly, vars: (&str, &str)) -> String {
    let sets = p.coeff_supports(vars.1);
    let mut pieces: Vec<String> = Vec::new();
    for (&j, set) in sets.iter().rev() {
        if is_dense_from_zero(set) && set.len() > 1 {
            let d = *set.iter().next_back().unwrap();
            let mut piece = format!("({}^{d})", vars.0);
            push_var_powers(&mut piece, vars, 0, j);
            pieces.push(piece);
        } else {
            for &i in set {
                let mut piece = String::from("#");
                push_var_powers(&mut piece, vars, i, j);
                pieces.push(piece);
            }
        }
    }
    pieces.join(" + ")
}

fn is_dense_from_zero(set: &BTreeSet<usize>) -> bool {
    set.iter().copied().eq(0..set.len())
}
