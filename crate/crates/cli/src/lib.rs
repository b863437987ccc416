//! Command-line surface: `analyze`, `resultant`, `verify`, and `infinity`
//! over problem files, with text and JSON output.
//!
//! Exit codes: 0 success, 1 degenerate input (shared factor / zero
//! resultant), 2 parse error, 3 internal invariant violation, 4 usage
//! error.

use std::io::Write;

use serde_json::{Map, Value};

use elimdeg_core::degree::{dual_order_analysis, minding_degree};
use elimdeg_core::error::Error;
use elimdeg_core::oracle::{resultant, verify_degree, Method};
use elimdeg_core::parse::{
    degree_report_value, infinity_report_value, parse_problem, pretty, rat_value, render_report,
    verification_value, Format, Mode, ProblemSpec, Report,
};

const USAGE: &str = "\
usage:
  elimdeg analyze <file> [--order y|x|both] [--json]
  elimdeg resultant <file> --eliminate y|x [--method interp|bareiss|both] [--json]
  elimdeg verify <file> --eliminate y|x [--trials N] [--seed S] [--coeff-bound B] [--json]
  elimdeg infinity <file> [--json]

Problem files define `f` and `theta` as polynomials in two variables, with
concrete rational coefficients or with generic ones (`#` marks one generic
coefficient, `(x^d)` a generic dense coefficient polynomial of degree d).
";

const EXIT_DEGENERATE: i32 = 1;
const EXIT_PARSE: i32 = 2;
const EXIT_INTERNAL: i32 = 3;
const EXIT_USAGE: i32 = 4;

/// Runs one invocation; writes the report to `stdout` and diagnostics to
/// `stderr`, returning the process exit code.
pub fn run(args: &[String], stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    match dispatch(args, stdout, stderr) {
        Ok(()) => 0,
        Err(failure) => {
            let _ = writeln!(stderr, "error: {}", failure.message);
            if failure.code == EXIT_USAGE {
                let _ = write!(stderr, "{USAGE}");
            }
            failure.code
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

fn usage_error(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::DegenerateInput(_)
            | Error::DegenerateSharedFactor { .. }
            | Error::ZeroDivisor => EXIT_DEGENERATE,
            Error::Syntax { .. } | Error::MixedVariables { .. } => EXIT_PARSE,
            Error::InternalInvariant(_) | Error::MethodMismatch => EXIT_INTERNAL,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn dispatch(args: &[String], stdout: &mut dyn Write, stderr: &mut dyn Write) -> CmdResult {
    let Some(command) = args.first() else {
        return Err(usage_error("missing subcommand"));
    };
    if command == "--help" || command == "-h" {
        write_out(stdout, USAGE)?;
        return Ok(());
    }
    let rest = &args[1..];
    match command.as_str() {
        "analyze" => cmd_analyze(rest, stdout, stderr),
        "resultant" => cmd_resultant(rest, stdout),
        "verify" => cmd_verify(rest, stdout, stderr),
        "infinity" => cmd_infinity(rest, stdout, stderr),
        other => Err(usage_error(format!("unknown subcommand `{other}`"))),
    }
}

fn write_out(stdout: &mut dyn Write, text: &str) -> CmdResult {
    stdout.write_all(text.as_bytes()).map_err(|e| Failure {
        code: EXIT_INTERNAL,
        message: format!("cannot write output: {e}"),
    })
}

/// Parsed arguments: one positional file path plus `--name value` options
/// and the `--json` switch.
struct Opts {
    file: String,
    json: bool,
    values: Vec<(String, String)>,
}

impl Opts {
    fn parse(args: &[String], value_flags: &[&str]) -> Result<Opts, Failure> {
        let mut file = None;
        let mut json = false;
        let mut values = Vec::new();
        let mut it = args.iter();
        while let Some(arg) = it.next() {
            if arg == "--json" {
                json = true;
            } else if let Some(name) = arg.strip_prefix("--") {
                let (name, inline) = match name.split_once('=') {
                    Some((n, v)) => (n, Some(v.to_string())),
                    None => (name, None),
                };
                if !value_flags.contains(&name) {
                    return Err(usage_error(format!("unknown option `--{name}`")));
                }
                let value = match inline {
                    Some(v) => v,
                    None => it
                        .next()
                        .ok_or_else(|| usage_error(format!("option `--{name}` needs a value")))?
                        .clone(),
                };
                values.push((name.to_string(), value));
            } else if file.is_none() {
                file = Some(arg.clone());
            } else {
                return Err(usage_error(format!("unexpected argument `{arg}`")));
            }
        }
        Ok(Opts {
            file: file.ok_or_else(|| usage_error("missing problem file"))?,
            json,
            values,
        })
    }

    fn value(&self, name: &str) -> Option<&str> {
        self.values
            .iter()
            .rev()
            .find(|(n, _)| n == name)
            .map(|(_, v)| v.as_str())
    }

    fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else {
            Format::Text
        }
    }
}

fn load_problem(path: &str, stderr: Option<&mut dyn Write>) -> Result<ProblemSpec, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage_error(format!("cannot read `{path}`: {e}")))?;
    let spec = parse_problem(&text)?;
    if spec.mixed_warning() {
        if let Some(stderr) = stderr {
            let _ = writeln!(
                stderr,
                "note: concrete coefficients were absorbed as generic pattern members"
            );
        }
    }
    Ok(spec)
}

/// Maps a role letter (`y` eliminates the second variable, `x` the first)
/// to the problem's actual variable name.
fn role_var<'a>(spec: &'a ProblemSpec, role: &str) -> Result<&'a str, Failure> {
    match role {
        "y" => Ok(spec.vars().1),
        "x" => Ok(spec.vars().0),
        other => Err(usage_error(format!("expected `y` or `x`, found `{other}`"))),
    }
}

fn envelope(mode: Mode, entries: Vec<(String, Value)>) -> Value {
    let mut map = Map::new();
    map.insert(
        "tool_version".to_string(),
        Value::String(env!("CARGO_PKG_VERSION").to_string()),
    );
    map.insert("mode".to_string(), Value::String(mode.as_str().to_string()));
    for (k, v) in entries {
        map.insert(k, v);
    }
    Value::Object(map)
}

/// Envelope with the fields of an already-rendered report object spliced
/// in at the top level.
fn envelope_flat(mode: Mode, report: Value) -> Value {
    let Value::Object(fields) = report else {
        unreachable!("reports render as objects")
    };
    envelope(mode, fields.into_iter().collect())
}

fn cmd_analyze(args: &[String], stdout: &mut dyn Write, stderr: &mut dyn Write) -> CmdResult {
    let opts = Opts::parse(args, &["order"])?;
    let order = opts.value("order").unwrap_or("both").to_string();
    if !["y", "x", "both"].contains(&order.as_str()) {
        return Err(usage_error(format!(
            "`--order` expects y, x, or both, found `{order}`"
        )));
    }
    let spec = load_problem(&opts.file, Some(stderr))?;
    let (f, theta) = spec.patterns()?;

    let roles: &[&str] = match order.as_str() {
        "y" => &["y"],
        "x" => &["x"],
        _ => &["y", "x"],
    };
    let mut reports = Vec::new();
    for role in roles {
        match minding_degree(&f, &theta, role_var(&spec, role)?) {
            Ok(report) => reports.push((*role, report)),
            Err(e @ Error::DegenerateInput(_)) if roles.len() > 1 => {
                // with `--order both`, an input that lacks one variable
                // still gets the other order reported
                let _ = writeln!(stderr, "note: skipping eliminate_{role}: {e}");
            }
            Err(e) => return Err(e.into()),
        }
    }
    if reports.is_empty() {
        return Err(Error::DegenerateInput(
            "neither elimination order is available".into(),
        )
        .into());
    }

    match opts.format() {
        Format::Json => {
            let mut map = Map::new();
            for (role, report) in &reports {
                map.insert(format!("eliminate_{role}"), degree_report_value(report));
            }
            let doc = envelope(
                spec.mode(),
                vec![("reports".to_string(), Value::Object(map))],
            );
            write_out(stdout, &(pretty(&doc) + "\n"))
        }
        Format::Text => {
            let mut text = String::new();
            for (i, (_, report)) in reports.iter().enumerate() {
                if i > 0 {
                    text.push('\n');
                }
                text.push_str(&render_report(Report::Degree(report), Format::Text));
            }
            write_out(stdout, &text)
        }
    }
}

fn cmd_resultant(args: &[String], stdout: &mut dyn Write) -> CmdResult {
    let opts = Opts::parse(args, &["eliminate", "method"])?;
    let role = opts
        .value("eliminate")
        .ok_or_else(|| usage_error("`resultant` requires --eliminate y|x"))?
        .to_string();
    let spec = load_problem(&opts.file, None)?;
    let Some((fc, tc)) = spec.concrete() else {
        return Err(usage_error(
            "`resultant` requires a concrete-mode file (no `#` or `(x^d)` tokens)",
        ));
    };
    let elim = role_var(&spec, &role)?;
    let method = match opts.value("method") {
        None => {
            let m = fc.degree_in(elim).finite().unwrap_or(0);
            let n = tc.degree_in(elim).finite().unwrap_or(0);
            Method::auto(m + n)
        }
        Some("interp") => Method::Interp,
        Some("bareiss") => Method::FractionFree,
        Some("both") => Method::Both,
        Some(other) => {
            return Err(usage_error(format!(
                "`--method` expects interp, bareiss, or both, found `{other}`"
            )))
        }
    };
    let res = resultant(fc, tc, elim, method)?;
    if res.is_zero() {
        return Err(Error::DegenerateSharedFactor {
            var: elim.to_string(),
        }
        .into());
    }
    let other = if elim == spec.vars().1 {
        spec.vars().0
    } else {
        spec.vars().1
    };
    let degree = res.degree().expect_finite("resultant");
    match opts.format() {
        Format::Json => {
            let coeffs: Vec<Value> = res.coeffs().iter().map(rat_value).collect();
            let doc = envelope(
                spec.mode(),
                vec![
                    ("eliminate".to_string(), Value::String(elim.to_string())),
                    ("degree".to_string(), Value::from(degree)),
                    ("coefficients".to_string(), Value::Array(coeffs)),
                ],
            );
            write_out(stdout, &(pretty(&doc) + "\n"))
        }
        Format::Text => write_out(
            stdout,
            &format!(
                "eliminate: {elim}\ndegree: {degree}\nresultant: {}\n",
                res.render(other)
            ),
        ),
    }
}

fn parse_number<T: std::str::FromStr>(opts: &Opts, name: &str, default: T) -> Result<T, Failure> {
    match opts.value(name) {
        None => Ok(default),
        Some(v) => v
            .parse()
            .map_err(|_| usage_error(format!("`--{name}` expects a number, found `{v}`"))),
    }
}

fn cmd_verify(args: &[String], stdout: &mut dyn Write, stderr: &mut dyn Write) -> CmdResult {
    let opts = Opts::parse(args, &["eliminate", "trials", "seed", "coeff-bound"])?;
    let role = opts
        .value("eliminate")
        .ok_or_else(|| usage_error("`verify` requires --eliminate y|x"))?
        .to_string();
    let trials: usize = parse_number(&opts, "trials", 20)?;
    let seed: u64 = parse_number(&opts, "seed", 0)?;
    let bound: u64 = parse_number(&opts, "coeff-bound", 1_000_000)?;
    if trials == 0 || bound == 0 {
        return Err(usage_error("--trials and --coeff-bound must be at least 1"));
    }
    let spec = load_problem(&opts.file, Some(stderr))?;
    let elim = role_var(&spec, &role)?;
    let result = verify_degree(&spec, elim, trials, seed, bound)?;
    match opts.format() {
        Format::Json => {
            let doc = envelope_flat(spec.mode(), verification_value(&result));
            write_out(stdout, &(pretty(&doc) + "\n"))
        }
        Format::Text => write_out(
            stdout,
            &render_report(Report::Verification(&result), Format::Text),
        ),
    }
}

fn cmd_infinity(args: &[String], stdout: &mut dyn Write, stderr: &mut dyn Write) -> CmdResult {
    let opts = Opts::parse(args, &[])?;
    let spec = load_problem(&opts.file, Some(stderr))?;
    let (f, theta) = spec.patterns()?;
    let report = dual_order_analysis(&f, &theta, spec.concrete())?;
    match opts.format() {
        Format::Json => {
            let doc = envelope_flat(spec.mode(), infinity_report_value(&report));
            write_out(stdout, &(pretty(&doc) + "\n"))
        }
        Format::Text => write_out(
            stdout,
            &render_report(Report::Infinity(&report), Format::Text),
        ),
    }
}
