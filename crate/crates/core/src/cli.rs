//! Command-line front end.
//!
//! Every command renders either human-readable text or a schema-versioned
//! JSON document. Exit codes: 0 affirmative, 1 negative verdict, 2 usage or
//! input error.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{Map, Value};

use crate::calculus::cmc_defect;
use crate::cmc::{
    check_cmc, control_sweep, make_surface, refutation_sweep, solve_hsq_detail, SurfaceKind, SweepSummary,
};
use crate::cubic::cube_root_cubic_form;
use crate::parse::{infer_dimension, parse, print, print_capped};
use crate::replay::{replay, ReplayReport};
use crate::ring::{format_coefficient, integer, Coefficient, Polynomial, RingContext};

pub const SCHEMA_VERSION: &str = "1";

/// Human output shows at most this many terms per polynomial unless `--full`.
pub const DEFAULT_TERM_CAP: usize = 200;

pub const EXIT_AFFIRMATIVE: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "cmc", version, about = "Exact checks of the algebraic CMC condition for polynomial hypersurfaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, clap::Args)]
pub struct OutputArgs {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Print every term of every polynomial.
    #[arg(long, global = true)]
    pub full: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether f divides its CMC defect.
    Check {
        /// Polynomial in x1..xn.
        #[arg(allow_hyphen_values = true)]
        poly: String,
        /// Dimension n; inferred from the highest xk when omitted.
        #[arg(long)]
        vars: Option<usize>,
        /// H^2 as a rational, or `solve` to search for the admissible value.
        #[arg(long, allow_hyphen_values = true)]
        hsq: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Replay the degree-three identity chain in dimension n.
    Replay {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Print the CMC defect 4(n-1)^2 H^2 |grad f|^6 - (Delta_1 f)^2.
    Defect {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        vars: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        hsq: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Split f into homogeneous parts.
    Decompose {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        vars: Option<usize>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Test whether a cubic form is the cube of a linear form.
    CubeTest {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        vars: Option<usize>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Generate a classical surface with its expected H^2 and certificate.
    Surface {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        /// Squared radius.
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        rsq: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Seeded random search for cubics admitting an H^2.
    Sweep {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 200)]
        count: usize,
        /// Coefficients are drawn from [-bound, bound].
        #[arg(long, default_value_t = 5)]
        bound: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run the degree-two sphere control instead.
        #[arg(long)]
        control: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum KindArg {
    Sphere,
    Cylinder,
    Plane,
}

impl From<KindArg> for SurfaceKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Sphere => SurfaceKind::Sphere,
            KindArg::Cylinder => SurfaceKind::Cylinder,
            KindArg::Plane => SurfaceKind::Plane,
        }
    }
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: i32, stdout: String) -> Self {
        Outcome { code, stdout, stderr: String::new() }
    }

    fn input_error(msg: impl std::fmt::Display) -> Self {
        Outcome { code: EXIT_INPUT_ERROR, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

#[derive(Serialize)]
struct JsonReport<'a, T: Serialize> {
    schema_version: &'static str,
    command: &'a str,
    inputs: Map<String, Value>,
    result: T,
}

fn render_json<T: Serialize>(command: &str, inputs: Map<String, Value>, result: T) -> String {
    let doc = JsonReport { schema_version: SCHEMA_VERSION, command, inputs, result };
    let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
    s.push('\n');
    s
}

fn inputs(pairs: &[(&str, Value)]) -> Map<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn text(p: &Polynomial) -> Value {
    Value::String(print(p))
}

fn opt_text(p: Option<&Polynomial>) -> Value {
    p.map_or(Value::Null, text)
}

fn rat(c: &Coefficient) -> Value {
    Value::String(format_coefficient(c))
}

struct Printer {
    cap: usize,
}

impl Printer {
    fn new(out: &OutputArgs) -> Self {
        Printer { cap: if out.full { usize::MAX } else { DEFAULT_TERM_CAP } }
    }

    fn poly(&self, p: &Polynomial) -> String {
        print_capped(p, self.cap)
    }
}

/// Parses CLI arguments and runs the command.
pub fn run_from_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                Outcome { code: EXIT_INPUT_ERROR, stdout: String::new(), stderr: rendered }
            } else {
                Outcome::ok(EXIT_AFFIRMATIVE, rendered)
            }
        }
    }
}

pub fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Check { poly, vars, hsq, out } => cmd_check(&poly, vars, &hsq, &out),
        Command::Replay { n, out } => cmd_replay(n, &out),
        Command::Defect { poly, vars, hsq, out } => cmd_defect(&poly, vars, &hsq, &out),
        Command::Decompose { poly, vars, out } => cmd_decompose(&poly, vars, &out),
        Command::CubeTest { poly, vars, out } => cmd_cube_test(&poly, vars, &out),
        Command::Surface { kind, n, rsq, out } => cmd_surface(kind.into(), n, &rsq, &out),
        Command::Sweep { n, count, bound, seed, control, out } => cmd_sweep(n, count, bound, seed, control, &out),
    }
}

fn parse_input(src: &str, vars: Option<usize>) -> Result<Polynomial, String> {
    let n =
        vars.or_else(|| infer_dimension(src)).ok_or_else(|| "cannot infer the dimension; pass --vars".to_string())?;
    parse(src, &RingContext::euclidean(n)).map_err(|e| format!("parse error at {e}"))
}

fn parse_rational(src: &str) -> Result<Coefficient, String> {
    let p = parse(src, &RingContext::euclidean(0)).map_err(|e| format!("bad rational `{src}`: {e}"))?;
    p.constant_value().ok_or_else(|| format!("bad rational `{src}`"))
}

#[derive(Serialize)]
struct CheckResult {
    hsq: Value,
    divisible: bool,
    defect: Value,
    certificate: Value,
    witness_remainder: Value,
    grad6_remainder: Value,
    delta1_sq_remainder: Value,
    message: String,
    warnings: Vec<String>,
}

fn cmd_check(src: &str, vars: Option<usize>, hsq_arg: &str, out: &OutputArgs) -> Outcome {
    let f = match parse_input(src, vars) {
        Ok(f) => f,
        Err(e) => return Outcome::input_error(e),
    };
    let n = f.ring().geometric_count();
    let solve = hsq_arg.trim() == "solve";
    let echo = inputs(&[
        ("poly", text(&f)),
        ("vars", Value::from(n)),
        ("hsq", Value::String(if solve { "solve".into() } else { hsq_arg.trim().into() })),
    ]);

    let (hsq, solution) = if solve {
        match solve_hsq_detail(&f) {
            Ok(sol) => (sol.hsq.clone(), Some(sol)),
            Err(e) => return Outcome::input_error(e),
        }
    } else {
        match parse_rational(hsq_arg) {
            Ok(h) => (Some(h), None),
            Err(e) => return Outcome::input_error(e),
        }
    };

    let Some(hsq) = hsq else {
        let sol = solution.expect("solve mode");
        let message = "no admissible H^2".to_string();
        let warnings = check_cmc(&f, &integer(1)).map(|r| r.warnings).unwrap_or_default();
        if out.json {
            let result = CheckResult {
                hsq: Value::Null,
                divisible: false,
                defect: Value::Null,
                certificate: Value::Null,
                witness_remainder: Value::Null,
                grad6_remainder: text(&sol.grad6_remainder),
                delta1_sq_remainder: text(&sol.delta1_sq_remainder),
                message,
                warnings,
            };
            return Outcome::ok(EXIT_NEGATIVE, render_json("check", echo, result));
        }
        let pr = Printer::new(out);
        let mut s = String::new();
        writeln!(s, "input: {}", pr.poly(&f)).unwrap();
        writeln!(s, "{message}").unwrap();
        writeln!(s, "|grad f|^6 mod f: {}", pr.poly(&sol.grad6_remainder)).unwrap();
        writeln!(s, "(Delta_1 f)^2 mod f: {}", pr.poly(&sol.delta1_sq_remainder)).unwrap();
        for w in &warnings {
            writeln!(s, "warning: {w}").unwrap();
        }
        return Outcome::ok(EXIT_NEGATIVE, s);
    };

    let report = match check_cmc(&f, &hsq) {
        Ok(r) => r,
        Err(e) => return Outcome::input_error(e),
    };
    let code = if report.divisible { EXIT_AFFIRMATIVE } else { EXIT_NEGATIVE };
    let message = if report.divisible { "divisible" } else { "not divisible" }.to_string();
    if out.json {
        let result = CheckResult {
            hsq: rat(&hsq),
            divisible: report.divisible,
            defect: text(&report.defect),
            certificate: opt_text(report.certificate.as_ref()),
            witness_remainder: opt_text(report.witness_remainder.as_ref()),
            grad6_remainder: solution.as_ref().map_or(Value::Null, |s| text(&s.grad6_remainder)),
            delta1_sq_remainder: solution.as_ref().map_or(Value::Null, |s| text(&s.delta1_sq_remainder)),
            message,
            warnings: report.warnings,
        };
        return Outcome::ok(code, render_json("check", echo, result));
    }
    let pr = Printer::new(out);
    let mut s = String::new();
    writeln!(s, "input: {}", pr.poly(&f)).unwrap();
    writeln!(s, "H^2: {}{}", format_coefficient(&hsq), if solve { " (solved)" } else { "" }).unwrap();
    writeln!(s, "verdict: {message}").unwrap();
    match (&report.certificate, &report.witness_remainder) {
        (Some(p), _) => writeln!(s, "certificate: {}", pr.poly(p)).unwrap(),
        (_, Some(r)) => writeln!(s, "remainder: {}", pr.poly(r)).unwrap(),
        _ => {}
    }
    for w in &report.warnings {
        writeln!(s, "warning: {w}").unwrap();
    }
    Outcome::ok(code, s)
}

#[derive(Serialize)]
struct StepJson {
    index: usize,
    name: &'static str,
    status: crate::replay::Status,
    detail: String,
    residual: Value,
    witness: Value,
}

#[derive(Serialize)]
struct ExpansionJson {
    matches: bool,
    residual: Value,
}

#[derive(Serialize)]
struct ReplayJson {
    n: usize,
    overall: crate::replay::Status,
    steps: Vec<StepJson>,
    printed_delta1: ExpansionJson,
}

fn replay_json(rep: &ReplayReport) -> ReplayJson {
    ReplayJson {
        n: rep.n,
        overall: rep.overall,
        steps: rep
            .steps
            .iter()
            .enumerate()
            .map(|(i, s)| StepJson {
                index: i + 1,
                name: s.name,
                status: s.status,
                detail: s.detail.clone(),
                residual: opt_text(s.residual.as_ref()),
                witness: opt_text(s.witness.as_ref()),
            })
            .collect(),
        printed_delta1: ExpansionJson {
            matches: rep.printed_delta1.matches,
            residual: opt_text(rep.printed_delta1.residual.as_ref()),
        },
    }
}

fn cmd_replay(n: usize, out: &OutputArgs) -> Outcome {
    let rep = match replay(n) {
        Ok(r) => r,
        Err(e) => return Outcome::input_error(e),
    };
    let code = if rep.overall == crate::replay::Status::Pass { EXIT_AFFIRMATIVE } else { EXIT_NEGATIVE };
    if out.json {
        return Outcome::ok(code, render_json("replay", inputs(&[("n", Value::from(n))]), replay_json(&rep)));
    }
    let pr = Printer::new(out);
    let mut s = String::new();
    writeln!(s, "replay n={n}").unwrap();
    for (i, step) in rep.steps.iter().enumerate() {
        writeln!(s, "[{}] {:<24} {}  {}", i + 1, step.name, step.status, step.detail).unwrap();
        if let Some(w) = &step.witness {
            writeln!(s, "      witness: {}", pr.poly(w)).unwrap();
        }
        if let Some(r) = &step.residual {
            writeln!(s, "      residual: {}", pr.poly(r)).unwrap();
        }
    }
    match &rep.printed_delta1.residual {
        None => writeln!(s, "printed Delta_1 expansion: matches").unwrap(),
        Some(r) => writeln!(s, "printed Delta_1 expansion: differs by {}", pr.poly(r)).unwrap(),
    }
    writeln!(s, "overall: {}", rep.overall).unwrap();
    Outcome::ok(code, s)
}

fn cmd_defect(src: &str, vars: Option<usize>, hsq_arg: &str, out: &OutputArgs) -> Outcome {
    let f = match parse_input(src, vars) {
        Ok(f) => f,
        Err(e) => return Outcome::input_error(e),
    };
    let hsq = match parse_rational(hsq_arg) {
        Ok(h) => h,
        Err(e) => return Outcome::input_error(e),
    };
    let defect = match cmc_defect(&f, &hsq) {
        Ok(d) => d,
        Err(e) => return Outcome::input_error(e),
    };
    if out.json {
        let echo = inputs(&[("poly", text(&f)), ("vars", Value::from(f.ring().geometric_count())), ("hsq", rat(&hsq))]);
        let mut result = Map::new();
        result.insert("defect".into(), text(&defect));
        result.insert("terms".into(), Value::from(defect.len()));
        return Outcome::ok(EXIT_AFFIRMATIVE, render_json("defect", echo, result));
    }
    Outcome::ok(EXIT_AFFIRMATIVE, format!("{}\n", Printer::new(out).poly(&defect)))
}

fn cmd_decompose(src: &str, vars: Option<usize>, out: &OutputArgs) -> Outcome {
    let f = match parse_input(src, vars) {
        Ok(f) => f,
        Err(e) => return Outcome::input_error(e),
    };
    let parts: Vec<(u32, Polynomial)> = f.homogeneous_parts().into_iter().rev().collect();
    if out.json {
        let echo = inputs(&[("poly", text(&f)), ("vars", Value::from(f.ring().geometric_count()))]);
        let list: Vec<Value> = parts
            .iter()
            .map(|(d, p)| {
                let mut m = Map::new();
                m.insert("degree".into(), Value::from(*d));
                m.insert("part".into(), text(p));
                Value::Object(m)
            })
            .collect();
        let mut result = Map::new();
        result.insert("parts".into(), Value::Array(list));
        return Outcome::ok(EXIT_AFFIRMATIVE, render_json("decompose", echo, result));
    }
    let pr = Printer::new(out);
    let mut s = String::new();
    for (d, p) in &parts {
        writeln!(s, "degree {d}: {}", pr.poly(p)).unwrap();
    }
    Outcome::ok(EXIT_AFFIRMATIVE, s)
}

fn cmd_cube_test(src: &str, vars: Option<usize>, out: &OutputArgs) -> Outcome {
    let f = match parse_input(src, vars) {
        Ok(f) => f,
        Err(e) => return Outcome::input_error(e),
    };
    let root = match cube_root_cubic_form(&f) {
        Ok(r) => r,
        Err(e) => return Outcome::input_error(e),
    };
    let code = if root.is_some() { EXIT_AFFIRMATIVE } else { EXIT_NEGATIVE };
    if out.json {
        let echo = inputs(&[("poly", text(&f)), ("vars", Value::from(f.ring().geometric_count()))]);
        let mut result = Map::new();
        result.insert("is_cube".into(), Value::Bool(root.is_some()));
        result.insert("root".into(), opt_text(root.as_ref()));
        return Outcome::ok(code, render_json("cube-test", echo, result));
    }
    let s = match root {
        Some(l) => format!("{}\n", print(&l)),
        None => "not a perfect cube\n".to_string(),
    };
    Outcome::ok(code, s)
}

fn cmd_surface(kind: SurfaceKind, n: usize, rsq_arg: &str, out: &OutputArgs) -> Outcome {
    let rsq = match parse_rational(rsq_arg) {
        Ok(r) => r,
        Err(e) => return Outcome::input_error(e),
    };
    let surface = match make_surface(kind, n, &rsq) {
        Ok(s) => s,
        Err(e) => return Outcome::input_error(e),
    };
    if out.json {
        let echo =
            inputs(&[("kind", serde_json::to_value(kind).expect("enum")), ("n", Value::from(n)), ("rsq", rat(&rsq))]);
        let mut result = Map::new();
        result.insert("polynomial".into(), text(&surface.polynomial));
        result.insert("expected_hsq".into(), surface.expected_hsq.as_ref().map_or(Value::Null, rat));
        result.insert("expected_certificate".into(), opt_text(surface.expected_certificate.as_ref()));
        return Outcome::ok(EXIT_AFFIRMATIVE, render_json("surface", echo, result));
    }
    let pr = Printer::new(out);
    let mut s = String::new();
    writeln!(s, "polynomial: {}", pr.poly(&surface.polynomial)).unwrap();
    match (&surface.expected_hsq, &surface.expected_certificate) {
        (Some(h), Some(c)) => {
            writeln!(s, "expected H^2: {}", format_coefficient(h)).unwrap();
            writeln!(s, "expected certificate: {}", pr.poly(c)).unwrap();
        }
        _ => writeln!(s, "expected H^2: none").unwrap(),
    }
    Outcome::ok(EXIT_AFFIRMATIVE, s)
}

fn sweep_line(s: &SweepSummary) -> String {
    format!("{} admissible of {}", s.admissible, s.count)
}

fn cmd_sweep(n: usize, count: usize, bound: u32, seed: u64, control: bool, out: &OutputArgs) -> Outcome {
    let summary = if control { control_sweep(n, count, bound, seed) } else { refutation_sweep(n, count, bound, seed) };
    let summary = match summary {
        Ok(s) => s,
        Err(e) => return Outcome::input_error(e),
    };
    let expected = if control { summary.count } else { 0 };
    let code = if summary.admissible == expected { EXIT_AFFIRMATIVE } else { EXIT_NEGATIVE };
    if out.json {
        let echo = inputs(&[
            ("n", Value::from(n)),
            ("count", Value::from(count)),
            ("bound", Value::from(bound)),
            ("seed", Value::from(seed)),
            ("control", Value::Bool(control)),
        ]);
        let candidates: Vec<Value> = summary
            .candidates
            .iter()
            .map(|(f, h)| {
                let mut m = Map::new();
                m.insert("poly".into(), text(f));
                m.insert("hsq".into(), rat(h));
                Value::Object(m)
            })
            .collect();
        let mut result = Map::new();
        result.insert("kind".into(), serde_json::to_value(summary.kind).expect("enum"));
        result.insert("admissible".into(), Value::from(summary.admissible));
        result.insert("count".into(), Value::from(summary.count));
        result.insert("candidates".into(), Value::Array(candidates));
        result.insert("summary".into(), Value::String(sweep_line(&summary)));
        return Outcome::ok(code, render_json("sweep", echo, result));
    }
    let mut s = format!("{}\n", sweep_line(&summary));
    // hits are printed in full always: they are the objects to inspect
    for (f, h) in &summary.candidates {
        writeln!(s, "candidate: {}  (H^2 = {})", print(f), format_coefficient(h)).unwrap();
    }
    Outcome::ok(code, s)
}
