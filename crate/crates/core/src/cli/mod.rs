//! The `wpsfol` command line: argument parsing, dispatch, and JSON reports.

pub mod problem;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::counts::{
    count_ambient, count_ambient_brunella, count_on_hypersurface, errata_diagnostics,
};
use crate::error::Error;
use crate::extactic::{
    certify_invariant, extactic_multiplicity, extactic_polynomial, is_first_integral,
    theorem2_applicable, theorem2_bound,
};
use crate::foliation::{validate_field, VectorField};
use crate::integrability::{
    darboux_search, jouanolou_threshold, poincare_bound, separatrix_milnor_budget, IntegralKind,
    SeparatrixKind,
};
use crate::poly::{format_rational, Polynomial};
use crate::weights::Weights;
use crate::wps::{h0, monomial_basis};
pub use problem::ProblemFile;

/// Extactic polynomials with more terms than this are elided unless `--full`.
pub const EXTACTIC_TERM_CAP: usize = 10_000;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "wpsfol",
    version,
    about = "Foliations on weighted projective spaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimension (and basis) of H0(O(k)).
    H0 {
        #[arg(long)]
        weights: String,
        #[arg(long)]
        degree: i64,
        #[arg(long)]
        basis: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Extactic polynomial of the field in a problem file.
    Extactic {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        full: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Rational first integral detection, and checking of a supplied quotient.
    FirstIntegral {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: u64,
        /// Named polynomial used as numerator.
        #[arg(long, default_value = "F")]
        numerator: String,
        /// Named polynomial used as denominator.
        #[arg(long, default_value = "G")]
        denominator: String,
        #[command(flatten)]
        output: Output,
    },
    /// Certify the invariant candidates of a problem file.
    Invariant {
        #[arg(long)]
        input: PathBuf,
        /// Also report multiplicities in the extactic of degree-k sections.
        #[arg(long)]
        k: Option<u64>,
        #[command(flatten)]
        output: Output,
    },
    /// Darboux first integral from the invariant candidates.
    Darboux {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Weighted Milnor sums of singularities.
    Counts {
        #[arg(long)]
        weights: String,
        #[arg(long)]
        degree: u64,
        #[arg(long)]
        hypersurface_degree: Option<i64>,
        /// Report the printed formula variants even when they agree.
        #[arg(long)]
        diagnostics: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Degree bounds and thresholds.
    Bounds {
        #[arg(long)]
        weights: String,
        #[arg(long)]
        degree: u64,
        #[arg(long, value_enum)]
        poincare: Option<PoincareKind>,
        #[arg(long)]
        theorem2: bool,
        #[arg(long, requires = "theorem2")]
        k: Option<u64>,
        #[arg(long)]
        jouanolou: bool,
        #[arg(long, requires = "jouanolou")]
        section_degree: Option<i64>,
        /// Milnor budget on an invariant quasi-smooth curve of this degree.
        #[arg(long)]
        separatrix_degree: Option<i64>,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PoincareKind {
    NonDicritical,
    QuasiSmooth,
}

#[derive(Debug, Serialize)]
pub struct JsonReport {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub diagnostics: Vec<Value>,
    pub status: String,
    pub exit_code: i32,
}

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse { .. } | Error::ProblemFile { .. } | Error::InvalidWeights(_) => {
                EXIT_PARSE
            }
            Error::InvalidField(_)
            | Error::InvalidForm(_)
            | Error::NotQuasiHomogeneous(_)
            | Error::WeightsMismatch(_)
            | Error::VarCountMismatch { .. }
            | Error::Consistency(_) => EXIT_VALIDATION,
            _ => EXIT_PRECONDITION,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

fn fail(code: i32, message: impl Into<String>) -> CliError {
    CliError {
        code,
        message: message.into(),
    }
}

type Outcome = std::result::Result<(Value, Value, Vec<Value>), CliError>;

fn load_field(problem: &ProblemFile) -> std::result::Result<VectorField, CliError> {
    let comps = problem
        .field
        .clone()
        .ok_or_else(|| fail(EXIT_PRECONDITION, "problem file has no `field` line"))?;
    Ok(validate_field(&problem.weights, comps)?)
}

fn load(input: &Path) -> std::result::Result<(ProblemFile, VectorField), CliError> {
    let problem = ProblemFile::read(input)?;
    let field = load_field(&problem)?;
    Ok((problem, field))
}

fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(Polynomial::to_string).collect()
}

fn cmd_h0(weights: &str, degree: i64, basis: bool) -> Outcome {
    let w = Weights::parse(weights)?;
    let eta = h0(&w, degree);
    let mut results = json!({ "eta": eta });
    if basis {
        let list = if degree < 0 {
            Vec::new()
        } else {
            strings(&monomial_basis(&w, degree as u64).basis_polynomials())
        };
        results["basis"] = json!(list);
    }
    let inputs = json!({ "weights": w.as_slice(), "degree": degree });
    Ok((inputs, results, Vec::new()))
}

fn extactic_json(e: &Polynomial, full: bool) -> Value {
    let elided = !full && e.len() > EXTACTIC_TERM_CAP;
    json!({
        "value": if elided { Value::Null } else { json!(e.to_string()) },
        "terms": e.len(),
        "elided": elided,
    })
}

fn cmd_extactic(input: &Path, k: u64, full: bool) -> Outcome {
    let (problem, x) = load(input)?;
    let eta = h0(x.weights(), k as i64);
    if eta < 2 {
        return Err(fail(
            EXIT_PRECONDITION,
            format!("h0(O({k})) = {eta}; the extactic needs at least 2 sections"),
        ));
    }
    let report = extactic_polynomial(&x, k)?;
    let mut factors = Vec::new();
    for (name, f) in &problem.invariants {
        let cert = certify_invariant(&x, f)?;
        let multiplicity = match (&cert, report.is_zero) {
            (Some(_), false) => Some(extactic_multiplicity(&report, f)?),
            _ => None,
        };
        factors.push(json!({
            "name": name,
            "f": f.to_string(),
            "invariant": cert.is_some(),
            "cofactor": cert.as_ref().map(|c| c.cofactor.to_string()),
            "multiplicity": multiplicity,
        }));
    }
    let results = json!({
        "k": k,
        "eta": eta,
        "field_degree": x.degree(),
        "predicted_degree": report.predicted_degree,
        "is_zero": report.is_zero,
        "extactic": extactic_json(&report.extactic, full),
        "certified_factors": factors,
    });
    Ok((
        json!({ "problem": problem.echo(), "k": k }),
        results,
        Vec::new(),
    ))
}

fn cmd_first_integral(input: &Path, k: u64, numerator: &str, denominator: &str) -> Outcome {
    let (problem, x) = load(input)?;
    let eta = h0(x.weights(), k as i64);
    if eta < 2 {
        return Err(fail(
            EXIT_PRECONDITION,
            format!("h0(O({k})) = {eta}; detection needs at least 2 sections"),
        ));
    }
    let report = extactic_polynomial(&x, k)?;
    let mut results = json!({
        "k": k,
        "eta": eta,
        "detected": report.is_zero,
    });
    match (problem.poly(numerator), problem.poly(denominator)) {
        (Some(f), Some(g)) => {
            results["candidate"] = json!({
                "numerator": f.to_string(),
                "denominator": g.to_string(),
                "is_first_integral": is_first_integral(&x, f, g)?,
            });
        }
        (None, None) => {}
        _ => {
            return Err(fail(
                EXIT_VALIDATION,
                format!("need both `{numerator}` and `{denominator}` to check a quotient"),
            ))
        }
    }
    Ok((
        json!({ "problem": problem.echo(), "k": k }),
        results,
        Vec::new(),
    ))
}

fn cmd_invariant(input: &Path, k: Option<u64>) -> Outcome {
    let (problem, x) = load(input)?;
    if problem.invariants.is_empty() {
        return Err(fail(
            EXIT_PRECONDITION,
            "problem file lists no invariant candidates",
        ));
    }
    let report = k.map(|k| extactic_polynomial(&x, k)).transpose()?;
    let mut out = Vec::new();
    for (name, f) in &problem.invariants {
        let cert = certify_invariant(&x, f)?;
        let multiplicity = match (&cert, &report) {
            (Some(_), Some(r)) if !r.is_zero => Some(extactic_multiplicity(r, f)?),
            _ => None,
        };
        out.push(json!({
            "name": name,
            "f": f.to_string(),
            "invariant": cert.is_some(),
            "cofactor": cert.as_ref().map(|c| c.cofactor.to_string()),
            "degree": cert.as_ref().map(|c| c.degree),
            "multiplicity": multiplicity,
        }));
    }
    let results = json!({
        "field_degree": x.degree(),
        "extactic_is_zero": report.as_ref().map(|r| r.is_zero),
        "candidates": out,
    });
    Ok((
        json!({ "problem": problem.echo(), "k": k }),
        results,
        Vec::new(),
    ))
}

fn cmd_darboux(input: &Path) -> Outcome {
    let (problem, x) = load(input)?;
    for (name, f) in &problem.invariants {
        if certify_invariant(&x, f)?.is_none() {
            return Err(fail(
                EXIT_VALIDATION,
                format!("`{name}` ({f}) is not invariant"),
            ));
        }
    }
    let fs: Vec<Polynomial> = problem.invariants.iter().map(|(_, p)| p.clone()).collect();
    let results = match darboux_search(&x, &fs)? {
        None => json!({ "found": false, "kernel_dimension": 0 }),
        Some(cert) => json!({
            "found": true,
            "kind": cert.kind,
            "kernel_dimension": cert.kernel_dimension,
            "multipliers": cert.multipliers.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
            "cofactors": cert.invariants.iter().map(|c| c.cofactor.to_string()).collect::<Vec<_>>(),
            "degrees": cert.degrees(),
            "first_integral": cert.first_integral.as_ref().map(|(f, g)| json!({
                "numerator": f.to_string(),
                "denominator": g.to_string(),
            })),
            "expanded": cert.kind == IntegralKind::Multiplicative,
        }),
    };
    Ok((json!({ "problem": problem.echo() }), results, Vec::new()))
}

fn cmd_counts(weights: &str, degree: u64, deg_v: Option<i64>, all_diagnostics: bool) -> Outcome {
    let w = Weights::parse(weights)?;
    let inputs = json!({ "weights": w.as_slice(), "degree": degree, "hypersurface_degree": deg_v });
    if let Some(v) = deg_v {
        let r = count_on_hypersurface(&w, degree, v)?;
        let results = json!({
            "scope": r.scope,
            "total_weighted": r.total_weighted.to_string(),
            "total": format_rational(&r.total),
            "methods": { "double_sum": format_rational(&r.total), "chern_recursion": format_rational(&r.total) },
            "agree": true,
        });
        let notes = r.notes.iter().map(|n| json!({ "note": n })).collect();
        return Ok((inputs, results, notes));
    }
    let chern = count_ambient(&w, degree)?;
    let mut methods = json!({ "chern": format_rational(&chern.total) });
    let mut agree = true;
    if w.len() == 3 {
        let b = count_ambient_brunella(&w, degree)?;
        agree = b.total == chern.total;
        methods["brunella"] = json!(format_rational(&b.total));
    }
    let diagnostics = errata_diagnostics(&w, degree)?
        .into_iter()
        .filter(|d| all_diagnostics || d.diverges)
        .map(|d| json!(d))
        .collect();
    let results = json!({
        "scope": chern.scope,
        "total_weighted": chern.total_weighted.to_string(),
        "total": format_rational(&chern.total),
        "methods": methods,
        "agree": agree,
    });
    Ok((inputs, results, diagnostics))
}

#[allow(clippy::too_many_arguments)]
fn cmd_bounds(
    weights: &str,
    degree: u64,
    poincare: Option<PoincareKind>,
    theorem2: bool,
    k: Option<u64>,
    jouanolou: bool,
    section_degree: Option<i64>,
    separatrix_degree: Option<i64>,
) -> Outcome {
    let w = Weights::parse(weights)?;
    let chosen = [
        poincare.is_some(),
        theorem2,
        jouanolou,
        separatrix_degree.is_some(),
    ]
    .iter()
    .filter(|&&b| b)
    .count();
    if chosen != 1 {
        return Err(fail(
            EXIT_PARSE,
            "choose exactly one of --poincare, --theorem2, --jouanolou, --separatrix-degree",
        ));
    }
    let inputs = json!({ "weights": w.as_slice(), "degree": degree });
    let mut diagnostics = Vec::new();
    let results = if let Some(kind) = poincare {
        let kind = match kind {
            PoincareKind::NonDicritical => SeparatrixKind::NonDicritical,
            PoincareKind::QuasiSmooth => SeparatrixKind::QuasiSmooth,
        };
        json!({ "kind": kind, "bound": poincare_bound(&w, degree, kind)? })
    } else if theorem2 {
        let k = k.ok_or_else(|| fail(EXIT_PARSE, "--theorem2 needs --k"))?;
        if k < 1 {
            return Err(fail(EXIT_PRECONDITION, "--k must be at least 1"));
        }
        json!({
            "k": k,
            "h0": h0(&w, k as i64),
            "bound": theorem2_bound(&w, k),
            "applicable": theorem2_applicable(k, degree),
            "condition": format!("k > d - 1 ({k} > {})", degree as i64 - 1),
        })
    } else if jouanolou {
        let m = section_degree.unwrap_or(degree as i64 - 1);
        let literal = jouanolou_threshold(&w, degree as i64)?;
        diagnostics.push(json!({
            "note": "threshold uses h0(O(m)) + 2; the classical value on P^2 is h0(O(d-1)) + 2, \
                     the reading with m = d gives the literal value below",
            "literal_section_degree": degree,
            "literal_threshold": literal,
        }));
        json!({ "section_degree": m, "threshold": jouanolou_threshold(&w, m)? })
    } else {
        let s = separatrix_degree.expect("checked above");
        let budget = separatrix_milnor_budget(&w, degree, s)?;
        json!({
            "separatrix_degree": s,
            "budget": format_rational(&budget),
            "positive": budget > num_traits::Zero::zero(),
            "quasi_smooth_bound": poincare_bound(&w, degree, SeparatrixKind::QuasiSmooth)?,
        })
    };
    Ok((inputs, results, diagnostics))
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::H0 { .. } => "h0",
        Command::Extactic { .. } => "extactic",
        Command::FirstIntegral { .. } => "first-integral",
        Command::Invariant { .. } => "invariant",
        Command::Darboux { .. } => "darboux",
        Command::Counts { .. } => "counts",
        Command::Bounds { .. } => "bounds",
    }
}

fn output_of(c: &Command) -> &Output {
    match c {
        Command::H0 { output, .. }
        | Command::Extactic { output, .. }
        | Command::FirstIntegral { output, .. }
        | Command::Invariant { output, .. }
        | Command::Darboux { output, .. }
        | Command::Counts { output, .. }
        | Command::Bounds { output, .. } => output,
    }
}

/// Runs one command and returns the report; the report's `exit_code` is the
/// process exit status.
pub fn execute(cli: &Cli) -> JsonReport {
    let outcome = match &cli.command {
        Command::H0 {
            weights,
            degree,
            basis,
            ..
        } => cmd_h0(weights, *degree, *basis),
        Command::Extactic { input, k, full, .. } => cmd_extactic(input, *k, *full),
        Command::FirstIntegral {
            input,
            k,
            numerator,
            denominator,
            ..
        } => cmd_first_integral(input, *k, numerator, denominator),
        Command::Invariant { input, k, .. } => cmd_invariant(input, *k),
        Command::Darboux { input, .. } => cmd_darboux(input),
        Command::Counts {
            weights,
            degree,
            hypersurface_degree,
            diagnostics,
            ..
        } => cmd_counts(weights, *degree, *hypersurface_degree, *diagnostics),
        Command::Bounds {
            weights,
            degree,
            poincare,
            theorem2,
            k,
            jouanolou,
            section_degree,
            separatrix_degree,
            ..
        } => cmd_bounds(
            weights,
            *degree,
            *poincare,
            *theorem2,
            *k,
            *jouanolou,
            *section_degree,
            *separatrix_degree,
        ),
    };
    let command = command_name(&cli.command).to_string();
    match outcome {
        Ok((inputs, results, diagnostics)) => JsonReport {
            command,
            inputs,
            results,
            diagnostics,
            status: "ok".into(),
            exit_code: EXIT_OK,
        },
        Err(e) => JsonReport {
            command,
            inputs: Value::Null,
            results: json!({ "error": e.message }),
            diagnostics: Vec::new(),
            status: "error".into(),
            exit_code: e.code,
        },
    }
}

/// Entry point for the binary; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let report = execute(&cli);
    if report.exit_code != EXIT_OK {
        if let Some(msg) = report.results.get("error").and_then(Value::as_str) {
            eprintln!("error: {msg}");
        }
    }
    for d in &report.diagnostics {
        if let Some(note) = d.get("note").and_then(Value::as_str) {
            eprintln!("note: {note}");
        }
    }
    let mut text = serde_json::to_string_pretty(&report).expect("serializable report");
    text.push('\n');
    match &output_of(&cli.command).out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return EXIT_PRECONDITION;
            }
        }
        None => print!("{text}"),
    }
    report.exit_code
}
