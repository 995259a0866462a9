//! The `lgmf` command line.
//!
//! Exit codes: `0` success, `1` domain error (parse, schema, validation or a
//! failed computation), `2` usage error. Reports go to standard output only
//! on success; errors are written to standard error.

pub mod files;
pub mod report;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::hom::{self, oracle};
use crate::mf::{MFMorphism, MatrixFactorization, MfError};
use crate::mirror::{self, MirrorError, ToricSpec};
use crate::poly::{Dim, Field, PolyError, PolyMatrix};

pub use files::{FactorizationFile, Input, Loader};
pub use report::{Format, Report};

/// Window limit for `hom --oracle`.
const ORACLE_MAX_DEGREE: u32 = 30;
/// Degrees listed by `cok`.
const HILBERT_DEGREES: u32 = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Io(String),
    Domain { code: &'static str, message: String, diagnostics: Vec<String> },
}

impl CliError {
    pub fn domain(code: &'static str, message: String) -> Self {
        CliError::Domain { code, message, diagnostics: Vec::new() }
    }

    pub fn code(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "USAGE_ERROR",
            CliError::Io(_) => "IO_ERROR",
            CliError::Domain { code, .. } => code,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Io(m) => m,
            CliError::Domain { message, .. } => message,
        }
    }

    pub fn diagnostics(&self) -> &[String] {
        match self {
            CliError::Domain { diagnostics, .. } => diagnostics,
            _ => &[],
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain { .. } => 1,
            CliError::Usage(_) | CliError::Io(_) => 2,
        }
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        let code = match e {
            PolyError::Parse { .. } => "PARSE_ERROR",
            PolyError::InvalidField(_)
            | PolyError::InvalidVariable(_)
            | PolyError::DuplicateVariable(_)
            | PolyError::UnknownVariable(_) => "SCHEMA_ERROR",
            _ => "COMPUTATION_ERROR",
        };
        CliError::domain(code, e.to_string())
    }
}

impl From<MfError> for CliError {
    fn from(e: MfError) -> Self {
        match e {
            MfError::NotAFactorization(report) => {
                let mut diagnostics = report.shape_errors.clone();
                diagnostics.extend(
                    report
                        .failures
                        .iter()
                        .map(|c| format!("{}[{},{}] = {}, expected {}", c.product, c.row, c.col, c.found, c.expected)),
                );
                CliError::Domain {
                    code: "VALIDATION_ERROR",
                    message: "not a matrix factorization".into(),
                    diagnostics,
                }
            }
            MfError::Poly(p) => p.into(),
            other => {
                let code = match other {
                    MfError::ContextMismatch => "CONTEXT_MISMATCH",
                    MfError::InvalidMorphism(_) => "INVALID_MORPHISM",
                    MfError::VariableCollision(_) => "VARIABLE_COLLISION",
                    MfError::InvalidComplex(_) | MfError::CompositionNonzero(_) => "INVALID_COMPLEX",
                    _ => "VALIDATION_ERROR",
                };
                CliError::domain(code, other.to_string())
            }
        }
    }
}

impl From<MirrorError> for CliError {
    fn from(e: MirrorError) -> Self {
        let code = match &e {
            MirrorError::InvalidSpec(_) | MirrorError::InconsistentRelation(_) => "SCHEMA_ERROR",
            MirrorError::NonUnimodularBasis(_) => "NON_UNIMODULAR_BASIS",
            MirrorError::UnresolvableRay(_) => "UNRESOLVABLE_RAY",
            MirrorError::MissingParameter(_) => "MISSING_PARAMETER",
            MirrorError::UnknownParameter(_) | MirrorError::NonPositiveParameter(_) => "INVALID_PARAMETER",
            MirrorError::InfiniteCriticalLocus => "INFINITE_CRITICAL_LOCUS",
            MirrorError::ZeroElimination => "ZERO_ELIMINATION",
            MirrorError::CriticalValue(_) => "CRITICAL_VALUE",
            MirrorError::NotOneDimensional(_) => "NOT_ONE_DIMENSIONAL",
            MirrorError::Poly(p) => return p.clone().into(),
        };
        CliError::domain(code, e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(name = "lgmf", version, about = "Matrix factorizations, their Hom complexes, and toric mirror superpotentials")]
pub struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    /// Coefficient field override: `Q` or `Fp:<p>`.
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Write the resulting factorization file (or, for other verbs, the report) here.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse and validate any input file.
    Validate { input: String },
    /// Shift functor `[1]`.
    Shift {
        input: String,
        /// Apply the shift twice.
        #[arg(long)]
        twice: bool,
    },
    /// Direct sum of two factorizations.
    Sum { left: String, right: String },
    /// Mapping cone of a morphism file.
    Cone { morphism: PathBuf },
    /// Tensor product of factorizations of `W` and `V` in disjoint variables.
    Tensor { left: String, right: String },
    /// Knörrer image `E ⊗ (u, v)` over `W + uv`.
    Knorrer {
        input: String,
        /// Names of the two new variables.
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        vars: Option<Vec<String>>,
    },
    /// Cokernel module of `e1` with its dimension and Hilbert slices.
    Cok { input: String },
    /// Dimensions of the Hom cohomology.
    Hom {
        source: String,
        target: String,
        /// Cross-check against the degree-truncation oracle.
        #[arg(long)]
        oracle: bool,
        /// Include representative cocycles.
        #[arg(long)]
        basis: bool,
    },
    /// Decide whether a morphism is null-homotopic.
    Nullhomotopic { morphism: PathBuf },
    /// Decide whether a morphism is a homotopy equivalence.
    Equiv { morphism: PathBuf },
    /// Totalize a complex file into a single factorization.
    Totalize { complex: PathBuf },
    /// Hori–Vafa mirror superpotentials.
    Mirror {
        #[command(subcommand)]
        action: MirrorCommand,
    },
}

#[derive(Debug, Args)]
pub struct ToricInput {
    /// Toric data file.
    #[arg(required_unless_present = "preset", conflicts_with = "preset")]
    pub file: Option<PathBuf>,
    /// Built-in fan: P1, P2, F1 or dP6.
    #[arg(long)]
    pub preset: Option<String>,
}

#[derive(Debug, Args)]
pub struct MirrorArgs {
    #[command(flatten)]
    pub input: ToricInput,
    /// Parameter value `NAME=VALUE` with VALUE a positive rational; repeatable.
    #[arg(long = "param", value_name = "NAME=VALUE")]
    pub params: Vec<String>,
}

#[derive(Debug, Subcommand)]
pub enum MirrorCommand {
    /// Print the superpotential.
    Build(ToricInput),
    /// Number of critical points on the torus.
    Count(MirrorArgs),
    /// Value polynomial of the critical values.
    Values(MirrorArgs),
    /// Number of points in a regular fiber of a one-variable superpotential.
    Fiber {
        #[command(flatten)]
        args: MirrorArgs,
        /// The (non-critical) value.
        #[arg(long)]
        at: String,
    },
}

impl Command {
    pub fn verb(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Shift { .. } => "shift",
            Command::Sum { .. } => "sum",
            Command::Cone { .. } => "cone",
            Command::Tensor { .. } => "tensor",
            Command::Knorrer { .. } => "knorrer",
            Command::Cok { .. } => "cok",
            Command::Hom { .. } => "hom",
            Command::Nullhomotopic { .. } => "nullhomotopic",
            Command::Equiv { .. } => "equiv",
            Command::Totalize { .. } => "totalize",
            Command::Mirror { action } => match action {
                MirrorCommand::Build(_) => "mirror-build",
                MirrorCommand::Count(_) => "mirror-count",
                MirrorCommand::Values(_) => "mirror-values",
                MirrorCommand::Fiber { .. } => "mirror-fiber",
            },
        }
    }
}

/// Result of a verb: a report, plus the canonical object file if one was produced.
struct Outcome {
    report: Report,
    object: Option<String>,
}

fn matrix_json(m: &PolyMatrix) -> Value {
    json!(m.to_strings())
}

fn dim_json(d: Dim) -> Value {
    match d {
        Dim::Finite(n) => json!(n),
        Dim::Infinite => json!("INFINITE"),
    }
}

fn factorization_outcome(verb: &str, e: &MatrixFactorization) -> Outcome {
    let file = FactorizationFile::from_factorization(e);
    let report = Report::new(verb)
        .with("rank", e.rank())
        .with("factorization", serde_json::to_value(&file).expect("serializable"));
    Outcome { report, object: Some(file.to_text()) }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    s.trim().parse::<BigRational>().ok()
}

fn parse_params(raw: &[String]) -> Result<BTreeMap<String, BigRational>, CliError> {
    let mut out = BTreeMap::new();
    for p in raw {
        let (k, v) = p
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("--param expects NAME=VALUE, got '{p}'")))?;
        let value = parse_rational(v).ok_or_else(|| CliError::Usage(format!("'{v}' is not a rational number")))?;
        if out.insert(k.trim().to_string(), value).is_some() {
            return Err(CliError::Usage(format!("parameter '{k}' given twice")));
        }
    }
    Ok(out)
}

fn toric(loader: &Loader, input: &ToricInput) -> Result<ToricSpec, CliError> {
    match (&input.preset, &input.file) {
        (Some(name), _) => ToricSpec::preset(name).ok_or_else(|| {
            CliError::Usage(format!("unknown preset '{name}'; available: {}", ToricSpec::PRESETS.join(", ")))
        }),
        (None, Some(path)) => loader.load_toric(path),
        (None, None) => Err(CliError::Usage("a toric file or --preset is required".into())),
    }
}

fn superpotential(loader: &Loader, input: &ToricInput) -> Result<mirror::SuperpotentialSpec, CliError> {
    Ok(mirror::build_superpotential(&toric(loader, input)?)?)
}

fn hom_report(source: &MatrixFactorization, target: &MatrixFactorization, check: bool, basis: bool) -> Result<Report, CliError> {
    let r = hom::hom_dims(source, target)?;
    let mut report = Report::new("hom").with("h0", dim_json(r.h0)).with("h1", dim_json(r.h1));
    if basis {
        let even: Vec<Value> =
            r.basis_even.iter().map(|m| json!({"p1": matrix_json(m.p1()), "p0": matrix_json(m.p0())})).collect();
        let odd: Vec<Value> =
            r.basis_odd.iter().map(|m| json!({"s0": matrix_json(m.p0()), "s1": matrix_json(m.p1())})).collect();
        report.set("basis_even", even);
        report.set("basis_odd", odd);
    }
    if check {
        match (r.h0, r.h1) {
            (Dim::Finite(a), Dim::Finite(b)) => match oracle::truncated_hom_dims(source, target, ORACLE_MAX_DEGREE)? {
                Some((c, d)) if (c, d) == (a, b) => report.set("oracle", json!({"h0": c, "h1": d})),
                Some((c, d)) => {
                    return Err(CliError::domain(
                        "ORACLE_MISMATCH",
                        format!("Gröbner dimensions (h0, h1) = ({a}, {b}) but the truncation oracle gives ({c}, {d})"),
                    ))
                }
                None => {
                    return Err(CliError::domain(
                        "ORACLE_UNSTABLE",
                        format!("truncation oracle did not stabilise by degree {ORACLE_MAX_DEGREE}; Gröbner dimensions ({a}, {b})"),
                    ))
                }
            },
            _ => report.diagnostics.push("oracle skipped: Hom is infinite-dimensional".into()),
        }
    }
    Ok(report)
}

fn execute(cli: &Cli, loader: &Loader) -> Result<Outcome, CliError> {
    let verb = cli.command.verb();
    let report_only = |report: Report| Ok(Outcome { report, object: None });
    match &cli.command {
        Command::Validate { input } => {
            let input = match files::preset_factorization(input) {
                Some(p) => Input::Factorization(p?),
                None => loader.load(std::path::Path::new(input))?,
            };
            let report = match input {
                Input::Factorization(e) => Report::new(verb)
                    .with("kind", "factorization")
                    .with("valid", true)
                    .with("rank", e.rank())
                    .with("W", e.w().to_string())
                    .with("lambda", e.lambda().to_string()),
                Input::Morphism(m) => Report::new(verb)
                    .with("kind", "morphism")
                    .with("valid", true)
                    .with("source_rank", m.source().rank())
                    .with("target_rank", m.target().rank()),
                Input::Complex(c) => Report::new(verb)
                    .with("kind", "complex")
                    .with("valid", true)
                    .with("length", c.objects().len()),
                Input::Toric(t) => {
                    let w = mirror::build_superpotential(&t)?;
                    Report::new(verb)
                        .with("kind", "toric")
                        .with("valid", true)
                        .with("rays", t.rays.len())
                        .with("relations", t.relations.len())
                        .with("W", w.to_string())
                }
            };
            report_only(report)
        }
        Command::Shift { input, twice } => {
            let e = loader.factorization(input)?;
            let s = if *twice { e.shift().shift() } else { e.shift() };
            Ok(factorization_outcome(verb, &s))
        }
        Command::Sum { left, right } => {
            let s = loader.factorization(left)?.direct_sum(&loader.factorization(right)?)?;
            Ok(factorization_outcome(verb, &s))
        }
        Command::Tensor { left, right } => {
            let t = loader.factorization(left)?.tensor(&loader.factorization(right)?)?;
            Ok(factorization_outcome(verb, &t))
        }
        Command::Knorrer { input, vars } => {
            let e = loader.factorization(input)?;
            let k = match vars {
                Some(v) => e.knorrer_with(&v[0], &v[1])?,
                None => e.knorrer()?,
            };
            Ok(factorization_outcome(verb, &k))
        }
        Command::Cone { morphism } => {
            let c = loader.load_morphism(morphism)?.cone()?;
            Ok(factorization_outcome(verb, &c.object))
        }
        Command::Totalize { complex } => {
            let t = loader.load_complex(complex)?.totalize()?;
            Ok(factorization_outcome(verb, &t))
        }
        Command::Cok { input } => {
            let m = loader.factorization(input)?.cokernel_presentation();
            report_only(
                Report::new(verb)
                    .with("rank", m.rank())
                    .with("fiber_relation", m.fiber_relation.to_string())
                    .with("presentation", matrix_json(&m.presentation))
                    .with("killed_by_fiber", m.is_killed_by_fiber())
                    .with("dimension", dim_json(m.dimension()))
                    .with("hilbert_slices", m.hilbert_slices(HILBERT_DEGREES)),
            )
        }
        Command::Hom { source, target, oracle, basis } => {
            let e = loader.factorization(source)?;
            let f = loader.factorization(target)?;
            report_only(hom_report(&e, &f, *oracle, *basis)?)
        }
        Command::Nullhomotopic { morphism } => {
            let m = loader.load_morphism(morphism)?;
            let report = match hom::is_null_homotopic(&m)? {
                Some(h) => Report::new(verb)
                    .with("null_homotopic", true)
                    .with("s0", matrix_json(&h.s0))
                    .with("s1", matrix_json(&h.s1)),
                None => Report::new(verb).with("null_homotopic", false),
            };
            report_only(report)
        }
        Command::Equiv { morphism } => {
            let m: MFMorphism = loader.load_morphism(morphism)?;
            report_only(Report::new(verb).with("homotopy_equivalence", hom::is_homotopy_equivalence(&m)?))
        }
        Command::Mirror { action } => {
            if loader.field.is_some_and(|f| f != Field::Rational) {
                return Err(CliError::Usage("mirror computations run over Q only".into()));
            }
            match action {
                MirrorCommand::Build(input) => {
                    let w = superpotential(loader, input)?;
                    report_only(
                        Report::new(verb)
                            .with("vars", w.vars().to_vec())
                            .with("params", w.params().to_vec())
                            .with("W", w.to_string()),
                    )
                }
                MirrorCommand::Count(args) => {
                    let w = superpotential(loader, &args.input)?;
                    let count = mirror::critical_count(&w, &parse_params(&args.params)?)?;
                    report_only(Report::new(verb).with("count", count))
                }
                MirrorCommand::Values(args) => {
                    let w = superpotential(loader, &args.input)?;
                    let r = mirror::critical_values(&w, &parse_params(&args.params)?)?;
                    let values = match r.rational_values() {
                        Some(v) => json!(v.iter().map(|q| q.to_string()).collect::<Vec<_>>()),
                        None => Value::Null,
                    };
                    report_only(
                        Report::new(verb)
                            .with("count", r.count)
                            .with("value_polynomial", r.value_polynomial.to_string())
                            .with("degree", r.degree())
                            .with("distinct_values", r.distinct_values)
                            .with("rational_values", values),
                    )
                }
                MirrorCommand::Fiber { args, at } => {
                    let w = superpotential(loader, &args.input)?;
                    let value = parse_rational(at).ok_or_else(|| CliError::Usage(format!("'{at}' is not a rational number")))?;
                    let n = mirror::fiber_cardinality(&w, &parse_params(&args.params)?, &value)?;
                    report_only(Report::new(verb).with("value", value.to_string()).with("cardinality", n))
                }
            }
        }
    }
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the command line on `args` (including the program name) without
/// touching the process streams.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Output { code, stdout: text, stderr: String::new() }
            } else {
                Output { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let verb = cli.command.verb();
    let result = cli
        .field
        .as_deref()
        .map(|f| f.parse::<Field>().map_err(|e| CliError::Usage(format!("--field: {e}"))))
        .transpose()
        .and_then(|field| execute(&cli, &Loader { field }))
        .and_then(|outcome| {
            let text = report::render_ok(&outcome.report, cli.format);
            match &cli.out {
                Some(path) => {
                    let body = outcome.object.as_deref().unwrap_or(&text);
                    fs::write(path, body).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
                    Ok(text)
                }
                None => Ok(text),
            }
        });
    match result {
        Ok(stdout) => Output { code: 0, stdout, stderr: String::new() },
        Err(e) => Output { code: e.exit_code(), stdout: String::new(), stderr: report::render_error(verb, &e, cli.format) },
    }
}
