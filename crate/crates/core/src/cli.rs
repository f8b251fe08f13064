//! Command-line front end. Every command reads an edge list (or, for
//! `spectrum --from-spectrum`, a spectrum report) and writes a JSON or CSV
//! report to standard output.
//!
//! Exit codes: 0 success, 1 parse or validation failure, 2 explicit-size cap
//! exceeded, 3 verification mismatch.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;

use crate::error::{Error, Result};
use crate::graph::{iterate_transform, parse_edge_list, predict_counts, Graph, DEFAULT_EXPLICIT_CAP};
use crate::invariants::{
    closed_form_chain, closed_form_chain_exact, exact_invariants, invariants_from_spectrum,
    DegreeProduct, ExactInvariants, InvariantReport,
};
use crate::oracle::{self, compare_spectra};
use crate::roots::solve_lambda_equation;
use crate::spectrum::{
    base_spectrum, eigen_residual, iterate_spectrum, lift_eigenvector, Source, Spectrum,
    SpectrumContext, SpectrumEntry, MERGE_TOL,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_CAP: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Transform,
    Spectrum,
    Invariants,
    Verify,
    Lift,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

/// Fully resolved options for one invocation.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub input_path: PathBuf,
    pub n: u32,
    pub g: u32,
    pub tolerance: f64,
    pub output_format: OutputFormat,
    pub explicit_cap: u64,
    pub exact_mode: bool,
    /// Treat the input as a spectrum report rather than an edge list.
    pub from_spectrum: bool,
    /// Eigenpair file for `lift`.
    pub eigenpair_path: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(command: Command, input_path: impl Into<PathBuf>, n: u32, g: u32) -> Self {
        Self {
            command,
            input_path: input_path.into(),
            n,
            g,
            tolerance: 1e-8,
            output_format: OutputFormat::Json,
            explicit_cap: DEFAULT_EXPLICIT_CAP,
            exact_mode: false,
            from_spectrum: false,
            eigenpair_path: None,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::InvalidParameter(format!("--n must be at least 2, got {}", self.n)));
        }
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "--tol must be positive, got {}",
                self.tolerance
            )));
        }
        if self.from_spectrum && self.command != Command::Spectrum {
            return Err(Error::InvalidParameter(
                "--from-spectrum only applies to the spectrum command".into(),
            ));
        }
        if self.command == Command::Lift && self.eigenpair_path.is_none() {
            return Err(Error::InvalidParameter("lift needs --eigenpair".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Parser)]
#[command(name = "polyspec", version, about = "Normalized-Laplacian spectra of n-polygon graphs")]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,
}

#[derive(Debug, Subcommand)]
enum CliCommand {
    /// Write the edge list of the g-th iterate
    Transform(CommonArgs),
    /// Spectrum of the g-th iterate from the spectrum of the input graph
    Spectrum {
        #[command(flatten)]
        common: CommonArgs,
        /// Read INPUT as a spectrum report produced by this command
        #[arg(long)]
        from_spectrum: bool,
    },
    /// Kf', Kemeny's constant and spanning-tree counts for generations 0..=g
    Invariants(CommonArgs),
    /// Compare the predicted spectrum with a dense eigensolver on the explicit graph
    Verify(CommonArgs),
    /// Lift an eigenvector of the input graph to one of its n-polygon graph
    Lift {
        #[command(flatten)]
        common: CommonArgs,
        /// JSON file {"lambda": .., "vector": [..], "mu": ..}; without "mu"
        /// every root of the lambda equation is lifted
        #[arg(long)]
        eigenpair: PathBuf,
    },
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Edge list: one "u v" pair per line, '#' comments
    input: PathBuf,
    /// Polygon size (n >= 2)
    #[arg(long)]
    n: u32,
    /// Number of iterations
    #[arg(long, default_value_t = 1)]
    g: u32,
    /// Tolerance for eigenvalue comparisons
    #[arg(long = "tol", default_value_t = 1e-8)]
    tolerance: f64,
    /// Output format
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
    /// Largest vertex count built or diagonalized explicitly
    #[arg(long, default_value_t = DEFAULT_EXPLICIT_CAP)]
    cap: u64,
    /// Exact rational invariants
    #[arg(long)]
    exact: bool,
}

impl From<Cli> for RunConfig {
    fn from(cli: Cli) -> Self {
        let (command, common, from_spectrum, eigenpair_path) = match cli.command {
            CliCommand::Transform(c) => (Command::Transform, c, false, None),
            CliCommand::Spectrum { common, from_spectrum } => {
                (Command::Spectrum, common, from_spectrum, None)
            }
            CliCommand::Invariants(c) => (Command::Invariants, c, false, None),
            CliCommand::Verify(c) => (Command::Verify, c, false, None),
            CliCommand::Lift { common, eigenpair } => (Command::Lift, common, false, Some(eigenpair)),
        };
        RunConfig {
            command,
            input_path: common.input,
            n: common.n,
            g: common.g,
            tolerance: common.tolerance,
            output_format: common.format,
            explicit_cap: common.cap,
            exact_mode: common.exact,
            from_spectrum,
            eigenpair_path,
        }
    }
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::CapExceeded { .. } => EXIT_CAP,
        _ => EXIT_INVALID,
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code. Reports go to `out`, diagnostics to `err`.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    match run(&RunConfig::from(cli), out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Runs one command. Returns `EXIT_OK` or, for `verify`, `EXIT_MISMATCH`
/// after the report has been written.
pub fn run(config: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    config.validate()?;
    let report = match config.command {
        Command::Transform => run_transform(config)?,
        Command::Spectrum => run_spectrum(config)?,
        Command::Invariants => run_invariants(config)?,
        Command::Verify => {
            let (text, ok) = run_verify(config)?;
            out.write_all(text.as_bytes())?;
            return Ok(if ok { EXIT_OK } else { EXIT_MISMATCH });
        }
        Command::Lift => run_lift(config)?,
    };
    out.write_all(report.as_bytes())?;
    Ok(EXIT_OK)
}

fn read_graph(path: &Path) -> Result<Graph> {
    parse_edge_list(&fs::read_to_string(path)?)
}

/// 17 significant digits, valid as a JSON number.
pub fn format_float(x: f64) -> String {
    if x == 0.0 {
        "0.0000000000000000e0".to_string()
    } else if x.is_finite() {
        format!("{x:.16e}")
    } else {
        "null".to_string()
    }
}

fn raw_float(x: f64) -> Box<RawValue> {
    RawValue::from_string(format_float(x)).expect("formatted float is valid JSON")
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

#[derive(Serialize, Deserialize)]
pub struct Meta {
    pub n: u32,
    pub g: u32,
    #[serde(rename = "N")]
    pub vertices: String,
    #[serde(rename = "E")]
    pub edges: String,
    pub bipartite: bool,
}

impl Meta {
    fn new(n: u32, g: u32, ctx: &SpectrumContext) -> Self {
        Self {
            n,
            g,
            vertices: ctx.vertices.to_string(),
            edges: ctx.edges.to_string(),
            bipartite: ctx.bipartite,
        }
    }
}

// --- transform ------------------------------------------------------------

#[derive(Serialize)]
struct TransformReport {
    meta: Meta,
    edges: Vec<(usize, usize)>,
}

fn run_transform(config: &RunConfig) -> Result<String> {
    let graph = read_graph(&config.input_path)?;
    let out = iterate_transform(&graph, config.n, config.g, config.explicit_cap)?;
    match config.output_format {
        OutputFormat::Json => to_json(&TransformReport {
            meta: Meta::new(config.n, config.g, &SpectrumContext::of_graph(&out)),
            edges: out.edges().to_vec(),
        }),
        OutputFormat::Csv => {
            let mut s = String::from("u,v\n");
            for &(u, v) in out.edges() {
                let _ = writeln!(s, "{u},{v}");
            }
            Ok(s)
        }
    }
}

// --- spectrum -------------------------------------------------------------

#[derive(Serialize)]
struct EntryOut {
    value: Box<RawValue>,
    multiplicity: String,
    source: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    lambda: Option<Box<RawValue>>,
}

#[derive(Serialize)]
struct SpectralInvariantsOut {
    kirchhoff: Box<RawValue>,
    kemeny: Box<RawValue>,
}

#[derive(Serialize)]
struct SpectrumReport {
    meta: Meta,
    spectrum: Vec<EntryOut>,
    invariants: SpectralInvariantsOut,
}

#[derive(Deserialize)]
struct EntryIn {
    value: f64,
    multiplicity: String,
    source: String,
    #[serde(default)]
    lambda: Option<f64>,
}

#[derive(Deserialize)]
struct SpectrumIn {
    meta: Meta,
    spectrum: Vec<EntryIn>,
}

fn parse_big(s: &str, what: &str) -> Result<BigUint> {
    s.parse()
        .map_err(|_| Error::InvalidParameter(format!("{what} {s:?} is not a non-negative integer")))
}

/// Reads a spectrum report written by the `spectrum` command.
pub fn parse_spectrum_report(text: &str) -> Result<(Spectrum, SpectrumContext)> {
    let parsed: SpectrumIn = serde_json::from_str(text)?;
    let ctx = SpectrumContext::new(
        parse_big(&parsed.meta.vertices, "N")?,
        parse_big(&parsed.meta.edges, "E")?,
        parsed.meta.bipartite,
    )?;
    let entries = parsed
        .spectrum
        .into_iter()
        .map(|e| {
            let source = Source::from_label(&e.source, e.lambda).ok_or_else(|| {
                Error::InvalidParameter(format!("unknown eigenvalue source {:?}", e.source))
            })?;
            Ok(SpectrumEntry {
                value: e.value,
                multiplicity: parse_big(&e.multiplicity, "multiplicity")?,
                source,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let spectrum = Spectrum::new(entries);
    spectrum.validate(&ctx)?;
    Ok((spectrum, ctx))
}

/// Kf' and Kemeny's constant straight from the eigenvalues.
fn spectral_sums(spectrum: &Spectrum, ctx: &SpectrumContext) -> (f64, f64) {
    let kemeny: f64 = spectrum
        .entries()
        .iter()
        .filter(|e| e.value != 0.0)
        .map(|e| e.multiplicity.to_f64().unwrap_or(f64::INFINITY) / e.value)
        .sum();
    let two_e = 2.0 * ctx.edges.to_f64().unwrap_or(f64::INFINITY);
    (two_e * kemeny, kemeny)
}

fn run_spectrum(config: &RunConfig) -> Result<String> {
    let text = fs::read_to_string(&config.input_path)?;
    let (base, ctx) = if config.from_spectrum {
        parse_spectrum_report(&text)?
    } else {
        base_spectrum(&parse_edge_list(&text)?)?
    };
    let (spectrum, ctx) = iterate_spectrum(&base, &ctx, config.n, config.g)?;
    let spectrum = spectrum.merged(MERGE_TOL);
    Ok(match config.output_format {
        OutputFormat::Json => {
            let (kf, k) = spectral_sums(&spectrum, &ctx);
            to_json(&SpectrumReport {
                meta: Meta::new(config.n, config.g, &ctx),
                spectrum: spectrum
                    .entries()
                    .iter()
                    .map(|e| EntryOut {
                        value: raw_float(e.value),
                        multiplicity: e.multiplicity.to_string(),
                        source: e.source.label(),
                        lambda: match e.source {
                            Source::Lifted(l) => Some(raw_float(l)),
                            _ => None,
                        },
                    })
                    .collect(),
                invariants: SpectralInvariantsOut {
                    kirchhoff: raw_float(kf),
                    kemeny: raw_float(k),
                },
            })?
        }
        OutputFormat::Csv => {
            let mut s = String::from("value,multiplicity,source,lambda\n");
            for e in spectrum.entries() {
                let lambda = match e.source {
                    Source::Lifted(l) => format_float(l),
                    _ => String::new(),
                };
                let _ = writeln!(
                    s,
                    "{},{},{},{}",
                    format_float(e.value),
                    e.multiplicity,
                    e.source.label(),
                    lambda
                );
            }
            s
        }
    })
}

// --- invariants -----------------------------------------------------------

#[derive(Serialize)]
struct FloatInvariantsOut {
    generation: u32,
    method: &'static str,
    kirchhoff: Box<RawValue>,
    kemeny: Box<RawValue>,
    spanning_trees: Option<String>,
    spanning_trees_ln: Box<RawValue>,
}

impl From<&InvariantReport> for FloatInvariantsOut {
    fn from(r: &InvariantReport) -> Self {
        Self {
            generation: r.generation,
            method: r.method.label(),
            kirchhoff: raw_float(r.kirchhoff),
            kemeny: raw_float(r.kemeny),
            spanning_trees: r.spanning_trees.as_ref().map(ToString::to_string),
            spanning_trees_ln: raw_float(r.spanning_trees_ln),
        }
    }
}

#[derive(Serialize)]
struct ExactInvariantsOut {
    generation: u32,
    kirchhoff: String,
    kemeny: String,
    spanning_trees: String,
}

impl From<&ExactInvariants> for ExactInvariantsOut {
    fn from(r: &ExactInvariants) -> Self {
        Self {
            generation: r.generation,
            kirchhoff: r.kirchhoff.to_string(),
            kemeny: r.kemeny.to_string(),
            spanning_trees: r.spanning_trees.to_string(),
        }
    }
}

#[derive(Serialize)]
#[serde(untagged)]
enum ClosedFormOut {
    Float(Vec<FloatInvariantsOut>),
    Exact(Vec<ExactInvariantsOut>),
}

#[derive(Serialize)]
struct InvariantsOut {
    closed_form: ClosedFormOut,
    from_spectrum: Vec<FloatInvariantsOut>,
}

#[derive(Serialize)]
struct InvariantsReport {
    meta: Meta,
    invariants: InvariantsOut,
}

fn run_invariants(config: &RunConfig) -> Result<String> {
    let graph = read_graph(&config.input_path)?;
    let (n, g) = (config.n, config.g);
    let n0 = BigUint::from(graph.vertex_count());
    let e0 = BigUint::from(graph.edge_count());
    let (base, base_ctx) = base_spectrum(&graph)?;
    let degrees = DegreeProduct::of_graph(&graph);

    let mut from_spectrum = Vec::new();
    let mut current = (base.clone(), base_ctx.clone());
    for t in 0..=g {
        if t > 0 {
            current = iterate_spectrum(&current.0.merged(MERGE_TOL), &current.1, n, 1)?;
        }
        if current.1.vertices > BigUint::from(config.explicit_cap) {
            break;
        }
        let d = degrees.iterated(&n0, &e0, n, t)?;
        from_spectrum.push(invariants_from_spectrum(&current.0, &current.1, &d, t)?);
    }

    let closed_form = if config.exact_mode {
        let exact = exact_invariants(&graph, graph.vertex_count())?;
        ClosedFormOut::Exact(
            closed_form_chain_exact(&exact, &n0, &e0, n, g)?
                .iter()
                .map(ExactInvariantsOut::from)
                .collect(),
        )
    } else {
        let nst0 = oracle::matrix_tree_count(&graph, graph.vertex_count())?;
        let base_report = invariants_from_spectrum(&base, &base_ctx, &degrees, 0)?;
        ClosedFormOut::Float(
            closed_form_chain(base_report.kirchhoff, base_report.kemeny, &nst0, &n0, &e0, n, g)?
                .iter()
                .map(FloatInvariantsOut::from)
                .collect(),
        )
    };

    let final_ctx = SpectrumContext {
        vertices: predict_counts(&n0, &e0, n, g)?.vertices,
        edges: predict_counts(&n0, &e0, n, g)?.edges,
        bipartite: base_ctx.bipartite && (g == 0 || n % 2 == 1),
    };
    Ok(match config.output_format {
        OutputFormat::Json => to_json(&InvariantsReport {
            meta: Meta::new(n, g, &final_ctx),
            invariants: InvariantsOut {
                closed_form,
                from_spectrum: from_spectrum.iter().map(FloatInvariantsOut::from).collect(),
            },
        })?,
        OutputFormat::Csv => {
            let mut s = String::from("generation,method,kirchhoff,kemeny,spanning_trees,spanning_trees_ln\n");
            match closed_form {
                ClosedFormOut::Float(rows) => {
                    for r in rows {
                        push_float_row(&mut s, &r);
                    }
                }
                ClosedFormOut::Exact(rows) => {
                    for r in rows {
                        let _ = writeln!(
                            s,
                            "{},closed_form_exact,{},{},{},",
                            r.generation, r.kirchhoff, r.kemeny, r.spanning_trees
                        );
                    }
                }
            }
            for r in &from_spectrum {
                push_float_row(&mut s, &FloatInvariantsOut::from(r));
            }
            s
        }
    })
}

fn push_float_row(s: &mut String, r: &FloatInvariantsOut) {
    let _ = writeln!(
        s,
        "{},{},{},{},{},{}",
        r.generation,
        r.method,
        r.kirchhoff.get(),
        r.kemeny.get(),
        r.spanning_trees.as_deref().unwrap_or(""),
        r.spanning_trees_ln.get()
    );
}

// --- verify ---------------------------------------------------------------

#[derive(Serialize)]
struct ComparisonOut {
    max_abs_deviation: Box<RawValue>,
    tolerance: Box<RawValue>,
    predicted_count: usize,
    oracle_count: usize,
    matched: bool,
}

#[derive(Serialize)]
struct TreeCheckOut {
    closed_form: String,
    matrix_tree: String,
    matched: bool,
}

#[derive(Serialize)]
struct VerifyReport {
    meta: Meta,
    comparison: ComparisonOut,
    spanning_trees: Option<TreeCheckOut>,
    passed: bool,
}

fn run_verify(config: &RunConfig) -> Result<(String, bool)> {
    let graph = read_graph(&config.input_path)?;
    let explicit = iterate_transform(&graph, config.n, config.g, config.explicit_cap)?;
    let (base, ctx) = base_spectrum(&graph)?;
    let (predicted, out_ctx) = iterate_spectrum(&base, &ctx, config.n, config.g)?;
    let predicted = predicted
        .expanded(explicit.vertex_count())
        .ok_or_else(|| Error::InconsistentSpectrum("predicted spectrum is larger than the graph".into()))?;
    let measured = oracle::eig_sym(&oracle::normalized_laplacian(&explicit))?;
    let cmp = compare_spectra(&predicted, &measured, config.tolerance);

    let trees = if config.g >= 1 && explicit.vertex_count() <= oracle::DEFAULT_MATRIX_TREE_CAP {
        let n0 = BigUint::from(graph.vertex_count());
        let e0 = BigUint::from(graph.edge_count());
        let nst0 = oracle::matrix_tree_count(&graph, graph.vertex_count())?;
        let closed = crate::invariants::spanning_trees_closed(&nst0, &n0, &e0, config.n, config.g)?;
        let direct = oracle::matrix_tree_count(&explicit, oracle::DEFAULT_MATRIX_TREE_CAP)?;
        Some(TreeCheckOut {
            matched: closed == direct,
            closed_form: closed.to_string(),
            matrix_tree: direct.to_string(),
        })
    } else {
        None
    };
    let passed = cmp.matched && trees.as_ref().is_none_or(|t| t.matched);

    let text = match config.output_format {
        OutputFormat::Json => to_json(&VerifyReport {
            meta: Meta::new(config.n, config.g, &out_ctx),
            comparison: ComparisonOut {
                max_abs_deviation: raw_float(cmp.max_abs_deviation),
                tolerance: raw_float(cmp.tolerance),
                predicted_count: cmp.size_a,
                oracle_count: cmp.size_b,
                matched: cmp.matched,
            },
            spanning_trees: trees,
            passed,
        })?,
        OutputFormat::Csv => {
            let mut s = String::from("key,value\n");
            let _ = writeln!(s, "max_abs_deviation,{}", format_float(cmp.max_abs_deviation));
            let _ = writeln!(s, "tolerance,{}", format_float(cmp.tolerance));
            let _ = writeln!(s, "predicted_count,{}", cmp.size_a);
            let _ = writeln!(s, "oracle_count,{}", cmp.size_b);
            let _ = writeln!(s, "spectrum_matched,{}", cmp.matched);
            if let Some(t) = &trees {
                let _ = writeln!(s, "spanning_trees_closed_form,{}", t.closed_form);
                let _ = writeln!(s, "spanning_trees_matrix_tree,{}", t.matrix_tree);
                let _ = writeln!(s, "spanning_trees_matched,{}", t.matched);
            }
            let _ = writeln!(s, "passed,{passed}");
            s
        }
    };
    Ok((text, passed))
}

// --- lift -----------------------------------------------------------------

#[derive(Deserialize)]
struct Eigenpair {
    lambda: f64,
    #[serde(default)]
    mu: Option<f64>,
    vector: Vec<f64>,
}

#[derive(Serialize)]
struct LiftOut {
    mu: Box<RawValue>,
    residual: Box<RawValue>,
    vector: Vec<Box<RawValue>>,
}

#[derive(Serialize)]
struct LiftReport {
    meta: Meta,
    lambda: Box<RawValue>,
    lifts: Vec<LiftOut>,
}

fn run_lift(config: &RunConfig) -> Result<String> {
    if config.g != 1 {
        return Err(Error::InvalidParameter(format!(
            "lift applies a single transform step, got --g {}",
            config.g
        )));
    }
    let graph = read_graph(&config.input_path)?;
    let path = config.eigenpair_path.as_ref().expect("checked in validate");
    let pair: Eigenpair = serde_json::from_str(&fs::read_to_string(path)?)?;
    let mus = match pair.mu {
        Some(mu) => vec![mu],
        None => solve_lambda_equation(config.n, pair.lambda)?.roots,
    };
    let target = iterate_transform(&graph, config.n, 1, config.explicit_cap)?;
    let mut lifts = Vec::with_capacity(mus.len());
    for mu in mus {
        let w = lift_eigenvector(&graph, config.n, pair.lambda, &pair.vector, mu)?;
        let residual = eigen_residual(&target, mu, &w);
        lifts.push((mu, residual, w));
    }
    Ok(match config.output_format {
        OutputFormat::Json => to_json(&LiftReport {
            meta: Meta::new(config.n, 1, &SpectrumContext::of_graph(&target)),
            lambda: raw_float(pair.lambda),
            lifts: lifts
                .into_iter()
                .map(|(mu, residual, w)| LiftOut {
                    mu: raw_float(mu),
                    residual: raw_float(residual),
                    vector: w.into_iter().map(raw_float).collect(),
                })
                .collect(),
        })?,
        OutputFormat::Csv => {
            let mut s = String::from("mu,residual,index,value\n");
            for (mu, residual, w) in lifts {
                for (i, x) in w.iter().enumerate() {
                    let _ = writeln!(
                        s,
                        "{},{},{i},{}",
                        format_float(mu),
                        format_float(residual),
                        format_float(*x)
                    );
                }
            }
            s
        }
    })
}
