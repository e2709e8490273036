//! Report assembly and the `raag-paut` command line front end.
//!
//! Exit status: 0 on success, 1 on input errors (including usage errors),
//! 2 when a resource guard trips, 3 on an internal inconsistency such as a
//! failed numeric cross-check on a graph satisfying condition (*).

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::day_wade::{decompose_pout, series_summary, DECOMPOSITION_FORMAT_VERSION};
use crate::error::{Error, Result};
use crate::graph::{parse_graph, Graph};
use crate::lie::{eliminate_linear, graded_dims_with, lie_presentation, LieVariant, DEFAULT_MAX_DEGREE};
use crate::linalg::{Arithmetic, ComputeOptions};
use crate::presentation::{paut_like_presentation, pout_presentation, standard_omega};
use crate::quad::{algebra_hilbert_with, enveloping_quadratic, koszul_numeric_test, quadratic_dual};
use crate::series::{GradedDims, HilbertSeries};

/// Default degree of the numeric Koszul cross-check.
pub const DEFAULT_NUMERIC_DEGREE: usize = 4;

/// Label carried by every numeric Koszul block.
pub const NUMERIC_CHECK_LABEL: &str = "cross-check (necessary condition)";

const FAST_SEED: u64 = 0x5eed_cafe;

/// Numeric facts about the McCool group `PAut(F_n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct McCoolStats {
    pub cd: u64,
    pub chi: i64,
    pub koszul: bool,
}

/// Cohomological dimension, Euler characteristic and Koszulness of `PAut(F_n)`.
pub fn mccool_stats(n: u64) -> Result<McCoolStats> {
    if n < 2 {
        return Err(Error::input(format!("McCool statistics need n >= 2, got {n}")));
    }
    let base = -((n - 1) as i64);
    let chi = u32::try_from(n - 1)
        .ok()
        .and_then(|e| base.checked_pow(e))
        .ok_or_else(|| Error::domain(format!("Euler characteristic for n = {n} exceeds 64 bits")))?;
    Ok(McCoolStats { cd: n - 1, chi, koszul: n <= 3 })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
    pub connected: bool,
    pub clique_polynomial: Vec<u64>,
}

impl GraphSummary {
    pub fn of(g: &Graph) -> Self {
        GraphSummary {
            vertices: g.names().to_vec(),
            edges: g.edges().into_iter().map(|(a, b)| [g.name(a).to_string(), g.name(b).to_string()]).collect(),
            connected: g.is_connected(),
            clique_polynomial: g.clique_polynomial(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SilPairReport {
    pub v: String,
    pub w: String,
    pub shared: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NumericCheckReport {
    pub label: String,
    pub degree: usize,
    pub pass: bool,
    pub first_failure: Option<usize>,
    pub verdict: String,
    pub hilbert: HilbertSeries,
    pub dual_hilbert: HilbertSeries,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KoszulReport {
    pub star_condition: bool,
    pub witness: Option<Vec<String>>,
    pub koszul: bool,
    pub decision_by_star_condition: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numeric_check: Option<NumericCheckReport>,
}

impl KoszulReport {
    /// A failed numeric check contradicts a positive decision.
    pub fn inconsistent(&self) -> bool {
        self.koszul && self.numeric_check.as_ref().is_some_and(|c| !c.pass)
    }
}

fn names(g: &Graph, vs: impl IntoIterator<Item = usize>) -> Vec<String> {
    vs.into_iter().map(|v| g.name(v).to_string()).collect()
}

/// Runs the Hilbert series identity on the PAut enveloping algebra and its dual.
pub fn numeric_check(g: &Graph, degree: usize, opts: &ComputeOptions) -> Result<NumericCheckReport> {
    let a = enveloping_quadratic(&lie_presentation(g, &LieVariant::PAut)?)?;
    let hilbert = algebra_hilbert_with(&a, degree, opts)?;
    let dual_hilbert = algebra_hilbert_with(&quadratic_dual(&a), degree, opts)?;
    let t = koszul_numeric_test(&hilbert, &dual_hilbert, degree)?;
    let verdict = match t.first_failure {
        None => format!("consistent with Koszulness up to degree {degree}"),
        Some(k) => format!("Hilbert series identity fails at degree {k}: not Koszul"),
    };
    Ok(NumericCheckReport {
        label: NUMERIC_CHECK_LABEL.to_string(),
        degree,
        pass: t.pass,
        first_failure: t.first_failure,
        verdict,
        hilbert,
        dual_hilbert,
    })
}

/// The Koszulness decision via condition (*), with an optional numeric cross-check.
pub fn koszul_report(g: &Graph, numeric_degree: Option<usize>, opts: &ComputeOptions) -> Result<KoszulReport> {
    let star = g.check_star_condition();
    let numeric_check = numeric_degree.map(|d| numeric_check(g, d, opts)).transpose()?;
    Ok(KoszulReport {
        star_condition: star.holds,
        witness: star.witness.map(|w| names(g, w)),
        koszul: star.holds,
        decision_by_star_condition: star.holds,
        numeric_check,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionTables {
    pub max_degree: usize,
    pub paut: GradedDims,
    pub pout: GradedDims,
    pub raag: GradedDims,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub graph: GraphSummary,
    pub sil_pairs: Vec<SilPairReport>,
    pub star_condition: bool,
    pub star_witness: Option<Vec<String>>,
    pub koszul_decision: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numeric_check: Option<NumericCheckReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub series: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimensions: Option<DimensionTables>,
}

/// What [`analysis_report`] includes beyond the combinatorial data.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub numeric_degree: Option<usize>,
    pub series: bool,
    pub dims_degree: Option<usize>,
}

pub fn variant_dims(g: &Graph, variant: &LieVariant, max_degree: usize, opts: &ComputeOptions) -> Result<GradedDims> {
    let l = eliminate_linear(&lie_presentation(g, variant)?)?;
    graded_dims_with(&l, max_degree, opts)
}

pub fn analysis_report(g: &Graph, what: &AnalyzeOptions, opts: &ComputeOptions) -> Result<AnalysisReport> {
    let k = koszul_report(g, what.numeric_degree, opts)?;
    let sil_pairs = g
        .find_sil_pairs()
        .into_iter()
        .map(|p| SilPairReport {
            v: g.name(p.v).to_string(),
            w: g.name(p.w).to_string(),
            shared: p.shared.iter().map(|&s| names(g, s)).collect(),
        })
        .collect();
    let series = if what.series { Some(series_json(g)?) } else { None };
    let dimensions = what
        .dims_degree
        .map(|d| -> Result<DimensionTables> {
            Ok(DimensionTables {
                max_degree: d,
                paut: variant_dims(g, &LieVariant::PAut, d, opts)?,
                pout: variant_dims(g, &LieVariant::POut, d, opts)?,
                raag: variant_dims(g, &LieVariant::Raag, d, opts)?,
            })
        })
        .transpose()?;
    Ok(AnalysisReport {
        graph: GraphSummary::of(g),
        sil_pairs,
        star_condition: k.star_condition,
        star_witness: k.witness,
        koszul_decision: k.koszul,
        numeric_check: k.numeric_check,
        series,
        dimensions,
    })
}

/// The decomposition tree of `POut(A_Γ)` and its series, in the versioned JSON schema.
pub fn series_json(g: &Graph) -> Result<Value> {
    let root = decompose_pout(g)?;
    Ok(json!({
        "format": "raag-paut/decomposition",
        "version": DECOMPOSITION_FORMAT_VERSION,
        "tree": root.to_json(),
        "summary": series_summary(&root).to_json(),
    }))
}

#[derive(Debug, Parser)]
#[command(name = "raag-paut", version, about = "Pure symmetric automorphisms of right-angled Artin groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    /// Use certified modular arithmetic for ranks (two random primes, exact fallback).
    #[arg(long, global = true)]
    fast: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Paut,
    Pout,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variant {
    Paut,
    Pout,
    Raag,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Combinatorial summary, SIL-pairs, condition (*) and the Koszulness decision.
    Analyze {
        /// Graph file (JSON or edge list); `-` reads standard input.
        graph: String,
        /// Run the Hilbert series cross-check through this degree (4 when given without a value).
        #[arg(long, num_args = 0..=1, default_missing_value = "4")]
        numeric_degree: Option<usize>,
        /// Include the decomposition series.
        #[arg(long)]
        series: bool,
        /// Include PAut, POut and RAAG dimension tables through this degree.
        #[arg(long)]
        dims: Option<usize>,
    },
    /// Finite presentation of PAut or POut.
    Present {
        graph: String,
        #[arg(long, value_enum, default_value_t = Kind::Paut)]
        kind: Kind,
    },
    /// Graded dimensions of the lower central series Lie algebra.
    Liedims {
        graph: String,
        #[arg(long, value_enum, default_value_t = Variant::Paut)]
        variant: Variant,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: usize,
    },
    /// Koszulness decision via condition (*), with an optional numeric cross-check.
    Koszul {
        /// Graph file (JSON or edge list); `-` reads standard input.
        graph: String,
        /// Run the Hilbert series cross-check through this degree (4 when given without a value).
        #[arg(long, num_args = 0..=1, default_missing_value = "4")]
        numeric_degree: Option<usize>,
    },
    /// Decomposition tree and subnormal series of POut.
    Series { graph: String },
    /// Cohomological dimension, Euler characteristic and Koszulness of PAut(F_n).
    Mccool { n: u64 },
}

/// Status code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Input(_) | Error::Domain(_) | Error::Validation(_) => 1,
        Error::Resource { .. } => 2,
        Error::Internal(_) => 3,
    }
}

fn load_graph(path: &str) -> Result<Graph> {
    let source = if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Error::input(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Error::input(format!("{path}: {e}")))?
    };
    parse_graph(&source, None).map_err(|e| match e {
        Error::Input(m) => Error::input(format!("{path}: {m}")),
        other => other,
    })
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize") + "\n"
}

fn dims_table(dims: &GradedDims) -> String {
    let mut out = String::from("n  d_n\n");
    for (i, d) in dims.as_slice().iter().enumerate() {
        out += &format!("{:<2} {d}\n", i + 1);
    }
    out
}

fn koszul_text(k: &KoszulReport) -> String {
    let mut out = format!("condition (*): {}\n", if k.star_condition { "holds" } else { "fails" });
    if let Some(w) = &k.witness {
        out += &format!("witness: {}\n", w.join(" "));
    }
    out += &format!("Koszul: {} (decided by condition (*))\n", k.koszul);
    if let Some(c) = &k.numeric_check {
        out += &format!("{} through degree {}: {}\n", c.label, c.degree, if c.pass { "pass" } else { "fail" });
        out += &format!("  {}\n  H(t)  = {}\n  H!(t) = {}\n", c.verdict, c.hilbert, c.dual_hilbert);
    }
    out
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let mut opts = ComputeOptions::from_env()?;
    if cli.fast {
        opts.arithmetic = Arithmetic::Modular { seed: FAST_SEED };
    }
    let json = cli.format == Format::Json;
    let mut status = 0;
    let text = match &cli.command {
        Command::Analyze { graph, numeric_degree, series, dims } => {
            let g = load_graph(graph)?;
            let what = AnalyzeOptions { numeric_degree: *numeric_degree, series: *series, dims_degree: *dims };
            let r = analysis_report(&g, &what, &opts)?;
            if r.koszul_decision && r.numeric_check.as_ref().is_some_and(|c| !c.pass) {
                status = 3;
            }
            if json {
                to_json(&r)
            } else {
                let mut s = format!("vertices: {}\nedges: {}\n", r.graph.vertices.join(" "), r.graph.edges.len());
                s += &format!("clique polynomial: {:?}\n", r.graph.clique_polynomial);
                s += &format!("SIL-pairs: {}\n", r.sil_pairs.len());
                for p in &r.sil_pairs {
                    let shared: Vec<String> = p.shared.iter().map(|c| format!("{{{}}}", c.join(","))).collect();
                    s += &format!("  ({}, {}) sharing {}\n", p.v, p.w, shared.join(" "));
                }
                s += &koszul_text(&koszul_report(&g, None, &opts)?);
                if let Some(c) = &r.numeric_check {
                    s += &format!("{} through degree {}: {}\n", c.label, c.degree, c.verdict);
                }
                if let Some(d) = &r.dimensions {
                    s += &format!("dims PAut {}\ndims POut {}\ndims RAAG {}\n", d.paut, d.pout, d.raag);
                }
                if r.series.is_some() {
                    let root = decompose_pout(&g)?;
                    s += &root.render_text();
                    s += &series_summary(&root).render_text();
                }
                s
            }
        }
        Command::Present { graph, kind } => {
            let g = load_graph(graph)?;
            let omega = standard_omega(&g);
            let p = match kind {
                Kind::Paut => paut_like_presentation(&g, &omega)?,
                Kind::Pout => pout_presentation(&g, &omega)?,
            };
            if json {
                to_json(&p.to_json())
            } else {
                p.to_text()
            }
        }
        Command::Liedims { graph, variant, max_degree } => {
            let g = load_graph(graph)?;
            let (name, v) = match variant {
                Variant::Paut => ("paut", LieVariant::PAut),
                Variant::Pout => ("pout", LieVariant::POut),
                Variant::Raag => ("raag", LieVariant::Raag),
            };
            let dims = variant_dims(&g, &v, *max_degree, &opts)?;
            if json {
                to_json(&json!({ "variant": name, "max_degree": max_degree, "dims": dims }))
            } else {
                dims_table(&dims)
            }
        }
        Command::Koszul { graph, numeric_degree } => {
            let g = load_graph(graph)?;
            let k = koszul_report(&g, *numeric_degree, &opts)?;
            if k.inconsistent() {
                status = 3;
            }
            if json {
                to_json(&k)
            } else {
                koszul_text(&k)
            }
        }
        Command::Series { graph } => {
            let g = load_graph(graph)?;
            if json {
                to_json(&series_json(&g)?)
            } else {
                let root = decompose_pout(&g)?;
                root.render_text() + &series_summary(&root).render_text()
            }
        }
        Command::Mccool { n } => {
            let s = mccool_stats(*n)?;
            if json {
                to_json(&s)
            } else {
                format!("cd = {}\nchi = {}\nkoszul = {}\n", s.cd, s.chi, s.koszul)
            }
        }
    };
    out.write_all(text.as_bytes()).map_err(|e| Error::input(format!("writing output: {e}")))?;
    Ok(status)
}

/// Parses `args` (including the program name), runs the command and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 { out.write_all(rendered.as_bytes()) } else { err.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(0) => 0,
        Ok(code) => {
            let _ = writeln!(err, "internal inconsistency: numeric cross-check failed on a graph satisfying (*)");
            code
        }
        Err(e) => {
            let _ = writeln!(err, "raag-paut: {e}");
            exit_code(&e)
        }
    }
}
