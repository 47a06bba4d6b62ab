//! Command-line surface: argument definitions, run manifests and the
//! orchestration behind each subcommand.
//!
//! Every runner returns the text destined for stdout so commands can be
//! driven from tests without spawning a process.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::assignment::{assignment_cost, build_cost, relabel, solve_assignment, Relabeling};
use crate::baselines::{
    chung_lu_graph, configuration_model, havel_hakimi_graph, horvat_modes_graph, Model,
};
use crate::dist::{fit, DistributionSpec, Family};
use crate::error::{Error, Result};
use crate::generator::{generate, GeneratorConfig};
use crate::io::{
    parse_degree_counts, parse_edge_list, parse_json_graph, parse_positions, write_dot,
    write_edge_list, write_graphml, write_json_graph, EdgeListGraph,
};
use crate::metrics::{full_report, full_report_multi, ClusteringMode, MetricsReport};
use crate::rng::{stream, Purpose};
use crate::sequence::{sample_sequence, DegreeSequence, SequenceRequest, SumMode};

pub const TOOL: &str = "cybergraph";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
pub const SEED_ENV: &str = "CYBERGRAPH_SEED";

/// Degree histogram of the reference communication network, shipped with the
/// tool.
pub const REFERENCE_COUNTS: &str = include_str!("../data/reference_counts.csv");

#[derive(Debug, Parser)]
#[command(name = "cybergraph", version, about = "Synthetic smart-grid communication topologies")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fit degree-distribution families to a degree histogram
    Fit(FitArgs),
    /// Sample a degree sequence and generate one graph
    Gen(GenArgs),
    /// Global metrics of an edge-list file
    Metrics(MetricsArgs),
    /// Run several models on shared degree sequences and tabulate metrics
    Compare(CompareArgs),
    /// Relabel a graph to minimize distances to power-grid node positions
    Relabel(RelabelArgs),
    /// Convert an edge list to DOT, GraphML, JSON or back
    Export(ExportArgs),
    /// Re-run a recorded gen/compare manifest and check the outputs match
    Replay(ReplayArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyChoice {
    All,
    Lognormal,
    Powerlaw,
    Zipf,
}

#[derive(Debug, Args)]
pub struct FitArgs {
    /// `degree,count` CSV; defaults to the bundled reference histogram
    #[arg(long)]
    pub counts: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "all")]
    pub family: FamilyChoice,
    /// Write JSON here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct SequenceArgs {
    /// Number of nodes
    #[arg(short = 'n', long = "nodes")]
    pub nodes: usize,
    /// Number of edges
    #[arg(short = 'm', long = "edges")]
    pub edges: usize,
    /// Maximum degree
    #[arg(long, default_value_t = 10)]
    pub dmax: usize,
    #[arg(long, default_value = "lognormal")]
    pub family: Family,
    #[arg(short = 'a', long, default_value_t = 1.371)]
    pub alpha: f64,
    /// Ignored for zipf
    #[arg(short = 'b', long, default_value_t = 1.986)]
    pub beta: f64,
    /// Nudge entries toward the target sum instead of redrawing
    #[arg(long)]
    pub repair: bool,
    #[arg(long, default_value_t = SequenceRequest::DEFAULT_MAX_ATTEMPTS)]
    pub max_attempts: usize,
    #[arg(long, default_value_t = GeneratorConfig::default().max_restarts)]
    pub max_restarts: usize,
    /// Candidate draws per repair item, as a multiple of m
    #[arg(long, default_value_t = GeneratorConfig::default().switch_budget_factor)]
    pub switch_budget: usize,
}

impl SequenceArgs {
    pub fn spec(&self) -> Result<DistributionSpec> {
        let beta = (self.family != Family::Zipf).then_some(self.beta);
        DistributionSpec::new(self.family, self.alpha, beta)
    }

    pub fn request(&self, seed: u64) -> Result<SequenceRequest> {
        let mut req = SequenceRequest::new(self.nodes, self.edges, self.dmax, self.spec()?, seed);
        req.max_attempts = self.max_attempts;
        req.mode = if self.repair {
            SumMode::Repair
        } else {
            SumMode::Reject
        };
        Ok(req)
    }

    pub fn generator_config(&self) -> GeneratorConfig {
        GeneratorConfig {
            switch_budget_factor: self.switch_budget,
            max_restarts: self.max_restarts,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct GenArgs {
    #[command(flatten)]
    pub sequence: SequenceArgs,
    #[arg(long, env = SEED_ENV, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value = "pw")]
    pub model: Model,
    /// Edge-list output path
    #[arg(long)]
    pub out: PathBuf,
    /// Manifest path; defaults to `<out>.manifest.json`
    #[arg(long)]
    pub manifest: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CcMode {
    Local,
    Transitivity,
}

#[derive(Debug, Args)]
pub struct MetricsArgs {
    /// Edge-list file
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "local")]
    pub cc_mode: CcMode,
    /// Collapse loops and repeated pairs before measuring
    #[arg(long)]
    pub simplify: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct CompareArgs {
    #[command(flatten)]
    pub sequence: SequenceArgs,
    /// First seed; run i uses seed + i
    #[arg(long, env = SEED_ENV, default_value_t = 0)]
    pub seed: u64,
    /// Number of seeds
    #[arg(long, default_value_t = 1)]
    pub seeds: usize,
    #[arg(long, value_delimiter = ',', default_value = "cm,hh,cl,hm,pw")]
    pub models: Vec<Model>,
    /// Write the full JSON result (and a manifest next to it) here
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Manifest path; defaults to `<json>.manifest.json`
    #[arg(long)]
    pub manifest: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RelabelArgs {
    /// Cyber graph edge list
    #[arg(long)]
    pub edges: PathBuf,
    /// Power node positions, `label,x,y`
    #[arg(long)]
    pub power: PathBuf,
    /// Cyber node positions, `label,x,y`
    #[arg(long)]
    pub cyber: PathBuf,
    /// Relabeled edge list
    #[arg(long)]
    pub out: PathBuf,
    /// Permutation JSON; stdout when omitted
    #[arg(long)]
    pub perm_out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    Dot,
    Graphml,
    Json,
    Edgelist,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    /// Edge list or JSON graph
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub format: ExportFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ReplayArgs {
    pub manifest: PathBuf,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FileDigest {
    pub path: PathBuf,
    pub sha256: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", content = "parameters", rename_all = "lowercase")]
pub enum ManifestParams {
    Gen(GenArgs),
    Compare(CompareArgs),
}

/// Everything needed to re-run a `gen` or `compare` invocation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub tool: String,
    pub version: String,
    #[serde(flatten)]
    pub params: ManifestParams,
    pub seed: u64,
    pub repair: bool,
    pub inputs: Vec<FileDigest>,
    pub outputs: Vec<FileDigest>,
}

pub fn run(cli: Cli) -> Result<String> {
    match cli.command {
        Command::Fit(a) => cmd_fit(&a),
        Command::Gen(a) => cmd_gen(&a),
        Command::Metrics(a) => cmd_metrics(&a),
        Command::Compare(a) => cmd_compare(&a),
        Command::Relabel(a) => cmd_relabel(&a),
        Command::Export(a) => cmd_export(&a),
        Command::Replay(a) => cmd_replay(&a),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))
}

fn write(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|e| Error::io(path.display().to_string(), e))
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn digest_file(path: &Path) -> Result<FileDigest> {
    let bytes = fs::read(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    Ok(FileDigest {
        path: path.to_path_buf(),
        sha256: sha256_hex(&bytes),
    })
}

fn sidecar(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".manifest.json");
    PathBuf::from(s)
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn emit(out: Option<&Path>, text: String) -> Result<String> {
    match out {
        Some(p) => {
            write(p, &text)?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

#[derive(Debug, Serialize)]
struct FitRow {
    family: Family,
    alpha: f64,
    beta: Option<f64>,
    mse: f64,
}

pub fn cmd_fit(args: &FitArgs) -> Result<String> {
    let text = match &args.counts {
        Some(p) => read(p)?,
        None => REFERENCE_COUNTS.to_string(),
    };
    let reference = parse_degree_counts(&text)?;
    let families: Vec<Family> = match args.family {
        FamilyChoice::All => Family::ALL.to_vec(),
        FamilyChoice::Lognormal => vec![Family::Lognormal],
        FamilyChoice::Powerlaw => vec![Family::Powerlaw],
        FamilyChoice::Zipf => vec![Family::Zipf],
    };
    let rows = families
        .into_iter()
        .map(|f| {
            fit(&reference, f).map(|r| FitRow {
                family: f,
                alpha: r.spec.alpha,
                beta: r.spec.beta,
                mse: r.mse,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    emit(args.out.as_deref(), to_json(&rows)?)
}

/// Output of one model on one degree sequence.
#[derive(Debug, Clone)]
pub enum ModelOutput {
    Simple(crate::graph::SimpleGraph),
    Multi(crate::graph::WorkGraph),
}

impl ModelOutput {
    pub fn report(&self, mode: ClusteringMode) -> MetricsReport {
        match self {
            ModelOutput::Simple(g) => full_report(g, mode),
            ModelOutput::Multi(g) => full_report_multi(g),
        }
    }

    pub fn edge_list(&self) -> EdgeListGraph {
        match self {
            ModelOutput::Simple(g) => EdgeListGraph::from_simple(g),
            ModelOutput::Multi(g) => {
                let mut e = EdgeListGraph::from_work(g);
                e.multigraph = !g.is_simple();
                e
            }
        }
    }
}

/// Runs `model` on `seq`. Each baseline reads its own random stream so adding
/// a model to a comparison does not perturb the others.
pub fn run_model(
    model: Model,
    seq: &DegreeSequence,
    seed: u64,
    config: GeneratorConfig,
) -> Result<ModelOutput> {
    let s = seq.degrees();
    Ok(match model {
        Model::Pw => ModelOutput::Simple(generate(seq, seed, config)?),
        Model::Cm => ModelOutput::Multi(configuration_model(s, &mut stream(seed, Purpose::Baseline, 0))?),
        Model::Hh => ModelOutput::Simple(havel_hakimi_graph(s)?),
        Model::Cl => ModelOutput::Simple(chung_lu_graph(s, &mut stream(seed, Purpose::Baseline, 1))?),
        Model::Hm => ModelOutput::Simple(horvat_modes_graph(s, &mut stream(seed, Purpose::Baseline, 2))?),
    })
}

pub fn cmd_gen(args: &GenArgs) -> Result<String> {
    let seq = sample_sequence(&args.sequence.request(args.seed)?)?;
    let output = run_model(args.model, &seq, args.seed, args.sequence.generator_config())?;
    write(&args.out, &write_edge_list(&output.edge_list()))?;
    let manifest_path = args.manifest.clone().unwrap_or_else(|| sidecar(&args.out));
    let manifest = RunManifest {
        tool: TOOL.into(),
        version: VERSION.into(),
        params: ManifestParams::Gen(args.clone()),
        seed: args.seed,
        repair: args.sequence.repair,
        inputs: Vec::new(),
        outputs: vec![digest_file(&args.out)?],
    };
    write(&manifest_path, &to_json(&manifest)?)?;
    let g = output.edge_list();
    Ok(format!(
        "wrote {} ({} nodes, {} edges)\n",
        args.out.display(),
        g.nodes,
        g.edges.len()
    ))
}

fn load_graph(path: &Path) -> Result<EdgeListGraph> {
    let text = read(path)?;
    if text.trim_start().starts_with('{') {
        parse_json_graph(&text)
    } else {
        parse_edge_list(&text)
    }
}

pub fn cmd_metrics(args: &MetricsArgs) -> Result<String> {
    let g = load_graph(&args.input)?;
    let mode = match args.cc_mode {
        CcMode::Local => ClusteringMode::Local,
        CcMode::Transitivity => ClusteringMode::Transitivity,
    };
    let report = if !g.multigraph {
        full_report(&g.to_simple()?, mode)
    } else if args.simplify {
        full_report(&g.to_work()?.support(), mode)
    } else {
        full_report_multi(&g.to_work()?)
    };
    emit(args.out.as_deref(), to_json(&report)?)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompareRow {
    pub seed: u64,
    pub model: Model,
    pub error: Option<String>,
    pub report: Option<MetricsReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spread {
    pub median: f64,
    pub iqr: f64,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelSummary {
    pub model: Model,
    pub runs: usize,
    pub failures: usize,
    pub simple_fraction: f64,
    pub connected_fraction: f64,
    pub rho: Option<Spread>,
    pub diameter: Option<Spread>,
    pub avg_shortest_path: Option<Spread>,
    pub clustering: Option<Spread>,
    pub assortativity: Option<Spread>,
    pub spectral_gap: Option<Spread>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SequenceRecord {
    pub seed: u64,
    pub degrees: Option<Vec<usize>>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompareResult {
    pub parameters: CompareArgs,
    pub sequences: Vec<SequenceRecord>,
    pub rows: Vec<CompareRow>,
    pub summary: Vec<ModelSummary>,
}

/// Linear-interpolated quantile of sorted data.
fn quantile(sorted: &[f64], q: f64) -> f64 {
    let pos = q * (sorted.len() - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    sorted[lo] + (sorted[hi] - sorted[lo]) * (pos - lo as f64)
}

pub fn spread(values: impl IntoIterator<Item = f64>) -> Option<Spread> {
    let mut v: Vec<f64> = values.into_iter().collect();
    if v.is_empty() {
        return None;
    }
    v.sort_by(f64::total_cmp);
    Some(Spread {
        median: quantile(&v, 0.5),
        iqr: quantile(&v, 0.75) - quantile(&v, 0.25),
        count: v.len(),
    })
}

fn summarize(model: Model, rows: &[CompareRow]) -> ModelSummary {
    let mine: Vec<&CompareRow> = rows.iter().filter(|r| r.model == model).collect();
    let reports: Vec<&MetricsReport> = mine.iter().filter_map(|r| r.report.as_ref()).collect();
    let frac = |f: fn(&MetricsReport) -> bool| {
        if reports.is_empty() {
            0.0
        } else {
            reports.iter().filter(|r| f(r)).count() as f64 / reports.len() as f64
        }
    };
    let col = |f: fn(&MetricsReport) -> Option<f64>| spread(reports.iter().filter_map(|r| f(r)));
    ModelSummary {
        model,
        runs: mine.len(),
        failures: mine.len() - reports.len(),
        simple_fraction: frac(|r| r.simple),
        connected_fraction: frac(|r| r.connected),
        rho: col(|r| Some(r.rho)),
        diameter: col(|r| r.diameter.map(|d| d as f64)),
        avg_shortest_path: col(|r| r.avg_shortest_path),
        clustering: col(|r| r.clustering),
        assortativity: col(|r| r.assortativity),
        spectral_gap: col(|r| r.spectral_gap),
    }
}

/// Feeds one degree sequence per seed to every requested model.
pub fn compare(args: &CompareArgs) -> Result<CompareResult> {
    let config = args.sequence.generator_config();
    let mut sequences = Vec::with_capacity(args.seeds);
    let mut rows = Vec::new();
    for i in 0..args.seeds {
        let seed = args.seed.wrapping_add(i as u64);
        let seq = match sample_sequence(&args.sequence.request(seed)?) {
            Ok(s) => s,
            Err(e @ Error::InvalidRequest(_) | e @ Error::InvalidDistribution(_)) => return Err(e),
            Err(e) => {
                sequences.push(SequenceRecord {
                    seed,
                    degrees: None,
                    error: Some(e.to_string()),
                });
                for &model in &args.models {
                    rows.push(CompareRow {
                        seed,
                        model,
                        error: Some(format!("no degree sequence: {e}")),
                        report: None,
                    });
                }
                continue;
            }
        };
        sequences.push(SequenceRecord {
            seed,
            degrees: Some(seq.degrees().to_vec()),
            error: None,
        });
        for &model in &args.models {
            let row = match run_model(model, &seq, seed, config) {
                Ok(out) => CompareRow {
                    seed,
                    model,
                    error: None,
                    report: Some(out.report(ClusteringMode::Local)),
                },
                Err(e) => CompareRow {
                    seed,
                    model,
                    error: Some(e.to_string()),
                    report: None,
                },
            };
            rows.push(row);
        }
    }
    let summary = args.models.iter().map(|&m| summarize(m, &rows)).collect();
    Ok(CompareResult {
        parameters: args.clone(),
        sequences,
        rows,
        summary,
    })
}

fn cell(v: Option<f64>, sci: bool) -> String {
    match v {
        None => "--".into(),
        Some(x) if sci => format!("{x:.2e}"),
        Some(x) => format!("{x:.3}"),
    }
}

fn mark(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn render_compare_table(result: &CompareResult) -> String {
    let mut out = String::new();
    let p = &result.parameters;
    writeln!(
        out,
        "n={} m={} dmax={} family={} seeds={} (first {})",
        p.sequence.nodes, p.sequence.edges, p.sequence.dmax, p.sequence.family, p.seeds, p.seed
    )
    .unwrap();
    if p.seeds == 1 {
        writeln!(
            out,
            "{:<6} {:>5} {:>5} {:>7} {:>5} {:>7} {:>7} {:>7} {:>9}",
            "model", "G.g", "G.c", "rho", "diam", "sp", "cc", "a", "lambda"
        )
        .unwrap();
        for row in &result.rows {
            match &row.report {
                Some(r) => writeln!(
                    out,
                    "{:<6} {:>5} {:>5} {:>7.3} {:>5} {:>7} {:>7} {:>7} {:>9}",
                    row.model.name(),
                    mark(r.simple),
                    mark(r.connected),
                    r.rho,
                    r.diameter.map_or("--".to_string(), |d| d.to_string()),
                    cell(r.avg_shortest_path, false),
                    cell(r.clustering, false),
                    cell(r.assortativity, false),
                    cell(r.spectral_gap, true),
                )
                .unwrap(),
                None => writeln!(
                    out,
                    "{:<6} failed: {}",
                    row.model.name(),
                    row.error.as_deref().unwrap_or("unknown")
                )
                .unwrap(),
            }
        }
    } else {
        writeln!(
            out,
            "{:<6} {:>5} {:>5} {:>5} {:>7} {:>7} {:>7} {:>7} {:>7} {:>9} | {:>7} {:>7} {:>7} {:>7} {:>9}",
            "model", "fail", "G.g", "G.c", "rho", "diam", "sp", "cc", "a", "lambda",
            "iqr:dm", "iqr:sp", "iqr:cc", "iqr:a", "iqr:lam"
        )
        .unwrap();
        for s in &result.summary {
            let med = |x: &Option<Spread>, sci| cell(x.as_ref().map(|s| s.median), sci);
            let iqr = |x: &Option<Spread>, sci| cell(x.as_ref().map(|s| s.iqr), sci);
            writeln!(
                out,
                "{:<6} {:>5} {:>5.2} {:>5.2} {:>7} {:>7} {:>7} {:>7} {:>7} {:>9} | {:>7} {:>7} {:>7} {:>7} {:>9}",
                s.model.name(),
                s.failures,
                s.simple_fraction,
                s.connected_fraction,
                med(&s.rho, false),
                med(&s.diameter, false),
                med(&s.avg_shortest_path, false),
                med(&s.clustering, false),
                med(&s.assortativity, false),
                med(&s.spectral_gap, true),
                iqr(&s.diameter, false),
                iqr(&s.avg_shortest_path, false),
                iqr(&s.clustering, false),
                iqr(&s.assortativity, false),
                iqr(&s.spectral_gap, true),
            )
            .unwrap();
        }
    }
    out
}

pub fn cmd_compare(args: &CompareArgs) -> Result<String> {
    let result = compare(args)?;
    if let Some(path) = &args.json {
        write(path, &to_json(&result)?)?;
        let manifest = RunManifest {
            tool: TOOL.into(),
            version: VERSION.into(),
            params: ManifestParams::Compare(args.clone()),
            seed: args.seed,
            repair: args.sequence.repair,
            inputs: Vec::new(),
            outputs: vec![digest_file(path)?],
        };
        let mpath = args.manifest.clone().unwrap_or_else(|| sidecar(path));
        write(&mpath, &to_json(&manifest)?)?;
    }
    Ok(render_compare_table(&result))
}

#[derive(Debug, Serialize, Deserialize)]
pub struct RelabelReport {
    /// Entry `v` is the new label of cyber node `v`.
    pub permutation: Relabeling,
    pub cost_before: f64,
    pub cost_after: f64,
}

pub fn cmd_relabel(args: &RelabelArgs) -> Result<String> {
    let graph = load_graph(&args.edges)?.to_simple()?;
    let power = parse_positions(&read(&args.power)?)?;
    let cyber = parse_positions(&read(&args.cyber)?)?;
    if power.len() != graph.node_count() || cyber.len() != graph.node_count() {
        return Err(Error::SizeMismatch(format!(
            "graph has {} nodes, power positions {}, cyber positions {}",
            graph.node_count(),
            power.len(),
            cyber.len()
        )));
    }
    let cost = build_cost(&power, &cyber)?;
    let before = assignment_cost(&cost, &Relabeling::identity(cost.size()));
    let assignment = solve_assignment(&cost)?;
    let relabeled = relabel(&graph, &assignment.relabeling)?;
    write(&args.out, &write_edge_list(&EdgeListGraph::from_simple(&relabeled)))?;
    let report = RelabelReport {
        permutation: assignment.relabeling,
        cost_before: before,
        cost_after: assignment.cost,
    };
    emit(args.perm_out.as_deref(), to_json(&report)?)
}

pub fn cmd_export(args: &ExportArgs) -> Result<String> {
    let g = load_graph(&args.input)?;
    let text = match args.format {
        ExportFormat::Dot => write_dot(&g),
        ExportFormat::Graphml => write_graphml(&g),
        ExportFormat::Json => write_json_graph(&g)?,
        ExportFormat::Edgelist => write_edge_list(&g),
    };
    emit(args.out.as_deref(), text)
}

pub fn cmd_replay(args: &ReplayArgs) -> Result<String> {
    let manifest: RunManifest = serde_json::from_str(&read(&args.manifest)?)?;
    if manifest.tool != TOOL {
        return Err(Error::Parse {
            line: 0,
            msg: format!("manifest is for `{}`", manifest.tool),
        });
    }
    match &manifest.params {
        ManifestParams::Gen(a) => {
            cmd_gen(a)?;
        }
        ManifestParams::Compare(a) => {
            cmd_compare(a)?;
        }
    }
    let mut out = String::new();
    let mut mismatches = 0;
    for recorded in &manifest.outputs {
        let now = digest_file(&recorded.path)?;
        let same = now.sha256 == recorded.sha256;
        mismatches += usize::from(!same);
        writeln!(
            out,
            "{} {}",
            if same { "identical" } else { "DIFFERS" },
            recorded.path.display()
        )
        .unwrap();
    }
    if mismatches > 0 {
        return Err(Error::Invariant(format!(
            "{mismatches} replayed output(s) differ from the manifest"
        )));
    }
    Ok(out)
}
