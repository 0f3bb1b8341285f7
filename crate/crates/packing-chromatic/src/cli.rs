//! Command-line surface. One thin binary dispatches here; everything heavy
//! lives in the library modules.
//!
//! Exit codes: 0 verified/SAT/success, 1 refuted/UNSAT/failed property,
//! 2 usage or I/O error, 3 timeout/inconclusive. Reports go to stdout as
//! schema-versioned JSON, or to `--out` with atomic replace.

use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::certify::{
    certify_chi_rho_lower, verify_lemma, verify_theorem, CertifyError, Claim, TrustLevel,
    DEFAULT_K_MAX_DIAM,
};
use crate::families::{
    build_g0, build_gk_with_ceiling, build_h, build_perfect_tree, FamilyError,
    LabeledFamilyGraph, DEFAULT_BUILD_CEILING,
};
use crate::graph::Graph;
use crate::io::{decode_graph6, encode_graph6, read_dimacs, write_atomic, write_dimacs};
use crate::packing::{
    decide_packing_colorable, max_i_packing, packing_chromatic_number, BranchOrdering,
    ChiRhoOutcome, SolveStatus, SolverConfig,
};
use crate::report::{
    DecideOutcome, GraphDump, PackingOutcome, Provenance, Report, ReportStatus, SolverSettings,
    Tagged,
};

const EXIT_OK: i32 = 0;
const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "packing-chromatic",
    version,
    about = "Recursive subcubic graph family with exact packing-coloring bounds and machine-checked certificates",
    after_help = "Defaults can also come from environment variables with the PCHROM_ prefix \
                  (PCHROM_SEED, PCHROM_TIME_LIMIT, PCHROM_NODE_LIMIT, PCHROM_K_MAX_DIAM, PCHROM_BUILD_CEILING)."
)]
struct Cli {
    /// Seed recorded in reports; the commands themselves are deterministic
    #[arg(long, global = true, env = "PCHROM_SEED")]
    seed: Option<u64>,
    /// Write the primary output to PATH (atomic replace) instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Construct a family graph and emit it as graph6, DIMACS, or JSON
    Build(BuildArgs),
    /// Counts, degree profile, connectivity, and exact diameter
    Analyze(AnalyzeArgs),
    /// Exhaustive packing-coloring decision or exact chi_rho
    Solve(SolveArgs),
    /// Maximum i-packings, optionally enumerating all of them
    Packing(PackingArgs),
    /// Re-check a numbered structural fact (--lemma) or the per-instance
    /// theorem bounds (--theorem --k K)
    Verify(VerifyArgs),
    /// Build the certificate chain concluding chi_rho(Gk) >= 2k+9
    Certify(CertifyArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq)]
enum FamilyArg {
    H,
    G0,
    Tree,
    Gk,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq)]
enum FormatArg {
    Graph6,
    Dimacs,
    Json,
}

#[derive(Args, Debug)]
struct GraphSource {
    /// Family member: h | g0 | tree | gk
    #[arg(long, value_enum)]
    family: Option<FamilyArg>,
    /// Level for --family gk
    #[arg(long)]
    k: Option<u32>,
    /// Depth for --family tree
    #[arg(long)]
    depth: Option<u32>,
    /// Read a graph from PATH instead (graph6 or DIMACS, detected)
    #[arg(long = "in", value_name = "PATH", conflicts_with = "family")]
    input: Option<PathBuf>,
    /// Construction ceiling for gk
    #[arg(long, env = "PCHROM_BUILD_CEILING", default_value_t = DEFAULT_BUILD_CEILING)]
    build_ceiling: u32,
}

#[derive(Args, Debug)]
struct BuildArgs {
    #[command(flatten)]
    source: GraphSource,
    /// Output format
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    #[command(flatten)]
    source: GraphSource,
}

#[derive(Args, Debug)]
struct SolverArgs {
    /// Per-decision time limit in seconds
    #[arg(long, env = "PCHROM_TIME_LIMIT", default_value_t = 300.0)]
    time_limit: f64,
    /// Abort after this many search nodes
    #[arg(long, env = "PCHROM_NODE_LIMIT")]
    node_limit: Option<u64>,
    /// Vertex branching order
    #[arg(long, value_enum, default_value = "power-degree-desc")]
    ordering: OrderingArg,
    /// Disable the distance-conflict check (leaf validation only; tiny
    /// graphs only)
    #[arg(long)]
    no_conflict_check: bool,
    /// Disable the singleton rule for colors at or above the diameter
    #[arg(long)]
    no_singleton_rule: bool,
    /// Disable the per-color capacity pruning
    #[arg(long)]
    no_capacity_bounds: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq)]
enum OrderingArg {
    PowerDegreeDesc,
    InputOrder,
}

impl SolverArgs {
    fn to_config(&self) -> SolverConfig {
        SolverConfig {
            time_limit: Some(Duration::from_secs_f64(self.time_limit.max(0.0))),
            node_limit: self.node_limit,
            ordering: match self.ordering {
                OrderingArg::PowerDegreeDesc => BranchOrdering::PowerDegreeDesc,
                OrderingArg::InputOrder => BranchOrdering::InputOrder,
            },
            use_conflict_check: !self.no_conflict_check,
            use_singleton_rule: !self.no_singleton_rule,
            use_packing_size_bounds: !self.no_capacity_bounds,
        }
    }
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[command(flatten)]
    source: GraphSource,
    /// Decide k-packing-colorability for this palette size
    #[arg(long, value_name = "K", conflicts_with = "exact")]
    decide: Option<u16>,
    /// Compute the exact packing chromatic number
    #[arg(long)]
    exact: bool,
    #[command(flatten)]
    solver: SolverArgs,
}

#[derive(Args, Debug)]
struct PackingArgs {
    #[command(flatten)]
    source: GraphSource,
    /// Packing radius i
    #[arg(long = "i", value_name = "N")]
    radius: u32,
    /// Report every maximum i-packing, in lexicographic order
    #[arg(long)]
    enumerate: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Structural fact to re-check (1..=5)
    #[arg(long, conflicts_with = "theorem")]
    lemma: Option<u8>,
    /// Verify the theorem bounds for one instance (needs --k)
    #[arg(long)]
    theorem: bool,
    #[arg(long)]
    k: Option<u32>,
    /// Largest level whose diameter is computed rather than trusted
    #[arg(long, env = "PCHROM_K_MAX_DIAM", default_value_t = DEFAULT_K_MAX_DIAM)]
    k_max_diam: u32,
    /// Accept the 2k+6 diameter formula above k_max_diam (downgrades trust)
    #[arg(long)]
    trust_diameter: bool,
}

#[derive(Args, Debug)]
struct CertifyArgs {
    /// Target level of the chain
    #[arg(long)]
    k: u32,
    /// Accept the 2k+6 diameter formula above k_max_diam (downgrades trust)
    #[arg(long)]
    trust_diameter: bool,
    /// Largest level whose diameter is computed rather than trusted
    #[arg(long, env = "PCHROM_K_MAX_DIAM", default_value_t = DEFAULT_K_MAX_DIAM)]
    k_max_diam: u32,
}

/// Parses `std::env::args`, runs one command, and returns the exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap uses 0 for --help/--version and 2 for usage errors
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Graph(#[from] crate::graph::GraphError),
    #[error(transparent)]
    Packing(#[from] crate::packing::PackingError),
    #[error(transparent)]
    Certify(#[from] CertifyError),
    #[error("cannot parse {path}: {reason}")]
    BadInput { path: String, reason: String },
}

impl CliError {
    fn exit_code(&self) -> i32 {
        EXIT_USAGE
    }
}

enum LoadedGraph {
    Family(LabeledFamilyGraph),
    Plain(Graph),
}

impl LoadedGraph {
    fn graph(&self) -> &Graph {
        match self {
            LoadedGraph::Family(f) => f.graph(),
            LoadedGraph::Plain(g) => g,
        }
    }

    fn labels(&self) -> Option<Vec<String>> {
        match self {
            LoadedGraph::Family(f) => Some(f.label_strings()),
            LoadedGraph::Plain(_) => None,
        }
    }
}

fn load_source(source: &GraphSource) -> Result<LoadedGraph, CliError> {
    if let Some(path) = &source.input {
        let text = std::fs::read_to_string(path)?;
        return sniff_graph(path, &text).map(LoadedGraph::Plain);
    }
    let family = source
        .family
        .ok_or_else(|| CliError::Usage("pass --family or --in".into()))?;
    let built = match family {
        FamilyArg::H => build_h(),
        FamilyArg::G0 => build_g0(),
        FamilyArg::Tree => {
            let depth = source
                .depth
                .ok_or_else(|| CliError::Usage("--family tree needs --depth".into()))?;
            build_perfect_tree(depth)
        }
        FamilyArg::Gk => {
            let k = source
                .k
                .ok_or_else(|| CliError::Usage("--family gk needs --k".into()))?;
            build_gk_with_ceiling(k, source.build_ceiling)?
        }
    };
    Ok(LoadedGraph::Family(built))
}

/// DIMACS starts with 'c' or 'p'; anything else is treated as graph6.
fn sniff_graph(path: &Path, text: &str) -> Result<Graph, CliError> {
    let looks_dimacs = text
        .lines()
        .find(|l| !l.trim().is_empty())
        .is_some_and(|l| l.starts_with("c") || l.starts_with("p "));
    let display = path.display().to_string();
    if looks_dimacs {
        read_dimacs(text).map_err(|e| CliError::BadInput {
            path: display,
            reason: e.to_string(),
        })
    } else {
        let line = text
            .lines()
            .find(|l| !l.trim().is_empty())
            .ok_or_else(|| CliError::BadInput {
                path: display.clone(),
                reason: "empty file".into(),
            })?;
        decode_graph6(line).map_err(|e| CliError::BadInput {
            path: display,
            reason: e.to_string(),
        })
    }
}

fn family_name(arg: FamilyArg) -> &'static str {
    match arg {
        FamilyArg::H => "h",
        FamilyArg::G0 => "g0",
        FamilyArg::Tree => "tree",
        FamilyArg::Gk => "gk",
    }
}

fn source_inputs(report: &mut Report, source: &GraphSource) {
    report.inputs.family = source.family.map(|f| family_name(f).to_string());
    report.inputs.k = source.k;
    report.inputs.depth = source.depth;
    report.inputs.input_path = source.input.as_ref().map(|p| p.display().to_string());
}

fn emit_text(out: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => write_atomic(path, text).map_err(CliError::Io),
        None => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            Ok(())
        }
    }
}

fn emit_report(out: Option<&PathBuf>, report: &Report) -> Result<i32, CliError> {
    emit_text(out, &report.to_json())?;
    Ok(report.results.status.exit_code())
}

fn dispatch(cli: Cli) -> Result<i32, CliError> {
    let started = Instant::now();
    let out = cli.out.clone();
    match cli.command {
        Command::Build(args) => cmd_build(args, cli.seed, out, started),
        Command::Analyze(args) => cmd_analyze(args, cli.seed, out, started),
        Command::Solve(args) => cmd_solve(args, cli.seed, out, started),
        Command::Packing(args) => cmd_packing(args, cli.seed, out, started),
        Command::Verify(args) => cmd_verify(args, cli.seed, out, started),
        Command::Certify(args) => cmd_certify(args, cli.seed, out, started),
    }
}

fn cmd_build(
    args: BuildArgs,
    seed: Option<u64>,
    out: Option<PathBuf>,
    started: Instant,
) -> Result<i32, CliError> {
    let loaded = load_source(&args.source)?;
    let g = loaded.graph();
    match args.format {
        FormatArg::Graph6 => {
            let line = encode_graph6(g).map_err(|e| CliError::Usage(e.to_string()))?;
            emit_text(out.as_ref(), &line)?;
            write_label_sidecar(&loaded, out.as_ref())?;
            Ok(EXIT_OK)
        }
        FormatArg::Dimacs => {
            let text = write_dimacs(g);
            emit_text(out.as_ref(), &text)?;
            write_label_sidecar(&loaded, out.as_ref())?;
            Ok(EXIT_OK)
        }
        FormatArg::Json => {
            let mut report = Report::new("build");
            source_inputs(&mut report, &args.source);
            report.inputs.format = Some("json".into());
            report.inputs.seed = seed;
            report.results.status = ReportStatus::Ok;
            report.results.vertex_count = Some(Tagged::new(
                g.vertex_count() as u64,
                Provenance::Construction,
            ));
            report.results.edge_count =
                Some(Tagged::new(g.edge_count() as u64, Provenance::Construction));
            report.results.graph = Some(GraphDump {
                vertex_count: g.vertex_count() as u64,
                edge_count: g.edge_count() as u64,
                edges: g.edges(),
                labels: loaded.labels(),
            });
            report.timing.total_ms = started.elapsed().as_secs_f64() * 1e3;
            emit_report(out.as_ref(), &report)
        }
    }
}

fn write_label_sidecar(loaded: &LoadedGraph, out: Option<&PathBuf>) -> Result<(), CliError> {
    let (Some(path), Some(labels)) = (out, loaded.labels()) else {
        return Ok(());
    };
    let mut sidecar = path.as_os_str().to_owned();
    sidecar.push(".labels.json");
    let text = serde_json::to_string_pretty(&labels).expect("labels serialize");
    write_atomic(&PathBuf::from(sidecar), &text)?;
    Ok(())
}

fn cmd_analyze(
    args: AnalyzeArgs,
    seed: Option<u64>,
    out: Option<PathBuf>,
    started: Instant,
) -> Result<i32, CliError> {
    let loaded = load_source(&args.source)?;
    let g = loaded.graph();
    let mut report = Report::new("analyze");
    source_inputs(&mut report, &args.source);
    report.inputs.seed = seed;
    report.results.status = ReportStatus::Ok;
    report.results.vertex_count = Some(Tagged::new(
        g.vertex_count() as u64,
        Provenance::Construction,
    ));
    report.results.edge_count = Some(Tagged::new(g.edge_count() as u64, Provenance::Construction));
    let profile = g.degree_profile();
    report.results.max_degree = Some(Tagged::new(
        profile.max_degree() as u64,
        Provenance::Construction,
    ));
    report.results.degree_profile = Some(
        profile
            .entries()
            .into_iter()
            .map(|(d, c)| (d as u32, c as u64))
            .collect(),
    );
    let connected = g.is_connected();
    report.results.connected = Some(connected);
    if connected && g.vertex_count() > 0 {
        report.results.diameter = Some(Tagged::new(u64::from(g.diameter()?), Provenance::Bfs));
    }
    report.timing.total_ms = started.elapsed().as_secs_f64() * 1e3;
    emit_report(out.as_ref(), &report)
}

fn cmd_solve(
    args: SolveArgs,
    seed: Option<u64>,
    out: Option<PathBuf>,
    started: Instant,
) -> Result<i32, CliError> {
    let loaded = load_source(&args.source)?;
    let g = loaded.graph();
    let cfg = args.solver.to_config();
    let mut report = Report::new("solve");
    source_inputs(&mut report, &args.source);
    report.inputs.seed = seed;
    report.inputs.solver = Some(SolverSettings::from(&cfg));
    report.inputs.decide = args.decide;
    report.inputs.exact = Some(args.exact);

    if let Some(palette) = args.decide {
        let res = decide_packing_colorable(g, palette, &cfg)?;
        report.results.status = match res.status {
            SolveStatus::Sat => ReportStatus::Sat,
            SolveStatus::Unsat => ReportStatus::Unsat,
            SolveStatus::Timeout => ReportStatus::Timeout,
        };
        report.results.decide = Some(DecideOutcome {
            palette,
            status: res.status,
            nodes: res.nodes,
        });
        report.results.witness_coloring = res.witness.map(|w| w.colors().to_vec());
        report.timing.total_ms = started.elapsed().as_secs_f64() * 1e3;
        return emit_report(out.as_ref(), &report);
    }
    if !args.exact {
        return Err(CliError::Usage("solve needs --decide K or --exact".into()));
    }
    match packing_chromatic_number(g, &cfg)? {
        ChiRhoOutcome::Exact {
            value,
            witness,
            counting_start,
            total_nodes,
        } => {
            report.results.status = ReportStatus::Sat;
            report.results.chi_rho = Some(Tagged::new(u64::from(value), Provenance::Solver));
            report.results.chi_rho_lower =
                Some(Tagged::new(u64::from(counting_start), Provenance::Counting));
            report.results.witness_coloring = Some(witness.colors().to_vec());
            report.results.decide = Some(DecideOutcome {
                palette: value,
                status: SolveStatus::Sat,
                nodes: total_nodes,
            });
        }
        ChiRhoOutcome::Timeout {
            lower,
            upper,
            upper_witness,
            total_nodes,
        } => {
            report.results.status = ReportStatus::Timeout;
            report.results.chi_rho_lower =
                Some(Tagged::new(u64::from(lower), Provenance::Solver));
            report.results.chi_rho_upper =
                Some(Tagged::new(u64::from(upper), Provenance::Greedy));
            report.results.witness_coloring = Some(upper_witness.colors().to_vec());
            report.results.decide = Some(DecideOutcome {
                palette: lower,
                status: SolveStatus::Timeout,
                nodes: total_nodes,
            });
        }
    }
    report.timing.total_ms = started.elapsed().as_secs_f64() * 1e3;
    emit_report(out.as_ref(), &report)
}

fn cmd_packing(
    args: PackingArgs,
    seed: Option<u64>,
    out: Option<PathBuf>,
    started: Instant,
) -> Result<i32, CliError> {
    let loaded = load_source(&args.source)?;
    let g = loaded.graph();
    let result = max_i_packing(g, args.radius, args.enumerate)?;
    let mut report = Report::new("packing");
    source_inputs(&mut report, &args.source);
    report.inputs.seed = seed;
    report.inputs.radius = Some(args.radius);
    report.inputs.enumerate = Some(args.enumerate);
    report.results.status = ReportStatus::Ok;
    report.results.packing = Some(PackingOutcome {
        radius: args.radius,
        size: result.size as u64,
        witness: result.witness,
        all_maximum: result.all_maximum,
    });
    report.timing.total_ms = started.elapsed().as_secs_f64() * 1e3;
    emit_report(out.as_ref(), &report)
}

fn cmd_verify(
    args: VerifyArgs,
    seed: Option<u64>,
    out: Option<PathBuf>,
    started: Instant,
) -> Result<i32, CliError> {
    let mut report = Report::new("verify");
    report.inputs.seed = seed;
    report.inputs.k_max_diam = Some(args.k_max_diam);
    if let Some(id) = args.lemma {
        report.inputs.lemma = Some(id);
        let lemma = verify_lemma(id)?;
        report.results.status = if lemma.pass {
            ReportStatus::Verified
        } else {
            ReportStatus::Refuted
        };
        report.results.message = Some(lemma.summary.clone());
        report.certificate = lemma.certificate.clone();
        report.results.lemma = Some(lemma);
        report.timing.total_ms = started.elapsed().as_secs_f64() * 1e3;
        return emit_report(out.as_ref(), &report);
    }
    if !args.theorem {
        return Err(CliError::Usage(
            "verify needs --lemma N or --theorem --k K".into(),
        ));
    }
    let k = args
        .k
        .ok_or_else(|| CliError::Usage("--theorem needs --k".into()))?;
    report.inputs.theorem = Some(true);
    report.inputs.k = Some(k);
    report.inputs.trust_diameter = Some(args.trust_diameter);
    let theorem = verify_theorem(k, args.k_max_diam, args.trust_diameter)?;
    warn_if_trusted(theorem.certificate.trust_level);
    report.results.status = if theorem.pass {
        ReportStatus::Verified
    } else {
        ReportStatus::Refuted
    };
    report.results.trust_level = Some(theorem.certificate.trust_level);
    report.results.diameter_bound = Some(theorem.diameter_bound);
    if let Some(d) = theorem.diameter {
        report.results.diameter = Some(Tagged::new(u64::from(d), Provenance::Bfs));
    }
    report.results.chi_rho_lower = Some(Tagged::new(
        u64::from(theorem.chi_rho_lower),
        if theorem.diameter_trusted {
            Provenance::PaperTrusted
        } else {
            Provenance::Solver
        },
    ));
    report.results.theorem = Some(theorem);
    report.timing.total_ms = started.elapsed().as_secs_f64() * 1e3;
    emit_report(out.as_ref(), &report)
}

fn cmd_certify(
    args: CertifyArgs,
    seed: Option<u64>,
    out: Option<PathBuf>,
    started: Instant,
) -> Result<i32, CliError> {
    let certificate = certify_chi_rho_lower(args.k, args.k_max_diam, args.trust_diameter)?;
    warn_if_trusted(certificate.trust_level);
    let mut report = Report::new("certify");
    report.inputs.seed = seed;
    report.inputs.k = Some(args.k);
    report.inputs.k_max_diam = Some(args.k_max_diam);
    report.inputs.trust_diameter = Some(args.trust_diameter);
    report.results.status = ReportStatus::Verified;
    report.results.trust_level = Some(certificate.trust_level);
    if let Claim::ChiRhoLower { bound, .. } = certificate.conclusion {
        report.results.chi_rho_lower = Some(Tagged::new(
            u64::from(bound),
            if certificate.trust_level == TrustLevel::FullyMachineChecked {
                Provenance::Solver
            } else {
                Provenance::PaperTrusted
            },
        ));
    }
    report.results.message = Some(format!("{}", certificate.conclusion));
    report.certificate = Some(certificate);
    report.timing.total_ms = started.elapsed().as_secs_f64() * 1e3;
    emit_report(out.as_ref(), &report)
}

fn warn_if_trusted(trust: TrustLevel) {
    if trust == TrustLevel::PaperTrustedDiameter {
        eprintln!(
            "warning: certificate contains TRUSTED diameter steps (2k+6 accepted without computation); trust level downgraded"
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn sniffing_formats() {
        let dir = std::env::temp_dir().join(format!("pchrom-cli-test-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let p = dir.join("h.g6");
        std::fs::write(&p, "Bw\n").unwrap();
        let g = sniff_graph(&p, "Bw\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        let g = sniff_graph(&p, "c comment\np edge 2 1\ne 1 2\n").unwrap();
        assert_eq!(g.edge_count(), 1);
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
