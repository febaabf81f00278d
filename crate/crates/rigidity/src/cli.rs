//! Command-line front end: graph generation, single-graph analysis with
//! selectable checks, and the theorem verification suites.
//!
//! Exit codes: 0 success (all checks pass), 1 suite violation, 2 bad
//! invocation or malformed input, 3 internal engine failure.

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::engine::{EngineConfig, EngineError, RigidityEngine, Witness};
use crate::field::PrimeField;
use crate::global::{
    classify_reconstructibility, hendrickson_check, is_globally_rigid, GlobalError,
    GlobalRigidityVerdict, HendricksonReport, ReconstructibilityVerdict,
};
use crate::graph::{
    complete_bipartite, complete_graph, cone, figure1_graph, figure2a_graph, figure2b_graph,
    glue, ring_of_k5, Graph, VertexPartitionSpec,
};
use crate::harness::{run_suite, Suite};

#[derive(Parser)]
#[command(
    name = "rigidity",
    version,
    about = "Generic rigidity analysis: matroid structure, global rigidity, reconstructibility"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Write a named graph family as canonical JSON
    Generate {
        /// complete:n | bipartite:a,b | ring-of-k5:k | figure1 | figure2a |
        /// figure2b | cone:<file> | glue:<file>,<file>,<pairs>
        family: String,
        /// destination file (default: standard output)
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run selected checks on a graph file and emit one JSON report
    Analyze {
        /// graph file in the interchange format
        graph: PathBuf,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
        dim: u64,
        /// rank sampling trials
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "m61")]
        modulus: ModulusArg,
        /// comma-separated list of checks to run
        #[arg(long, value_enum, value_delimiter = ',', default_value = "all")]
        checks: Vec<CheckArg>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run theorem verification suites; one JSON result per line
    Verify {
        #[arg(long, value_enum, value_delimiter = ',', default_value = "all")]
        suites: Vec<SuiteArg>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, value_enum, default_value = "m61")]
        modulus: ModulusArg,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModulusArg {
    /// 2^61 - 1
    M61,
    /// 2^62 - 57
    Alt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckArg {
    Rank,
    Rigid,
    Redundant,
    Bridges,
    Mconn,
    Hendrickson,
    Global,
    Classify,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Mconnected,
    Monotonicity,
    Cone,
    Dofbound,
    Motion,
    Gluing,
    Oracle,
    All,
}

impl SuiteArg {
    fn to_suite(self) -> Suite {
        match self {
            SuiteArg::Mconnected => Suite::MConnected,
            SuiteArg::Monotonicity => Suite::Monotonicity,
            SuiteArg::Cone => Suite::Cone,
            SuiteArg::Dofbound => Suite::DofBound,
            SuiteArg::Motion => Suite::Motion,
            SuiteArg::Gluing => Suite::Gluing,
            SuiteArg::Oracle => Suite::Oracle,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    /// bad invocation or malformed input file: exit 2
    Usage(String),
    /// internal engine failure: exit 3
    Engine(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Engine(_) => 3,
        }
    }

    fn from_global(e: GlobalError) -> CliError {
        match e {
            GlobalError::Engine(inner) => CliError::Engine(inner.to_string()),
            GlobalError::Graph(inner) => CliError::Engine(inner.to_string()),
            precondition => CliError::Usage(precondition.to_string()),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Engine(m) => f.write_str(m),
        }
    }
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        CliError::Engine(e.to_string())
    }
}

/// Validated run parameters, echoed verbatim into every report so a
/// verdict can be replayed from the report alone.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub dim: usize,
    pub trials: usize,
    pub global_trials: usize,
    pub seed: u64,
    pub modulus: String,
    pub checks: Vec<String>,
}

impl RunConfig {
    fn new(dim: u64, trials: u64, seed: u64, modulus: ModulusArg, checks: &[CheckArg]) -> Self {
        assert!(dim >= 1 && trials >= 1, "enforced by the argument parser");
        RunConfig {
            dim: dim as usize,
            trials: trials as usize,
            global_trials: 5.max(trials as usize),
            seed,
            modulus: arg_name(&modulus),
            checks: checks.iter().map(arg_name).collect(),
        }
    }

    fn engine(&self) -> RigidityEngine {
        let field =
            if self.modulus == "alt" { PrimeField::alt62() } else { PrimeField::mersenne61() };
        RigidityEngine::new(EngineConfig {
            field,
            trials: self.trials,
            global_trials: self.global_trials,
            seed: self.seed,
        })
    }
}

fn arg_name<T: ValueEnum>(v: &T) -> String {
    v.to_possible_value().expect("no skipped variants").get_name().to_string()
}

#[derive(Serialize)]
struct GraphInfo {
    vertices: usize,
    edges: usize,
}

#[derive(Serialize)]
struct RankSection {
    rank: usize,
    dof: Option<usize>,
}

#[derive(Serialize)]
struct MatroidSection {
    m_connected: bool,
    components: Vec<Vec<(usize, usize)>>,
    witness: Option<Witness>,
    /// ranks of the two witness sides; they sum to the full rank
    witness_ranks: Option<(usize, usize)>,
}

/// Self-describing analysis report: tool version and full configuration
/// first, then one section per requested check.
#[derive(Serialize)]
struct AnalysisReport {
    tool: &'static str,
    version: &'static str,
    config: RunConfig,
    graph: GraphInfo,
    #[serde(skip_serializing_if = "Option::is_none")]
    rank: Option<RankSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rigid: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    redundantly_rigid: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bridges: Option<Vec<(usize, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    matroid: Option<MatroidSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    hendrickson: Option<HendricksonReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    global: Option<GlobalRigidityVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reconstructibility: Option<ReconstructibilityVerdict>,
}

/// Parse and execute the process arguments; the returned code is the
/// process exit status.
pub fn run() -> i32 {
    let cli = Cli::parse();
    let mut stdout = io::stdout().lock();
    match execute(cli, &mut stdout) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

/// Run one parsed command, writing to `out` unless the command carries its
/// own output path.
pub fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    match cli.command {
        Command::Generate { family, output } => {
            let g = parse_family(&family)?;
            emit(out, output.as_deref(), &g.to_json())?;
            Ok(0)
        }
        Command::Analyze { graph, dim, trials, seed, modulus, checks, output } => {
            let g = read_graph(&graph)?;
            let config = RunConfig::new(dim, trials, seed, modulus, &checks);
            let report = analysis_report(&g, &config, &checks)?;
            let mut text = serde_json::to_string(&report).expect("report serializes");
            text.push('\n');
            emit(out, output.as_deref(), &text)?;
            Ok(0)
        }
        Command::Verify { suites, seed, trials, modulus, output } => {
            let config = RunConfig::new(3, trials, seed, modulus, &[]);
            let engine = config.engine();
            let selected: Vec<Suite> = if suites.contains(&SuiteArg::All) {
                vec![Suite::All]
            } else {
                let mut seen = Vec::new();
                suites
                    .iter()
                    .filter(|s| {
                        let new = !seen.contains(*s);
                        seen.push(**s);
                        new
                    })
                    .map(|s| s.to_suite())
                    .collect()
            };
            let mut text = String::new();
            let mut all_passed = true;
            for suite in selected {
                for result in run_suite(&engine, suite, seed) {
                    text.push_str(&serde_json::to_string(&result).expect("result serializes"));
                    text.push('\n');
                    all_passed &= result.passed();
                }
            }
            emit(out, output.as_deref(), &text)?;
            Ok(if all_passed { 0 } else { 1 })
        }
    }
}

fn analysis_report(
    g: &Graph,
    config: &RunConfig,
    checks: &[CheckArg],
) -> Result<AnalysisReport, CliError> {
    let engine = config.engine();
    let d = config.dim;
    let all = checks.contains(&CheckArg::All);
    let wants = |c: CheckArg| all || checks.contains(&c);
    let mut report = AnalysisReport {
        tool: "rigidity",
        version: env!("CARGO_PKG_VERSION"),
        config: config.clone(),
        graph: GraphInfo { vertices: g.vertex_count(), edges: g.edge_count() },
        rank: None,
        rigid: None,
        redundantly_rigid: None,
        bridges: None,
        matroid: None,
        hendrickson: None,
        global: None,
        reconstructibility: None,
    };
    if wants(CheckArg::Rank) {
        report.rank = Some(RankSection { rank: engine.rank_d(g, d), dof: engine.dof(g, d) });
    }
    if wants(CheckArg::Rigid) {
        report.rigid = Some(engine.is_rigid(g, d));
    }
    if wants(CheckArg::Redundant) {
        report.redundantly_rigid = Some(engine.is_redundantly_rigid(g, d)?);
    }
    if wants(CheckArg::Bridges) {
        report.bridges = Some(engine.bridges(g, d)?);
    }
    if wants(CheckArg::Mconn) {
        let m = engine.analyze(g, d)?;
        let witness_ranks = match &m.witness {
            Some(w) => Some((
                engine.rank_of_edge_set(g, d, &w.e1)?,
                engine.rank_of_edge_set(g, d, &w.e2)?,
            )),
            None => None,
        };
        report.matroid = Some(MatroidSection {
            m_connected: m.m_connected,
            components: m.components,
            witness: m.witness,
            witness_ranks,
        });
    }
    if wants(CheckArg::Hendrickson) {
        report.hendrickson =
            Some(hendrickson_check(&engine, g, d).map_err(CliError::from_global)?);
    }
    if wants(CheckArg::Global) {
        report.global = Some(is_globally_rigid(&engine, g, d));
    }
    if wants(CheckArg::Classify) {
        report.reconstructibility = Some(
            classify_reconstructibility(&engine, g, d, &[]).map_err(CliError::from_global)?,
        );
    }
    Ok(report)
}

fn emit(out: &mut dyn Write, path: Option<&Path>, content: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, content)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", p.display()))),
        None => out
            .write_all(content.as_bytes())
            .map_err(|e| CliError::Usage(format!("cannot write output: {e}"))),
    }
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    Graph::from_json(&text)
        .map_err(|e| CliError::Usage(format!("malformed graph in {}: {e}", path.display())))
}

/// Build a graph from a family spec such as `complete:5`,
/// `bipartite:3,4`, `cone:wheel.json`, or
/// `glue:a.json,b.json,0=0+1=1+2=2`.
pub fn parse_family(spec: &str) -> Result<Graph, CliError> {
    let usage = |m: String| CliError::Usage(m);
    let (name, args) = match spec.split_once(':') {
        Some((n, a)) => (n, Some(a)),
        None => (spec, None),
    };
    match (name, args) {
        ("complete", Some(a)) => Ok(complete_graph(parse_count(a)?)),
        ("bipartite", Some(a)) => {
            let (x, y) = a
                .split_once(',')
                .ok_or_else(|| usage(format!("bipartite needs a,b, got '{a}'")))?;
            Ok(complete_bipartite(parse_count(x)?, parse_count(y)?))
        }
        ("ring-of-k5", Some(a)) => {
            ring_of_k5(parse_count(a)?).map_err(|e| usage(e.to_string()))
        }
        ("figure1", None) => Ok(figure1_graph()),
        ("figure2a", None) => Ok(figure2a_graph()),
        ("figure2b", None) => Ok(figure2b_graph()),
        ("cone", Some(file)) => Ok(cone(&read_graph(Path::new(file))?)),
        ("glue", Some(a)) => {
            let mut parts = a.splitn(3, ',');
            let (f1, f2, pairs) = match (parts.next(), parts.next(), parts.next()) {
                (Some(f1), Some(f2), Some(p)) => (f1, f2, p),
                _ => return Err(usage(format!("glue needs file,file,pairs, got '{a}'"))),
            };
            let g1 = read_graph(Path::new(f1))?;
            let g2 = read_graph(Path::new(f2))?;
            let spec = parse_pairs(pairs)?;
            glue(&g1, &g2, &spec).map_err(|e| usage(e.to_string()))
        }
        _ => Err(usage(format!(
            "unknown family '{spec}'; known: complete:n bipartite:a,b ring-of-k5:k \
             figure1 figure2a figure2b cone:<file> glue:<file>,<file>,<pairs>"
        ))),
    }
}

fn parse_count(text: &str) -> Result<usize, CliError> {
    text.parse::<usize>()
        .map_err(|_| CliError::Usage(format!("expected a number, got '{text}'")))
}

/// Identification list grammar: `0=0+1=1+2=2`; empty means disjoint union.
fn parse_pairs(text: &str) -> Result<VertexPartitionSpec, CliError> {
    let mut pairs = Vec::new();
    if text.is_empty() {
        return Ok(VertexPartitionSpec::new(pairs));
    }
    for part in text.split('+') {
        let (a, b) = part.split_once('=').ok_or_else(|| {
            CliError::Usage(format!("bad identification '{part}', expected u=v"))
        })?;
        pairs.push((parse_count(a)?, parse_count(b)?));
    }
    Ok(VertexPartitionSpec::new(pairs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::env;

    fn temp_graph_file(name: &str, g: &Graph) -> PathBuf {
        let path = env::temp_dir().join(format!("rigidity-cli-test-{name}-{}.json", std::process::id()));
        fs::write(&path, g.to_json()).unwrap();
        path
    }

    #[test]
    fn family_specs_parse() {
        assert_eq!(parse_family("complete:5").unwrap(), complete_graph(5));
        assert_eq!(parse_family("bipartite:3,4").unwrap(), complete_bipartite(3, 4));
        assert_eq!(parse_family("ring-of-k5:6").unwrap().vertex_count(), 18);
        let fig = parse_family("figure1").unwrap();
        assert_eq!((fig.vertex_count(), fig.edge_count()), (14, 40));
        for bad in ["complete:x", "unknown:1", "bipartite:3", "figure9", "glue:only-one"] {
            let err = parse_family(bad).unwrap_err();
            assert_eq!(err.exit_code(), 2, "{bad}");
        }
    }

    #[test]
    fn cone_and_glue_specs_read_files() {
        let k4 = temp_graph_file("k4", &complete_graph(4));
        let coned = parse_family(&format!("cone:{}", k4.display())).unwrap();
        assert_eq!(coned, complete_graph(5));
        let glued =
            parse_family(&format!("glue:{},{},0=0+1=1", k4.display(), k4.display())).unwrap();
        assert_eq!((glued.vertex_count(), glued.edge_count()), (6, 11));
        let disjoint = parse_family(&format!("glue:{},{},", k4.display(), k4.display())).unwrap();
        assert_eq!((disjoint.vertex_count(), disjoint.edge_count()), (8, 12));
        fs::remove_file(k4).unwrap();
    }

    #[test]
    fn generate_writes_canonical_json() {
        let cli = Cli {
            command: Command::Generate { family: "complete:4".into(), output: None },
        };
        let mut out = Vec::new();
        assert_eq!(execute(cli, &mut out).unwrap(), 0);
        let text = String::from_utf8(out).unwrap();
        assert!(text.ends_with('\n'));
        assert_eq!(Graph::from_json(&text).unwrap(), complete_graph(4));
        // round-trip is byte-identical
        assert_eq!(Graph::from_json(&text).unwrap().to_json(), text);
    }

    #[test]
    fn analyze_report_has_requested_sections_and_is_stable() {
        let file = temp_graph_file("k5", &complete_graph(5));
        let run = || {
            let cli = Cli {
                command: Command::Analyze {
                    graph: file.clone(),
                    dim: 3,
                    trials: 3,
                    seed: 0,
                    modulus: ModulusArg::M61,
                    checks: vec![CheckArg::All],
                    output: None,
                },
            };
            let mut out = Vec::new();
            assert_eq!(execute(cli, &mut out).unwrap(), 0);
            String::from_utf8(out).unwrap()
        };
        let first = run();
        assert_eq!(first, run(), "reports are byte-identical across runs");
        let v: serde_json::Value = serde_json::from_str(&first).unwrap();
        assert_eq!(v["tool"], "rigidity");
        assert_eq!(v["config"]["modulus"], "m61");
        assert_eq!(v["rank"]["rank"], 9);
        assert_eq!(v["rank"]["dof"], 0);
        assert_eq!(v["rigid"], true);
        assert_eq!(v["redundantly_rigid"], true);
        assert_eq!(v["matroid"]["m_connected"], true);
        assert_eq!(v["global"]["decision"], "GloballyRigid");
        assert_eq!(v["reconstructibility"]["decision"], "FullyReconstructible");
        fs::remove_file(file).unwrap();
    }

    #[test]
    fn analyze_partial_checks_and_witness_ranks() {
        let file = temp_graph_file("fig1", &figure1_graph());
        let cli = Cli {
            command: Command::Analyze {
                graph: file.clone(),
                dim: 3,
                trials: 3,
                seed: 0,
                modulus: ModulusArg::M61,
                checks: vec![CheckArg::Mconn],
                output: None,
            },
        };
        let mut out = Vec::new();
        assert_eq!(execute(cli, &mut out).unwrap(), 0);
        let v: serde_json::Value = serde_json::from_str(std::str::from_utf8(&out).unwrap()).unwrap();
        assert_eq!(v["matroid"]["m_connected"], false);
        assert_eq!(v["matroid"]["witness_ranks"][0], 9);
        assert_eq!(v["matroid"]["witness_ranks"][1], 27);
        assert!(v.get("rank").is_none());
        assert!(v.get("global").is_none());
        fs::remove_file(file).unwrap();
    }

    #[test]
    fn missing_and_malformed_inputs_exit_2() {
        let cli = Cli {
            command: Command::Analyze {
                graph: PathBuf::from("/nonexistent/graph.json"),
                dim: 3,
                trials: 3,
                seed: 0,
                modulus: ModulusArg::M61,
                checks: vec![CheckArg::Rank],
                output: None,
            },
        };
        let mut out = Vec::new();
        assert_eq!(execute(cli, &mut out).unwrap_err().exit_code(), 2);

        let bad = env::temp_dir().join(format!("rigidity-cli-bad-{}.json", std::process::id()));
        fs::write(&bad, "{not json").unwrap();
        let cli = Cli {
            command: Command::Analyze {
                graph: bad.clone(),
                dim: 3,
                trials: 3,
                seed: 0,
                modulus: ModulusArg::M61,
                checks: vec![CheckArg::Rank],
                output: None,
            },
        };
        let mut out = Vec::new();
        assert_eq!(execute(cli, &mut out).unwrap_err().exit_code(), 2);
        fs::remove_file(bad).unwrap();
    }

    #[test]
    fn verify_emits_one_json_line_per_result() {
        let cli = Cli {
            command: Command::Verify {
                suites: vec![SuiteArg::Gluing],
                seed: 0,
                trials: 3,
                modulus: ModulusArg::M61,
                output: None,
            },
        };
        let mut out = Vec::new();
        assert_eq!(execute(cli, &mut out).unwrap(), 0);
        let text = String::from_utf8(out).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 2, "one result per dimension");
        for line in lines {
            let r: crate::harness::PropertyResult = serde_json::from_str(line).unwrap();
            assert!(r.passed());
            assert!(r.property.starts_with("gluing_rank_formula"));
        }
    }
}
