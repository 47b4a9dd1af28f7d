//! The `ldt` command-line front end.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::arrays::ArrayError;
use crate::graphcore::{automorphism_group, make_family, parse_graph, FamilyTag, Graph, GraphError, DEFAULT_AUT_BOUND};
use crate::permgroup::{parse_group, Caps, PermError, PermGroup};
use crate::report::{analysis_report, arrays_report, emit_report, error_json, Format, Report};
use crate::symmetry::{basic_type, classify, reduce_to_basic, AnalysisConfig, SymmetryError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONTRACT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "ldt",
    version,
    about = "Locally s-distance transitive graphs and their normal quotients"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,
}

#[derive(Subcommand, Debug)]
pub enum CliCommand {
    /// F(s) membership, G+ and degeneracy.
    Analyze(CommonArgs),
    /// Which case of the reduction theorem applies, with the normal-quotient survey.
    Classify(CommonArgs),
    /// Reduce a case (c) pair to a basic normal quotient.
    Reduce(CommonArgs),
    /// The type (i)-(iv) of a basic pair.
    BasicType(CommonArgs),
    /// s-distance (bi)regularity, intersection arrays, identities and duals.
    Arrays(CommonArgs),
    /// Write a family graph (K1, K2, star4, C6, K5, K3,3, K3[2], ...) as a graph file.
    Family(FamilyArgs),
    /// Automorphism group generators and order.
    Aut(CommonArgs),
}

#[derive(Args, Debug, Clone)]
pub struct CommonArgs {
    /// Graph file: `n m` followed by edges, or JSON `{"n":..,"edges":[[u,v],..]}`.
    #[arg(long)]
    pub graph: PathBuf,
    /// Group file with one generator per line; defaults to the full automorphism group.
    #[arg(long)]
    pub group: Option<PathBuf>,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Args, Debug, Clone)]
pub struct FamilyArgs {
    /// Family tag, e.g. `C6`, `K5`, `K3,3`, `K3[2]`, `star4`.
    #[arg(long)]
    pub tag: String,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Args, Debug, Clone)]
pub struct Options {
    /// The distance bound s (at least 1).
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
    pub s: u64,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,
    /// Largest group order for which normal subgroups are enumerated.
    #[arg(long, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_order: u64,
    /// Largest number of group elements listed explicitly.
    #[arg(long, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_elements: u64,
    /// Largest vertex count accepted by the automorphism search.
    #[arg(long, default_value_t = DEFAULT_AUT_BOUND as u64, value_parser = clap::value_parser!(u64).range(1..))]
    pub aut_bound: u64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Analyze,
    Classify,
    Reduce,
    BasicType,
    Arrays,
    Family,
    Aut,
}

/// Everything needed for one invocation, independent of argument parsing.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub subcommand: Command,
    pub graph: Option<PathBuf>,
    pub group: Option<PathBuf>,
    /// Family tag for `family`.
    pub tag: Option<String>,
    pub s: usize,
    pub format: Format,
    pub caps: Caps,
    pub aut_bound: usize,
    pub parallel: bool,
}

impl RunConfig {
    /// Builds the configuration from parsed arguments; `LDT_NO_PARALLEL=1`
    /// in the environment forces sequential surveys.
    pub fn from_cli(cli: Cli) -> Self {
        let parallel = std::env::var("LDT_NO_PARALLEL").map_or(true, |v| v != "1");
        let (subcommand, common, tag, opts) = match cli.command {
            CliCommand::Analyze(a) => (Command::Analyze, Some(a.clone()), None, a.opts),
            CliCommand::Classify(a) => (Command::Classify, Some(a.clone()), None, a.opts),
            CliCommand::Reduce(a) => (Command::Reduce, Some(a.clone()), None, a.opts),
            CliCommand::BasicType(a) => (Command::BasicType, Some(a.clone()), None, a.opts),
            CliCommand::Arrays(a) => (Command::Arrays, Some(a.clone()), None, a.opts),
            CliCommand::Aut(a) => (Command::Aut, Some(a.clone()), None, a.opts),
            CliCommand::Family(f) => (Command::Family, None, Some(f.tag), f.opts),
        };
        RunConfig {
            subcommand,
            graph: common.as_ref().map(|c| c.graph.clone()),
            group: common.and_then(|c| c.group),
            tag,
            s: opts.s as usize,
            format: match opts.format {
                FormatArg::Text => Format::Text,
                FormatArg::Json => Format::Json,
            },
            caps: Caps {
                max_order: opts.max_order as u128,
                max_elements: opts.max_elements as usize,
            },
            aut_bound: opts.aut_bound as usize,
            parallel,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    GraphFile { path: PathBuf, source: GraphError },
    #[error("{path}: {source}")]
    GroupFile { path: PathBuf, source: PermError },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Symmetry(#[from] SymmetryError),
    #[error(transparent)]
    Array(#[from] ArrayError),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// Machine-readable error code used in JSON mode.
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "io_error",
            CliError::GraphFile { source, .. } | CliError::Graph(source) => graph_code(source),
            CliError::GroupFile { source, .. } => perm_code(source),
            CliError::Symmetry(e) => match e {
                SymmetryError::Graph(g) => graph_code(g),
                SymmetryError::Perm(p) => perm_code(p),
                SymmetryError::DegreeMismatch { .. } => "degree_mismatch",
                SymmetryError::NotAutomorphisms { .. } => "not_automorphisms",
                SymmetryError::SZero => "s_zero",
                SymmetryError::STooSmall { .. } => "s_too_small",
                SymmetryError::NotInFamily { .. } => "not_in_family",
                SymmetryError::NotCaseC { .. } => "not_case_c",
                SymmetryError::NotBasic => "not_basic",
                SymmetryError::NoSArc { .. } => "no_s_arc",
                SymmetryError::InvariantViolation(_) => "invariant_violation",
            },
            CliError::Array(e) => match e {
                ArrayError::Graph(g) => graph_code(g),
                ArrayError::STooLarge { .. } => "s_too_large",
                ArrayError::InfeasibleArray(_) => "infeasible_array",
                ArrayError::Syntax(_) => "parse_error",
            },
            CliError::Usage(_) => "usage",
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.code() == "cap_exceeded" {
            EXIT_CAP
        } else {
            EXIT_CONTRACT
        }
    }
}

fn graph_code(e: &GraphError) -> &'static str {
    match e {
        GraphError::Parse { .. } => "parse_error",
        GraphError::BoundExceeded { .. } => "cap_exceeded",
        _ => "invalid_graph",
    }
}

fn perm_code(e: &PermError) -> &'static str {
    match e {
        PermError::Parse { .. } | PermError::MalformedPermutation(_) => "parse_error",
        PermError::CapExceeded { .. } => "cap_exceeded",
        PermError::DegreeMismatch { .. } => "degree_mismatch",
        _ => "invalid_group",
    }
}

/// What a run writes and how it ends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn load_graph(config: &RunConfig) -> Result<Graph, CliError> {
    let path = config
        .graph
        .as_ref()
        .ok_or_else(|| CliError::Usage("--graph is required".into()))?;
    parse_graph(&read(path)?).map_err(|source| CliError::GraphFile {
        path: path.clone(),
        source,
    })
}

fn load_group(config: &RunConfig, graph: &Graph) -> Result<PermGroup, CliError> {
    match &config.group {
        Some(path) => parse_group(&read(path)?, Some(graph.n())).map_err(|source| CliError::GroupFile {
            path: path.clone(),
            source,
        }),
        None => Ok(automorphism_group(graph, config.aut_bound)?),
    }
}

fn produce(config: &RunConfig) -> Result<Report, CliError> {
    let analysis = AnalysisConfig {
        caps: config.caps,
        parallel: config.parallel,
    };
    if config.subcommand == Command::Family {
        let text = config
            .tag
            .as_deref()
            .ok_or_else(|| CliError::Usage("--tag is required".into()))?;
        let tag: FamilyTag = text.parse().map_err(|e: GraphError| CliError::Usage(e.to_string()))?;
        return Ok(Report::Family {
            tag,
            graph: make_family(tag)?,
        });
    }
    let graph = load_graph(config)?;
    if config.subcommand == Command::Arrays {
        return Ok(Report::Arrays(arrays_report(&graph, config.s)?));
    }
    let group = load_group(config, &graph)?;
    let s = config.s;
    Ok(match config.subcommand {
        Command::Analyze => Report::Analysis(analysis_report(&graph, &group, s, &analysis)?),
        Command::Classify => Report::Classification(classify(&graph, &group, s, &analysis)?),
        Command::Reduce => Report::Reduction(reduce_to_basic(&graph, &group, s, &analysis)?),
        Command::BasicType => Report::BasicType(basic_type(&graph, &group, s, &analysis)?),
        Command::Aut => Report::Automorphisms(group),
        Command::Arrays | Command::Family => unreachable!("handled above"),
    })
}

/// Runs one subcommand. Analyses that complete exit with 0 whatever their
/// verdict; input and contract errors exit with 2 and cap overruns with 3.
pub fn run(config: &RunConfig) -> RunOutcome {
    match produce(config) {
        Ok(report) => RunOutcome {
            status: EXIT_OK,
            stdout: emit_report(&report, config.format),
            stderr: String::new(),
        },
        Err(e) => {
            let message = e.to_string();
            match config.format {
                Format::Json => RunOutcome {
                    status: e.exit_code(),
                    stdout: error_json(e.code(), &message),
                    stderr: String::new(),
                },
                Format::Text => RunOutcome {
                    status: e.exit_code(),
                    stdout: String::new(),
                    stderr: format!("error [{}]: {message}\n", e.code()),
                },
            }
        }
    }
}
