//! Command-line front end for `flowup-core`.
//!
//! Every command is a pure function from parsed arguments to an [`Outcome`]
//! holding the text for stdout and stderr plus the exit code, so the binary
//! only has to print.

pub mod json;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use flowup_core::splines::first_violation;
use flowup_core::verify::{audit_min_divisibility, oracle_invariants, trails_agree_with_paths};
use flowup_core::{
    build_spline_lattice, check_minimum_criterion, enumerate_splines, factorize, flow_up_basis,
    minimum_generating_set, module_invariants, pq_rank, prime_power_unordered, rank_one_pq,
    son_decreasing, son_increasing, spans, star_extension, ChainDirection, ChainLabels,
    CompleteGraphLabels, EdgeLabeledGraph, GeneratingSet, Route, Spline, StarMode, WalkMode,
    DEFAULT_BUDGET,
};
use serde::Serialize;

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_INFEASIBLE: u8 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] flowup_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(flowup_core::Error::OracleInfeasible { .. }) => EXIT_INFEASIBLE,
            CliError::Core(flowup_core::Error::Consistency(_)) => EXIT_FAIL,
            _ => EXIT_USAGE,
        }
    }
}

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    fn pass(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: EXIT_PASS }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.stderr.push_str(&note.into());
        self.stderr.push('\n');
        self
    }
}

#[derive(Debug, Parser)]
#[command(name = "flowup", version, about = "Generating sets for splines over Z/mZ")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a graph from a family and its certified generating set.
    Gen(GenArgs),
    /// Rank and invariant factors of the spline module of a graph.
    Rank(RankArgs),
    /// Best available generating set for a graph.
    Mingen(MingenArgs),
    /// Check a generating set against a graph.
    Verify(VerifyArgs),
    /// Cross-check the lattice results against brute-force enumeration.
    Oracle(OracleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    SonDec,
    SonInc,
    PrimePower,
    RankOnePq,
    PqRank,
    StarExt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StarModeArg {
    AllP,
    OneQ,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    pub family: Family,
    /// Number of vertices.
    #[arg(long)]
    pub n: Option<usize>,
    /// Modulus (son-dec, son-inc, prime-power).
    #[arg(long)]
    pub m: Option<u128>,
    /// Comma-separated labels in edge order v1v2, v1v3, v2v3, v1v4, ...
    #[arg(long, value_delimiter = ',')]
    pub chain: Vec<u128>,
    #[arg(long)]
    pub p: Option<u128>,
    #[arg(long)]
    pub q: Option<u128>,
    /// Target rank (pq-rank).
    #[arg(long)]
    pub rank: Option<usize>,
    /// Base graph JSON (star-ext).
    #[arg(long)]
    pub graph: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub mode: Option<StarModeArg>,
    /// Recompute leading entries from trails as well.
    #[arg(long)]
    pub check_trails: bool,
    /// Where to write the graph JSON.
    #[arg(long)]
    pub graph_out: Option<PathBuf>,
    /// Where to write the generating-set JSON.
    #[arg(long)]
    pub json_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RankArgs {
    pub graph: PathBuf,
    #[arg(long)]
    pub json_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MingenArgs {
    pub graph: PathBuf,
    #[arg(long)]
    pub check_trails: bool,
    #[arg(long)]
    pub json_out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Level {
    Spline,
    Flowup,
    Spanning,
    Minimum,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub graph: PathBuf,
    pub set: PathBuf,
    #[arg(long, value_enum, default_value = "minimum")]
    pub level: Level,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    pub graph: PathBuf,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    #[arg(long)]
    pub check_trails: bool,
    #[arg(long)]
    pub json_out: Option<PathBuf>,
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Rank(a) => cmd_rank(a),
        Command::Mingen(a) => cmd_mingen(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Oracle(a) => cmd_oracle(a),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn load_graph(path: &Path) -> Result<EdgeLabeledGraph, CliError> {
    json::parse_graph(&read(path)?)
}

fn need<T: Copy>(value: Option<T>, flag: &str, family: Family) -> Result<T, CliError> {
    value.ok_or_else(|| {
        let name = family.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
        CliError::Usage(format!("{name} needs --{flag}"))
    })
}

fn chain_set(
    a: &GenArgs,
    direction: ChainDirection,
) -> Result<(EdgeLabeledGraph, GeneratingSet), CliError> {
    let n = need(a.n, "n", a.family)?;
    let ctx = factorize(need(a.m, "m", a.family)?)?;
    let chain = ChainLabels::new(a.chain.clone(), direction, &ctx)?;
    Ok(match direction {
        ChainDirection::Decreasing => son_decreasing(n, &chain, &ctx)?,
        ChainDirection::Increasing => son_increasing(n, &chain, &ctx)?,
    })
}

fn cmd_gen(a: &GenArgs) -> Result<Outcome, CliError> {
    let (graph, set) = match a.family {
        Family::SonDec => chain_set(a, ChainDirection::Decreasing)?,
        Family::SonInc => chain_set(a, ChainDirection::Increasing)?,
        Family::PrimePower => {
            let n = need(a.n, "n", a.family)?;
            let ctx = factorize(need(a.m, "m", a.family)?)?;
            let g = flowup_core::complete_from_labels(&CompleteGraphLabels::new(n, a.chain.clone()), &ctx)?;
            let set = prime_power_unordered(&g, a.check_trails)?;
            (g, set)
        }
        Family::RankOnePq => {
            let g = rank_one_pq(need(a.n, "n", a.family)?, need(a.p, "p", a.family)?, need(a.q, "q", a.family)?)?;
            mingen_of(&g, a.check_trails)?
        }
        Family::PqRank => {
            let g = pq_rank(
                need(a.n, "n", a.family)?,
                need(a.rank, "rank", a.family)?,
                need(a.p, "p", a.family)?,
                need(a.q, "q", a.family)?,
            )?;
            mingen_of(&g, a.check_trails)?
        }
        Family::StarExt => {
            let path = a
                .graph
                .as_deref()
                .ok_or_else(|| CliError::Usage("star-ext needs --graph".into()))?;
            let mode = match need(a.mode, "mode", a.family)? {
                StarModeArg::AllP => StarMode::AllP,
                StarModeArg::OneQ => StarMode::OneQ,
            };
            let base = load_graph(path)?;
            let g = star_extension(&base, mode, need(a.p, "p", a.family)?, need(a.q, "q", a.family)?)?;
            mingen_of(&g, a.check_trails)?
        }
    };
    let graph_text = json::emit_graph(&graph);
    let set_text = json::emit_generating_set(&set);
    let mut stdout = String::new();
    match &a.graph_out {
        Some(p) => write(p, &graph_text)?,
        None => stdout.push_str(&graph_text),
    }
    match &a.json_out {
        Some(p) => write(p, &set_text)?,
        None => stdout.push_str(&set_text),
    }
    Ok(Outcome::pass(stdout).with_note(summary(None, &set)))
}

fn mingen_of(g: &EdgeLabeledGraph, check_trails: bool) -> Result<(EdgeLabeledGraph, GeneratingSet), CliError> {
    let (_, set) = minimum_generating_set(g, check_trails)?;
    Ok((g.clone(), set))
}

fn route_name(route: Route) -> &'static str {
    match route {
        Route::DecreasingChain => "decreasing-chain",
        Route::IncreasingChain => "increasing-chain",
        Route::PrimePower => "prime-power",
        Route::FlowUpBasis => "flow-up-basis",
    }
}

fn summary(route: Option<Route>, set: &GeneratingSet) -> String {
    let status = if set.certificate.is_minimum() {
        format!("minimum ({})", set.certificate)
    } else {
        "not minimum".to_string()
    };
    let prefix = route.map(|r| format!("route {}: ", route_name(r))).unwrap_or_default();
    format!("{prefix}{} generators, rank {}, {status}", set.len(), set.rank())
}

#[derive(Serialize)]
struct RankJson {
    rank: usize,
    invariant_factors: Vec<String>,
}

fn cmd_rank(a: &RankArgs) -> Result<Outcome, CliError> {
    let g = load_graph(&a.graph)?;
    let inv = module_invariants(&build_spline_lattice(&g)?)?;
    let factors: Vec<String> = inv.factors.iter().map(u128::to_string).collect();
    let mut out = format!("rank {}\n", inv.rank);
    out.push_str("invariant_factors");
    for f in &factors {
        out.push(' ');
        out.push_str(f);
    }
    out.push('\n');
    if let Some(p) = &a.json_out {
        write(p, &json::to_json(&RankJson { rank: inv.rank, invariant_factors: factors }))?;
    }
    Ok(Outcome::pass(out))
}

fn cmd_mingen(a: &MingenArgs) -> Result<Outcome, CliError> {
    let g = load_graph(&a.graph)?;
    let (route, set) = minimum_generating_set(&g, a.check_trails)?;
    let text = json::emit_generating_set(&set);
    let stdout = match &a.json_out {
        Some(p) => {
            write(p, &text)?;
            String::new()
        }
        None => text,
    };
    Ok(Outcome::pass(stdout).with_note(summary(Some(route), &set)))
}

struct Report {
    lines: Vec<String>,
    ok: bool,
}

impl Report {
    fn record(&mut self, name: &str, result: Result<(), String>) -> bool {
        match result {
            Ok(()) => self.lines.push(format!("{name}: pass")),
            Err(why) => {
                self.lines.push(format!("{name}: fail ({why})"));
                self.ok = false;
            }
        }
        self.ok
    }
}

fn check_splines(g: &EdgeLabeledGraph, set: &[Spline]) -> Result<(), String> {
    for (k, f) in set.iter().enumerate() {
        if let Some(err) = first_violation(g, f.values()).map_err(|e| format!("member {}: {e}", k + 1))? {
            return Err(format!("member {}: {err}", k + 1));
        }
    }
    Ok(())
}

fn check_flow_ups(set: &[Spline]) -> Result<(), String> {
    for (k, f) in set.iter().enumerate() {
        if f.flow_up_index().is_none() {
            return Err(format!("member {} is zero", k + 1));
        }
    }
    Ok(())
}

fn cmd_verify(a: &VerifyArgs) -> Result<Outcome, CliError> {
    let g = load_graph(&a.graph)?;
    let claimed = json::parse_generating_set(&read(&a.set)?)?;
    let set = claimed.spline_values()?;
    let mut report = Report { lines: Vec::new(), ok: true };
    let mut go = report.record("spline", check_splines(&g, &set));
    if go && a.level == Level::Flowup {
        report.record("flowup", check_flow_ups(&set));
    }
    if go && a.level >= Level::Spanning {
        let lat = build_spline_lattice(&g)?;
        let spanning = spans(&lat, &set)?;
        go = report.record("spanning", if spanning { Ok(()) } else { Err("set does not generate".into()) });
        if go && a.level == Level::Minimum {
            let rank = module_invariants(&lat)?.rank;
            let criterion = check_minimum_criterion(&set, g.ctx());
            let result = if criterion.holds || set.len() == rank {
                Ok(())
            } else {
                Err(format!(
                    "{}; {} members but rank {rank}",
                    criterion.reason.unwrap_or_default(),
                    set.len()
                ))
            };
            report.record("minimum", result);
        }
    }
    let mut stdout = report.lines.join("\n");
    stdout.push('\n');
    Ok(Outcome {
        stdout,
        stderr: String::new(),
        code: if report.ok { EXIT_PASS } else { EXIT_FAIL },
    })
}

#[derive(Serialize)]
struct OracleJson {
    modulus: String,
    vertices: usize,
    splines: String,
    oracle_rank: usize,
    lattice_rank: usize,
    ranks_agree: bool,
    invariant_factors: Vec<String>,
    thm_min_violations: usize,
    trails_agree: Option<bool>,
}

fn cmd_oracle(a: &OracleArgs) -> Result<Outcome, CliError> {
    let g = load_graph(&a.graph)?;
    let all = enumerate_splines(&g, a.budget)?;
    let oracle = oracle_invariants(&g, &all)?;
    let lattice = module_invariants(&build_spline_lattice(&g)?)?;
    let mode = if a.check_trails { WalkMode::Trails } else { WalkMode::SimplePaths };
    let violations = audit_min_divisibility(&g, &all, mode)?.len();
    flow_up_basis(&build_spline_lattice(&g)?)?;
    let trails_agree = if a.check_trails { Some(trails_agree_with_paths(&g)?) } else { None };
    let ranks_agree = oracle == lattice;
    let body = OracleJson {
        modulus: g.modulus().to_string(),
        vertices: g.vertex_count(),
        splines: all.len().to_string(),
        oracle_rank: oracle.rank,
        lattice_rank: lattice.rank,
        ranks_agree,
        invariant_factors: lattice.factors.iter().map(u128::to_string).collect(),
        thm_min_violations: violations,
        trails_agree,
    };
    let text = json::to_json(&body);
    let stdout = match &a.json_out {
        Some(p) => {
            write(p, &text)?;
            String::new()
        }
        None => text,
    };
    let ok = ranks_agree && violations == 0 && trails_agree != Some(false);
    let note = format!(
        "ranks {} ({} vs {}); splines: {}; thm-min violations: {violations}",
        if ranks_agree { "agree" } else { "DISAGREE" },
        oracle.rank,
        lattice.rank,
        all.len()
    );
    Ok(Outcome { stdout, stderr: String::new(), code: if ok { EXIT_PASS } else { EXIT_FAIL } }.with_note(note))
}
