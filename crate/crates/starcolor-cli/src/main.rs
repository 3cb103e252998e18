//! Command-line front end. Every subcommand prints one report (JSON by
//! default) that echoes the tool version, the seed when randomness is
//! involved, and the effective configuration, so identical inputs and seeds
//! produce byte-identical output.
//!
//! Exit codes: 0 for valid or successful outcomes, 1 for violations and
//! failed runs (the report carries the witness), 2 for usage, I/O and parse
//! errors.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use starcolor::coloring::Coloring;
use starcolor::discharge::{self, Charge, Party, Rule};
use starcolor::embedding::{euler_genus, RotationSystem};
use starcolor::graph::Graph;
use starcolor::io;
use starcolor::lll::{self, LllError};
use starcolor::lowerbound::{self, ForbiddenFamily};
use starcolor::oracle::{self, ColoringKind};
use starcolor::orient::{self, Certificate, Orientation};
use starcolor::reduce::{self, GenusParameters};
use starcolor::verify::{self, DegenerateMode, Verdict};
use starcolor::ListAssignment;

#[derive(Parser)]
#[command(name = "starcolor", version, about = "Star and degenerate-star coloring toolkit")]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Check a coloring of a graph; violations come with a witness.
    Verify(VerifyArgs),
    /// Find or check an orientation certifying a star coloring.
    Certify(CertifyArgs),
    /// Color a graph by resampling or by the bounded-genus pipeline.
    Color(ColorArgs),
    /// Strip reducible vertices down to the irreducible core.
    Reduce(ReduceArgs),
    /// Replay the charge argument on an embedded graph.
    Audit(AuditArgs),
    /// Exact chromatic numbers of small graphs.
    Oracle(OracleArgs),
    /// Random-graph experiments around family-free colorings.
    Lowerbound(LowerboundArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyKind {
    Proper,
    Acyclic,
    Star,
    Degenerate,
    DegenerateStar,
    DistanceTwo,
    Rainbow,
}

impl VerifyKind {
    fn name(self) -> &'static str {
        match self {
            VerifyKind::Proper => "proper",
            VerifyKind::Acyclic => "acyclic",
            VerifyKind::Star => "star",
            VerifyKind::Degenerate => "degenerate",
            VerifyKind::DegenerateStar => "degenerate-star",
            VerifyKind::DistanceTwo => "distance-two",
            VerifyKind::Rainbow => "rainbow",
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    /// Graph file (edge list).
    graph: PathBuf,
    /// Coloring file.
    #[arg(long)]
    coloring: PathBuf,
    /// Property to check.
    #[arg(long, value_enum, default_value_t = VerifyKind::DegenerateStar)]
    kind: VerifyKind,
    /// Degenerate checks: largest class count the exhaustive search accepts.
    #[arg(long, default_value_t = 20)]
    max_classes: usize,
    /// Degenerate checks: use the incomplete search instead of refusing
    /// large class counts.
    #[arg(long)]
    restricted: bool,
    /// Rainbow check: vertices of degree up to this must see distinct colors.
    #[arg(long, default_value_t = 12)]
    threshold: usize,
}

#[derive(Args)]
struct CertifyArgs {
    /// Graph file (edge list).
    graph: PathBuf,
    /// Coloring file.
    #[arg(long)]
    coloring: PathBuf,
    /// Check this orientation instead of searching for one.
    #[arg(long)]
    orientation: Option<PathBuf>,
    /// Write the found orientation here.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Strategy {
    Lll,
    Genus,
}

#[derive(Args)]
struct ColorArgs {
    /// Graph file (edge list).
    graph: PathBuf,
    /// Coloring strategy.
    #[arg(long, value_enum)]
    strategy: Strategy,
    /// RNG seed; runs are deterministic in (input, seed).
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Palette size (default: the strategy's own bound).
    #[arg(long)]
    palette: Option<usize>,
    /// Resampling round budget (default: 10n + 50).
    #[arg(long)]
    budget: Option<usize>,
    /// Euler genus bound for the genus strategy.
    #[arg(long)]
    genus: Option<usize>,
    /// Rotation-system file; supplies the genus when --genus is absent.
    #[arg(long)]
    embedding: Option<PathBuf>,
    /// Write the coloring here.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ReduceArgs {
    /// Graph file (edge list).
    graph: PathBuf,
}

#[derive(Args)]
struct AuditArgs {
    /// Rotation-system file.
    embedding: PathBuf,
    /// Special vertices whose charge rule differs, comma separated.
    #[arg(long, value_delimiter = ',')]
    specials: Vec<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OracleKind {
    Proper,
    Acyclic,
    Star,
    Degenerate,
    DegenerateStar,
    DistanceTwo,
}

impl From<OracleKind> for ColoringKind {
    fn from(k: OracleKind) -> ColoringKind {
        match k {
            OracleKind::Proper => ColoringKind::Proper,
            OracleKind::Acyclic => ColoringKind::Acyclic,
            OracleKind::Star => ColoringKind::Star,
            OracleKind::Degenerate => ColoringKind::Degenerate,
            OracleKind::DegenerateStar => ColoringKind::DegenerateStar,
            OracleKind::DistanceTwo => ColoringKind::DistanceTwo,
        }
    }
}

#[derive(Args)]
struct OracleArgs {
    /// Graph file (edge list).
    graph: PathBuf,
    /// Chromatic number to compute.
    #[arg(long, value_enum)]
    kind: OracleKind,
    /// Refuse graphs with more vertices than this.
    #[arg(long, default_value_t = oracle::DEFAULT_FEASIBILITY_LIMIT)]
    limit: usize,
}

#[derive(Args)]
struct LowerboundArgs {
    /// Graph sizes to sample, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    sizes: Vec<usize>,
    /// Samples per size.
    #[arg(long, default_value_t = 3)]
    trials: usize,
    /// RNG seed; runs are deterministic in (sizes, trials, seed).
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let (command, seed, config, result, code) = match &cli.command {
        Command::Verify(args) => run_verify(args)?,
        Command::Certify(args) => run_certify(args)?,
        Command::Color(args) => run_color(args)?,
        Command::Reduce(args) => run_reduce(args)?,
        Command::Audit(args) => run_audit(args)?,
        Command::Oracle(args) => run_oracle(args)?,
        Command::Lowerbound(args) => run_lowerbound(args)?,
    };
    let report = json!({
        "tool": "starcolor",
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "seed": seed,
        "config": config,
        "result": result,
    });
    match cli.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report).unwrap()),
        Format::Text => print!("{}", render_text(&report)),
    }
    Ok(ExitCode::from(code))
}

type Outcome = (&'static str, Option<u64>, Value, Value, u8);

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_graph(path: &Path) -> Result<Graph, String> {
    io::parse_graph(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_rotation(path: &Path) -> Result<RotationSystem, String> {
    io::parse_rotation(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_coloring(path: &Path, n: usize) -> Result<Coloring, String> {
    io::parse_coloring(&read(path)?, n).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_output(path: &Path, content: &str) -> Result<(), String> {
    fs::write(path, content).map_err(|e| format!("{}: {e}", path.display()))
}

fn coloring_json(c: &Coloring) -> Value {
    Value::Array((0..c.n()).map(|v| c.get(v).map_or(Value::Null, |x| json!(x))).collect())
}

fn verdict_json(v: &Verdict) -> Value {
    serde_json::to_value(v).unwrap()
}

fn exit_for(v: &Verdict) -> u8 {
    if v.is_valid() {
        0
    } else {
        1
    }
}

fn run_verify(args: &VerifyArgs) -> Result<Outcome, String> {
    let g = read_graph(&args.graph)?;
    let c = read_coloring(&args.coloring, g.n())?;
    let mode = if args.restricted {
        DegenerateMode::Restricted
    } else {
        DegenerateMode::Exhaustive { max_classes: args.max_classes }
    };
    // Every kind except rainbow presupposes properness; answer an improper
    // coloring with the monochromatic-edge witness instead of an error.
    let proper = verify::is_proper(&g, &c).map_err(|e| e.to_string())?;
    let verdict = if !proper.is_valid() && args.kind != VerifyKind::Rainbow {
        proper
    } else {
        match args.kind {
            VerifyKind::Proper => Ok(proper),
            VerifyKind::Acyclic => verify::is_acyclic(&g, &c),
            VerifyKind::Star => verify::is_star(&g, &c),
            VerifyKind::Degenerate => verify::is_degenerate(&g, &c, mode),
            VerifyKind::DegenerateStar => verify::is_degenerate_star(&g, &c, mode),
            VerifyKind::DistanceTwo => verify::is_distance_two(&g, &c),
            VerifyKind::Rainbow => verify::neighbors_distinct(&g, &c, args.threshold),
        }
        .map_err(|e| e.to_string())?
    };
    let config = json!({
        "graph": args.graph.display().to_string(),
        "coloring": args.coloring.display().to_string(),
        "kind": args.kind.name(),
        "max_classes": args.max_classes,
        "restricted": args.restricted,
        "threshold": args.threshold,
    });
    let code = exit_for(&verdict);
    let result = json!({ "verdict": verdict_json(&verdict) });
    Ok(("verify", None, config, result, code))
}

fn orientation_json(o: &Orientation) -> Value {
    Value::Array(o.arcs().iter().map(|&(t, h)| json!([t, h])).collect())
}

fn run_certify(args: &CertifyArgs) -> Result<Outcome, String> {
    let g = read_graph(&args.graph)?;
    let c = read_coloring(&args.coloring, g.n())?;
    let config = json!({
        "graph": args.graph.display().to_string(),
        "coloring": args.coloring.display().to_string(),
        "orientation": args.orientation.as_ref().map(|p| p.display().to_string()),
        "output": args.output.as_ref().map(|p| p.display().to_string()),
    });
    if let Some(path) = &args.orientation {
        let o = io::parse_orientation(&read(path)?, &g).map_err(|e| format!("{}: {e}", path.display()))?;
        let verdict = orient::check(&g, &c, &o).map_err(|e| e.to_string())?;
        let code = exit_for(&verdict);
        let result = json!({ "checked": true, "verdict": verdict_json(&verdict) });
        return Ok(("certify", None, config, result, code));
    }
    match orient::certify(&g, &c).map_err(|e| e.to_string())? {
        Certificate::Oriented(o) => {
            if let Some(path) = &args.output {
                write_output(path, &io::write_orientation(&o))?;
            }
            let result = json!({ "certified": true, "orientation": orientation_json(&o) });
            Ok(("certify", None, config, result, 0))
        }
        Certificate::NotStar(verdict) => {
            let result = json!({ "certified": false, "verdict": verdict_json(&verdict) });
            Ok(("certify", None, config, result, 1))
        }
    }
}

fn usage_error(message: &str) -> ! {
    Cli::command().error(ErrorKind::MissingRequiredArgument, message).exit()
}

fn run_color(args: &ColorArgs) -> Result<Outcome, String> {
    let g = read_graph(&args.graph)?;
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    match args.strategy {
        Strategy::Lll => {
            let delta = g.max_degree();
            let palette = args.palette.unwrap_or_else(|| lll::palette_size(delta.max(1)));
            let budget = args.budget.unwrap_or(10 * g.n() + 50);
            let lists = ListAssignment::uniform(g.n(), palette);
            let config = json!({
                "graph": args.graph.display().to_string(),
                "strategy": "lll",
                "max_degree": delta,
                "palette": palette,
                "budget": budget,
                "output": args.output.as_ref().map(|p| p.display().to_string()),
            });
            match lll::moser_tardos_color(&g, &lists, &mut rng, budget) {
                Ok(run) => {
                    if let Some(path) = &args.output {
                        write_output(path, &io::write_coloring(&run.coloring))?;
                    }
                    let result = json!({
                        "coloring": coloring_json(&run.coloring),
                        "colors_used": run.coloring.used_colors().len(),
                        "rounds": run.rounds,
                        "violations_per_round": run.violations_per_round,
                    });
                    Ok(("color", Some(args.seed), config, result, 0))
                }
                Err(LllError::RoundBudgetExhausted { rounds, residual, coloring, violations }) => {
                    let result = json!({
                        "error": "round-budget-exhausted",
                        "rounds": rounds,
                        "residual": residual,
                        "last_coloring": coloring_json(&coloring),
                        "violations": serde_json::to_value(&violations).unwrap(),
                    });
                    Ok(("color", Some(args.seed), config, result, 1))
                }
                Err(e @ LllError::EmptyList(_)) => Err(e.to_string()),
            }
        }
        Strategy::Genus => {
            let genus = match (args.genus, &args.embedding) {
                (Some(genus), _) => genus,
                (None, Some(path)) => {
                    let r = read_rotation(path)?;
                    if r.graph() != g {
                        return Err(format!(
                            "embedding {} does not describe the input graph",
                            path.display()
                        ));
                    }
                    euler_genus(&r).map_err(|e| e.to_string())?
                }
                (None, None) => {
                    usage_error("--strategy genus needs --genus or --embedding")
                }
            };
            let params = GenusParameters::for_genus(genus);
            let palette = args.palette.unwrap_or(params.alpha);
            let lists = ListAssignment::uniform(g.n(), palette);
            let config = json!({
                "graph": args.graph.display().to_string(),
                "strategy": "genus",
                "genus": genus,
                "palette": palette,
                "embedding": args.embedding.as_ref().map(|p| p.display().to_string()),
                "output": args.output.as_ref().map(|p| p.display().to_string()),
            });
            match reduce::color_genus_graph(&g, &lists, genus, &mut rng) {
                Ok(run) => {
                    if let Some(path) = &args.output {
                        write_output(path, &io::write_coloring(&run.coloring))?;
                    }
                    let result = json!({
                        "coloring": coloring_json(&run.coloring),
                        "colors_used": run.coloring.used_colors().len(),
                        "report": serde_json::to_value(&run.report).unwrap(),
                    });
                    Ok(("color", Some(args.seed), config, result, 0))
                }
                Err(e) => {
                    let result = json!({ "error": e.to_string() });
                    Ok(("color", Some(args.seed), config, result, 1))
                }
            }
        }
    }
}

fn run_reduce(args: &ReduceArgs) -> Result<Outcome, String> {
    let g = read_graph(&args.graph)?;
    let lists = ListAssignment::uniform(g.n(), 0);
    let (core, _, trace) = reduce::reduce_fully(&g, &lists);
    let config = json!({ "graph": args.graph.display().to_string() });
    let result = json!({
        "steps": serde_json::to_value(&trace.records).unwrap(),
        "core": {
            "n": core.n(),
            "m": core.m(),
            "edges": core.edges(),
            "original_ids": trace.core_ids(),
        },
    });
    Ok(("reduce", None, config, result, 0))
}

fn charge_json(c: &Charge) -> Value {
    json!(c.to_string())
}

fn party_json(p: &Party) -> Value {
    match p {
        Party::Vertex(v) => json!({ "vertex": v }),
        Party::Face(f) => json!({ "face": f }),
    }
}

fn rule_name(r: &Rule) -> &'static str {
    match r {
        Rule::FaceToDegreeThree => "face-to-degree-three",
        Rule::FaceToFlankedEleven => "face-to-flanked-eleven",
        Rule::VertexToLowNeighbor => "vertex-to-low-neighbor",
        Rule::TenToFiveNeighbor => "ten-to-five-neighbor",
    }
}

fn run_audit(args: &AuditArgs) -> Result<Outcome, String> {
    let r = read_rotation(&args.embedding)?;
    let specials: BTreeSet<usize> = args.specials.iter().copied().collect();
    let config = json!({
        "embedding": args.embedding.display().to_string(),
        "specials": specials.iter().collect::<Vec<_>>(),
    });
    match discharge::audit(&r, &specials) {
        Ok(report) => {
            let transfers: Vec<Value> = report
                .ledger
                .transfers
                .iter()
                .map(|t| {
                    json!({
                        "from": party_json(&t.from),
                        "to": party_json(&t.to),
                        "amount": charge_json(&t.amount),
                        "rule": rule_name(&t.rule),
                    })
                })
                .collect();
            let negatives: Vec<Value> = report
                .negatives
                .iter()
                .map(|(p, c)| json!({ "party": party_json(p), "charge": charge_json(c) }))
                .collect();
            let min_json = |m: &Option<(usize, Charge)>| {
                m.as_ref().map_or(Value::Null, |(i, c)| json!([i, charge_json(c)]))
            };
            let code = u8::from(!report.negatives.is_empty());
            let result = json!({
                "genus": report.genus,
                "faces": report.faces,
                "initial_total": charge_json(&report.initial_total),
                "expected_total": charge_json(&discharge::expected_total(report.genus)),
                "identity_holds": report.initial_total == discharge::expected_total(report.genus),
                "final_total": charge_json(&report.final_total),
                "min_vertex": min_json(&report.min_vertex),
                "min_face": min_json(&report.min_face),
                "negatives": negatives,
                "transfers": transfers,
            });
            Ok(("audit", None, config, result, code))
        }
        Err(discharge::DischargeError::ReducibleInput { vertex }) => {
            let result = json!({ "error": "reducible-input", "vertex": vertex });
            Ok(("audit", None, config, result, 1))
        }
        Err(e) => Err(e.to_string()),
    }
}

fn run_oracle(args: &OracleArgs) -> Result<Outcome, String> {
    let g = read_graph(&args.graph)?;
    let kind: ColoringKind = args.kind.into();
    let r = oracle::chromatic_with_limit(&g, kind, args.limit).map_err(|e| e.to_string())?;
    let config = json!({
        "graph": args.graph.display().to_string(),
        "kind": kind.name(),
        "limit": args.limit,
    });
    let result = json!({
        "kind": kind.name(),
        "value": r.value,
        "witness": coloring_json(&r.witness),
        "candidates": r.candidates,
    });
    Ok(("oracle", None, config, result, 0))
}

fn run_lowerbound(args: &LowerboundArgs) -> Result<Outcome, String> {
    let fam = ForbiddenFamily::p4();
    let report = lowerbound::run_experiment(&args.sizes, &fam, args.trials, args.seed);
    let config = json!({
        "sizes": args.sizes,
        "trials": args.trials,
        "family": "p4",
    });
    let result = serde_json::to_value(&report).unwrap();
    Ok(("lowerbound", Some(args.seed), config, result, 0))
}

/// Flat `key.path = value` rendering of the JSON report.
fn render_text(v: &Value) -> String {
    let mut out = String::new();
    render_into(v, "", &mut out);
    out
}

fn render_into(v: &Value, prefix: &str, out: &mut String) {
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                render_into(val, &key, out);
            }
        }
        Value::Array(items) => {
            if items.iter().all(|i| !i.is_object() && !i.is_array()) {
                let flat: Vec<String> = items.iter().map(scalar_text).collect();
                writeln!(out, "{prefix} = [{}]", flat.join(", ")).unwrap();
            } else {
                for (i, item) in items.iter().enumerate() {
                    render_into(item, &format!("{prefix}[{i}]"), out);
                }
            }
        }
        scalar => writeln!(out, "{prefix} = {}", scalar_text(scalar)).unwrap(),
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
