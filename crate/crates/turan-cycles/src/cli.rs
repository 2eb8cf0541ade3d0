//! Command-line front end.
//!
//! Every operation in the crate is reachable from a subcommand. Reports
//! embed the full run configuration, all rationals are exact `"p/q"`
//! strings, and identical configurations produce byte-identical output.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 argument or expression parse
//! failure, 3 counter overflow, 4 cap or budget violation.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::enumerate::{
    all_graphs_filtered, all_labeled_graphs, random_graphs, EnumError, MAX_CLASS_ORDER,
};
use crate::experiments::{
    degree_stability_scan, edge_stability_measure, extremal_search, turan_degree_reference,
    vertex_extendability_check, vertex_extendability_scan, ExpError, ExtremalResult,
    StabilityScanResult,
};
use crate::expr::{parse_family_exprs, parse_graph_expr, parse_pattern_expr, ExprError};
use crate::graph::{Graph, GraphError};
use crate::hom::{
    copy_count, count_hom, count_inj, degree_profile, edit_distance_to_colorable, is_colorable,
    HomError, Pattern, DEFAULT_EDIT_BUDGET,
};
use crate::io::FormatError;
use crate::ratio::Rat;

const ENV_WORKERS: &str = "TURAN_CYCLES_WORKERS";
const ENV_ENUM_CAP: &str = "TURAN_CYCLES_ENUM_CAP";
const ENV_BUDGET: &str = "TURAN_CYCLES_BUDGET";

#[derive(Parser, Debug)]
#[command(name = "turan-cycles", version, about = "Exact homomorphism counts, small-graph enumeration, and extremal scans for odd-cycle problems")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,

    /// Write output to this path instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Seed for sampled graph streams.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Worker threads for scans; 0 means machine parallelism.
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Cap on exhaustive enumeration order.
    #[arg(long = "enum-cap", global = true)]
    enum_cap: Option<usize>,

    /// Node budget for exhaustive map searches.
    #[arg(long, global = true)]
    budget: Option<u64>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Csv,
}

impl OutputFormat {
    fn name(&self) -> &'static str {
        match self {
            OutputFormat::Text => "text",
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum CountMode {
    Hom,
    Inj,
    Copies,
}

impl CountMode {
    fn name(&self) -> &'static str {
        match self {
            CountMode::Hom => "hom",
            CountMode::Inj => "inj",
            CountMode::Copies => "copies",
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count homomorphisms, embeddings, or unlabeled copies of a pattern.
    Count {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum, default_value_t = CountMode::Inj)]
        mode: CountMode,
    },
    /// Per-vertex pattern-degree table with minimum and average.
    Degree {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        graph: String,
    },
    /// Decide whether a graph maps homomorphically into a target.
    Colorable {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        target: String,
        /// Also compute the minimum edge deletions to become colorable.
        #[arg(long)]
        distance: bool,
    },
    /// Exact maximum embedding count over a forbidden family.
    Extremal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pattern: String,
        #[arg(long = "forbid", required = true)]
        forbid: Vec<String>,
    },
    /// Degree-ratio scan against target-colorability for every class.
    Scan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pattern: String,
        #[arg(long = "forbid", required = true)]
        forbid: Vec<String>,
        #[arg(long)]
        target: String,
    },
    /// Vertex-extendability check: one instance or a batch over an order.
    Extend {
        #[arg(long)]
        pattern: String,
        #[arg(long = "forbid", required = true)]
        forbid: Vec<String>,
        #[arg(long)]
        target: String,
        /// Degree threshold as a fraction of the extremal normalized degree.
        #[arg(long)]
        ratio: Rat,
        /// Batch mode: scan every class and vertex at this order.
        #[arg(long, conflicts_with_all = ["graph", "vertex"])]
        n: Option<usize>,
        /// Single mode: the graph to check.
        #[arg(long, requires = "vertex")]
        graph: Option<String>,
        /// Single mode: the vertex to delete.
        #[arg(long, requires = "graph")]
        vertex: Option<usize>,
    },
    /// Edit-distance histogram over near-extremal classes.
    EdgeStability {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pattern: String,
        #[arg(long = "forbid", required = true)]
        forbid: Vec<String>,
        #[arg(long)]
        target: String,
        /// Include classes with embeddings >= near * extremal.
        #[arg(long)]
        near: Rat,
    },
    /// Average pentagon degree of the Turán graph T(n, r).
    Reference {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// Also compare against the extremal search at the same order.
        #[arg(long)]
        compare: bool,
    },
    /// Enumerate graphs to graph6 lines (classes, labeled, or samples).
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long = "forbid")]
        forbid: Vec<String>,
        /// Emit all labeled graphs instead of one per isomorphism class.
        #[arg(long, conflicts_with_all = ["sample", "p", "forbid"])]
        labeled: bool,
        /// Emit this many random samples instead of an exhaustive stream.
        #[arg(long, requires = "p", conflicts_with = "forbid")]
        sample: Option<usize>,
        /// Edge probability for sampling.
        #[arg(long, requires = "sample")]
        p: Option<f64>,
    },
}

#[derive(Clone, Debug)]
pub enum CliError {
    Expr(ExprError),
    Format(FormatError),
    Hom(HomError),
    Enumerate(EnumError),
    Experiment(ExpError),
    Graph(GraphError),
    Usage(String),
    Io(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Expr(e) => write!(f, "{e}"),
            CliError::Format(e) => write!(f, "{e}"),
            CliError::Hom(e) => write!(f, "{e}"),
            CliError::Enumerate(e) => write!(f, "{e}"),
            CliError::Experiment(e) => write!(f, "{e}"),
            CliError::Graph(e) => write!(f, "{e}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Io(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<ExprError> for CliError {
    fn from(e: ExprError) -> Self {
        CliError::Expr(e)
    }
}

impl From<HomError> for CliError {
    fn from(e: HomError) -> Self {
        CliError::Hom(e)
    }
}

impl From<EnumError> for CliError {
    fn from(e: EnumError) -> Self {
        CliError::Enumerate(e)
    }
}

impl From<ExpError> for CliError {
    fn from(e: ExpError) -> Self {
        CliError::Experiment(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Expr(ExprError::Hom(e)) => hom_code(e),
            CliError::Expr(_) | CliError::Format(_) | CliError::Graph(_) | CliError::Usage(_) => 2,
            CliError::Hom(e) => hom_code(e),
            CliError::Enumerate(EnumError::OrderCap { .. }) => 4,
            CliError::Enumerate(_) => 2,
            CliError::Experiment(e) => match e {
                ExpError::Enumerate(EnumError::OrderCap { .. }) => 4,
                ExpError::Enumerate(_) => 2,
                ExpError::Hom(e) => hom_code(e),
                ExpError::Graph(_) | ExpError::EmptyClass { .. } => 2,
            },
            CliError::Io(_) => 1,
        }
    }
}

fn hom_code(e: &HomError) -> i32 {
    match e {
        HomError::CountOverflow => 3,
        HomError::BudgetExceeded { .. } => 4,
        HomError::EmptyTarget => 2,
    }
}

/// Run configuration echoed verbatim into every report.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub seed: u64,
    pub enum_cap: usize,
    pub budget: u64,
    pub workers: usize,
    pub format: String,
}

#[derive(Clone, Debug, Serialize)]
struct ToolInfo {
    name: &'static str,
    version: &'static str,
}

fn tool_info() -> ToolInfo {
    ToolInfo { name: env!("CARGO_PKG_NAME"), version: env!("CARGO_PKG_VERSION") }
}

#[derive(Serialize)]
struct Report<'a, T: Serialize> {
    tool: ToolInfo,
    config: &'a RunConfig,
    result: &'a T,
}

struct Ctx {
    format: OutputFormat,
    out: Option<PathBuf>,
    seed: u64,
    enum_cap: usize,
    budget: u64,
    workers: usize,
}

impl Ctx {
    fn config(&self, command: &str, parameters: BTreeMap<String, String>) -> RunConfig {
        RunConfig {
            command: command.to_string(),
            parameters,
            seed: self.seed,
            enum_cap: self.enum_cap,
            budget: self.budget,
            workers: self.workers,
            format: self.format.name().to_string(),
        }
    }

    fn check_cap(&self, n: usize) -> Result<(), CliError> {
        if n > self.enum_cap {
            return Err(CliError::Enumerate(EnumError::OrderCap { n, cap: self.enum_cap }));
        }
        Ok(())
    }

    /// Renders and writes the report. `text_body` and `csv_body` carry no
    /// config header; CSV always gets one, text only when asked.
    fn emit<T: Serialize>(
        &self,
        config: &RunConfig,
        result: &T,
        text_body: String,
        csv_body: String,
        text_header: bool,
    ) -> Result<(), CliError> {
        let payload = match self.format {
            OutputFormat::Json => {
                let report = Report { tool: tool_info(), config, result };
                let mut s = serde_json::to_string_pretty(&report)
                    .map_err(|e| CliError::Io(e.to_string()))?;
                s.push('\n');
                s
            }
            OutputFormat::Text => {
                if text_header {
                    format!("{}{}", header_comments(config), text_body)
                } else {
                    text_body
                }
            }
            OutputFormat::Csv => format!("{}{}", header_comments(config), csv_body),
        };
        self.write_payload(&payload)
    }

    fn write_payload(&self, payload: &str) -> Result<(), CliError> {
        match &self.out {
            Some(path) => fs::write(path, payload).map_err(|e| CliError::Io(e.to_string())),
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout
                    .write_all(payload.as_bytes())
                    .and_then(|_| stdout.flush())
                    .map_err(|e| CliError::Io(e.to_string()))
            }
        }
    }
}

fn header_comments(config: &RunConfig) -> String {
    let tool = tool_info();
    let mut s = format!("# schema: {}/{}/v1\n", tool.name, config.command);
    s.push_str(&format!("# tool: {} {}\n", tool.name, tool.version));
    for (k, v) in &config.parameters {
        s.push_str(&format!("# {k}: {v}\n"));
    }
    s.push_str(&format!(
        "# seed: {} enum-cap: {} budget: {} workers: {} format: {}\n",
        config.seed, config.enum_cap, config.budget, config.workers, config.format
    ));
    s
}

fn csv_table(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("csv header");
    for row in rows {
        w.write_record(&row).expect("csv row");
    }
    String::from_utf8(w.into_inner().expect("csv flush")).expect("csv utf8")
}

fn env_parse<T: std::str::FromStr>(key: &str) -> Option<T> {
    std::env::var(key).ok().and_then(|s| s.parse().ok())
}

/// Parses `std::env::args`, runs, and returns the process exit code.
pub fn run_from_args() -> i32 {
    let cli = Cli::parse();
    run(cli)
}

fn run(cli: Cli) -> i32 {
    let workers = cli.workers.or_else(|| env_parse(ENV_WORKERS)).unwrap_or(0);
    if workers > 0 {
        // Ignore failure: the global pool can only be set once per process.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(workers).build_global();
    }
    let ctx = Ctx {
        format: cli.format,
        out: cli.out.clone(),
        seed: cli.seed,
        enum_cap: cli
            .enum_cap
            .or_else(|| env_parse(ENV_ENUM_CAP))
            .unwrap_or(MAX_CLASS_ORDER)
            .min(MAX_CLASS_ORDER),
        budget: cli.budget.or_else(|| env_parse(ENV_BUDGET)).unwrap_or(DEFAULT_EDIT_BUDGET),
        workers,
    };
    match execute(cli.command, &ctx) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn execute(command: Command, ctx: &Ctx) -> Result<(), CliError> {
    match command {
        Command::Count { pattern, graph, mode } => cmd_count(ctx, &pattern, &graph, mode),
        Command::Degree { pattern, graph } => cmd_degree(ctx, &pattern, &graph),
        Command::Colorable { graph, target, distance } => cmd_colorable(ctx, &graph, &target, distance),
        Command::Extremal { n, pattern, forbid } => cmd_extremal(ctx, n, &pattern, &forbid),
        Command::Scan { n, pattern, forbid, target } => cmd_scan(ctx, n, &pattern, &forbid, &target),
        Command::Extend { pattern, forbid, target, ratio, n, graph, vertex } => {
            cmd_extend(ctx, &pattern, &forbid, &target, ratio, n, graph.as_deref(), vertex)
        }
        Command::EdgeStability { n, pattern, forbid, target, near } => {
            cmd_edge_stability(ctx, n, &pattern, &forbid, &target, near)
        }
        Command::Reference { n, r, compare } => cmd_reference(ctx, n, r, compare),
        Command::Enumerate { n, forbid, labeled, sample, p } => {
            cmd_enumerate(ctx, n, &forbid, labeled, sample, p)
        }
    }
}

#[derive(Serialize)]
struct CountResult {
    pattern: String,
    graph: String,
    mode: String,
    count: u64,
}

fn cmd_count(ctx: &Ctx, pattern: &str, graph: &str, mode: CountMode) -> Result<(), CliError> {
    let q = parse_pattern_expr(pattern)?;
    let g = parse_graph_expr(graph)?;
    let count = match mode {
        CountMode::Hom => count_hom(&q, &g)?,
        CountMode::Inj => count_inj(&q, &g)?,
        CountMode::Copies => copy_count(&q, &g)?,
    };
    let params = BTreeMap::from([
        ("pattern".to_string(), pattern.to_string()),
        ("graph".to_string(), graph.to_string()),
        ("mode".to_string(), mode.name().to_string()),
    ]);
    let config = ctx.config("count", params);
    let result = CountResult {
        pattern: pattern.to_string(),
        graph: graph.to_string(),
        mode: mode.name().to_string(),
        count,
    };
    let text = format!("{count}\n");
    let csv = csv_table(
        &["pattern", "graph", "mode", "count"],
        vec![vec![result.pattern.clone(), result.graph.clone(), result.mode.clone(), count.to_string()]],
    );
    ctx.emit(&config, &result, text, csv, false)
}

#[derive(Serialize)]
struct DegreeResult {
    pattern: String,
    graph: String,
    n: usize,
    per_vertex: Vec<u64>,
    min: u64,
    max: u64,
    sum: u64,
    avg: Rat,
}

fn cmd_degree(ctx: &Ctx, pattern: &str, graph: &str) -> Result<(), CliError> {
    let q = parse_pattern_expr(pattern)?;
    let g = parse_graph_expr(graph)?;
    let profile = degree_profile(&q, &g)?;
    let params = BTreeMap::from([
        ("pattern".to_string(), pattern.to_string()),
        ("graph".to_string(), graph.to_string()),
    ]);
    let config = ctx.config("degree", params);
    let result = DegreeResult {
        pattern: pattern.to_string(),
        graph: graph.to_string(),
        n: g.n(),
        per_vertex: profile.per_vertex().to_vec(),
        min: profile.min(),
        max: profile.max(),
        sum: profile.sum(),
        avg: profile.avg(),
    };
    let mut text = String::from("vertex  degree\n");
    for (v, d) in result.per_vertex.iter().enumerate() {
        text.push_str(&format!("{v:>6}  {d}\n"));
    }
    text.push_str(&format!("min = {}  avg = {}\n", result.min, result.avg));
    let rows = result
        .per_vertex
        .iter()
        .enumerate()
        .map(|(v, d)| vec![v.to_string(), d.to_string()])
        .collect();
    let mut csv = csv_table(&["vertex", "degree"], rows);
    csv.push_str(&format!("# min: {} avg: {}\n", result.min, result.avg));
    ctx.emit(&config, &result, text, csv, false)
}

#[derive(Serialize)]
struct ColorableResult {
    graph: String,
    target: String,
    colorable: bool,
    witness: Option<Vec<usize>>,
    distance: Option<u64>,
    distance_witness: Option<Vec<usize>>,
}

fn cmd_colorable(ctx: &Ctx, graph: &str, target: &str, distance: bool) -> Result<(), CliError> {
    let g = parse_graph_expr(graph)?;
    let h = parse_graph_expr(target)?;
    let witness = is_colorable(&g, &h);
    let (dist, dist_witness) = if distance {
        let d = edit_distance_to_colorable(&g, &h, ctx.budget)?;
        (Some(d.distance), Some(d.witness))
    } else {
        (None, None)
    };
    let params = BTreeMap::from([
        ("graph".to_string(), graph.to_string()),
        ("target".to_string(), target.to_string()),
        ("distance".to_string(), distance.to_string()),
    ]);
    let config = ctx.config("colorable", params);
    let result = ColorableResult {
        graph: graph.to_string(),
        target: target.to_string(),
        colorable: witness.is_some(),
        witness: witness.clone(),
        distance: dist,
        distance_witness: dist_witness.clone(),
    };
    let mut text = String::new();
    match &witness {
        Some(map) => text.push_str(&format!("yes\nwitness: {map:?}\n")),
        None => text.push_str("no\n"),
    }
    if let Some(d) = dist {
        text.push_str(&format!("distance: {d}\n"));
        if witness.is_none() {
            text.push_str(&format!("map after deletions: {:?}\n", dist_witness.as_ref().unwrap()));
        }
    }
    let csv = csv_table(
        &["graph", "target", "colorable", "distance"],
        vec![vec![
            graph.to_string(),
            target.to_string(),
            result.colorable.to_string(),
            dist.map_or(String::new(), |d| d.to_string()),
        ]],
    );
    ctx.emit(&config, &result, text, csv, false)
}

fn extremal_text(result: &ExtremalResult) -> String {
    let mut text = format!(
        "inj maximum over {} classes on n = {}: {}\ndensity: {}\nwitnesses ({} total):\n",
        result.classes_scanned, result.n, result.value, result.density, result.witness_total
    );
    for w in &result.witnesses {
        text.push_str(&format!("  {}  {}\n", w.graph6, w.cert));
    }
    text
}

fn cmd_extremal(ctx: &Ctx, n: usize, pattern: &str, forbid: &[String]) -> Result<(), CliError> {
    ctx.check_cap(n)?;
    let q = parse_pattern_expr(pattern)?;
    let family = parse_family_exprs(forbid)?;
    let result = extremal_search(n, &q, &family)?;
    let params = BTreeMap::from([
        ("n".to_string(), n.to_string()),
        ("pattern".to_string(), pattern.to_string()),
        ("forbid".to_string(), forbid.join(" ")),
    ]);
    let config = ctx.config("extremal", params);
    let rows = result
        .witnesses
        .iter()
        .map(|w| {
            vec![
                n.to_string(),
                result.value.to_string(),
                result.density.to_string(),
                w.cert.clone(),
                w.graph6.clone(),
            ]
        })
        .collect();
    let csv = csv_table(&["n", "value", "density", "witness_cert", "witness_graph6"], rows);
    ctx.emit(&config, &result, extremal_text(&result), csv, true)
}

fn scan_text(result: &StabilityScanResult) -> String {
    let mut text = format!(
        "scan of {} classes on n = {}; extremal value {}\n",
        result.classes_scanned, result.n, result.extremal_value
    );
    match result.critical_ratio {
        Some(r) => text.push_str(&format!(
            "critical ratio: {} ({} non-colorable classes)\n",
            r, result.noncolorable_total
        )),
        None => text.push_str("critical ratio: none (every class is colorable)\n"),
    }
    text.push_str(&format!("{:<14} {:>10} {:>10} {:>12}  colorable\n", "graph6", "embeddings", "min-degree", "ratio"));
    for row in &result.rows {
        text.push_str(&format!(
            "{:<14} {:>10} {:>10} {:>12}  {}\n",
            row.graph6, row.embeddings, row.min_degree, row.ratio.to_string(), row.colorable
        ));
    }
    text
}

fn cmd_scan(ctx: &Ctx, n: usize, pattern: &str, forbid: &[String], target: &str) -> Result<(), CliError> {
    ctx.check_cap(n)?;
    let q = parse_pattern_expr(pattern)?;
    let family = parse_family_exprs(forbid)?;
    let h = parse_graph_expr(target)?;
    let result = degree_stability_scan(n, &q, &family, &h)?;
    let params = BTreeMap::from([
        ("n".to_string(), n.to_string()),
        ("pattern".to_string(), pattern.to_string()),
        ("forbid".to_string(), forbid.join(" ")),
        ("target".to_string(), target.to_string()),
    ]);
    let config = ctx.config("scan", params);
    let rows = result
        .rows
        .iter()
        .map(|r| {
            vec![
                r.cert.clone(),
                r.graph6.clone(),
                r.embeddings.to_string(),
                r.min_degree.to_string(),
                r.ratio.to_string(),
                r.colorable.to_string(),
            ]
        })
        .collect();
    let csv = csv_table(&["cert", "graph6", "embeddings", "min_degree", "ratio", "colorable"], rows);
    ctx.emit(&config, &result, scan_text(&result), csv, true)
}

#[allow(clippy::too_many_arguments)]
fn cmd_extend(
    ctx: &Ctx,
    pattern: &str,
    forbid: &[String],
    target: &str,
    ratio: Rat,
    n: Option<usize>,
    graph: Option<&str>,
    vertex: Option<usize>,
) -> Result<(), CliError> {
    let q = parse_pattern_expr(pattern)?;
    let family = parse_family_exprs(forbid)?;
    let h = parse_graph_expr(target)?;
    let mut params = BTreeMap::from([
        ("pattern".to_string(), pattern.to_string()),
        ("forbid".to_string(), forbid.join(" ")),
        ("target".to_string(), target.to_string()),
        ("ratio".to_string(), ratio.to_string()),
    ]);
    match (n, graph) {
        (Some(n), None) => {
            ctx.check_cap(n)?;
            params.insert("n".to_string(), n.to_string());
            let config = ctx.config("extend", params);
            let result = vertex_extendability_scan(n, &q, &family, &h, ratio)?;
            let mut text = format!(
                "checked {} instances over {} classes on n = {}; extremal value {}\n",
                result.instances_checked, result.classes_scanned, result.n, result.extremal_value
            );
            text.push_str(&format!(
                "hypothesis met: {} instances; conclusion violations: {}\n",
                result.hypothesis_met_total,
                result.violations.len()
            ));
            for v in &result.violations {
                text.push_str(&format!("  VIOLATION {} vertex {}\n", v.graph6, v.vertex));
            }
            for m in &result.hypothesis_met {
                text.push_str(&format!("  met: {} vertex {}\n", m.graph6, m.vertex));
            }
            let rows = result
                .hypothesis_met
                .iter()
                .map(|m| vec![m.cert.clone(), m.graph6.clone(), m.vertex.to_string(), "met".to_string()])
                .chain(result.violations.iter().map(|v| {
                    vec![v.cert.clone(), v.graph6.clone(), v.vertex.to_string(), "violation".to_string()]
                }))
                .collect();
            let csv = csv_table(&["cert", "graph6", "vertex", "status"], rows);
            ctx.emit(&config, &result, text, csv, true)
        }
        (None, Some(graph_expr)) => {
            let vertex = vertex.ok_or_else(|| CliError::Usage("--vertex is required with --graph".into()))?;
            let g = parse_graph_expr(graph_expr)?;
            ctx.check_cap(g.n())?;
            params.insert("graph".to_string(), graph_expr.to_string());
            params.insert("vertex".to_string(), vertex.to_string());
            let config = ctx.config("extend", params);
            let result = vertex_extendability_check(&g, vertex, &q, &family, &h, ratio)?;
            let text = format!(
                "hypothesis met: {} (family-free {}, degree {} vs threshold {}, minus-vertex colorable {})\nconclusion holds: {}\n",
                result.hypothesis_met,
                result.family_free,
                result.min_degree,
                result.threshold,
                result.minus_vertex_colorable,
                result.conclusion_holds
            );
            let csv = csv_table(
                &["graph6", "vertex", "min_degree", "threshold", "hypothesis_met", "conclusion_holds"],
                vec![vec![
                    result.graph6.clone(),
                    vertex.to_string(),
                    result.min_degree.to_string(),
                    result.threshold.to_string(),
                    result.hypothesis_met.to_string(),
                    result.conclusion_holds.to_string(),
                ]],
            );
            ctx.emit(&config, &result, text, csv, true)
        }
        _ => Err(CliError::Usage("extend needs exactly one of --n (batch) or --graph --vertex (single)".into())),
    }
}

fn cmd_edge_stability(
    ctx: &Ctx,
    n: usize,
    pattern: &str,
    forbid: &[String],
    target: &str,
    near: Rat,
) -> Result<(), CliError> {
    ctx.check_cap(n)?;
    let q = parse_pattern_expr(pattern)?;
    let family = parse_family_exprs(forbid)?;
    let h = parse_graph_expr(target)?;
    let result = edge_stability_measure(n, &q, &family, &h, near, ctx.budget)?;
    let params = BTreeMap::from([
        ("n".to_string(), n.to_string()),
        ("pattern".to_string(), pattern.to_string()),
        ("forbid".to_string(), forbid.join(" ")),
        ("target".to_string(), target.to_string()),
        ("near".to_string(), near.to_string()),
    ]);
    let config = ctx.config("edge-stability", params);
    let mut text = format!(
        "{} of {} classes have embeddings >= {} * {}\nmax edit distance: {} (normalized {})\n",
        result.considered, result.classes_scanned, result.near, result.extremal_value,
        result.max_distance, result.max_normalized
    );
    text.push_str("distance  classes\n");
    for bin in &result.histogram {
        text.push_str(&format!("{:>8}  {}\n", bin.distance, bin.classes));
    }
    let rows = result
        .histogram
        .iter()
        .map(|b| vec![b.distance.to_string(), b.classes.to_string()])
        .collect();
    let csv = csv_table(&["distance", "classes"], rows);
    ctx.emit(&config, &result, text, csv, true)
}

#[derive(Serialize)]
struct ReferenceResult {
    n: usize,
    r: usize,
    average_degree: Rat,
    comparison: Option<ReferenceComparison>,
}

#[derive(Serialize)]
struct ReferenceComparison {
    extremal_value: u64,
    scaled_extremal: Rat,
    equal: bool,
    gap: Rat,
}

fn cmd_reference(ctx: &Ctx, n: usize, r: usize, compare: bool) -> Result<(), CliError> {
    let average_degree = turan_degree_reference(n, r)?;
    let comparison = if compare {
        ctx.check_cap(n)?;
        let pentagon = Pattern::new(Graph::cycle(5).map_err(CliError::Graph)?)?;
        let clique = Pattern::new(Graph::complete(r + 1).map_err(CliError::Graph)?)?;
        let extremal = extremal_search(n, &pentagon, &[clique])?;
        let scaled = Rat::new(5 * extremal.value as i128, n as i128);
        Some(ReferenceComparison {
            extremal_value: extremal.value,
            scaled_extremal: scaled,
            equal: scaled == average_degree,
            gap: average_degree - scaled,
        })
    } else {
        None
    };
    let params = BTreeMap::from([
        ("n".to_string(), n.to_string()),
        ("r".to_string(), r.to_string()),
        ("compare".to_string(), compare.to_string()),
    ]);
    let config = ctx.config("reference", params);
    let mut text = format!("average pentagon degree of T({n},{r}): {average_degree}\n");
    if let Some(c) = &comparison {
        text.push_str(&format!(
            "extremal embeddings: {}; scaled 5*inj/n = {}; {}\n",
            c.extremal_value,
            c.scaled_extremal,
            if c.equal { "reference matches".to_string() } else { format!("gap = {}", c.gap) }
        ));
    }
    let result = ReferenceResult { n, r, average_degree, comparison };
    let csv = csv_table(
        &["n", "r", "average_degree"],
        vec![vec![n.to_string(), r.to_string(), average_degree.to_string()]],
    );
    ctx.emit(&config, &result, text, csv, true)
}

#[derive(Serialize)]
struct EnumerateResult {
    n: usize,
    mode: String,
    count: usize,
    graphs: Vec<String>,
}

fn cmd_enumerate(
    ctx: &Ctx,
    n: usize,
    forbid: &[String],
    labeled: bool,
    sample: Option<usize>,
    p: Option<f64>,
) -> Result<(), CliError> {
    let (stream, mode) = if labeled {
        ctx.check_cap(n)?;
        (all_labeled_graphs(n)?, "labeled".to_string())
    } else if let Some(count) = sample {
        let p = p.ok_or_else(|| CliError::Usage("--sample requires --p".into()))?;
        (random_graphs(n, p, ctx.seed, count)?, format!("sample(p={p})"))
    } else {
        ctx.check_cap(n)?;
        let family = parse_family_exprs(forbid)?;
        (all_graphs_filtered(n, &family)?, "classes".to_string())
    };
    let graphs: Vec<String> = stream.map(|g| crate::io::to_graph6(&g)).collect();
    let mut params = BTreeMap::from([
        ("n".to_string(), n.to_string()),
        ("mode".to_string(), mode.clone()),
    ]);
    if !forbid.is_empty() {
        params.insert("forbid".to_string(), forbid.join(" "));
    }
    let config = ctx.config("enumerate", params);
    let result = EnumerateResult { n, mode, count: graphs.len(), graphs };
    // Text output is bare graph6 lines so the file is loadable as a corpus.
    let text = result.graphs.iter().map(|g| format!("{g}\n")).collect::<String>();
    let rows = result.graphs.iter().map(|g| vec![g.clone()]).collect();
    let csv = csv_table(&["graph6"], rows);
    ctx.emit(&config, &result, text, csv, false)
}
