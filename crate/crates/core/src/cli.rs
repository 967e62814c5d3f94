//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 invalid input, 3 verification
//! mismatch or property violation, 4 resource cap exceeded.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use num_rational::Ratio;

use crate::families::{Family, FamilySpec};
use crate::formats::{parse_sequence, DocFormat, GraphDocument};
use crate::formulas;
use crate::graph::Graph;
use crate::lemmas;
use crate::oracle;
use crate::sequence::ConstructionSequence;
use crate::solver;
use crate::verify::{self, Scope, Tier, VerificationRow, VerifyError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID_INPUT: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;
pub const EXIT_CAP: i32 = 4;

#[derive(Parser)]
#[command(
    name = "cseq",
    version,
    about = "Construction-sequence costs, counts, and optimal build orders for graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Auto,
    Text,
    Json,
}

impl From<FormatArg> for DocFormat {
    fn from(f: FormatArg) -> DocFormat {
        match f {
            FormatArg::Auto => DocFormat::Auto,
            FormatArg::Text => DocFormat::Text,
            FormatArg::Json => DocFormat::Json,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableWhat {
    Maxcost,
    Mincost,
    Count,
    Ratio,
    Envelope,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one sequence on one graph: per-edge delays, total, and
    /// classification flags.
    Cost {
        /// Graph file (text or JSON)
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = FormatArg::Auto)]
        format: FormatArg,
        /// Whitespace-separated tokens, e.g. "v:0 v:1 e:0-1"
        #[arg(long)]
        sequence: String,
        /// Emit JSON instead of plain text
        #[arg(long)]
        json: bool,
    },
    /// Verify theorem formulas against an independent computation.
    Verify {
        /// "all" or e.g. star-max, cycle-min, path-count
        #[arg(long, default_value = "all")]
        scope: String,
        /// a = vs generic formula, b = vs solver, c = vs oracle
        #[arg(long, default_value = "a")]
        tier: String,
        /// Parameter range LO..HI (inclusive); default depends on tier
        #[arg(long)]
        range: Option<String>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
    /// Tabulate values over family instances given as family:n specs.
    Table {
        #[arg(long, value_enum)]
        what: TableWhat,
        /// Family instances, e.g. --spec path:5 --spec complete:100
        #[arg(long = "spec", required = true)]
        specs: Vec<String>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
        /// Solver/count element cap override
        #[arg(long)]
        cap: Option<usize>,
        /// Witness list cap for mincost tables
        #[arg(long)]
        witnesses: Option<usize>,
        /// Include a full cost histogram column (count tables)
        #[arg(long)]
        histogram: bool,
    },
    /// Compare two graphs through max cost, max cost of squares, and min
    /// cost.
    Discriminate {
        graph1: PathBuf,
        graph2: PathBuf,
        #[arg(long, value_enum, default_value_t = FormatArg::Auto)]
        format: FormatArg,
        /// Vertex cap for the min-cost stage
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Run the structural property suite on seeded random graphs.
    CheckLemmas {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 10)]
        max_elements: usize,
    },
}

/// Entry point; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = write!(out, "{e}");
            return code;
        }
    };
    let result = match cli.command {
        Command::Cost {
            graph,
            format,
            sequence,
            json,
        } => cmd_cost(&graph, format.into(), &sequence, json, out),
        Command::Verify {
            scope,
            tier,
            range,
            format,
        } => cmd_verify(&scope, &tier, range.as_deref(), format, out),
        Command::Table {
            what,
            specs,
            format,
            cap,
            witnesses,
            histogram,
        } => cmd_table(what, &specs, format, cap, witnesses, histogram, out),
        Command::Discriminate {
            graph1,
            graph2,
            format,
            cap,
        } => cmd_discriminate(&graph1, &graph2, format.into(), cap, out),
        Command::CheckLemmas {
            seed,
            samples,
            max_elements,
        } => cmd_check_lemmas(seed, samples, max_elements, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(out, "error: {}", e.message);
            e.code
        }
    }
}

struct CmdError {
    code: i32,
    message: String,
}

impl CmdError {
    fn invalid(message: impl ToString) -> CmdError {
        CmdError {
            code: EXIT_INVALID_INPUT,
            message: message.to_string(),
        }
    }

    fn usage(message: impl ToString) -> CmdError {
        CmdError {
            code: EXIT_USAGE,
            message: message.to_string(),
        }
    }

    fn cap(message: impl ToString) -> CmdError {
        CmdError {
            code: EXIT_CAP,
            message: message.to_string(),
        }
    }
}

fn load_graph(path: &PathBuf, format: DocFormat) -> Result<Graph, CmdError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CmdError::invalid(format!("{}: {e}", path.display())))?;
    let doc = GraphDocument::parse(&text, format).map_err(CmdError::invalid)?;
    doc.to_graph().map_err(CmdError::invalid)
}

fn cmd_cost(
    path: &PathBuf,
    format: DocFormat,
    sequence: &str,
    json: bool,
    out: &mut dyn Write,
) -> Result<i32, CmdError> {
    let g = load_graph(path, format)?;
    let order = parse_sequence(&g, sequence).map_err(CmdError::invalid)?;
    let s = ConstructionSequence::validate(&g, &order).map_err(CmdError::invalid)?;
    let breakdown = s.total_cost().map_err(CmdError::invalid)?;
    let easy = s.is_easy();
    let greedy = s.is_greedy();
    let nearly = s.is_nearly_connected();
    if json {
        let per_edge: Vec<serde_json::Value> = g
            .edge_ids()
            .map(|e| {
                serde_json::json!({
                    "edge": crate::formats::element_token(&g, crate::graph::Element::Edge(e)),
                    "delay": breakdown.per_edge[e.0],
                })
            })
            .collect();
        let doc = serde_json::json!({
            "per_edge": per_edge,
            "total": breakdown.total,
            "easy": easy,
            "greedy": greedy,
            "nearly_connected": nearly,
        });
        let _ = writeln!(out, "{doc}");
    } else {
        for e in g.edge_ids() {
            let _ = writeln!(
                out,
                "edge {} delay {}",
                crate::formats::element_token(&g, crate::graph::Element::Edge(e)),
                breakdown.per_edge[e.0]
            );
        }
        let _ = writeln!(out, "total {}", breakdown.total);
        let _ = writeln!(out, "easy {easy}");
        let _ = writeln!(out, "greedy {greedy}");
        let _ = writeln!(out, "nearly_connected {nearly}");
    }
    Ok(EXIT_OK)
}

fn parse_range(range: &str) -> Result<(usize, usize), CmdError> {
    let (lo, hi) = range
        .split_once("..")
        .ok_or_else(|| CmdError::usage(format!("bad range `{range}`, expected LO..HI")))?;
    let lo = lo
        .parse()
        .map_err(|_| CmdError::usage(format!("bad range bound `{lo}`")))?;
    let hi = hi
        .parse()
        .map_err(|_| CmdError::usage(format!("bad range bound `{hi}`")))?;
    Ok((lo, hi))
}

fn cmd_verify(
    scope: &str,
    tier: &str,
    range: Option<&str>,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<i32, CmdError> {
    let tier: Tier = tier.parse().map_err(|e: VerifyError| CmdError::usage(e))?;
    let range = range.map(parse_range).transpose()?;
    let scopes: Vec<Scope> = if scope == "all" {
        verify::all_scopes(tier)
    } else {
        vec![scope.parse().map_err(|e: VerifyError| CmdError::usage(e))?]
    };
    let mut rows: Vec<VerificationRow> = Vec::new();
    for s in scopes {
        let batch = verify::run_verify(s, tier, range).map_err(|e| match e {
            VerifyError::CapExceeded(_) => CmdError::cap(e),
            _ => CmdError::usage(e),
        })?;
        rows.extend(batch);
    }
    match format {
        OutputFormat::Csv => {
            let _ = writeln!(
                out,
                "family,parameter,claimed,computed,verdict,claimed_source,computed_source"
            );
            for r in &rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    r.family,
                    r.parameter,
                    r.claimed,
                    r.computed,
                    r.verdict,
                    r.claimed_source,
                    r.computed_source
                );
            }
        }
        OutputFormat::Json => {
            let _ = writeln!(out, "{}", serde_json::to_string(&rows).unwrap());
        }
    }
    if rows.iter().all(VerificationRow::matches) {
        Ok(EXIT_OK)
    } else {
        Ok(EXIT_MISMATCH)
    }
}

fn parse_spec(token: &str) -> Result<FamilySpec, CmdError> {
    let (family, n) = token
        .split_once(':')
        .ok_or_else(|| CmdError::usage(format!("bad spec `{token}`, expected family:n")))?;
    let family: Family = family
        .parse()
        .map_err(|_| CmdError::usage(format!("unknown family in `{token}`")))?;
    let n: usize = n
        .parse()
        .map_err(|_| CmdError::usage(format!("bad parameter in `{token}`")))?;
    FamilySpec::new(family, n).map_err(CmdError::invalid)
}

#[derive(serde::Serialize)]
struct TableRow {
    family: String,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    p: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    q: Option<usize>,
    columns: Vec<(String, String)>,
}

fn cmd_table(
    what: TableWhat,
    specs: &[String],
    format: OutputFormat,
    cap: Option<usize>,
    witnesses: Option<usize>,
    histogram: bool,
    out: &mut dyn Write,
) -> Result<i32, CmdError> {
    let mut rows = Vec::new();
    for token in specs {
        let spec = parse_spec(token)?;
        let g = spec.generate();
        let (p, q) = (g.vertex_count(), g.edge_count());
        let mut columns: Vec<(String, String)> = Vec::new();
        match what {
            TableWhat::Maxcost => {
                let value = formulas::max_cost_any(&g).map_err(CmdError::invalid)?;
                columns.push(("maxcost".into(), value.value.to_string()));
            }
            TableWhat::Mincost => {
                let result = solve_min(&g, cap)?;
                columns.push(("mincost".into(), result.optimal_cost.to_string()));
                columns.push(("proven".into(), result.proven.to_string()));
                if let Some(w) = witnesses {
                    if w > 0 {
                        let tokens: Vec<String> = result
                            .witness
                            .iter()
                            .map(|&el| crate::formats::element_token(&g, el))
                            .collect();
                        columns.push(("witness".into(), tokens.join(" ")));
                    }
                }
            }
            TableWhat::Count => {
                let count =
                    oracle::construction_number(&g, cap.unwrap_or(oracle::DEFAULT_COUNT_CAP))
                        .map_err(CmdError::cap)?;
                columns.push(("count".into(), count.to_string()));
                if histogram {
                    let report = oracle::brute_extremes(
                        &g,
                        oracle::BruteOptions {
                            want_histogram: true,
                            element_cap: cap.unwrap_or(oracle::DEFAULT_ENUM_CAP),
                            ..Default::default()
                        },
                    )
                    .map_err(CmdError::cap)?;
                    let h = report.histogram.unwrap();
                    let rendered: Vec<String> =
                        h.iter().map(|(cost, n)| format!("{cost}:{n}")).collect();
                    columns.push(("histogram".into(), rendered.join(" ")));
                }
            }
            TableWhat::Ratio => {
                let max = formulas::max_cost_family(&spec)
                    .map_err(CmdError::invalid)?
                    .value;
                let min = formulas::min_cost_family(&spec)
                    .map_err(|e| CmdError::usage(format!("{e}; ratio needs a min formula")))?
                    .value;
                let ratio = Ratio::new(max as u128, min as u128);
                columns.push(("maxcost".into(), max.to_string()));
                columns.push(("mincost".into(), min.to_string()));
                columns.push((
                    "ratio_exact".into(),
                    format!("{}/{}", ratio.numer(), ratio.denom()),
                ));
                columns.push((
                    "ratio_decimal".into(),
                    format!("{:.4}", max as f64 / min as f64),
                ));
            }
            TableWhat::Envelope => {
                if p < 2 {
                    return Err(CmdError::usage("envelope needs at least 2 vertices"));
                }
                let (path, star) = formulas::tree_max_bounds(p);
                columns.push(("path_max".into(), path.to_string()));
                columns.push(("star_max".into(), star.to_string()));
            }
        }
        rows.push(TableRow {
            family: spec.family.name().into(),
            n: spec.n,
            p: Some(p),
            q: Some(q),
            columns,
        });
    }
    render_table(&rows, format, out);
    Ok(EXIT_OK)
}

fn render_table(rows: &[TableRow], format: OutputFormat, out: &mut dyn Write) {
    match format {
        OutputFormat::Csv => {
            let mut header = String::from("family,n,p,q");
            if let Some(first) = rows.first() {
                for (name, _) in &first.columns {
                    let _ = write!(header, ",{name}");
                }
            }
            let _ = writeln!(out, "{header}");
            for r in rows {
                let mut line = format!(
                    "{},{},{},{}",
                    r.family,
                    r.n,
                    r.p.unwrap_or(0),
                    r.q.unwrap_or(0)
                );
                for (_, value) in &r.columns {
                    let _ = write!(line, ",{value}");
                }
                let _ = writeln!(out, "{line}");
            }
        }
        OutputFormat::Json => {
            let _ = writeln!(out, "{}", serde_json::to_string(rows).unwrap());
        }
    }
}

fn solve_min(g: &Graph, cap: Option<usize>) -> Result<solver::SearchResult, CmdError> {
    match solver::min_cost_exact(g, cap.unwrap_or(solver::DEFAULT_DP_CAP)) {
        Ok(r) => Ok(r),
        Err(solver::SolverError::CapExceeded { .. }) => {
            Ok(solver::min_cost_branch_bound(g, solver::Budget::default()))
        }
    }
}

fn cmd_discriminate(
    path1: &PathBuf,
    path2: &PathBuf,
    format: DocFormat,
    cap: Option<usize>,
    out: &mut dyn Write,
) -> Result<i32, CmdError> {
    let g1 = load_graph(path1, format)?;
    let g2 = load_graph(path2, format)?;
    let max1 = formulas::max_cost_any(&g1).map_err(CmdError::invalid)?.value;
    let max2 = formulas::max_cost_any(&g2).map_err(CmdError::invalid)?.value;
    let sq1 = formulas::max_cost_any(&g1.power(2))
        .map_err(CmdError::invalid)?
        .value;
    let sq2 = formulas::max_cost_any(&g2.power(2))
        .map_err(CmdError::invalid)?
        .value;
    let _ = writeln!(out, "stage,graph1,graph2,separates");
    let _ = writeln!(out, "max_cost,{max1},{max2},{}", max1 != max2);
    let _ = writeln!(out, "square_max_cost,{sq1},{sq2},{}", sq1 != sq2);
    let dp_cap = cap.unwrap_or(solver::DEFAULT_DP_CAP);
    match (
        solver::min_cost_exact(&g1, dp_cap),
        solver::min_cost_exact(&g2, dp_cap),
    ) {
        (Ok(r1), Ok(r2)) => {
            let _ = writeln!(
                out,
                "min_cost,{},{},{}",
                r1.optimal_cost,
                r2.optimal_cost,
                r1.optimal_cost != r2.optimal_cost
            );
        }
        _ => {
            let _ = writeln!(out, "min_cost,-,-,skipped (vertex cap {dp_cap} exceeded)");
        }
    }
    Ok(EXIT_OK)
}

fn cmd_check_lemmas(
    seed: u64,
    samples: usize,
    max_elements: usize,
    out: &mut dyn Write,
) -> Result<i32, CmdError> {
    if max_elements > oracle::DEFAULT_ENUM_CAP {
        return Err(CmdError::cap(format!(
            "max-elements {max_elements} exceeds the enumeration cap {}",
            oracle::DEFAULT_ENUM_CAP
        )));
    }
    let report = lemmas::run_suite(seed, samples, max_elements);
    let _ = writeln!(out, "graphs_checked {}", report.graphs_checked);
    let _ = writeln!(out, "violations {}", report.violations.len());
    for v in &report.violations {
        let _ = writeln!(out, "violation: {v}");
    }
    Ok(if report.passed() { EXIT_OK } else { EXIT_MISMATCH })
}
