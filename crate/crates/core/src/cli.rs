//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a sweep or verification found the claim false,
//! 2 usage or range error (including unparsable input), 3 an input graph of
//! the wrong class.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::enumerate::{enumerate_unicyclic, make_s, sweep, SWEEP_COLUMNS};
use crate::graph::{
    canonical_code, parse_edge_list, parse_graph6_lines, parse_inline, to_graph6, Graph,
};
use crate::indices::{index_report, IndexSelector, REPORT_COLUMNS};
use crate::transforms::{
    reduce_to_extremal, verify_monotonicity, TransformError, OUTCOME_COLUMNS, VERIFY_COLUMNS,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED_CHECK: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

/// Default cap on the order for sweeps, verification and enumeration.
pub const DEFAULT_MAX_ORDER: usize = 9;
/// Cap when `--allow-large-n` is given.
pub const LARGE_MAX_ORDER: usize = 11;

#[derive(Debug, Parser)]
#[command(name = "rdr", version, about = "Resistance-distance topological indices of graphs")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute all indices for each input graph.
    Compute(GraphArgs),
    /// List every unicyclic graph of order n (graph6 plus canonical code).
    Enumerate(RangeArgs),
    /// Evaluate an index over all unicyclic graphs of order n and report the maximizers.
    Sweep(SweepArgs),
    /// Rewrite a unicyclic graph step by step into S_n^3.
    Transform(GraphArgs),
    /// Check that every rewrite strictly increases RDR on all unicyclic graphs up to order n.
    Verify(RangeArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    EdgeList,
    Graph6,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Emit::Json)]
    pub emit: Emit,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Read graphs from a file.
    #[arg(long, conflicts_with_all = ["inline", "n"])]
    pub input: Option<PathBuf>,
    /// Inline edge list, e.g. "0 1;1 2;2 0".
    #[arg(long, conflicts_with = "n")]
    pub inline: Option<String>,
    /// Input file format.
    #[arg(long, value_enum, default_value_t = Format::EdgeList)]
    pub format: Format,
    /// Use S_n^p as input (with --p).
    #[arg(long, requires = "p")]
    pub n: Option<usize>,
    /// Cycle length for S_n^p.
    #[arg(long, requires = "n")]
    pub p: Option<usize>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct RangeArgs {
    /// Graph order.
    #[arg(long)]
    pub n: usize,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Permit orders 10 and 11.
    #[arg(long)]
    pub allow_large_n: bool,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub range: RangeArgs,
    /// Index to maximize.
    #[arg(long, value_enum, default_value_t = IndexSelector::Rdr)]
    pub index: IndexSelector,
}

/// Failure carrying its exit code.
#[derive(Debug)]
struct Fail {
    code: i32,
    message: String,
}

impl Fail {
    fn usage(message: impl Into<String>) -> Self {
        Fail { code: EXIT_USAGE, message: message.into() }
    }

    fn input(message: impl Into<String>) -> Self {
        Fail { code: EXIT_INPUT, message: message.into() }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

/// Parses `args` and runs the command, writing results to `out` (unless
/// `--out` is given) and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if code == EXIT_OK { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match execute(&config, err) {
        Ok((text, output, code)) => match emit(&text, output, out) {
            Ok(()) => code,
            Err(f) => {
                let _ = writeln!(err, "error: {}", f.message);
                f.code
            }
        },
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn emit(text: &str, output: &Output, out: &mut dyn Write) -> Result<(), Fail> {
    match &output.out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Fail::usage(format!("cannot write {}: {e}", path.display()))),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| Fail::usage(format!("cannot write output: {e}"))),
    }
}

fn execute<'a>(config: &'a RunConfig, err: &mut dyn Write) -> Result<(String, &'a Output, i32), Fail> {
    match &config.command {
        Command::Compute(a) => cmd_compute(a, err).map(|(t, c)| (t, &a.output, c)),
        Command::Enumerate(a) => cmd_enumerate(a).map(|(t, c)| (t, &a.output, c)),
        Command::Sweep(a) => cmd_sweep(a).map(|(t, c)| (t, &a.range.output, c)),
        Command::Transform(a) => cmd_transform(a, err).map(|(t, c)| (t, &a.output, c)),
        Command::Verify(a) => cmd_verify(a).map(|(t, c)| (t, &a.output, c)),
    }
}

fn check_range(a: &RangeArgs) -> Result<(), Fail> {
    if a.n < 3 {
        return Err(Fail::usage(format!("--n must be at least 3 (got {})", a.n)));
    }
    if a.n > DEFAULT_MAX_ORDER && !a.allow_large_n {
        return Err(Fail::usage(format!(
            "--n {} exceeds the default limit of {DEFAULT_MAX_ORDER}; pass --allow-large-n to go up to {LARGE_MAX_ORDER}",
            a.n
        )));
    }
    if a.n > LARGE_MAX_ORDER {
        return Err(Fail::usage(format!("--n is capped at {LARGE_MAX_ORDER} (got {})", a.n)));
    }
    if a.jobs == 0 {
        return Err(Fail::usage("--jobs must be at least 1"));
    }
    Ok(())
}

fn read_graphs(a: &GraphArgs, err: &mut dyn Write) -> Result<Vec<Graph>, Fail> {
    if let (Some(n), Some(p)) = (a.n, a.p) {
        return make_s(n, p).map(|g| vec![g]).map_err(|e| Fail::usage(e.to_string()));
    }
    let (text, is_inline) = match (&a.input, &a.inline) {
        (Some(path), None) => (
            fs::read_to_string(path)
                .map_err(|e| Fail::usage(format!("cannot read {}: {e}", path.display())))?,
            false,
        ),
        (None, Some(s)) => (s.clone(), true),
        _ => return Err(Fail::usage("exactly one of --input, --inline or --n/--p is required")),
    };
    if !is_inline && a.format == Format::Graph6 {
        let graphs = parse_graph6_lines(&text).map_err(|e| Fail::usage(e.to_string()))?;
        if graphs.is_empty() {
            return Err(Fail::usage("no graph6 records in input"));
        }
        return Ok(graphs);
    }
    let parsed = if is_inline { parse_inline(&text) } else { parse_edge_list(&text) }
        .map_err(|e| Fail::usage(e.to_string()))?;
    if parsed.had_duplicates() {
        let _ = writeln!(err, "warning: collapsed {} duplicate edge(s)", parsed.duplicate_edges);
    }
    Ok(vec![parsed.graph])
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String, Fail> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let to_fail = |e: csv::Error| Fail::usage(format!("csv: {e}"));
    w.write_record(header).map_err(to_fail)?;
    for row in rows {
        w.write_record(&row).map_err(to_fail)?;
    }
    let bytes = w.into_inner().map_err(|e| Fail::usage(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn cmd_compute(a: &GraphArgs, err: &mut dyn Write) -> Result<(String, i32), Fail> {
    let graphs = read_graphs(a, err)?;
    let mut reports = Vec::new();
    let mut code = EXIT_OK;
    for (i, g) in graphs.iter().enumerate() {
        match index_report(g) {
            Ok(r) => reports.push(r),
            Err(e) => {
                let _ = writeln!(err, "record {}: {e}; skipped", i + 1);
                code = EXIT_INPUT;
            }
        }
    }
    let text = match a.output.emit {
        Emit::Json => json_text(&Value::Array(reports.iter().map(|r| r.to_json()).collect())),
        Emit::Csv => csv_text(&REPORT_COLUMNS, reports.iter().map(|r| r.csv_record()))?,
    };
    Ok((text, code))
}

fn cmd_enumerate(a: &RangeArgs) -> Result<(String, i32), Fail> {
    check_range(a)?;
    let rows: Vec<(String, String)> = enumerate_unicyclic(a.n)
        .map_err(|e| Fail::usage(e.to_string()))?
        .map(|g| {
            let code = canonical_code(&g).expect("unicyclic graphs always have a code");
            (to_graph6(&g), code.to_hex())
        })
        .collect();
    let text = match a.output.emit {
        Emit::Json => json_text(&Value::Array(
            rows.iter().map(|(g6, c)| json!({"graph6": g6, "code": c})).collect(),
        )),
        Emit::Csv => csv_text(&["graph6", "code"], rows.into_iter().map(|(g6, c)| vec![g6, c]))?,
    };
    Ok((text, EXIT_OK))
}

fn cmd_sweep(a: &SweepArgs) -> Result<(String, i32), Fail> {
    check_range(&a.range)?;
    let result = sweep(a.range.n, a.index, a.range.jobs).map_err(|e| Fail::usage(e.to_string()))?;
    let text = match a.range.output.emit {
        Emit::Json => json_text(&result.to_json()),
        Emit::Csv => csv_text(&SWEEP_COLUMNS, [result.csv_record()])?,
    };
    let code = if result.is_unique && result.matches_theorem { EXIT_OK } else { EXIT_FAILED_CHECK };
    Ok((text, code))
}

fn cmd_transform(a: &GraphArgs, err: &mut dyn Write) -> Result<(String, i32), Fail> {
    let graphs = read_graphs(a, err)?;
    if graphs.len() != 1 {
        return Err(Fail::usage(format!("transform takes one graph, got {}", graphs.len())));
    }
    let g = &graphs[0];
    let steps = reduce_to_extremal(g).map_err(|e| match e {
        TransformError::Graph(_) => Fail::input(e.to_string()),
        other => Fail::usage(other.to_string()),
    })?;
    let increasing = steps.iter().all(|s| s.is_increase());
    let text = match a.output.emit {
        Emit::Json => {
            let list = steps
                .iter()
                .map(|s| s.to_json())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| Fail::usage(e.to_string()))?;
            let terminal = steps.last().map_or(g, |s| &s.after);
            json_text(&json!({
                "n": g.n(),
                "steps": list,
                "terminal_code": canonical_code(terminal).map_err(|e| Fail::usage(e.to_string()))?.to_hex(),
                "terminal_is_extremal": true,
                "strictly_increasing": increasing,
            }))
        }
        Emit::Csv => csv_text(
            &OUTCOME_COLUMNS,
            steps
                .iter()
                .map(|s| s.csv_record())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| Fail::usage(e.to_string()))?,
        )?,
    };
    Ok((text, if increasing { EXIT_OK } else { EXIT_FAILED_CHECK }))
}

fn cmd_verify(a: &RangeArgs) -> Result<(String, i32), Fail> {
    check_range(a)?;
    let report = verify_monotonicity(a.n, a.jobs).map_err(|e| Fail::usage(e.to_string()))?;
    let text = match a.output.emit {
        Emit::Json => json_text(&report.to_json()),
        Emit::Csv => csv_text(&VERIFY_COLUMNS, [report.csv_record()])?,
    };
    Ok((text, if report.passed() { EXIT_OK } else { EXIT_FAILED_CHECK }))
}
