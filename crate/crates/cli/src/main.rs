use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use ng_core::constructions::{construct_a, extremal_graph, witness_check, witness_s};
use ng_core::output::{json_line, render, SpectrumReport};
use ng_core::search::{exhaustive_f, local_search_f, ratio_table};
use ng_core::{generate, set_max_order, Family, Format, Graph, GraphKind, LocalSearchConfig, SpectralPair};

const EXIT_USAGE: u8 = 1;
const EXIT_VIOLATION: u8 = 2;

#[derive(Parser)]
#[command(name = "ng", version, about = "Spectra of graphs and their complements, eigenvalue bounds and extremal search")]
struct Cli {
    /// Largest graph order accepted; overrides NG_MAX_ORDER.
    #[arg(long, global = true, value_name = "N")]
    max_order: Option<usize>,

    /// Absolute tolerance for inequality checks.
    #[arg(long, global = true, value_parser = positive_real)]
    tol: Option<f64>,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,

    /// Write to this file instead of stdout.
    #[arg(long, short, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
    Text,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Json => Format::Json,
            OutputFormat::Csv => Format::Csv,
            OutputFormat::Text => Format::Text,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the adjacency spectrum of G and of its complement.
    Spectrum(GraphInput),
    /// Run the inequality battery; exits 2 if any applicable bound fails.
    Check {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = 5)]
        s_max: usize,
    },
    /// Build the matrix A_k or the extremal graph for (k, t).
    #[command(group(ArgGroup::new("what").required(true).args(["a_matrix", "extremal"])))]
    Construct {
        /// Print the 0/1 grid of A_K.
        #[arg(long, value_name = "K")]
        a_matrix: Option<usize>,
        /// Build the extremal graph; takes `k=` and `t=` parameters.
        #[arg(long)]
        extremal: bool,
        /// `key=value` parameters.
        params: Vec<String>,
    },
    /// Exact or heuristic extremal values; parameters as `key=value`.
    #[command(group(ArgGroup::new("mode").required(true).args(["exact", "local", "table"])))]
    Search {
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        local: bool,
        /// Ratio table over `n=4,5,...`.
        #[arg(long)]
        table: bool,
        /// Allow exhaustive search one order above the default cap.
        #[arg(long)]
        allow_large: bool,
        params: Vec<String>,
    },
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["graph6", "graph6_file", "generate"])))]
struct GraphInput {
    /// A graph6 string.
    #[arg(long, value_name = "STRING")]
    graph6: Option<String>,
    /// A file with one graph6 string per line.
    #[arg(long, value_name = "PATH")]
    graph6_file: Option<PathBuf>,
    /// A generator spec such as `cycle:5`, `complete_bipartite:2,3` or `erdos_renyi:20,0.5`.
    #[arg(long, value_name = "KIND:ARGS")]
    generate: Option<String>,
    /// Seed for random generators.
    #[arg(long)]
    seed: Option<u64>,
}

fn positive_real(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        _ => Err(format!("`{s}` is not a positive number")),
    }
}

/// A failure and the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl ToString) -> Failure {
    Failure { code: EXIT_USAGE, message: message.to_string() }
}

impl From<ng_core::Error> for Failure {
    fn from(e: ng_core::Error) -> Self {
        usage(e)
    }
}

type Outcome = Result<(String, bool), Failure>;

impl GraphInput {
    fn graphs(&self) -> Result<Vec<Graph>, Failure> {
        if let Some(text) = &self.graph6 {
            return Ok(vec![Graph::from_graph6(text)?]);
        }
        if let Some(path) = &self.graph6_file {
            let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            let graphs = text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .map(Graph::from_graph6)
                .collect::<ng_core::Result<Vec<_>>>()?;
            if graphs.is_empty() {
                return Err(usage(format!("{}: no graphs", path.display())));
            }
            return Ok(graphs);
        }
        let spec = self.generate.as_deref().unwrap_or_default();
        let kind: GraphKind = spec.parse()?;
        let seed = match (&kind, self.seed) {
            (GraphKind::ErdosRenyi { .. }, None) => return Err(usage("random generators need --seed")),
            (_, seed) => seed.unwrap_or(0),
        };
        Ok(vec![generate(&kind, seed)?])
    }
}

fn pair(g: &Graph, tol: Option<f64>) -> ng_core::Result<SpectralPair> {
    match tol {
        Some(tol) => SpectralPair::with_tol(g, tol),
        None => SpectralPair::new(g),
    }
}

/// Parses `key=value` arguments, rejecting keys outside `allowed` and repeats.
fn key_values(params: &[String], allowed: &[&str]) -> Result<BTreeMap<String, String>, Failure> {
    let mut map = BTreeMap::new();
    for p in params {
        let (k, v) = p.split_once('=').ok_or_else(|| usage(format!("expected key=value, got `{p}`")))?;
        if !allowed.contains(&k) {
            return Err(usage(format!("unknown parameter `{k}`, expected one of {}", allowed.join(", "))));
        }
        if map.insert(k.to_string(), v.to_string()).is_some() {
            return Err(usage(format!("parameter `{k}` given twice")));
        }
    }
    Ok(map)
}

fn get<T: std::str::FromStr>(map: &BTreeMap<String, String>, key: &str, default: Option<T>) -> Result<T, Failure> {
    match map.get(key) {
        Some(v) => v.parse().map_err(|_| usage(format!("invalid value `{v}` for `{key}`"))),
        None => default.ok_or_else(|| usage(format!("missing parameter `{key}=`"))),
    }
}

fn cmd_spectrum(input: &GraphInput, format: Format, tol: Option<f64>) -> Outcome {
    let reports = input
        .graphs()?
        .iter()
        .map(|g| pair(g, tol).map(|p| SpectrumReport::new(&p)))
        .collect::<ng_core::Result<Vec<_>>>()?;
    Ok((render(&reports, format)?, false))
}

fn cmd_check(input: &GraphInput, s_max: usize, format: Format, tol: Option<f64>) -> Outcome {
    let mut reports = Vec::new();
    for g in input.graphs()? {
        let p = pair(&g, tol)?;
        reports.extend(ng_core::bounds::run_battery_on(&p, s_max)?);
    }
    let violated = reports.iter().any(|r| r.is_violation());
    Ok((render(&reports, format)?, violated))
}

fn cmd_construct(a_matrix: Option<usize>, params: &[String], format: Format, tol: Option<f64>) -> Outcome {
    if let Some(k) = a_matrix {
        key_values(params, &[])?;
        let a = construct_a(k)?;
        let out = match format {
            Format::Text => a.to_grid(),
            Format::Csv => a.to_grid().lines().map(|row| row.chars().map(String::from).collect::<Vec<_>>().join(",") + "\n").collect(),
            Format::Json => {
                let rows: Vec<String> = a.to_grid().lines().map(String::from).collect();
                json_line(&Grid { k, order: a.order(), rows })? + "\n"
            }
        };
        return Ok((out, false));
    }
    let map = key_values(params, &["k", "t"])?;
    let k: usize = get(&map, "k", None)?;
    let t: usize = get(&map, "t", Some(1))?;
    let g = extremal_graph(k, t)?;
    let reports = witness_check(k, t, tol.unwrap_or(ng_core::DEFAULT_TOL))?;
    let violated = reports.iter().any(|r| r.is_violation());
    let header = match format {
        Format::Text => format!("{}\n", g.to_graph6()),
        Format::Csv => format!("# graph6 {}\n", g.to_graph6()),
        Format::Json => {
            json_line(&Extremal { k, t, n: g.order(), s: witness_s(k), graph6: g.to_graph6() })? + "\n"
        }
    };
    Ok((header + &render(&reports, format)?, violated))
}

#[derive(Serialize)]
struct Grid {
    k: usize,
    order: usize,
    rows: Vec<String>,
}

#[derive(Serialize)]
struct Extremal {
    k: usize,
    t: usize,
    n: usize,
    s: usize,
    graph6: String,
}

fn cmd_search(mode: (bool, bool, bool), allow_large: bool, params: &[String], format: Format) -> Outcome {
    let (exact, local, _table) = mode;
    let map = key_values(params, &["n", "s", "family", "seed", "iterations", "restarts"])?;
    let s: usize = get(&map, "s", None)?;
    let family: Family = get(&map, "family", Some(Family::Top))?;
    let defaults = LocalSearchConfig::default();
    let config = LocalSearchConfig::new(
        get(&map, "seed", Some(defaults.seed))?,
        get(&map, "iterations", Some(defaults.iterations))?,
        get(&map, "restarts", Some(defaults.restarts))?,
    )?;
    if exact || local {
        let n: usize = get(&map, "n", None)?;
        let record = if exact {
            exhaustive_f(n, s, family, allow_large)?
        } else {
            local_search_f(n, s, family, &config)?
        };
        return Ok((render(&[record], format)?, false));
    }
    let list = map.get("n").ok_or_else(|| usage("missing parameter `n=` (a comma-separated list)"))?;
    let n_list = list
        .split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| usage(format!("invalid order `{x}`"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((render(&ratio_table(s, family, &n_list, &config)?, format)?, false))
}

fn max_order_from_env() -> Result<Option<usize>, Failure> {
    match std::env::var("NG_MAX_ORDER") {
        Ok(v) => v.trim().parse().map(Some).map_err(|_| usage(format!("NG_MAX_ORDER=`{v}` is not an order"))),
        Err(_) => Ok(None),
    }
}

/// Returns whether any applicable bound was violated.
fn run(cli: Cli) -> Result<bool, Failure> {
    if let Some(cap) = cli.max_order.map_or_else(max_order_from_env, |c| Ok(Some(c)))? {
        if cap == 0 {
            return Err(usage("the size cap must be positive"));
        }
        set_max_order(cap);
    }
    let format = Format::from(cli.format);
    let (out, violated) = match &cli.command {
        Command::Spectrum(input) => cmd_spectrum(input, format, cli.tol)?,
        Command::Check { input, s_max } => cmd_check(input, *s_max, format, cli.tol)?,
        Command::Construct { a_matrix, extremal: _, params } => cmd_construct(*a_matrix, params, format, cli.tol)?,
        Command::Search { exact, local, table, allow_large, params } => {
            cmd_search((*exact, *local, *table), *allow_large, params, format)?
        }
    };
    match &cli.output {
        Some(path) => fs::write(path, &out).map_err(|e| usage(format!("{}: {e}", path.display())))?,
        None => io::stdout().lock().write_all(out.as_bytes()).map_err(usage)?,
    }
    Ok(violated)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => {
            eprintln!("ng: at least one applicable bound is violated");
            ExitCode::from(EXIT_VIOLATION)
        }
        Err(f) => {
            eprintln!("ng: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
