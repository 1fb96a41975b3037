//! Command-line front end: analyze S-boxes, run the optimizers, compare
//! linear profiles, and export the embedded corpus.
//!
//! Exit codes are a stable scripting contract: 0 on success, 1 for usage
//! errors (bad flags or flag/input combinations), 2 for input errors (files
//! that do not parse, unknown corpus ids).

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use sboxkit::{
    bandit_optimize, corpus_get, corpus_list, evaluate, hill_climb, parse_sbox, random_sbox,
    serialize_sbox, AnalysisReport, BanditConfig, ComparisonTable, Error, FitnessConfig,
    FitnessReport, FitnessValue, FrozenPrefix, HillClimbConfig, MetricsSummary, Rational, SBox,
    SboxLayout,
};

/// Seed offset separating the bandit stage's stream from the hill stage's
/// when one run seed drives a composed pipeline.
const STAGE_OFFSET: u64 = 0x9e3779b97f4a7c15;

#[derive(Parser)]
#[command(name = "sboxkit", version, about = "S-box linear analysis and optimization")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the full linear profile of one S-box
    Analyze(AnalyzeArgs),
    /// Run an optimization pipeline and report the best result
    Optimize(OptimizeArgs),
    /// Tabulate several S-boxes sorted by average coordinate nonlinearity
    Compare(CompareArgs),
    /// Inspect and export the embedded reference corpus
    #[command(subcommand)]
    Corpus(CorpusCommand),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Corpus id or path to an .sbx file
    input: String,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Include the full avalanche matrix
    #[arg(long)]
    sac_matrix: bool,
    /// Also evaluate the magnitude fitness with this exponent
    #[arg(long)]
    magnitude: Option<u32>,
}

#[derive(Args)]
struct OptimizeArgs {
    /// Which pipeline to run
    #[arg(long, value_enum)]
    algorithm: Algorithm,
    /// Base seed; run t uses seed + t
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Fitness exponent M
    #[arg(long, default_value_t = 10)]
    magnitude: u32,
    /// Pin the first K table entries to the start
    #[arg(long, default_value_t = 0, value_name = "K")]
    freeze: usize,
    /// Stop after this many consecutive rejections (default: per-algorithm)
    #[arg(long)]
    max_stall: Option<u64>,
    /// Independent runs; the best final table by average coordinate
    /// nonlinearity is kept
    #[arg(long, default_value_t = 1)]
    runs: u64,
    /// Starting S-box (corpus id or path); defaults to a fresh random
    /// 8-bit table per run
    #[arg(long)]
    input: Option<String>,
    /// Write the best final table here as an .sbx file
    #[arg(long)]
    output: Option<PathBuf>,
    /// Include per-run fitness histories in the summary
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct CompareArgs {
    /// Corpus ids or paths, one row each
    #[arg(required = true)]
    inputs: Vec<String>,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum CorpusCommand {
    /// List every embedded entry with its provenance
    List {
        /// Output format
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Write one embedded entry as an .sbx file
    Export {
        /// Corpus id
        id: String,
        /// Destination path (stdout when omitted)
        #[arg(long)]
        output: Option<PathBuf>,
        /// Token layout
        #[arg(long, value_enum, default_value_t = LayoutArg::Flat)]
        layout: LayoutArg,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    Hill,
    Bandit,
    Compose,
}

impl Algorithm {
    fn name(self) -> &'static str {
        match self {
            Algorithm::Hill => "hill",
            Algorithm::Bandit => "bandit",
            Algorithm::Compose => "compose",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LayoutArg {
    Flat,
    Grid16,
}

impl From<LayoutArg> for SboxLayout {
    fn from(value: LayoutArg) -> Self {
        match value {
            LayoutArg::Flat => SboxLayout::Flat,
            LayoutArg::Grid16 => SboxLayout::Grid16,
        }
    }
}

enum CliError {
    Usage(String),
    Input(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(message) | CliError::Input(message) => f.write_str(message),
        }
    }
}

/// Freeze and magnitude problems are flag mistakes; everything else about a
/// supplied table is an input problem.
fn classify(err: Error) -> CliError {
    match err {
        Error::DegenerateFreeze { .. } | Error::FrozenBandit { .. } | Error::FitnessOverflow { .. } => {
            CliError::Usage(err.to_string())
        }
        other => CliError::Input(other.to_string()),
    }
}

fn write_file(path: &Path, content: &str) -> Result<(), CliError> {
    fs::write(path, content)
        .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))
}

/// Resolves an input argument: exact corpus ids win, anything else is read
/// as a file. Returns the S-box and a short label for reports.
fn resolve_input(input: &str) -> Result<(SBox, String), CliError> {
    if corpus_list().iter().any(|(id, _)| *id == input) {
        let entry = corpus_get(input).map_err(classify)?;
        return Ok((entry.sbox, input.to_string()));
    }
    let text = fs::read_to_string(input)
        .map_err(|e| CliError::Input(format!("cannot read {input}: {e}")))?;
    let sbox = parse_sbox(&text).map_err(classify)?;
    Ok((sbox, input.to_string()))
}

/// Label for a comparison row: corpus id as-is, file path by its stem.
fn row_label(input: &str) -> String {
    if corpus_list().iter().any(|(id, _)| *id == input) {
        return input.to_string();
    }
    Path::new(input)
        .file_stem()
        .map(|stem| stem.to_string_lossy().into_owned())
        .unwrap_or_else(|| input.to_string())
}

fn cmd_analyze(args: &AnalyzeArgs) -> Result<(), CliError> {
    let (sbox, label) = resolve_input(&args.input)?;
    let mut report = AnalysisReport::new(label, &sbox);
    if args.sac_matrix {
        report.sac_matrix = Some(sboxkit::sac(&sbox).matrix);
    }
    if let Some(magnitude) = args.magnitude {
        let value = evaluate(&sbox, FitnessConfig { magnitude }).map_err(classify)?;
        report.fitness = Some(FitnessReport { magnitude, value });
    }
    match args.format {
        Format::Text => print!("{}", report.render_text()),
        Format::Csv => print!("{}", report.render_csv()),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        ),
    }
    Ok(())
}

#[derive(Serialize)]
struct StageSummary {
    algorithm: &'static str,
    seed: u64,
    max_stall: u64,
    iterations: u64,
    accepted: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    fitness_history: Option<Vec<(u64, FitnessValue)>>,
}

#[derive(Serialize)]
struct RunSummary {
    run: u64,
    start: String,
    stages: Vec<StageSummary>,
    final_metrics: MetricsSummary,
    final_acnv: String,
}

#[derive(Serialize)]
struct OptimizeSummary {
    algorithm: &'static str,
    magnitude: u32,
    freeze: usize,
    runs: Vec<RunSummary>,
    best_run: u64,
    best_metrics: MetricsSummary,
    best_acnv: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    output: Option<String>,
}

fn stage_summary(
    algorithm: &'static str,
    seed: u64,
    max_stall: u64,
    trace: &sboxkit::RunTrace,
    keep_history: bool,
) -> StageSummary {
    StageSummary {
        algorithm,
        seed,
        max_stall,
        iterations: trace.iterations,
        accepted: trace.accepted,
        fitness_history: keep_history.then(|| trace.fitness_history.clone()),
    }
}

fn cmd_optimize(args: &OptimizeArgs) -> Result<(), CliError> {
    if args.runs == 0 {
        return Err(CliError::Usage("--runs must be at least 1".to_string()));
    }
    let fixed_start = match &args.input {
        Some(input) => Some(resolve_input(input)?),
        None => None,
    };
    let freeze = FrozenPrefix { k: args.freeze };
    let mut runs = Vec::new();
    let mut best: Option<(u64, Rational, SBox, MetricsSummary)> = None;

    for t in 0..args.runs {
        let run_seed = args.seed.wrapping_add(t);
        let (start, start_label) = match &fixed_start {
            Some((sbox, label)) => (sbox.clone(), label.clone()),
            None => (
                random_sbox(8, run_seed).map_err(classify)?,
                format!("random(seed={run_seed})"),
            ),
        };
        let mut stages = Vec::new();
        let final_sbox;
        let final_metrics;
        match args.algorithm {
            Algorithm::Hill => {
                let cfg = HillClimbConfig {
                    magnitude: args.magnitude,
                    freeze,
                    max_stall: args.max_stall,
                    seed: run_seed,
                    max_iterations: None,
                };
                let stall = args
                    .max_stall
                    .unwrap_or_else(|| sboxkit::default_hill_stall(start.n()));
                let trace = hill_climb(&start, &cfg).map_err(classify)?;
                stages.push(stage_summary("hill", run_seed, stall, &trace, args.trace));
                final_metrics = trace.final_metrics;
                final_sbox = trace.final_sbox;
            }
            Algorithm::Bandit => {
                let cfg = BanditConfig {
                    magnitude: args.magnitude,
                    seed: run_seed,
                    max_stall: args.max_stall,
                    freeze,
                };
                let stall = args
                    .max_stall
                    .unwrap_or_else(|| sboxkit::default_bandit_stall(start.n()));
                let trace = bandit_optimize(&start, &cfg).map_err(classify)?;
                stages.push(stage_summary("bandit", run_seed, stall, &trace, args.trace));
                final_metrics = trace.final_metrics;
                final_sbox = trace.final_sbox;
            }
            Algorithm::Compose => {
                let bandit_seed = run_seed.wrapping_add(STAGE_OFFSET);
                let hill_cfg = HillClimbConfig {
                    magnitude: args.magnitude,
                    freeze,
                    max_stall: args.max_stall,
                    seed: run_seed,
                    max_iterations: None,
                };
                let bandit_cfg = BanditConfig {
                    magnitude: args.magnitude,
                    seed: bandit_seed,
                    max_stall: args.max_stall,
                    freeze,
                };
                let hill_stall = args
                    .max_stall
                    .unwrap_or_else(|| sboxkit::default_hill_stall(start.n()));
                let bandit_stall = args
                    .max_stall
                    .unwrap_or_else(|| sboxkit::default_bandit_stall(start.n()));
                let (hill_trace, bandit_trace) =
                    sboxkit::compose_optimize(&start, &hill_cfg, &bandit_cfg).map_err(classify)?;
                stages.push(stage_summary(
                    "hill", run_seed, hill_stall, &hill_trace, args.trace,
                ));
                stages.push(stage_summary(
                    "bandit",
                    bandit_seed,
                    bandit_stall,
                    &bandit_trace,
                    args.trace,
                ));
                final_metrics = bandit_trace.final_metrics;
                final_sbox = bandit_trace.final_sbox;
            }
        }
        let acnv = final_metrics.acnv;
        runs.push(RunSummary {
            run: t,
            start: start_label,
            stages,
            final_metrics: final_metrics.clone(),
            final_acnv: acnv.to_fixed_decimal(2),
        });
        let improves = match &best {
            None => true,
            Some((_, best_acnv, _, _)) => acnv > *best_acnv,
        };
        if improves {
            best = Some((t, acnv, final_sbox, final_metrics));
        }
    }

    let (best_run, best_acnv, best_sbox, best_metrics) = best.expect("runs >= 1");
    let output = match &args.output {
        Some(path) => {
            let text = serialize_sbox(&best_sbox, SboxLayout::Flat).map_err(classify)?;
            write_file(path, &text)?;
            Some(path.display().to_string())
        }
        None => None,
    };
    let summary = OptimizeSummary {
        algorithm: args.algorithm.name(),
        magnitude: args.magnitude,
        freeze: args.freeze,
        runs,
        best_run,
        best_metrics,
        best_acnv: best_acnv.to_fixed_decimal(2),
        output,
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&summary).expect("summary serializes")
    );
    Ok(())
}

fn cmd_compare(args: &CompareArgs) -> Result<(), CliError> {
    let mut rows = Vec::new();
    for input in &args.inputs {
        let (sbox, _) = resolve_input(input)?;
        rows.push(ComparisonTable::row(row_label(input), &sbox));
    }
    let table = ComparisonTable::build(rows);
    match args.format {
        Format::Text => print!("{}", table.render_text()),
        Format::Csv => print!("{}", table.render_csv()),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&table).expect("table serializes")
        ),
    }
    Ok(())
}

#[derive(Serialize)]
struct CorpusRow {
    id: &'static str,
    provenance: &'static str,
}

fn cmd_corpus(command: &CorpusCommand) -> Result<(), CliError> {
    match command {
        CorpusCommand::List { format } => {
            let listing = corpus_list();
            match format {
                Format::Text => {
                    for (id, provenance) in listing {
                        println!("{id}: {provenance}");
                    }
                }
                Format::Csv => {
                    println!("id,provenance");
                    for (id, provenance) in listing {
                        println!("{id},\"{provenance}\"");
                    }
                }
                Format::Json => {
                    let rows: Vec<CorpusRow> = listing
                        .into_iter()
                        .map(|(id, provenance)| CorpusRow { id, provenance })
                        .collect();
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&rows).expect("rows serialize")
                    );
                }
            }
            Ok(())
        }
        CorpusCommand::Export { id, output, layout } => {
            let entry = corpus_get(id).map_err(classify)?;
            let text = serialize_sbox(&entry.sbox, (*layout).into()).map_err(classify)?;
            match output {
                Some(path) => write_file(path, &text),
                None => {
                    print!("{text}");
                    Ok(())
                }
            }
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Optimize(args) => cmd_optimize(args),
        Command::Compare(args) => cmd_compare(args),
        Command::Corpus(command) => cmd_corpus(command),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(message)) => {
            eprintln!("usage error: {message}");
            eprintln!("run with --help for flag documentation");
            ExitCode::from(1)
        }
        Err(CliError::Input(message)) => {
            eprintln!("input error: {message}");
            ExitCode::from(2)
        }
    }
}
