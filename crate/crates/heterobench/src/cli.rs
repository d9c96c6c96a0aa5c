//! `heterobench` command-line interface.
//!
//! Results go to stdout (or `--out`), diagnostics to stderr. Exit status is
//! 0 on success, 1 for usage and validation errors and 2 for file-system
//! errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use heterobench_core::dedup::{
    filter_duplicates, find_duplicates, leakage_report, oracle_predictions, DuplicateGroup,
    DuplicateReport, LeakageReport,
};
use heterobench_core::eval::{score_nodes, MetricKind, ResultEntry, ResultTable};
use heterobench_core::metrics::stat_report;
use heterobench_core::splits::{filter_split_set, generate_splits};
use heterobench_core::synthgen::{generate_minesweeper, MinesweeperConfig};

use crate::io::{self, IoError};
use crate::table;

#[derive(Debug, Parser)]
#[command(
    name = "heterobench",
    version,
    about = "Audit, build and score node-classification benchmarks"
)]
#[command(arg_required_else_help = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Convert raw node/edge tables into a dataset directory
    Import(ImportArgs),
    /// Graph and label statistics of one or more dataset directories
    Stats(StatsArgs),
    /// Duplicate-node detection, removal and leakage analysis
    #[command(subcommand)]
    Dedup(DedupCommand),
    /// Synthetic dataset generators
    #[command(subcommand)]
    Generate(GenerateCommand),
    /// Train/validation/test splits
    #[command(subcommand)]
    Splits(SplitsCommand),
    /// Score prediction files and rank models
    #[command(subcommand)]
    Eval(EvalCommand),
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Write the result to this file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Print a human-readable table instead of JSON
    #[arg(long)]
    pub pretty: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FeatureFormatArg {
    Dense,
    Json,
}

#[derive(Debug, Args)]
pub struct ImportArgs {
    /// Edge list: one `source<delim>target` row per edge
    #[arg(long)]
    pub edges: PathBuf,
    /// Node records: `id<delim>value`, a class index or a target to bucket
    #[arg(long)]
    pub labels: PathBuf,
    #[arg(long)]
    pub features: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "dense")]
    pub feature_format: FeatureFormatArg,
    /// Extra `id<delim>target` file kept as the regression target
    #[arg(long)]
    pub targets: Option<PathBuf>,
    #[arg(long)]
    pub directed: bool,
    /// Field delimiter; `tab` for tab-separated files
    #[arg(long, default_value = ",")]
    pub delimiter: String,
    /// Input files have no header row
    #[arg(long)]
    pub no_header: bool,
    /// Treat the label column as an integer target and split it into this
    /// many equal-frequency classes
    #[arg(long, conflicts_with = "boundaries")]
    pub bucket_target: Option<usize>,
    /// Treat the label column as an integer target and bin it at these
    /// increasing boundaries
    #[arg(long, value_delimiter = ',')]
    pub boundaries: Option<Vec<i64>>,
    #[arg(long, default_value = "imported")]
    pub name: String,
    /// Provenance note recorded in meta.json, e.g. the release ingested
    #[arg(long)]
    pub source: Option<String>,
    /// Dataset directory to create
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    #[arg(required = true)]
    pub datasets: Vec<PathBuf>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Subcommand)]
pub enum DedupCommand {
    /// Report duplicate nodes
    Find {
        dataset: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Write a copy of the dataset with duplicates removed
    Filter {
        dataset: PathBuf,
        /// Directory for the filtered dataset
        #[arg(long)]
        out: PathBuf,
    },
    /// Test accuracy on duplicates versus non-duplicates
    Leakage {
        dataset: PathBuf,
        /// Prediction files to analyse; defaults to the neighborhood-matching
        /// predictor
        #[arg(long)]
        predictions: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum GenerateCommand {
    /// King-graph grid with random mines as the binary target
    Minesweeper {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        rows: usize,
        #[arg(long, default_value_t = 100)]
        cols: usize,
        #[arg(long, default_value_t = 0.2)]
        mine_fraction: f64,
        #[arg(long, default_value_t = 0.5)]
        hidden_fraction: f64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum SplitsCommand {
    /// Random 50/25/25 splits for a dataset directory
    Generate {
        dataset: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short = 'n', long = "num-splits", default_value_t = 10)]
        num_splits: usize,
        /// Defaults to `<dataset>/splits.json`
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum EvalCommand {
    /// Score every model's test predictions; repeat --dataset/--predictions
    /// pairs for several datasets
    Score {
        #[arg(long, required = true)]
        dataset: Vec<PathBuf>,
        #[arg(long, required = true)]
        predictions: Vec<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Rank models per dataset in one or more result tables
    Rank {
        #[arg(long, required = true, num_args = 1..)]
        results: Vec<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 1,
            CliError::Io(_) => 2,
        }
    }
}

impl From<IoError> for CliError {
    fn from(e: IoError) -> Self {
        if e.is_io() {
            CliError::Io(e.to_string())
        } else {
            CliError::Validation(e.to_string())
        }
    }
}

impl From<heterobench_core::Error> for CliError {
    fn from(e: heterobench_core::Error) -> Self {
        CliError::Validation(e.to_string())
    }
}

type CliResult<T = ()> = Result<T, CliError>;

pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match dispatch(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

pub fn dispatch(command: Command) -> CliResult {
    match command {
        Command::Import(args) => cmd_import(args),
        Command::Stats(args) => cmd_stats(args),
        Command::Dedup(DedupCommand::Find { dataset, output }) => cmd_dedup_find(&dataset, &output),
        Command::Dedup(DedupCommand::Filter { dataset, out }) => cmd_dedup_filter(&dataset, &out),
        Command::Dedup(DedupCommand::Leakage {
            dataset,
            predictions,
            output,
        }) => cmd_dedup_leakage(&dataset, predictions.as_deref(), &output),
        Command::Generate(GenerateCommand::Minesweeper {
            seed,
            rows,
            cols,
            mine_fraction,
            hidden_fraction,
            out,
        }) => {
            let cfg = MinesweeperConfig {
                rows,
                cols,
                mine_fraction,
                hidden_fraction,
                seed,
            };
            let ds = generate_minesweeper(&cfg)?;
            let meta = io::save_dataset(&ds, &out, None)?;
            emit_json(&meta, None)
        }
        Command::Splits(SplitsCommand::Generate {
            dataset,
            seed,
            num_splits,
            out,
        }) => {
            let meta = io::load_meta(&dataset)?;
            let splits = generate_splits(meta.num_nodes, num_splits, seed)?;
            let path = out.unwrap_or_else(|| dataset.join(io::SPLITS_FILE));
            io::save_splits(&splits, &path)?;
            eprintln!("wrote {} splits to {}", splits.len(), path.display());
            Ok(())
        }
        Command::Eval(EvalCommand::Score {
            dataset,
            predictions,
            output,
        }) => cmd_eval_score(&dataset, &predictions, &output),
        Command::Eval(EvalCommand::Rank { results, output }) => cmd_eval_rank(&results, &output),
    }
}

fn emit(text: &str, out: Option<&Path>) -> CliResult {
    match out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::Io(format!("stdout: {e}")))
        }
    }
}

fn emit_json<T: Serialize>(value: &T, out: Option<&Path>) -> CliResult {
    let mut text = serde_json::to_string_pretty(value).expect("in-memory JSON serialization");
    text.push('\n');
    emit(&text, out)
}

fn cmd_import(args: ImportArgs) -> CliResult {
    let delimiter = match args.delimiter.as_str() {
        "tab" | "\\t" | "\t" => b'\t',
        s if s.len() == 1 => s.as_bytes()[0],
        s => {
            return Err(CliError::Validation(format!(
                "delimiter must be one byte or `tab`, got {s:?}"
            )))
        }
    };
    let labels = match (args.bucket_target, args.boundaries) {
        (Some(k), _) => io::LabelSource::QuantileBuckets(k),
        (None, Some(b)) => io::LabelSource::Boundaries(b),
        (None, None) => io::LabelSource::Classes,
    };
    let opts = io::ImportOptions {
        name: args.name,
        directed: args.directed,
        delimiter,
        header: !args.no_header,
        labels,
        feature_format: match args.feature_format {
            FeatureFormatArg::Dense => io::FeatureFormat::Dense,
            FeatureFormatArg::Json => io::FeatureFormat::SparseJson,
        },
        target_file: args.targets,
        source: args.source,
    };
    let imported = io::import_raw(&args.edges, &args.labels, args.features.as_deref(), &opts)?;
    if imported.stats.self_loops + imported.stats.parallel_edges > 0 {
        eprintln!(
            "dropped {} self-loops and {} parallel edges",
            imported.stats.self_loops, imported.stats.parallel_edges
        );
    }
    let meta = io::save_dataset(&imported.dataset, &args.out, Some(&imported.meta))?;
    io::write_id_map(&args.out.join("id_map.csv"), &imported.id_map)?;
    emit_json(&meta, None)
}

fn cmd_stats(args: StatsArgs) -> CliResult {
    let mut reports = Vec::with_capacity(args.datasets.len());
    for dir in &args.datasets {
        let (ds, _, stats) = io::load_dataset_with_diagnostics(dir)?;
        if stats.self_loops + stats.parallel_edges > 0 {
            eprintln!(
                "{}: dropped {} self-loops and {} parallel edges",
                dir.display(),
                stats.self_loops,
                stats.parallel_edges
            );
        }
        if ds.graph.is_directed() {
            eprintln!(
                "{}: directed graph, statistics use its undirected view",
                dir.display()
            );
        }
        let report = stat_report(&ds)?;
        if !report.connected {
            eprintln!(
                "{}: graph is disconnected, diameter covers the largest component",
                dir.display()
            );
        }
        reports.push(report);
    }
    let out = args.output.out.as_deref();
    if args.output.pretty {
        emit(&table::stats_table(&reports), out)
    } else if reports.len() == 1 {
        emit_json(&reports[0], out)
    } else {
        emit_json(&reports, out)
    }
}

#[derive(Serialize)]
struct DuplicateSummary<'a> {
    num_nodes: usize,
    num_duplicates: usize,
    num_non_duplicates: usize,
    per_class_duplicates: &'a [usize],
    groups_without_keeper: usize,
    duplicate_ids: &'a [usize],
    groups: &'a [DuplicateGroup],
}

fn summarize(report: &DuplicateReport) -> DuplicateSummary<'_> {
    DuplicateSummary {
        num_nodes: report.num_nodes,
        num_duplicates: report.num_duplicates(),
        num_non_duplicates: report.num_non_duplicates(),
        per_class_duplicates: &report.per_class_duplicates,
        groups_without_keeper: report.groups.iter().filter(|g| g.keeper.is_none()).count(),
        duplicate_ids: &report.duplicate_ids,
        groups: &report.groups,
    }
}

fn cmd_dedup_find(dir: &Path, output: &OutputArgs) -> CliResult {
    let ds = io::load_dataset(dir)?;
    let report = find_duplicates(&ds)?;
    if output.pretty {
        let header = vec![String::new(), "all".to_string()]
            .into_iter()
            .chain((0..ds.num_classes).map(|c| format!("class {c}")))
            .collect::<Vec<_>>();
        let counts = ds.class_counts();
        let row = |name: &str, total: usize, per: Vec<usize>| {
            std::iter::once(name.to_string())
                .chain(std::iter::once(total.to_string()))
                .chain(per.into_iter().map(|x| x.to_string()))
                .collect::<Vec<_>>()
        };
        let dups = report.per_class_duplicates.clone();
        let non: Vec<usize> = counts.iter().zip(&dups).map(|(a, b)| a - b).collect();
        let rows = vec![
            row("number of nodes", report.num_nodes, counts),
            row("number of duplicates", report.num_duplicates(), dups),
            row("number of non-duplicates", report.num_non_duplicates(), non),
        ];
        emit(&table::render(&header, &rows), output.out.as_deref())
    } else {
        emit_json(&summarize(&report), output.out.as_deref())
    }
}

fn cmd_dedup_filter(dir: &Path, out: &Path) -> CliResult {
    let (ds, meta, _) = io::load_dataset_with_diagnostics(dir)?;
    let report = find_duplicates(&ds)?;
    let (filtered, map) = filter_duplicates(&ds, &report)?;
    let new_meta = io::save_dataset(&filtered, out, Some(&meta))?;
    if let Some(splits) = io::load_splits(dir)? {
        let filtered_splits = filter_split_set(&splits, &map)?;
        io::save_splits(&filtered_splits, &out.join(io::SPLITS_FILE))?;
    }
    let mut text = String::from("old_node_id,new_node_id\n");
    for (old, new) in map.old_to_new.iter().enumerate() {
        match new {
            Some(n) => text.push_str(&format!("{old},{n}\n")),
            None => text.push_str(&format!("{old},\n")),
        }
    }
    emit(&text, Some(&out.join("index_map.csv")))?;
    let mut report_json =
        serde_json::to_string_pretty(&summarize(&report)).expect("in-memory JSON");
    report_json.push('\n');
    emit(&report_json, Some(&out.join("duplicates.json")))?;
    eprintln!(
        "removed {} duplicates, {} nodes remain",
        report.num_duplicates(),
        filtered.num_nodes()
    );
    emit_json(&new_meta, None)
}

#[derive(Serialize)]
struct ModelLeakage {
    model: String,
    #[serde(flatten)]
    report: LeakageReport,
}

fn cmd_dedup_leakage(dir: &Path, predictions: Option<&Path>, output: &OutputArgs) -> CliResult {
    let ds = io::load_dataset(dir)?;
    let splits = io::load_splits(dir)?.ok_or_else(|| {
        CliError::Validation(format!("{}: no {}", dir.display(), io::SPLITS_FILE))
    })?;
    let report = find_duplicates(&ds)?;
    let mut results = Vec::new();
    match predictions {
        None => {
            let preds = oracle_predictions(&ds, &splits)?;
            results.push(ModelLeakage {
                model: "neighborhood-match".into(),
                report: leakage_report(&ds.labels, &splits, &report, &preds)?,
            });
        }
        Some(p) => {
            for set in io::load_predictions_dir(p, ds.num_classes)? {
                let mut per_split = Vec::with_capacity(splits.len());
                for i in 0..splits.len() {
                    let scores = set.splits.get(&i).ok_or_else(|| {
                        CliError::Validation(format!(
                            "model {}: no predictions for split {i}",
                            set.model_name
                        ))
                    })?;
                    per_split.push(scores.argmax_per_node(ds.num_nodes(), ds.num_classes)?);
                }
                results.push(ModelLeakage {
                    model: set.model_name.clone(),
                    report: leakage_report(&ds.labels, &splits, &report, &per_split)?,
                });
            }
        }
    }
    if output.pretty {
        let text: String = results
            .iter()
            .map(|r| format!("{}\n{}", r.model, table::leakage_table(&r.report)))
            .collect::<Vec<_>>()
            .join("\n");
        emit(&text, output.out.as_deref())
    } else {
        emit_json(&results, output.out.as_deref())
    }
}

fn cmd_eval_score(datasets: &[PathBuf], predictions: &[PathBuf], output: &OutputArgs) -> CliResult {
    if datasets.len() != predictions.len() {
        return Err(CliError::Validation(format!(
            "got {} --dataset and {} --predictions; pass them in pairs",
            datasets.len(),
            predictions.len()
        )));
    }
    let mut table = ResultTable::default();
    for (dir, pred_dir) in datasets.iter().zip(predictions) {
        let ds = io::load_dataset(dir)?;
        let splits = io::load_splits(dir)?.ok_or_else(|| {
            CliError::Validation(format!("{}: no {}", dir.display(), io::SPLITS_FILE))
        })?;
        let kind = MetricKind::for_task(ds.task);
        for set in io::load_predictions_dir(pred_dir, ds.num_classes)? {
            let mut values = Vec::with_capacity(splits.len());
            for (i, split) in splits.splits.iter().enumerate() {
                let scores = set.splits.get(&i).ok_or_else(|| {
                    CliError::Validation(format!(
                        "model {}: no predictions for split {i}",
                        set.model_name
                    ))
                })?;
                let value = score_nodes(kind, scores, &ds.labels, ds.num_classes, &split.test)
                    .map_err(|e| {
                        CliError::Validation(format!("model {}, split {i}: {e}", set.model_name))
                    })?;
                values.push(value);
            }
            table.entries.push(ResultEntry::new(
                set.model_name.clone(),
                ds.name.clone(),
                kind,
                values,
            )?);
        }
    }
    if output.pretty {
        emit(&table::results_table(&table), output.out.as_deref())
    } else {
        emit_json(&table, output.out.as_deref())
    }
}

#[derive(Serialize)]
struct RankRow {
    model: String,
    rank: usize,
}

#[derive(Serialize)]
struct DatasetRanks {
    dataset: String,
    ranks: Vec<RankRow>,
}

fn cmd_eval_rank(results: &[PathBuf], output: &OutputArgs) -> CliResult {
    let mut tables = Vec::with_capacity(results.len());
    for path in results {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        let t: ResultTable = serde_json::from_str(&text)
            .map_err(|e| CliError::Validation(format!("{}: {e}", path.display())))?;
        tables.push(t);
    }
    if output.pretty {
        return emit(&table::rank_table(&tables), output.out.as_deref());
    }
    let json: Vec<Vec<DatasetRanks>> = tables
        .iter()
        .map(|t| {
            t.ranks()
                .into_iter()
                .map(|(dataset, ranks)| DatasetRanks {
                    dataset,
                    ranks: ranks
                        .into_iter()
                        .map(|(model, rank)| RankRow { model, rank })
                        .collect(),
                })
                .collect()
        })
        .collect();
    emit_json(&json, output.out.as_deref())
}
