use std::path::Path;

use heterobench_core::{BuildStats, Dataset, Graph, SplitSet, Task};
use serde::{Deserialize, Serialize};

use super::csvio::{fmt_f64, read_table, read_text, write_text, CsvOut};
use super::{IoError, Result};

pub const META_FILE: &str = "meta.json";
pub const SPLITS_FILE: &str = "splits.json";
const EDGES_FILE: &str = "edges.csv";
const LABELS_FILE: &str = "labels.csv";
const FEATURES_FILE: &str = "features.csv";
const TARGETS_FILE: &str = "targets.csv";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub name: String,
    pub task: Task,
    pub directed: bool,
    pub num_nodes: usize,
    pub num_edges: usize,
    pub num_classes: usize,
    pub feature_dim: usize,
    pub has_target: bool,
    /// Where the raw data came from, for imported datasets.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    /// How labels were derived, e.g. `quantile:5` for bucketed targets.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels_from: Option<String>,
}

impl Meta {
    pub fn for_dataset(ds: &Dataset) -> Self {
        Meta {
            name: ds.name.clone(),
            task: ds.task,
            directed: ds.graph.is_directed(),
            num_nodes: ds.num_nodes(),
            num_edges: ds.graph.num_edges(),
            num_classes: ds.num_classes,
            feature_dim: ds.feature_dim,
            has_target: ds.regression_target.is_some(),
            source: None,
            labels_from: None,
        }
    }
}

fn create_dir(dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|e| IoError::io(dir, e))
}

fn to_json<T: Serialize>(value: &T, pretty: bool) -> String {
    let mut s = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    }
    .expect("in-memory JSON serialization");
    s.push('\n');
    s
}

/// Writes `ds` into `dir` (created if missing). Provenance fields of `meta`
/// are kept; its counts are recomputed from the dataset.
pub fn save_dataset(ds: &Dataset, dir: &Path, provenance: Option<&Meta>) -> Result<Meta> {
    create_dir(dir)?;
    let mut meta = Meta::for_dataset(ds);
    if let Some(p) = provenance {
        meta.source = p.source.clone();
        meta.labels_from = p.labels_from.clone();
    }
    write_text(&dir.join(META_FILE), &to_json(&meta, true))?;

    let mut edges = CsvOut::create(&dir.join(EDGES_FILE))?;
    edges.row(["source", "target"])?;
    for (u, v) in ds.graph.edges() {
        edges.row([u.to_string(), v.to_string()])?;
    }
    edges.finish()?;

    let mut labels = CsvOut::create(&dir.join(LABELS_FILE))?;
    labels.row(["node_id", "label"])?;
    for (v, l) in ds.labels.iter().enumerate() {
        labels.row([v.to_string(), l.to_string()])?;
    }
    labels.finish()?;

    let mut features = CsvOut::create(&dir.join(FEATURES_FILE))?;
    features.row(feature_header(ds.feature_dim))?;
    for v in 0..ds.num_nodes() {
        let row =
            std::iter::once(v.to_string()).chain(ds.feature_row(v).iter().map(|&x| fmt_f64(x)));
        features.row(row)?;
    }
    features.finish()?;

    if let Some(targets) = &ds.regression_target {
        let mut out = CsvOut::create(&dir.join(TARGETS_FILE))?;
        out.row(["node_id", "target"])?;
        for (v, t) in targets.iter().enumerate() {
            out.row([v.to_string(), t.to_string()])?;
        }
        out.finish()?;
    }
    Ok(meta)
}

fn feature_header(dim: usize) -> Vec<String> {
    std::iter::once("node_id".to_string())
        .chain((0..dim).map(|i| format!("f{i}")))
        .collect()
}

fn header(cols: &[&str]) -> Vec<String> {
    cols.iter().map(|s| s.to_string()).collect()
}

pub fn load_meta(dir: &Path) -> Result<Meta> {
    let path = dir.join(META_FILE);
    let text = read_text(&path)?;
    serde_json::from_str(&text).map_err(|e| IoError::parse(&path, e.line() as u64, e.to_string()))
}

pub fn load_dataset(dir: &Path) -> Result<Dataset> {
    load_dataset_with_diagnostics(dir).map(|(ds, _, _)| ds)
}

/// Loads a dataset directory, validating every count in `meta.json`
/// against the files. Also returns the meta record and how many self-loops
/// and parallel edges were dropped from `edges.csv`.
pub fn load_dataset_with_diagnostics(dir: &Path) -> Result<(Dataset, Meta, BuildStats)> {
    let meta = load_meta(dir)?;
    let n = meta.num_nodes;
    let check_count = |path: &Path, what: &str, found: usize, expected: usize| {
        if found != expected {
            Err(IoError::invalid(
                path,
                format!("{what}: meta.json says {expected}, file has {found}"),
            ))
        } else {
            Ok(())
        }
    };

    let path = dir.join(EDGES_FILE);
    let rows = read_table(&path, &header(&["source", "target"]))?;
    let mut edges = Vec::with_capacity(rows.len());
    for row in &rows {
        row.expect_len(&path, 2)?;
        let u: usize = row.parse(&path, 0, "source")?;
        let v: usize = row.parse(&path, 1, "target")?;
        for x in [u, v] {
            if x >= n {
                return Err(IoError::parse(
                    &path,
                    row.line,
                    format!("node {x} out of range for {n} nodes"),
                ));
            }
        }
        edges.push((u, v));
    }
    let (graph, stats) = Graph::from_edges_with_stats(&edges, n, meta.directed)?;
    check_count(&path, "num_edges", graph.num_edges(), meta.num_edges)?;

    let path = dir.join(LABELS_FILE);
    let rows = read_table(&path, &header(&["node_id", "label"]))?;
    check_count(&path, "num_nodes", rows.len(), n)?;
    let mut labels = Vec::with_capacity(n);
    for (i, row) in rows.iter().enumerate() {
        row.expect_len(&path, 2)?;
        check_node_id(&path, row, i)?;
        let label: usize = row.parse(&path, 1, "label")?;
        if label >= meta.num_classes {
            return Err(IoError::parse(
                &path,
                row.line,
                format!(
                    "label {label} of node {i} is not below num_classes = {}",
                    meta.num_classes
                ),
            ));
        }
        labels.push(label);
    }

    let path = dir.join(FEATURES_FILE);
    let rows = read_table(&path, &feature_header(meta.feature_dim))?;
    check_count(&path, "num_nodes", rows.len(), n)?;
    let mut features = Vec::with_capacity(n * meta.feature_dim);
    for (i, row) in rows.iter().enumerate() {
        row.expect_len(&path, meta.feature_dim + 1)?;
        check_node_id(&path, row, i)?;
        for j in 0..meta.feature_dim {
            features.push(row.parse::<f64>(&path, j + 1, "feature")?);
        }
    }

    let target_path = dir.join(TARGETS_FILE);
    let regression_target = if meta.has_target {
        let rows = read_table(&target_path, &header(&["node_id", "target"]))?;
        check_count(&target_path, "num_nodes", rows.len(), n)?;
        let mut t = Vec::with_capacity(n);
        for (i, row) in rows.iter().enumerate() {
            row.expect_len(&target_path, 2)?;
            check_node_id(&target_path, row, i)?;
            t.push(row.parse::<i64>(&target_path, 1, "target")?);
        }
        Some(t)
    } else {
        if target_path.exists() {
            return Err(IoError::invalid(
                &target_path,
                "present but meta.json has has_target = false",
            ));
        }
        None
    };

    let ds = Dataset::new(
        meta.name.clone(),
        graph,
        labels,
        meta.num_classes,
        features,
        meta.feature_dim,
        regression_target,
        meta.task,
    )
    .map_err(|e| IoError::invalid(&dir.join(META_FILE), e.to_string()))?;
    Ok((ds, meta, stats))
}

fn check_node_id(path: &Path, row: &super::csvio::Row, expected: usize) -> Result<()> {
    let id: usize = row.parse(path, 0, "node_id")?;
    if id != expected {
        return Err(IoError::parse(
            path,
            row.line,
            format!("expected node_id {expected}, found {id}"),
        ));
    }
    Ok(())
}

/// Compact single-line JSON followed by a newline.
pub fn splits_json(splits: &SplitSet) -> String {
    to_json(splits, false)
}

pub fn save_splits(splits: &SplitSet, path: &Path) -> Result<()> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        create_dir(parent)?;
    }
    write_text(path, &splits_json(splits))
}

/// Reads `splits.json` from a dataset directory if present and checks it
/// against the dataset's node count.
pub fn load_splits(dir: &Path) -> Result<Option<SplitSet>> {
    let path = dir.join(SPLITS_FILE);
    if !path.exists() {
        return Ok(None);
    }
    let meta = load_meta(dir)?;
    let splits = load_splits_file(&path)?;
    splits
        .validate(meta.num_nodes)
        .map_err(|e| IoError::invalid(&path, e.to_string()))?;
    Ok(Some(splits))
}

pub(crate) fn load_splits_file(path: &Path) -> Result<SplitSet> {
    let text = read_text(path)?;
    serde_json::from_str(&text).map_err(|e| IoError::parse(path, e.line() as u64, e.to_string()))
}
