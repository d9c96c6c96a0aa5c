//! Importing raw node/edge tables, such as the public Wikipedia
//! article-network releases (`squirrel`, `chameleon`).
//!
//! Those two graphs are distributed in two versions with different edge
//! sets: one on the PyTorch Geometric mirror and one in SNAP Datasets. The
//! SNAP version is the one usually benchmarked, and the duplicate-node
//! structure (in-degree-zero copies sharing a target and out-neighborhood)
//! holds for its edges. Regression targets agree between the versions up
//! to a log transform. Pass `source` so the choice is recorded in
//! `meta.json`.
//!
//! Inputs:
//! * edge file: `source<d>target` rows of original node IDs;
//! * label file: `id<d>value` rows, one per node. The value is either a
//!   class index or an integer regression target to be bucketed;
//! * feature file (optional): dense `id<d>x0<d>x1...` rows, or a JSON
//!   object mapping each ID to a list of active feature indices;
//! * target file (optional): `id<d>target` rows kept as the regression
//!   target when the label file already holds classes.
//!
//! Nodes are numbered by sorting their original IDs, numerically when every
//! ID is an integer and lexicographically otherwise.

use std::collections::HashMap;
use std::path::{Path, PathBuf};

use heterobench_core::bucket::{boundary_buckets, quantile_buckets};
use heterobench_core::{BuildStats, Dataset, Graph, Task};

use super::csvio::{read_rows, read_text, CsvOut, Row};
use super::dataset_dir::Meta;
use super::{IoError, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LabelSource {
    /// The label column holds class indices.
    Classes,
    /// The label column holds an integer target split into this many
    /// equal-frequency classes.
    QuantileBuckets(usize),
    /// The label column holds an integer target binned at these
    /// increasing boundaries.
    Boundaries(Vec<i64>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FeatureFormat {
    Dense,
    /// `{"id": [feature index, ...], ...}`, one-hot encoded.
    SparseJson,
}

#[derive(Debug, Clone)]
pub struct ImportOptions {
    pub name: String,
    pub directed: bool,
    pub delimiter: u8,
    /// Whether the delimited files start with a header row.
    pub header: bool,
    pub labels: LabelSource,
    pub feature_format: FeatureFormat,
    pub target_file: Option<PathBuf>,
    pub source: Option<String>,
}

impl Default for ImportOptions {
    fn default() -> Self {
        ImportOptions {
            name: "imported".into(),
            directed: false,
            delimiter: b',',
            header: true,
            labels: LabelSource::Classes,
            feature_format: FeatureFormat::Dense,
            target_file: None,
            source: None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Imported {
    pub dataset: Dataset,
    /// Original ID of each node index.
    pub id_map: Vec<String>,
    /// Provenance fields for `meta.json`.
    pub meta: Meta,
    pub stats: BuildStats,
}

struct NodeIndex {
    ids: Vec<String>,
    index: HashMap<String, usize>,
}

impl NodeIndex {
    fn build(mut ids: Vec<String>) -> Self {
        let numeric: Option<Vec<i64>> = ids.iter().map(|s| s.parse().ok()).collect();
        match numeric {
            Some(nums) => {
                let mut pairs: Vec<(i64, String)> = nums.into_iter().zip(ids).collect();
                pairs.sort();
                ids = pairs.into_iter().map(|(_, s)| s).collect();
            }
            None => ids.sort(),
        }
        let index = ids
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        NodeIndex { ids, index }
    }

    fn lookup(&self, path: &Path, row: &Row, id: &str) -> Result<usize> {
        self.index
            .get(id)
            .copied()
            .ok_or_else(|| IoError::parse(path, row.line, format!("unknown node id {id:?}")))
    }
}

/// Reads `id,value` rows, rejecting repeated IDs.
fn read_keyed(path: &Path, opts: &ImportOptions) -> Result<Vec<(String, String, u64)>> {
    let (_, rows) = read_rows(path, opts.delimiter, opts.header)?;
    let mut seen = HashMap::new();
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        row.expect_len(path, 2)?;
        let id = row.get(path, 0)?.trim().to_string();
        if let Some(first) = seen.insert(id.clone(), row.line) {
            return Err(IoError::parse(
                path,
                row.line,
                format!("duplicate node record {id:?} (first on line {first})"),
            ));
        }
        out.push((id, row.get(path, 1)?.trim().to_string(), row.line));
    }
    Ok(out)
}

fn parse_value<T: std::str::FromStr>(path: &Path, line: u64, raw: &str, what: &str) -> Result<T>
where
    T::Err: std::fmt::Display,
{
    raw.parse()
        .map_err(|e| IoError::parse(path, line, format!("bad {what} {raw:?}: {e}")))
}

pub fn import_raw(
    edge_file: &Path,
    label_file: &Path,
    feature_file: Option<&Path>,
    opts: &ImportOptions,
) -> Result<Imported> {
    let records = read_keyed(label_file, opts)?;
    if records.is_empty() {
        return Err(IoError::invalid(label_file, "no node records"));
    }
    let nodes = NodeIndex::build(records.iter().map(|r| r.0.clone()).collect());
    let n = nodes.ids.len();

    // label column, reordered to node index order
    let mut raw_values = vec![(String::new(), 0u64); n];
    for (id, value, line) in records {
        raw_values[nodes.index[&id]] = (value, line);
    }
    let (labels, mut target, labels_from) = match &opts.labels {
        LabelSource::Classes => {
            let labels = raw_values
                .iter()
                .map(|(v, line)| parse_value::<usize>(label_file, *line, v, "class label"))
                .collect::<Result<Vec<_>>>()?;
            (labels, None, None)
        }
        source => {
            let t = raw_values
                .iter()
                .map(|(v, line)| parse_value::<i64>(label_file, *line, v, "target"))
                .collect::<Result<Vec<_>>>()?;
            let (labels, tag) = match source {
                LabelSource::QuantileBuckets(k) => {
                    (quantile_buckets(&t, *k)?, format!("quantile:{k}"))
                }
                LabelSource::Boundaries(b) => {
                    let joined: Vec<String> = b.iter().map(i64::to_string).collect();
                    (
                        boundary_buckets(&t, b)?,
                        format!("boundaries:{}", joined.join(";")),
                    )
                }
                LabelSource::Classes => unreachable!(),
            };
            (labels, Some(t), Some(tag))
        }
    };
    let num_classes = labels.iter().max().map_or(0, |m| m + 1);
    if num_classes < 2 {
        return Err(IoError::invalid(label_file, "need at least two classes"));
    }

    if let Some(path) = &opts.target_file {
        let mut t = vec![None; n];
        for (id, value, line) in read_keyed(path, opts)? {
            let v = *nodes
                .index
                .get(&id)
                .ok_or_else(|| IoError::parse(path, line, format!("unknown node id {id:?}")))?;
            t[v] = Some(parse_value::<i64>(path, line, &value, "target")?);
        }
        let t = t
            .into_iter()
            .enumerate()
            .map(|(v, x)| {
                x.ok_or_else(|| {
                    IoError::invalid(path, format!("no target for node {:?}", nodes.ids[v]))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        target = Some(t);
    }

    let (_, rows) = read_rows(edge_file, opts.delimiter, opts.header)?;
    let mut edges = Vec::with_capacity(rows.len());
    for row in &rows {
        row.expect_len(edge_file, 2)?;
        let u = nodes.lookup(edge_file, row, row.get(edge_file, 0)?.trim())?;
        let v = nodes.lookup(edge_file, row, row.get(edge_file, 1)?.trim())?;
        edges.push((u, v));
    }
    let (graph, stats) = Graph::from_edges_with_stats(&edges, n, opts.directed)?;

    let (features, feature_dim) = match feature_file {
        None => (Vec::new(), 0),
        Some(path) => match opts.feature_format {
            FeatureFormat::Dense => read_dense_features(path, opts, &nodes)?,
            FeatureFormat::SparseJson => read_sparse_json_features(path, &nodes)?,
        },
    };

    let task = if num_classes == 2 {
        Task::Binary
    } else {
        Task::Multiclass
    };
    let dataset = Dataset::new(
        opts.name.clone(),
        graph,
        labels,
        num_classes,
        features,
        feature_dim,
        target,
        task,
    )?;
    let mut meta = Meta::for_dataset(&dataset);
    meta.source = opts.source.clone();
    meta.labels_from = labels_from;
    Ok(Imported {
        dataset,
        id_map: nodes.ids,
        meta,
        stats,
    })
}

fn read_dense_features(
    path: &Path,
    opts: &ImportOptions,
    nodes: &NodeIndex,
) -> Result<(Vec<f64>, usize)> {
    let (_, rows) = read_rows(path, opts.delimiter, opts.header)?;
    let n = nodes.ids.len();
    let dim = rows.first().map_or(0, |r| r.fields.len().saturating_sub(1));
    let mut features = vec![0.0; n * dim];
    let mut seen = vec![false; n];
    for row in &rows {
        row.expect_len(path, dim + 1)?;
        let v = nodes.lookup(path, row, row.get(path, 0)?.trim())?;
        if std::mem::replace(&mut seen[v], true) {
            return Err(IoError::parse(path, row.line, "duplicate node record"));
        }
        for j in 0..dim {
            features[v * dim + j] = row.parse(path, j + 1, "feature")?;
        }
    }
    if let Some(v) = seen.iter().position(|s| !s) {
        return Err(IoError::invalid(
            path,
            format!("no features for node {:?}", nodes.ids[v]),
        ));
    }
    Ok((features, dim))
}

fn read_sparse_json_features(path: &Path, nodes: &NodeIndex) -> Result<(Vec<f64>, usize)> {
    let text = read_text(path)?;
    let map: HashMap<String, Vec<usize>> = serde_json::from_str(&text)
        .map_err(|e| IoError::parse(path, e.line() as u64, e.to_string()))?;
    let n = nodes.ids.len();
    let dim = map.values().flatten().max().map_or(0, |m| m + 1);
    let mut features = vec![0.0; n * dim];
    let mut seen = vec![false; n];
    for (id, active) in &map {
        let v = *nodes
            .index
            .get(id)
            .ok_or_else(|| IoError::invalid(path, format!("unknown node id {id:?}")))?;
        seen[v] = true;
        for &j in active {
            features[v * dim + j] = 1.0;
        }
    }
    if let Some(v) = seen.iter().position(|s| !s) {
        return Err(IoError::invalid(
            path,
            format!("no features for node {:?}", nodes.ids[v]),
        ));
    }
    Ok((features, dim))
}

/// Writes `node_id,original_id` rows.
pub fn write_id_map(path: &Path, ids: &[String]) -> Result<()> {
    let mut out = CsvOut::create(path)?;
    out.row(["node_id", "original_id"])?;
    for (i, id) in ids.iter().enumerate() {
        out.row([i.to_string().as_str(), id.as_str()])?;
    }
    out.finish()
}
