//! Per-split class-score files written by any model.
//!
//! A model directory holds `split_<i>.csv` files with header
//! `node_id,score_0,...,score_{C-1}` and one row per scored node. For
//! binary tasks `score_1` is the positive-class score.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use heterobench_core::eval::Scores;

use super::csvio::{fmt_f64, read_table, CsvOut};
use super::{IoError, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct PredictionSet {
    pub model_name: String,
    pub num_classes: usize,
    /// Scores keyed by split index.
    pub splits: BTreeMap<usize, Scores>,
}

fn score_header(num_classes: usize) -> Vec<String> {
    std::iter::once("node_id".to_string())
        .chain((0..num_classes).map(|c| format!("score_{c}")))
        .collect()
}

pub fn split_file_name(split_index: usize) -> String {
    format!("split_{split_index}.csv")
}

fn split_index_of(path: &Path) -> Option<usize> {
    path.file_name()?
        .to_str()?
        .strip_prefix("split_")?
        .strip_suffix(".csv")?
        .parse()
        .ok()
}

pub fn save_prediction_split(
    dir: &Path,
    split_index: usize,
    scores: &Scores,
    num_classes: usize,
) -> Result<PathBuf> {
    std::fs::create_dir_all(dir).map_err(|e| IoError::io(dir, e))?;
    let path = dir.join(split_file_name(split_index));
    let mut out = CsvOut::create(&path)?;
    out.row(score_header(num_classes))?;
    for (v, row) in scores.iter() {
        if row.len() != num_classes {
            return Err(IoError::invalid(
                &path,
                format!("row for node {v} has {} scores", row.len()),
            ));
        }
        out.row(std::iter::once(v.to_string()).chain(row.iter().map(|&x| fmt_f64(x))))?;
    }
    out.finish()?;
    Ok(path)
}

fn split_files(dir: &Path) -> Result<Vec<(usize, PathBuf)>> {
    let mut files = Vec::new();
    for entry in std::fs::read_dir(dir).map_err(|e| IoError::io(dir, e))? {
        let path = entry.map_err(|e| IoError::io(dir, e))?.path();
        if path.is_file() {
            if let Some(i) = split_index_of(&path) {
                files.push((i, path));
            }
        }
    }
    files.sort();
    Ok(files)
}

/// Loads one model directory; the model is named after the directory.
pub fn load_prediction_set(dir: &Path, num_classes: usize) -> Result<PredictionSet> {
    let files = split_files(dir)?;
    if files.is_empty() {
        return Err(IoError::invalid(dir, "no split_<i>.csv files"));
    }
    let expected = score_header(num_classes);
    let mut splits = BTreeMap::new();
    for (i, path) in files {
        let mut scores = Scores::new();
        for row in read_table(&path, &expected)? {
            row.expect_len(&path, num_classes + 1)?;
            let v: usize = row.parse(&path, 0, "node_id")?;
            let values = (1..=num_classes)
                .map(|j| row.parse::<f64>(&path, j, "score"))
                .collect::<Result<Vec<_>>>()?;
            if scores.insert(v, values).is_some() {
                return Err(IoError::parse(
                    &path,
                    row.line,
                    format!("node {v} listed twice"),
                ));
            }
        }
        splits.insert(i, scores);
    }
    let model_name = dir
        .file_name()
        .and_then(|n| n.to_str())
        .unwrap_or("model")
        .to_string();
    Ok(PredictionSet {
        model_name,
        num_classes,
        splits,
    })
}

/// A directory of model directories, or a single model directory. Models
/// are returned sorted by name.
pub fn load_predictions_dir(dir: &Path, num_classes: usize) -> Result<Vec<PredictionSet>> {
    if !split_files(dir)?.is_empty() {
        return Ok(vec![load_prediction_set(dir, num_classes)?]);
    }
    let mut subdirs = Vec::new();
    for entry in std::fs::read_dir(dir).map_err(|e| IoError::io(dir, e))? {
        let path = entry.map_err(|e| IoError::io(dir, e))?.path();
        if path.is_dir() && !split_files(&path)?.is_empty() {
            subdirs.push(path);
        }
    }
    if subdirs.is_empty() {
        return Err(IoError::invalid(dir, "no prediction files found"));
    }
    subdirs.sort();
    subdirs
        .iter()
        .map(|d| load_prediction_set(d, num_classes))
        .collect()
}
