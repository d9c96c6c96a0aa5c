use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Task {
    Multiclass,
    Binary,
}

/// A labeled graph with node features and an optional integer regression
/// target.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    pub name: String,
    pub graph: Graph,
    pub labels: Vec<usize>,
    pub num_classes: usize,
    /// Row-major `num_nodes x feature_dim`.
    pub features: Vec<f64>,
    pub feature_dim: usize,
    pub regression_target: Option<Vec<i64>>,
    pub task: Task,
}

impl Dataset {
    /// Builds a dataset and checks every length and label invariant.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        graph: Graph,
        labels: Vec<usize>,
        num_classes: usize,
        features: Vec<f64>,
        feature_dim: usize,
        regression_target: Option<Vec<i64>>,
        task: Task,
    ) -> Result<Self> {
        let ds = Dataset {
            name: name.into(),
            graph,
            labels,
            num_classes,
            features,
            feature_dim,
            regression_target,
            task,
        };
        ds.validate()?;
        Ok(ds)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.graph.num_nodes();
        if self.num_classes < 2 {
            return Err(Error::InvalidDataset(format!(
                "num_classes must be at least 2, got {}",
                self.num_classes
            )));
        }
        if self.task == Task::Binary && self.num_classes != 2 {
            return Err(Error::InvalidDataset(format!(
                "binary task requires 2 classes, got {}",
                self.num_classes
            )));
        }
        if self.labels.len() != n {
            return Err(Error::LengthMismatch {
                what: "labels",
                expected: n,
                actual: self.labels.len(),
            });
        }
        if let Some((node, &label)) = self
            .labels
            .iter()
            .enumerate()
            .find(|(_, &l)| l >= self.num_classes)
        {
            return Err(Error::LabelOutOfRange {
                node,
                label,
                num_classes: self.num_classes,
            });
        }
        if self.features.len() != n * self.feature_dim {
            return Err(Error::LengthMismatch {
                what: "features",
                expected: n * self.feature_dim,
                actual: self.features.len(),
            });
        }
        if let Some(t) = &self.regression_target {
            if t.len() != n {
                return Err(Error::LengthMismatch {
                    what: "regression_target",
                    expected: n,
                    actual: t.len(),
                });
            }
        }
        Ok(())
    }

    #[inline]
    pub fn num_nodes(&self) -> usize {
        self.graph.num_nodes()
    }

    pub fn feature_row(&self, v: usize) -> &[f64] {
        &self.features[v * self.feature_dim..(v + 1) * self.feature_dim]
    }

    pub fn class_counts(&self) -> Vec<usize> {
        let mut counts = alloc::vec![0usize; self.num_classes];
        for &l in &self.labels {
            counts[l] += 1;
        }
        counts
    }
}

/// One train/validation/test partition. Each list is sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Split {
    pub train: Vec<usize>,
    pub valid: Vec<usize>,
    pub test: Vec<usize>,
}

impl Split {
    /// Checks that the three sets partition `0..num_nodes` and that the test
    /// set is non-empty.
    pub fn validate(&self, index: usize, num_nodes: usize) -> Result<()> {
        let invalid = |reason: String| Error::InvalidSplit { index, reason };
        let mut seen = alloc::vec![false; num_nodes];
        for (part, nodes) in [
            ("train", &self.train),
            ("valid", &self.valid),
            ("test", &self.test),
        ] {
            for &v in nodes.iter() {
                if v >= num_nodes {
                    return Err(invalid(format!("{part} node {v} out of range")));
                }
                if seen[v] {
                    return Err(invalid(format!("node {v} appears twice")));
                }
                seen[v] = true;
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(invalid(format!("node {v} is in no set")));
        }
        if self.test.is_empty() {
            return Err(invalid("empty test set".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SplitSet {
    pub seed: u64,
    pub splits: Vec<Split>,
}

impl SplitSet {
    pub fn validate(&self, num_nodes: usize) -> Result<()> {
        self.splits
            .iter()
            .enumerate()
            .try_for_each(|(i, s)| s.validate(i, num_nodes))
    }

    pub fn len(&self) -> usize {
        self.splits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.splits.is_empty()
    }
}
