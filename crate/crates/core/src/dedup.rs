//! Duplicate-node detection and the train/test leakage it causes.
//!
//! A node is a duplicate when it has no incoming edges and some other node
//! has the same regression target and exactly the same set of outgoing
//! edges. Node features play no part in the predicate. Such nodes let a
//! model label a test node by looking up a train node with an identical
//! out-neighborhood; [`neighborhood_match_predict`] is that lookup, and
//! [`leakage_report`] splits any model's test accuracy into the duplicate
//! and non-duplicate parts.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::dataset::{Dataset, Split, SplitSet};
use crate::error::{Error, Result};
use crate::eval::{aggregate, Summary};
use crate::graph::{Graph, NodeId};

/// Nodes sharing one `(target, out-neighbor set)` key, at least one of which
/// is a duplicate.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DuplicateGroup {
    pub target: i64,
    pub out_neighbors: Vec<usize>,
    /// All nodes with this key, ascending.
    pub members: Vec<usize>,
    /// The members with in-degree zero, ascending.
    pub duplicates: Vec<usize>,
    /// The single member with incoming edges, if exactly one exists.
    pub keeper: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DuplicateReport {
    pub num_nodes: usize,
    pub duplicate_ids: Vec<usize>,
    pub groups: Vec<DuplicateGroup>,
    /// Duplicate count per class label.
    pub per_class_duplicates: Vec<usize>,
}

impl DuplicateReport {
    pub fn num_duplicates(&self) -> usize {
        self.duplicate_ids.len()
    }

    pub fn num_non_duplicates(&self) -> usize {
        self.num_nodes - self.duplicate_ids.len()
    }

    /// Per-node duplicate flags.
    pub fn mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.num_nodes];
        for &v in &self.duplicate_ids {
            mask[v] = true;
        }
        mask
    }
}

pub fn find_duplicates(dataset: &Dataset) -> Result<DuplicateReport> {
    let target = dataset
        .regression_target
        .as_ref()
        .ok_or(Error::MissingTarget)?;
    let g = &dataset.graph;
    let mut by_key: BTreeMap<(i64, &[NodeId]), Vec<usize>> = BTreeMap::new();
    for (v, &t) in target.iter().enumerate() {
        by_key.entry((t, g.out_neighbors(v))).or_default().push(v);
    }

    let mut groups = Vec::new();
    let mut duplicate_ids = Vec::new();
    for ((t, outs), members) in by_key {
        if members.len() < 2 {
            continue;
        }
        let duplicates: Vec<usize> = members
            .iter()
            .copied()
            .filter(|&v| g.in_degree(v) == 0)
            .collect();
        if duplicates.is_empty() {
            continue;
        }
        let mut with_in = members.iter().copied().filter(|&v| g.in_degree(v) > 0);
        let keeper = match (with_in.next(), with_in.next()) {
            (Some(k), None) => Some(k),
            _ => None,
        };
        duplicate_ids.extend_from_slice(&duplicates);
        groups.push(DuplicateGroup {
            target: t,
            out_neighbors: outs.iter().map(|&u| u as usize).collect(),
            members,
            duplicates,
            keeper,
        });
    }
    duplicate_ids.sort_unstable();

    let mut per_class_duplicates = vec![0usize; dataset.num_classes];
    for &v in &duplicate_ids {
        per_class_duplicates[dataset.labels[v]] += 1;
    }
    Ok(DuplicateReport {
        num_nodes: g.num_nodes(),
        duplicate_ids,
        groups,
        per_class_duplicates,
    })
}

/// Old-to-new node index map produced by node removal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexMap {
    pub old_to_new: Vec<Option<usize>>,
    pub num_kept: usize,
}

impl IndexMap {
    pub fn identity(n: usize) -> Self {
        IndexMap {
            old_to_new: (0..n).map(Some).collect(),
            num_kept: n,
        }
    }

    /// Keeps the nodes where `keep` is true, renumbered densely in order.
    pub fn from_mask(keep: &[bool]) -> Self {
        let mut next = 0;
        let old_to_new = keep
            .iter()
            .map(|&k| {
                k.then(|| {
                    next += 1;
                    next - 1
                })
            })
            .collect();
        IndexMap {
            old_to_new,
            num_kept: next,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.old_to_new
            .iter()
            .enumerate()
            .all(|(i, m)| *m == Some(i))
    }

    /// Surviving old indices in new-index order.
    pub fn kept(&self) -> Vec<usize> {
        self.old_to_new
            .iter()
            .enumerate()
            .filter_map(|(i, m)| m.map(|_| i))
            .collect()
    }
}

/// Removes every duplicate named in `report` and renumbers the survivors
/// in their original order.
pub fn filter_duplicates(
    dataset: &Dataset,
    report: &DuplicateReport,
) -> Result<(Dataset, IndexMap)> {
    let n = dataset.num_nodes();
    if report.num_nodes != n {
        return Err(Error::ReportMismatch(format!(
            "report covers {} nodes, dataset has {n}",
            report.num_nodes
        )));
    }
    if let Some(&v) = report.duplicate_ids.iter().find(|&&v| v >= n) {
        return Err(Error::ReportMismatch(format!(
            "duplicate id {v} out of range"
        )));
    }
    let mask = report.mask();
    let keep: Vec<bool> = mask.iter().map(|d| !d).collect();
    let map = IndexMap::from_mask(&keep);
    let kept = map.kept();
    if kept.is_empty() {
        return Err(Error::EmptyGraph);
    }

    let g = &dataset.graph;
    let edges: Vec<(usize, usize)> = g
        .edges()
        .filter_map(|(u, v)| Some((map.old_to_new[u]?, map.old_to_new[v]?)))
        .collect();
    let graph = Graph::from_edges(&edges, kept.len(), g.is_directed())?;
    let dim = dataset.feature_dim;
    let mut features = Vec::with_capacity(kept.len() * dim);
    for &v in &kept {
        features.extend_from_slice(dataset.feature_row(v));
    }
    let filtered = Dataset::new(
        dataset.name.clone(),
        graph,
        kept.iter().map(|&v| dataset.labels[v]).collect(),
        dataset.num_classes,
        features,
        dim,
        dataset
            .regression_target
            .as_ref()
            .map(|t| kept.iter().map(|&v| t[v]).collect()),
        dataset.task,
    )?;
    Ok((filtered, map))
}

/// Index of the largest count, lowest index on ties.
fn argmax_count(counts: &[usize]) -> usize {
    let mut best = 0;
    for (c, &n) in counts.iter().enumerate() {
        if n > counts[best] {
            best = c;
        }
    }
    best
}

/// Predicts each test node's class from train nodes with an identical
/// out-neighbor set: majority label among the matches, lowest class on a
/// tie. Test nodes with no outgoing edges or no match get the train-set
/// majority class. Returned in the order of `split.test`.
pub fn neighborhood_match_predict(dataset: &Dataset, split: &Split) -> Result<Vec<usize>> {
    if split.train.is_empty() {
        return Err(Error::EmptyTrainSet);
    }
    let g = &dataset.graph;
    let c = dataset.num_classes;
    let mut train_counts = vec![0usize; c];
    let mut by_outs: BTreeMap<&[NodeId], Vec<usize>> = BTreeMap::new();
    for &u in &split.train {
        let label = dataset.labels[u];
        train_counts[label] += 1;
        let outs = g.out_neighbors(u);
        if !outs.is_empty() {
            by_outs.entry(outs).or_insert_with(|| vec![0; c])[label] += 1;
        }
    }
    let fallback = argmax_count(&train_counts);
    Ok(split
        .test
        .iter()
        .map(|&v| {
            let outs = g.out_neighbors(v);
            if outs.is_empty() {
                return fallback;
            }
            by_outs
                .get(outs)
                .map_or(fallback, |counts| argmax_count(counts))
        })
        .collect())
}

/// Test accuracy of one split restricted to duplicates and to the rest.
/// A cell is `None` when that part of the test set is empty.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LeakageCell {
    pub on_duplicates: Option<f64>,
    pub on_non_duplicates: Option<f64>,
    pub test_duplicates: usize,
    pub test_non_duplicates: usize,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LeakageReport {
    pub per_split: Vec<LeakageCell>,
    /// Mean and sample std over splits where the cell is present; `None`
    /// with fewer than two such splits.
    pub on_duplicates: Option<Summary>,
    pub on_non_duplicates: Option<Summary>,
}

/// Splits test accuracy into duplicate and non-duplicate parts.
///
/// `predictions[i]` holds a predicted class per node for split `i`; every
/// test node of that split must have one.
pub fn leakage_report(
    labels: &[usize],
    splits: &SplitSet,
    report: &DuplicateReport,
    predictions: &[Vec<Option<usize>>],
) -> Result<LeakageReport> {
    if predictions.len() != splits.len() {
        return Err(Error::LengthMismatch {
            what: "per-split predictions",
            expected: splits.len(),
            actual: predictions.len(),
        });
    }
    if report.num_nodes != labels.len() {
        return Err(Error::ReportMismatch(format!(
            "report covers {} nodes, dataset has {}",
            report.num_nodes,
            labels.len()
        )));
    }
    let mask = report.mask();
    let mut per_split = Vec::with_capacity(splits.len());
    for (split, preds) in splits.splits.iter().zip(predictions) {
        let mut hits = [0usize; 2];
        let mut totals = [0usize; 2];
        for &v in &split.test {
            let p = preds
                .get(v)
                .copied()
                .flatten()
                .ok_or(Error::MissingPrediction(v))?;
            let part = usize::from(!mask[v]);
            totals[part] += 1;
            hits[part] += usize::from(p == labels[v]);
        }
        let acc = |i: usize| (totals[i] > 0).then(|| hits[i] as f64 / totals[i] as f64);
        per_split.push(LeakageCell {
            on_duplicates: acc(0),
            on_non_duplicates: acc(1),
            test_duplicates: totals[0],
            test_non_duplicates: totals[1],
        });
    }
    let summarize = |pick: fn(&LeakageCell) -> Option<f64>| {
        let values: Vec<f64> = per_split.iter().filter_map(pick).collect();
        aggregate(&values).ok()
    };
    Ok(LeakageReport {
        on_duplicates: summarize(|c| c.on_duplicates),
        on_non_duplicates: summarize(|c| c.on_non_duplicates),
        per_split,
    })
}

/// Runs [`neighborhood_match_predict`] on every split and returns the
/// predictions in the per-node layout [`leakage_report`] expects.
pub fn oracle_predictions(dataset: &Dataset, splits: &SplitSet) -> Result<Vec<Vec<Option<usize>>>> {
    splits
        .splits
        .iter()
        .map(|split| {
            let preds = neighborhood_match_predict(dataset, split)?;
            let mut per_node = vec![None; dataset.num_nodes()];
            for (&v, p) in split.test.iter().zip(preds) {
                per_node[v] = Some(p);
            }
            Ok(per_node)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::Task;

    /// Nodes 0..5 share target 7 and out-set {9, 10}; node 4 also receives
    /// an edge from node 5. Nodes 5..11 have distinct targets.
    fn planted() -> Dataset {
        let mut edges = Vec::new();
        for v in 0..5 {
            edges.push((v, 9));
            edges.push((v, 10));
        }
        edges.extend_from_slice(&[(5, 4), (6, 7), (7, 8), (9, 10), (11, 9)]);
        let g = Graph::from_edges(&edges, 12, true).unwrap();
        let target = vec![7, 7, 7, 7, 7, 1, 2, 3, 4, 5, 6, 8];
        let labels = vec![2, 2, 2, 2, 2, 0, 1, 0, 1, 0, 1, 0];
        Dataset::new(
            "planted",
            g,
            labels,
            3,
            vec![],
            0,
            Some(target),
            Task::Multiclass,
        )
        .unwrap()
    }

    #[test]
    fn planted_group() {
        let ds = planted();
        let r = find_duplicates(&ds).unwrap();
        assert_eq!(r.duplicate_ids, vec![0, 1, 2, 3]);
        assert_eq!(r.groups.len(), 1);
        assert_eq!(r.groups[0].keeper, Some(4));
        assert_eq!(r.groups[0].members, vec![0, 1, 2, 3, 4]);
        assert_eq!(r.groups[0].out_neighbors, vec![9, 10]);
        assert_eq!(r.per_class_duplicates, vec![0, 0, 4]);
        assert_eq!(r.num_non_duplicates(), 8);
    }

    #[test]
    fn distinct_targets_give_empty_report() {
        let mut ds = planted();
        ds.regression_target = Some((0..12).collect());
        let r = find_duplicates(&ds).unwrap();
        assert!(r.duplicate_ids.is_empty());
        assert!(r.groups.is_empty());
        let (filtered, map) = filter_duplicates(&ds, &r).unwrap();
        assert_eq!(filtered, ds);
        assert!(map.is_identity());
    }

    #[test]
    fn missing_target() {
        let mut ds = planted();
        ds.regression_target = None;
        assert_eq!(find_duplicates(&ds), Err(Error::MissingTarget));
    }

    #[test]
    fn keeperless_group_is_removed_entirely() {
        let g = Graph::from_edges(&[(0, 2), (1, 2)], 3, true).unwrap();
        let ds = Dataset::new(
            "k",
            g,
            vec![0, 1, 0],
            2,
            vec![],
            0,
            Some(vec![5, 5, 6]),
            Task::Binary,
        )
        .unwrap();
        let r = find_duplicates(&ds).unwrap();
        assert_eq!(r.duplicate_ids, vec![0, 1]);
        assert_eq!(r.groups[0].keeper, None);
    }

    #[test]
    fn filter_then_refind_is_empty() {
        let ds = planted();
        let r = find_duplicates(&ds).unwrap();
        let (filtered, map) = filter_duplicates(&ds, &r).unwrap();
        assert_eq!(filtered.num_nodes(), 8);
        assert_eq!(map.old_to_new[4], Some(0));
        assert_eq!(map.old_to_new[0], None);
        assert_eq!(filtered.regression_target.as_ref().unwrap()[0], 7);
        assert!(find_duplicates(&filtered).unwrap().duplicate_ids.is_empty());
    }

    #[test]
    fn filter_rejects_foreign_report() {
        let ds = planted();
        let mut r = find_duplicates(&ds).unwrap();
        r.num_nodes = 5;
        assert!(matches!(
            filter_duplicates(&ds, &r),
            Err(Error::ReportMismatch(_))
        ));
    }

    #[test]
    fn oracle_recovers_duplicate_labels() {
        let ds = planted();
        let split = Split {
            train: vec![0, 5, 6, 7, 8],
            valid: vec![9, 10],
            test: vec![1, 2, 3, 4, 11],
        };
        let preds = neighborhood_match_predict(&ds, &split).unwrap();
        // node 11 has out-set {9}, unmatched: train majority is class 0
        assert_eq!(preds, vec![2, 2, 2, 2, 0]);
    }

    #[test]
    fn oracle_fallback_and_ties() {
        let ds = planted();
        let split = Split {
            train: vec![6, 8, 5, 7],
            valid: vec![],
            test: vec![0, 9],
        };
        // train labels 1,1,0,0: tie resolves to class 0
        let preds = neighborhood_match_predict(&ds, &split).unwrap();
        assert_eq!(preds, vec![0, 0]);
        let empty = Split {
            train: vec![],
            valid: vec![],
            test: vec![0],
        };
        assert_eq!(
            neighborhood_match_predict(&ds, &empty),
            Err(Error::EmptyTrainSet)
        );
    }

    #[test]
    fn leakage_cells() {
        let ds = planted();
        let report = find_duplicates(&ds).unwrap();
        let splits = SplitSet {
            seed: 0,
            splits: vec![
                Split {
                    train: vec![0, 5, 6, 7, 8],
                    valid: vec![9, 10],
                    test: vec![1, 2, 3, 4, 11],
                },
                Split {
                    train: vec![1, 4, 5, 6, 7],
                    valid: vec![0, 8],
                    test: vec![2, 3, 9, 10, 11],
                },
                Split {
                    train: vec![0, 1, 2, 3, 4, 5],
                    valid: vec![6, 7, 8],
                    test: vec![9, 10, 11],
                },
            ],
        };
        let preds = oracle_predictions(&ds, &splits).unwrap();
        let lr = leakage_report(&ds.labels, &splits, &report, &preds).unwrap();
        assert_eq!(lr.per_split[0].on_duplicates, Some(1.0));
        assert_eq!(lr.per_split[1].on_duplicates, Some(1.0));
        assert_eq!(lr.per_split[2].on_duplicates, None);
        assert_eq!(lr.per_split[2].test_duplicates, 0);
        let dup = lr.on_duplicates.unwrap();
        assert_eq!((dup.mean, dup.std), (1.0, 0.0));
        assert!(lr.on_non_duplicates.is_some());
    }

    #[test]
    fn leakage_missing_prediction() {
        let ds = planted();
        let report = find_duplicates(&ds).unwrap();
        let splits = SplitSet {
            seed: 0,
            splits: vec![Split {
                train: vec![0],
                valid: vec![],
                test: vec![1],
            }],
        };
        let preds = vec![vec![None; 12]];
        assert_eq!(
            leakage_report(&ds.labels, &splits, &report, &preds),
            Err(Error::MissingPrediction(1))
        );
    }
}
