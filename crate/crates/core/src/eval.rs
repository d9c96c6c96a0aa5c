//! Scoring predictions and summarizing results across splits and models.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::dataset::Task;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum MetricKind {
    Accuracy,
    RocAuc,
}

impl MetricKind {
    /// Accuracy for multiclass tasks, ROC AUC for binary ones.
    pub fn for_task(task: Task) -> Self {
        match task {
            Task::Multiclass => MetricKind::Accuracy,
            Task::Binary => MetricKind::RocAuc,
        }
    }
}

/// Class-score rows keyed by node index.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Scores {
    rows: BTreeMap<usize, Vec<f64>>,
}

impl Scores {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns the previous row for `node`, if any.
    pub fn insert(&mut self, node: usize, row: Vec<f64>) -> Option<Vec<f64>> {
        self.rows.insert(node, row)
    }

    pub fn row(&self, node: usize) -> Option<&[f64]> {
        self.rows.get(&node).map(Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &[f64])> {
        self.rows.iter().map(|(&v, r)| (v, r.as_slice()))
    }

    fn checked_row(&self, node: usize, width: usize) -> Result<&[f64]> {
        let row = self.row(node).ok_or(Error::MissingPrediction(node))?;
        if row.len() != width {
            return Err(Error::ScoreWidth {
                node,
                width: row.len(),
                expected: width,
            });
        }
        Ok(row)
    }

    /// Predicted class per node for every row of the expected width.
    pub fn argmax_per_node(
        &self,
        num_nodes: usize,
        num_classes: usize,
    ) -> Result<Vec<Option<usize>>> {
        let mut out = alloc::vec![None; num_nodes];
        for (v, _) in self.iter() {
            if v >= num_nodes {
                return Err(Error::NodeOutOfRange {
                    index: v,
                    num_nodes,
                });
            }
            let row = self.checked_row(v, num_classes)?;
            out[v] = Some(argmax(row));
        }
        Ok(out)
    }
}

impl FromIterator<(usize, Vec<f64>)> for Scores {
    fn from_iter<I: IntoIterator<Item = (usize, Vec<f64>)>>(iter: I) -> Self {
        Scores {
            rows: iter.into_iter().collect(),
        }
    }
}

/// Index of the largest score; the lowest index wins ties.
pub fn argmax(row: &[f64]) -> usize {
    let mut best = 0;
    for (i, &s) in row.iter().enumerate() {
        if s > row[best] {
            best = i;
        }
    }
    best
}

/// Share of `nodes` whose argmax class equals the label.
pub fn accuracy(
    scores: &Scores,
    labels: &[usize],
    num_classes: usize,
    nodes: &[usize],
) -> Result<f64> {
    if nodes.is_empty() {
        return Err(Error::TooFewValues { min: 1, actual: 0 });
    }
    let mut correct = 0usize;
    for &v in nodes {
        let row = scores.checked_row(v, num_classes)?;
        correct += usize::from(argmax(row) == labels[v]);
    }
    Ok(correct as f64 / nodes.len() as f64)
}

/// Area under the ROC curve via the Mann-Whitney statistic. Tied scores
/// share their average rank, which counts a tied positive/negative pair as
/// half a win.
pub fn roc_auc(scores: &[f64], positive: &[bool]) -> Result<f64> {
    if scores.len() != positive.len() {
        return Err(Error::LengthMismatch {
            what: "labels",
            expected: scores.len(),
            actual: positive.len(),
        });
    }
    let num_pos = positive.iter().filter(|&&p| p).count();
    let num_neg = positive.len() - num_pos;
    if num_pos == 0 || num_neg == 0 {
        return Err(Error::SingleClass);
    }
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_unstable_by(|&a, &b| scores[a].total_cmp(&scores[b]));

    // ranks are doubled so midranks stay integral
    let mut pos_rank_sum2: u128 = 0;
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && scores[order[end]].total_cmp(&scores[order[start]]).is_eq() {
            end += 1;
        }
        // 1-based ranks start+1 ..= end, average (start + 1 + end) / 2
        let midrank2 = (start + 1 + end) as u128;
        let pos_in_run = order[start..end].iter().filter(|&&i| positive[i]).count() as u128;
        pos_rank_sum2 += midrank2 * pos_in_run;
        start = end;
    }
    let p = num_pos as u128;
    let u2 = pos_rank_sum2 - p * (p + 1);
    Ok(u2 as f64 / (2 * p * num_neg as u128) as f64)
}

/// ROC AUC over `nodes`, reading column 1 of each two-column score row as
/// the positive-class score.
pub fn roc_auc_nodes(scores: &Scores, labels: &[usize], nodes: &[usize]) -> Result<f64> {
    let mut s = Vec::with_capacity(nodes.len());
    let mut y = Vec::with_capacity(nodes.len());
    for &v in nodes {
        let row = scores.checked_row(v, 2)?;
        s.push(row[1]);
        y.push(labels[v] == 1);
    }
    roc_auc(&s, &y)
}

/// The task's reporting metric over `nodes`.
pub fn score_nodes(
    kind: MetricKind,
    scores: &Scores,
    labels: &[usize],
    num_classes: usize,
    nodes: &[usize],
) -> Result<f64> {
    match kind {
        MetricKind::Accuracy => accuracy(scores, labels, num_classes, nodes),
        MetricKind::RocAuc => roc_auc_nodes(scores, labels, nodes),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Summary {
    pub mean: f64,
    /// Sample standard deviation (`n - 1` denominator).
    pub std: f64,
}

/// Mean and sample standard deviation, by Welford's update.
pub fn aggregate(values: &[f64]) -> Result<Summary> {
    if values.len() < 2 {
        return Err(Error::TooFewValues {
            min: 2,
            actual: values.len(),
        });
    }
    let mut mean = 0.0;
    let mut m2 = 0.0;
    for (i, &x) in values.iter().enumerate() {
        let delta = x - mean;
        mean += delta / (i + 1) as f64;
        m2 += delta * (x - mean);
    }
    let var = m2 / (values.len() - 1) as f64;
    Ok(Summary {
        mean,
        std: libm::sqrt(var.max(0.0)),
    })
}

/// Competition ranking: rank 1 is the highest mean, equal means share the
/// lowest rank and the following rank is skipped. Ranks are returned in
/// input order.
pub fn rank_models(means: &[f64]) -> Vec<usize> {
    means
        .iter()
        .map(|&m| 1 + means.iter().filter(|&&other| other > m).count())
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ResultEntry {
    pub model: String,
    pub dataset: String,
    pub metric: MetricKind,
    pub per_split: Vec<f64>,
    pub mean: f64,
    pub std: f64,
}

impl ResultEntry {
    pub fn new(
        model: impl Into<String>,
        dataset: impl Into<String>,
        metric: MetricKind,
        per_split: Vec<f64>,
    ) -> Result<Self> {
        let Summary { mean, std } = aggregate(&per_split)?;
        Ok(ResultEntry {
            model: model.into(),
            dataset: dataset.into(),
            metric,
            per_split,
            mean,
            std,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ResultTable {
    pub entries: Vec<ResultEntry>,
}

impl ResultTable {
    /// Datasets in first-appearance order.
    pub fn datasets(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for e in &self.entries {
            if !out.contains(&e.dataset.as_str()) {
                out.push(&e.dataset);
            }
        }
        out
    }

    /// Models in first-appearance order.
    pub fn models(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for e in &self.entries {
            if !out.contains(&e.model.as_str()) {
                out.push(&e.model);
            }
        }
        out
    }

    pub fn get(&self, model: &str, dataset: &str) -> Option<&ResultEntry> {
        self.entries
            .iter()
            .find(|e| e.model == model && e.dataset == dataset)
    }

    /// Per-dataset competition ranks of every model that has an entry for
    /// that dataset, as `(dataset, [(model, rank)])`.
    pub fn ranks(&self) -> Vec<(String, Vec<(String, usize)>)> {
        self.datasets()
            .into_iter()
            .map(|d| {
                let rows: Vec<&ResultEntry> =
                    self.entries.iter().filter(|e| e.dataset == d).collect();
                let means: Vec<f64> = rows.iter().map(|e| e.mean).collect();
                let ranked = rows
                    .iter()
                    .zip(rank_models(&means))
                    .map(|(e, r)| (e.model.clone(), r))
                    .collect();
                (String::from(d), ranked)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn one_hot(rows: &[usize], c: usize) -> Scores {
        rows.iter()
            .enumerate()
            .map(|(v, &l)| {
                let mut r = vec![0.0; c];
                r[l] = 1.0;
                (v, r)
            })
            .collect()
    }

    #[test]
    fn accuracy_all_correct() {
        let labels = [0, 2, 1, 2];
        let s = one_hot(&labels, 3);
        assert_eq!(accuracy(&s, &labels, 3, &[0, 1, 2, 3]).unwrap(), 1.0);
    }

    #[test]
    fn uniform_scores_predict_class_zero() {
        let labels = [0, 1, 2, 3, 4, 0, 0];
        let s: Scores = (0..7).map(|v| (v, vec![0.2; 5])).collect();
        let acc = accuracy(&s, &labels, 5, &[0, 1, 2, 3, 4, 5, 6]).unwrap();
        assert_eq!(acc, 3.0 / 7.0);
    }

    #[test]
    fn accuracy_errors() {
        let labels = [0, 1];
        let s: Scores = [(0, vec![1.0, 0.0])].into_iter().collect();
        assert_eq!(
            accuracy(&s, &labels, 2, &[0, 1]),
            Err(Error::MissingPrediction(1))
        );
        assert_eq!(
            accuracy(&s, &labels, 3, &[0]),
            Err(Error::ScoreWidth {
                node: 0,
                width: 2,
                expected: 3
            })
        );
    }

    #[test]
    fn auc_basic() {
        assert_eq!(
            roc_auc(&[0.1, 0.2, 0.8, 0.9], &[false, false, true, true]).unwrap(),
            1.0
        );
        assert_eq!(
            roc_auc(&[0.1, 0.2, 0.8, 0.9], &[true, true, false, false]).unwrap(),
            0.0
        );
        assert_eq!(
            roc_auc(&[0.5; 6], &[true, false, true, false, false, true]).unwrap(),
            0.5
        );
        assert_eq!(roc_auc(&[1.0, 2.0], &[true, true]), Err(Error::SingleClass));
    }

    #[test]
    fn auc_with_one_tie() {
        // pairs: (0.5+,0.5-) = 0.5, (0.5+,0.1-) = 1, (0.9+,0.5-) = 1, (0.9+,0.1-) = 1
        let auc = roc_auc(&[0.5, 0.5, 0.1, 0.9], &[true, false, false, true]).unwrap();
        assert_eq!(auc, 3.5 / 4.0);
    }

    #[test]
    fn auc_nodes_reads_second_column() {
        let s: Scores = [
            (0, vec![0.9, 0.1]),
            (1, vec![0.1, 0.9]),
            (2, vec![0.0, 0.0]),
        ]
        .into_iter()
        .collect();
        assert_eq!(roc_auc_nodes(&s, &[0, 1, 0], &[0, 1, 2]).unwrap(), 1.0);
        assert_eq!(
            score_nodes(MetricKind::RocAuc, &s, &[0, 1, 0], 2, &[0, 1]).unwrap(),
            1.0
        );
    }

    #[test]
    fn aggregate_textbook() {
        assert_eq!(
            aggregate(&[0.5, 0.5, 0.5]).unwrap(),
            Summary {
                mean: 0.5,
                std: 0.0
            }
        );
        assert_eq!(
            aggregate(&[1.0, 2.0, 3.0]).unwrap(),
            Summary {
                mean: 2.0,
                std: 1.0
            }
        );
        assert_eq!(
            aggregate(&[1.0]),
            Err(Error::TooFewValues { min: 2, actual: 1 })
        );
    }

    #[test]
    fn competition_ranking() {
        assert_eq!(rank_models(&[0.3]), vec![1]);
        assert_eq!(rank_models(&[0.5, 0.9, 0.5, 0.1]), vec![2, 1, 2, 4]);
    }

    #[test]
    fn table_ranks() {
        let mut t = ResultTable::default();
        for (m, vals) in [("a", [0.5, 0.6]), ("b", [0.7, 0.8]), ("c", [0.5, 0.6])] {
            t.entries
                .push(ResultEntry::new(m, "d", MetricKind::Accuracy, vals.to_vec()).unwrap());
        }
        let ranks = t.ranks();
        assert_eq!(ranks[0].0, "d");
        assert_eq!(
            ranks[0].1,
            vec![("a".into(), 2), ("b".into(), 1), ("c".into(), 2)]
        );
        assert_eq!(t.models(), vec!["a", "b", "c"]);
    }
}
