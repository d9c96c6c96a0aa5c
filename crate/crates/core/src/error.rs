use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("graph must have at least one node")]
    EmptyGraph,
    #[error("node index {index} out of range for graph with {num_nodes} nodes")]
    NodeOutOfRange { index: usize, num_nodes: usize },
    #[error("graph has no edges")]
    NoEdges,
    #[error("every node is isolated")]
    AllIsolated,
    #[error("adjusted homophily is undefined: all edge endpoints belong to one class")]
    DegenerateHomophily,
    #[error("label informativeness is undefined: endpoint label entropy is zero")]
    ZeroEntropy,
    #[error("clustering coefficient is undefined: graph has no wedges")]
    NoWedges,
    #[error("label {label} at node {node} is not below num_classes = {num_classes}")]
    LabelOutOfRange {
        node: usize,
        label: usize,
        num_classes: usize,
    },
    #[error("length mismatch for {what}: expected {expected}, got {actual}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        actual: usize,
    },
    #[error("invalid dataset: {0}")]
    InvalidDataset(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("dataset has no regression target")]
    MissingTarget,
    #[error("{buckets} buckets requested but only {distinct} distinct target values")]
    TooManyBuckets { buckets: usize, distinct: usize },
    #[error("invalid split {index}: {reason}")]
    InvalidSplit { index: usize, reason: String },
    #[error("need at least {min} nodes, got {actual}")]
    TooFewNodes { min: usize, actual: usize },
    #[error("train set is empty")]
    EmptyTrainSet,
    #[error("no prediction for node {0}")]
    MissingPrediction(usize),
    #[error("score row for node {node} has width {width}, expected {expected}")]
    ScoreWidth {
        node: usize,
        width: usize,
        expected: usize,
    },
    #[error("ROC AUC needs both positive and negative examples")]
    SingleClass,
    #[error("need at least {min} values, got {actual}")]
    TooFewValues { min: usize, actual: usize },
    #[error("report does not belong to this dataset: {0}")]
    ReportMismatch(String),
    #[error("index map covers {map_len} nodes but splits cover {split_len}")]
    MapMismatch { map_len: usize, split_len: usize },
}
