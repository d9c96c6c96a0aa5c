//! Graph and label statistics.
//!
//! Every metric works on the undirected view of its input: directed graphs
//! are symmetrized first. `d(v)` below is the undirected degree and
//! `D_k = sum of d(v) over nodes v with label k`.

mod clustering;
mod diameter;
mod homophily;
mod informativeness;
mod report;

pub use clustering::{
    avg_local_clustering, global_clustering, local_clustering, triangles_per_node,
};
pub use diameter::{diameter, eccentricity, Diameter};
pub use homophily::{adjusted_homophily, edge_homophily, node_homophily};
pub use informativeness::label_informativeness;
pub use report::{stat_report, StatReport};

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn check_labels(graph: &Graph, labels: &[usize]) -> Result<()> {
    if labels.len() != graph.num_nodes() {
        return Err(Error::LengthMismatch {
            what: "labels",
            expected: graph.num_nodes(),
            actual: labels.len(),
        });
    }
    Ok(())
}

fn num_classes(labels: &[usize]) -> usize {
    labels.iter().copied().max().map_or(0, |m| m + 1)
}

/// `D_k` for every class of an undirected graph.
fn degree_mass(graph: &Graph, labels: &[usize]) -> Vec<u64> {
    let mut mass = alloc::vec![0u64; num_classes(labels)];
    for (v, &label) in labels.iter().enumerate() {
        mass[label] += graph.degree(v) as u64;
    }
    mass
}
