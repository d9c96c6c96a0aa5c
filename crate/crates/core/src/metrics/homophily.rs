use crate::error::{Error, Result};
use crate::graph::Graph;

use super::{check_labels, degree_mass};

/// Fraction of edges whose endpoints share a label.
pub fn edge_homophily(graph: &Graph, labels: &[usize]) -> Result<f64> {
    check_labels(graph, labels)?;
    let g = graph.undirected_view();
    if g.num_edges() == 0 {
        return Err(Error::NoEdges);
    }
    let same = same_label_edges(&g, labels);
    Ok(same as f64 / g.num_edges() as f64)
}

fn same_label_edges(g: &Graph, labels: &[usize]) -> usize {
    g.edges().filter(|&(u, v)| labels[u] == labels[v]).count()
}

/// Mean over non-isolated nodes of the share of neighbors with the node's
/// own label.
pub fn node_homophily(graph: &Graph, labels: &[usize]) -> Result<f64> {
    check_labels(graph, labels)?;
    let g = graph.undirected_view();
    let mut total = 0.0;
    let mut counted = 0usize;
    for v in 0..g.num_nodes() {
        let nbrs = g.neighbors(v);
        if nbrs.is_empty() {
            continue;
        }
        let same = nbrs
            .iter()
            .filter(|&&u| labels[u as usize] == labels[v])
            .count();
        total += same as f64 / nbrs.len() as f64;
        counted += 1;
    }
    if counted == 0 {
        return Err(Error::AllIsolated);
    }
    Ok(total / counted as f64)
}

/// Edge homophily corrected by its expected value under degree-preserving
/// random wiring: `(h_edge - S) / (1 - S)` with `S = sum_k D_k^2 / (2|E|)^2`.
///
/// Evaluated in integer arithmetic with one final division, so the result is
/// the correctly rounded value of the exact rational.
pub fn adjusted_homophily(graph: &Graph, labels: &[usize]) -> Result<f64> {
    check_labels(graph, labels)?;
    let g = graph.undirected_view();
    let m = g.num_edges();
    if m == 0 {
        return Err(Error::NoEdges);
    }
    let (num, den) = adjusted_homophily_ratio(&g, labels);
    if den == 0 {
        return Err(Error::DegenerateHomophily);
    }
    Ok(num as f64 / den as f64)
}

/// Exact numerator and denominator of adjusted homophily on an undirected
/// graph. Multiplying through by `(2|E|)^2` gives
/// `(4 |E| same - sum_k D_k^2) / (4 |E|^2 - sum_k D_k^2)`.
pub(crate) fn adjusted_homophily_ratio(g: &Graph, labels: &[usize]) -> (i128, i128) {
    let m = g.num_edges() as i128;
    let same = same_label_edges(g, labels) as i128;
    let sq_sum: i128 = degree_mass(g, labels)
        .iter()
        .map(|&d| d as i128 * d as i128)
        .sum();
    (4 * m * same - sq_sum, 4 * m * m - sq_sum)
}
