use alloc::vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::{check_labels, num_classes};

/// Label informativeness `I(y_a, y_b) / H(y_a)` for the endpoint labels of
/// a uniformly random edge taken in a random orientation.
///
/// The joint distribution counts each undirected edge once per orientation
/// over `2|E|` ordered endpoint pairs; its marginal is `D_k / 2|E|`.
/// Natural logarithms throughout, with `0 log 0 = 0`.
pub fn label_informativeness(graph: &Graph, labels: &[usize]) -> Result<f64> {
    check_labels(graph, labels)?;
    let g = graph.undirected_view();
    if g.num_edges() == 0 {
        return Err(Error::NoEdges);
    }
    let c = num_classes(labels);
    let mut joint = vec![0u64; c * c];
    for (u, v) in g.edges() {
        let (a, b) = (labels[u], labels[v]);
        joint[a * c + b] += 1;
        joint[b * c + a] += 1;
    }
    let mut marginal = vec![0u64; c];
    for a in 0..c {
        marginal[a] = joint[a * c..(a + 1) * c].iter().sum();
    }
    let total = 2.0 * g.num_edges() as f64;

    let mut entropy = 0.0;
    for &m in &marginal {
        if m > 0 {
            let p = m as f64 / total;
            entropy -= p * libm::log(p);
        }
    }
    // a single class with degree mass
    if marginal.iter().filter(|&&m| m > 0).count() < 2 {
        return Err(Error::ZeroEntropy);
    }

    let mut mutual = 0.0;
    for a in 0..c {
        for b in 0..c {
            let n_ab = joint[a * c + b];
            if n_ab == 0 {
                continue;
            }
            let p = n_ab as f64 / total;
            // p(a,b) / (p(a) p(b)) = n_ab * 2|E| / (D_a D_b)
            let ratio = n_ab as f64 * total / (marginal[a] as f64 * marginal[b] as f64);
            mutual += p * libm::log(ratio);
        }
    }
    Ok(mutual / entropy)
}
