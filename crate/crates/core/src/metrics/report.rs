use alloc::string::String;
use alloc::vec::Vec;

use crate::dataset::Dataset;
use crate::error::Result;

use super::{
    adjusted_homophily, avg_local_clustering, diameter, edge_homophily, global_clustering,
    label_informativeness,
};

/// The standard statistics bundle for one dataset, computed on its
/// undirected view.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct StatReport {
    pub name: String,
    #[cfg_attr(feature = "serde", serde(rename = "nodes"))]
    pub num_nodes: usize,
    #[cfg_attr(feature = "serde", serde(rename = "edges"))]
    pub num_edges: usize,
    pub avg_degree: f64,
    pub global_clustering: f64,
    pub avg_local_clustering: f64,
    pub diameter: usize,
    /// False when `diameter` only covers the largest component.
    pub connected: bool,
    #[cfg_attr(feature = "serde", serde(rename = "node_features"))]
    pub feature_dim: usize,
    #[cfg_attr(feature = "serde", serde(rename = "classes"))]
    pub num_classes: usize,
    pub edge_homophily: f64,
    pub adjusted_homophily: f64,
    pub label_informativeness: f64,
    pub class_counts: Vec<usize>,
}

pub fn stat_report(dataset: &Dataset) -> Result<StatReport> {
    let g = dataset.graph.undirected_view();
    let labels = &dataset.labels;
    let d = diameter(&g);
    Ok(StatReport {
        name: dataset.name.clone(),
        num_nodes: g.num_nodes(),
        num_edges: g.num_edges(),
        avg_degree: 2.0 * g.num_edges() as f64 / g.num_nodes() as f64,
        global_clustering: global_clustering(&g)?,
        avg_local_clustering: avg_local_clustering(&g)?,
        diameter: d.value,
        connected: d.connected,
        feature_dim: dataset.feature_dim,
        num_classes: dataset.num_classes,
        edge_homophily: edge_homophily(&g, labels)?,
        adjusted_homophily: adjusted_homophily(&g, labels)?,
        label_informativeness: label_informativeness(&g, labels)?,
        class_counts: dataset.class_counts(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::Task;
    use crate::graph::Graph;
    use crate::metrics::node_homophily;
    use alloc::vec;

    #[test]
    fn triangle_report_matches_individual_ops() {
        let g = Graph::from_edges(&[(0, 1), (1, 2), (2, 0)], 3, false).unwrap();
        let ds = Dataset::new(
            "tri",
            g.clone(),
            vec![0, 0, 1],
            2,
            vec![1.0; 6],
            2,
            None,
            Task::Binary,
        )
        .unwrap();
        let r = stat_report(&ds).unwrap();
        assert_eq!(r.num_nodes, 3);
        assert_eq!(r.num_edges, 3);
        assert_eq!(r.avg_degree, 2.0);
        assert_eq!(r.global_clustering, global_clustering(&g).unwrap());
        assert_eq!(r.avg_local_clustering, 1.0);
        assert_eq!(r.diameter, 1);
        assert!(r.connected);
        assert_eq!(r.feature_dim, 2);
        assert_eq!(r.edge_homophily, 1.0 / 3.0);
        assert_eq!(r.adjusted_homophily, -0.5);
        assert_eq!(
            r.label_informativeness,
            label_informativeness(&g, &[0, 0, 1]).unwrap()
        );
        assert_eq!(r.class_counts, vec![2, 1]);
        assert!(node_homophily(&g, &[0, 0, 1]).is_ok());
    }
}
