use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

/// Number of triangles through each node of the undirected view.
///
/// Each triangle `u < v < w` is found once, from its lowest node, by merging
/// the sorted neighbor lists of `u` and `v` above `v`.
pub fn triangles_per_node(graph: &Graph) -> Vec<u64> {
    let g = graph.undirected_view();
    let mut tri = vec![0u64; g.num_nodes()];
    for u in 0..g.num_nodes() {
        let nu = g.neighbors(u);
        let above_u = &nu[nu.partition_point(|&x| x as usize <= u)..];
        for (i, &v) in above_u.iter().enumerate() {
            let nv = g.neighbors(v as usize);
            let a = &above_u[i + 1..];
            let b = &nv[nv.partition_point(|&x| x <= v)..];
            let common = count_common(a, b);
            if common > 0 {
                tri[u] += common;
                tri[v as usize] += common;
                for_each_common(a, b, |w| tri[w as usize] += 1);
            }
        }
    }
    tri
}

fn count_common(a: &[NodeId], b: &[NodeId]) -> u64 {
    let mut n = 0;
    for_each_common(a, b, |_| n += 1);
    n
}

fn for_each_common(a: &[NodeId], b: &[NodeId], mut f: impl FnMut(NodeId)) {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                f(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
}

fn wedges(d: usize) -> u64 {
    let d = d as u64;
    d * d.saturating_sub(1) / 2
}

/// Transitivity `3T / W`, where `T` is the number of triangles and
/// `W = sum_v d(v)(d(v)-1)/2` the number of wedges.
pub fn global_clustering(graph: &Graph) -> Result<f64> {
    let g = graph.undirected_view();
    let w: u64 = (0..g.num_nodes()).map(|v| wedges(g.degree(v))).sum();
    if w == 0 {
        return Err(Error::NoWedges);
    }
    let closed: u64 = triangles_per_node(&g).iter().sum();
    Ok(closed as f64 / w as f64)
}

/// Per-node clustering `t_v / (d(v)(d(v)-1)/2)`, zero when `d(v) < 2`.
pub fn local_clustering(graph: &Graph) -> Vec<f64> {
    let g = graph.undirected_view();
    triangles_per_node(&g)
        .into_iter()
        .enumerate()
        .map(|(v, t)| match wedges(g.degree(v)) {
            0 => 0.0,
            w => t as f64 / w as f64,
        })
        .collect()
}

/// Mean of [`local_clustering`] over all nodes, isolated and leaf nodes
/// included as zeros.
pub fn avg_local_clustering(graph: &Graph) -> Result<f64> {
    if graph.num_nodes() == 0 {
        return Err(Error::EmptyGraph);
    }
    let local = local_clustering(graph);
    Ok(local.iter().sum::<f64>() / local.len() as f64)
}
