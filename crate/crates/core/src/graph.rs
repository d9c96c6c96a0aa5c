//! Immutable compressed adjacency graph.
//!
//! Neighbor lists are stored in CSR form: one offsets array of length
//! `num_nodes + 1` and one flat array of neighbor indices. Lists are sorted
//! ascending, hold no self-loops and no repeated entries. For undirected
//! graphs every edge is stored in both directions and the in-neighbor view
//! is the out-neighbor view.

use alloc::borrow::Cow;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Dense 0-based node index as stored in adjacency arrays.
pub type NodeId = u32;

/// Counts of input edges that were dropped while building a graph.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BuildStats {
    pub self_loops: usize,
    pub parallel_edges: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Csr {
    offsets: Vec<usize>,
    targets: Vec<NodeId>,
}

impl Csr {
    /// `pairs` must be sorted and deduplicated.
    fn from_sorted_pairs(num_nodes: usize, pairs: &[(NodeId, NodeId)]) -> Self {
        let mut offsets = alloc::vec![0usize; num_nodes + 1];
        for &(u, _) in pairs {
            offsets[u as usize + 1] += 1;
        }
        for i in 0..num_nodes {
            offsets[i + 1] += offsets[i];
        }
        let targets = pairs.iter().map(|&(_, v)| v).collect();
        Csr { offsets, targets }
    }

    #[inline]
    fn row(&self, v: usize) -> &[NodeId] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    num_nodes: usize,
    directed: bool,
    num_edges: usize,
    out_adj: Csr,
    /// `None` for undirected graphs, where it would equal `out_adj`.
    in_adj: Option<Csr>,
}

impl Graph {
    /// Builds a simple graph from an edge list. Self-loops and parallel edges
    /// are dropped; undirected input is symmetrized.
    pub fn from_edges(edges: &[(usize, usize)], num_nodes: usize, directed: bool) -> Result<Self> {
        Self::from_edges_with_stats(edges, num_nodes, directed).map(|(g, _)| g)
    }

    /// Like [`Graph::from_edges`], also reporting how many input edges were
    /// discarded.
    pub fn from_edges_with_stats(
        edges: &[(usize, usize)],
        num_nodes: usize,
        directed: bool,
    ) -> Result<(Self, BuildStats)> {
        if num_nodes == 0 {
            return Err(Error::EmptyGraph);
        }
        if num_nodes > NodeId::MAX as usize {
            return Err(Error::NodeOutOfRange {
                index: num_nodes,
                num_nodes: NodeId::MAX as usize,
            });
        }
        let mut stats = BuildStats::default();
        let mut pairs: Vec<(NodeId, NodeId)> = Vec::with_capacity(if directed {
            edges.len()
        } else {
            2 * edges.len()
        });
        for &(u, v) in edges {
            for index in [u, v] {
                if index >= num_nodes {
                    return Err(Error::NodeOutOfRange { index, num_nodes });
                }
            }
            if u == v {
                stats.self_loops += 1;
                continue;
            }
            if directed {
                pairs.push((u as NodeId, v as NodeId));
            } else {
                let (a, b) = if u < v { (u, v) } else { (v, u) };
                pairs.push((a as NodeId, b as NodeId));
            }
        }
        pairs.sort_unstable();
        let before = pairs.len();
        pairs.dedup();
        stats.parallel_edges = before - pairs.len();

        let graph = if directed {
            Self::directed_from_arcs(num_nodes, pairs)
        } else {
            Self::undirected_from_canonical(num_nodes, pairs)
        };
        Ok((graph, stats))
    }

    /// `arcs` sorted and deduplicated, no self-loops.
    fn directed_from_arcs(num_nodes: usize, mut arcs: Vec<(NodeId, NodeId)>) -> Self {
        let num_edges = arcs.len();
        let out_adj = Csr::from_sorted_pairs(num_nodes, &arcs);
        for arc in arcs.iter_mut() {
            *arc = (arc.1, arc.0);
        }
        arcs.sort_unstable();
        let in_adj = Csr::from_sorted_pairs(num_nodes, &arcs);
        Graph {
            num_nodes,
            directed: true,
            num_edges,
            out_adj,
            in_adj: Some(in_adj),
        }
    }

    /// `edges` holds each unordered edge once as `(min, max)`, deduplicated.
    fn undirected_from_canonical(num_nodes: usize, edges: Vec<(NodeId, NodeId)>) -> Self {
        let num_edges = edges.len();
        let mut both = Vec::with_capacity(2 * num_edges);
        for &(u, v) in &edges {
            both.push((u, v));
            both.push((v, u));
        }
        both.sort_unstable();
        Graph {
            num_nodes,
            directed: false,
            num_edges,
            out_adj: Csr::from_sorted_pairs(num_nodes, &both),
            in_adj: None,
        }
    }

    /// Undirected graph on the union of both arc orientations.
    pub fn symmetrize(&self) -> Graph {
        if !self.directed {
            return self.clone();
        }
        let mut edges = Vec::with_capacity(self.num_edges);
        for u in 0..self.num_nodes {
            for &v in self.out_neighbors(u) {
                let (a, b) = if (u as NodeId) < v {
                    (u as NodeId, v)
                } else {
                    (v, u as NodeId)
                };
                edges.push((a, b));
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Self::undirected_from_canonical(self.num_nodes, edges)
    }

    /// Borrowed view if already undirected, otherwise a symmetrized copy.
    pub fn undirected_view(&self) -> Cow<'_, Graph> {
        if self.directed {
            Cow::Owned(self.symmetrize())
        } else {
            Cow::Borrowed(self)
        }
    }

    #[inline]
    pub fn num_nodes(&self) -> usize {
        self.num_nodes
    }

    /// Arcs for directed graphs, unordered edges for undirected graphs.
    #[inline]
    pub fn num_edges(&self) -> usize {
        self.num_edges
    }

    #[inline]
    pub fn is_directed(&self) -> bool {
        self.directed
    }

    #[inline]
    pub fn out_neighbors(&self, v: usize) -> &[NodeId] {
        self.out_adj.row(v)
    }

    #[inline]
    pub fn in_neighbors(&self, v: usize) -> &[NodeId] {
        match &self.in_adj {
            Some(csr) => csr.row(v),
            None => self.out_adj.row(v),
        }
    }

    /// Neighbors in an undirected graph; out-neighbors for a directed one.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[NodeId] {
        self.out_neighbors(v)
    }

    #[inline]
    pub fn out_degree(&self, v: usize) -> usize {
        self.out_adj.offsets[v + 1] - self.out_adj.offsets[v]
    }

    #[inline]
    pub fn in_degree(&self, v: usize) -> usize {
        self.in_neighbors(v).len()
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.out_degree(v)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.out_neighbors(u).binary_search(&(v as NodeId)).is_ok()
    }

    /// Each arc once for directed graphs; each edge once as `(u, v)` with
    /// `u < v` for undirected graphs. Ordered lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let directed = self.directed;
        (0..self.num_nodes).flat_map(move |u| {
            self.out_neighbors(u)
                .iter()
                .map(move |&v| (u, v as usize))
                .filter(move |&(u, v)| directed || u < v)
        })
    }
}
