use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, NodeId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Diameter {
    /// Maximum eccentricity within the largest connected component.
    pub value: usize,
    /// Size of that component.
    pub component_size: usize,
    /// False when the graph has more than one component, in which case
    /// `value` only describes the largest one.
    pub connected: bool,
}

/// Reusable breadth-first search state. `stamp` marks nodes visited by the
/// current search so the buffers never need clearing.
struct Bfs {
    stamp: Vec<u32>,
    queue: Vec<NodeId>,
    current: u32,
}

impl Bfs {
    fn new(n: usize) -> Self {
        Bfs {
            stamp: vec![0; n],
            queue: Vec::with_capacity(n),
            current: 0,
        }
    }

    /// Runs a search from `source`; returns the farthest distance reached.
    /// The visited nodes are left in `self.queue`.
    fn run(&mut self, g: &Graph, source: usize) -> usize {
        self.current += 1;
        let mark = self.current;
        self.queue.clear();
        self.queue.push(source as NodeId);
        self.stamp[source] = mark;
        let mut head = 0;
        let mut depth = 0;
        let mut level_end = 1;
        while head < self.queue.len() {
            if head == level_end {
                depth += 1;
                level_end = self.queue.len();
            }
            let u = self.queue[head] as usize;
            head += 1;
            for &w in g.neighbors(u) {
                let slot = &mut self.stamp[w as usize];
                if *slot != mark {
                    *slot = mark;
                    self.queue.push(w);
                }
            }
        }
        depth
    }
}

/// Eccentricity of `source` in the undirected view.
pub fn eccentricity(graph: &Graph, source: usize) -> usize {
    let g = graph.undirected_view();
    Bfs::new(g.num_nodes()).run(&g, source)
}

/// Exact diameter of the largest connected component of the undirected
/// view, by a breadth-first search from every node of that component.
///
/// When several components share the largest size, the one containing the
/// lowest node index is used.
pub fn diameter(graph: &Graph) -> Diameter {
    let g = graph.undirected_view();
    let n = g.num_nodes();
    let mut bfs = Bfs::new(n);

    let mut component = vec![usize::MAX; n];
    let mut largest: Vec<NodeId> = Vec::new();
    let mut num_components = 0;
    for s in 0..n {
        if component[s] != usize::MAX {
            continue;
        }
        bfs.run(&g, s);
        for &v in &bfs.queue {
            component[v as usize] = num_components;
        }
        num_components += 1;
        if bfs.queue.len() > largest.len() {
            largest = bfs.queue.clone();
        }
    }

    let mut value = 0;
    for &s in &largest {
        value = value.max(bfs.run(&g, s as usize));
    }
    Diameter {
        value,
        component_size: largest.len(),
        connected: num_components == 1,
    }
}
