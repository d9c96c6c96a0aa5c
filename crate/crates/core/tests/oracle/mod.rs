//! Brute-force reference implementations over dense adjacency matrices.
//! Deliberately share no code with the library beyond reading neighbor
//! lists out of a `Graph`.

#![allow(dead_code, clippy::needless_range_loop)]

use heterobench_core::rng::Xoshiro256StarStar;
use heterobench_core::{Dataset, Graph, Task};

pub type Matrix = Vec<Vec<bool>>;

/// Symmetric adjacency matrix: `a[u][v]` iff `u -> v` or `v -> u`.
pub fn undirected_matrix(g: &Graph) -> Matrix {
    let n = g.num_nodes();
    let mut a = vec![vec![false; n]; n];
    for u in 0..n {
        for &v in g.out_neighbors(u) {
            a[u][v as usize] = true;
            a[v as usize][u] = true;
        }
    }
    a
}

pub fn directed_matrix(g: &Graph) -> Matrix {
    let n = g.num_nodes();
    let mut a = vec![vec![false; n]; n];
    for u in 0..n {
        for &v in g.out_neighbors(u) {
            a[u][v as usize] = true;
        }
    }
    a
}

fn degree(a: &Matrix, v: usize) -> usize {
    a[v].iter().filter(|&&x| x).count()
}

fn edge_count(a: &Matrix) -> usize {
    let n = a.len();
    (0..n)
        .map(|u| (u + 1..n).filter(|&v| a[u][v]).count())
        .sum()
}

pub fn edge_homophily(a: &Matrix, y: &[usize]) -> f64 {
    let n = a.len();
    let mut same = 0;
    let mut all = 0;
    for u in 0..n {
        for v in u + 1..n {
            if a[u][v] {
                all += 1;
                if y[u] == y[v] {
                    same += 1;
                }
            }
        }
    }
    same as f64 / all as f64
}

pub fn node_homophily(a: &Matrix, y: &[usize]) -> f64 {
    let n = a.len();
    let mut total = 0.0;
    let mut counted = 0;
    for v in 0..n {
        let d = degree(a, v);
        if d == 0 {
            continue;
        }
        let same = (0..n).filter(|&u| a[v][u] && y[u] == y[v]).count();
        total += same as f64 / d as f64;
        counted += 1;
    }
    total / counted as f64
}

pub fn adjusted_homophily(a: &Matrix, y: &[usize]) -> f64 {
    let c = y.iter().max().unwrap() + 1;
    let m = edge_count(a) as f64;
    let mut mass = vec![0.0; c];
    for v in 0..a.len() {
        mass[y[v]] += degree(a, v) as f64;
    }
    let s: f64 = mass.iter().map(|d| d * d / (4.0 * m * m)).sum();
    (edge_homophily(a, y) - s) / (1.0 - s)
}

/// Joint histogram of endpoint labels over ordered pairs `(u, v)` with
/// `a[u][v]`, normalized; then `I / H` with natural logs.
pub fn label_informativeness(a: &Matrix, y: &[usize]) -> f64 {
    let n = a.len();
    let c = y.iter().max().unwrap() + 1;
    let mut joint = vec![vec![0.0; c]; c];
    let mut total = 0.0;
    for u in 0..n {
        for v in 0..n {
            if a[u][v] {
                joint[y[u]][y[v]] += 1.0;
                total += 1.0;
            }
        }
    }
    for row in joint.iter_mut() {
        for x in row.iter_mut() {
            *x /= total;
        }
    }
    let marg: Vec<f64> = joint.iter().map(|r| r.iter().sum()).collect();
    let h: f64 = marg
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| -p * p.ln())
        .sum();
    let mut i = 0.0;
    for a_ in 0..c {
        for b in 0..c {
            let p = joint[a_][b];
            if p > 0.0 {
                i += p * (p / (marg[a_] * marg[b])).ln();
            }
        }
    }
    i / h
}

/// `(global, average local)` clustering by enumerating node triples.
pub fn clustering(a: &Matrix) -> (f64, f64) {
    let n = a.len();
    let mut closed_total = 0usize;
    let mut wedges_total = 0usize;
    let mut local_sum = 0.0;
    for v in 0..n {
        let nbrs: Vec<usize> = (0..n).filter(|&u| a[v][u]).collect();
        let d = nbrs.len();
        let wedges = d * d.saturating_sub(1) / 2;
        let mut closed = 0;
        for i in 0..d {
            for j in i + 1..d {
                if a[nbrs[i]][nbrs[j]] {
                    closed += 1;
                }
            }
        }
        closed_total += closed;
        wedges_total += wedges;
        if wedges > 0 {
            local_sum += closed as f64 / wedges as f64;
        }
    }
    (
        closed_total as f64 / wedges_total as f64,
        local_sum / n as f64,
    )
}

/// Largest finite all-pairs distance restricted to the largest component,
/// by Floyd-Warshall.
pub fn diameter(a: &Matrix) -> usize {
    let n = a.len();
    const INF: usize = usize::MAX / 4;
    let mut d = vec![vec![INF; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for v in 0..n {
            if a[u][v] {
                d[u][v] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    // component size = number of reachable nodes; lowest index wins ties
    let sizes: Vec<usize> = (0..n)
        .map(|u| d[u].iter().filter(|&&x| x < INF).count())
        .collect();
    let best = *sizes.iter().max().unwrap();
    let root = sizes.iter().position(|&s| s == best).unwrap();
    let comp: Vec<usize> = (0..n).filter(|&v| d[root][v] < INF).collect();
    comp.iter()
        .flat_map(|&u| comp.iter().map(move |&v| (u, v)))
        .map(|(u, v)| d[u][v])
        .max()
        .unwrap()
}

/// Duplicate predicate checked pair by pair.
pub fn duplicates(out: &Matrix, target: &[i64]) -> Vec<usize> {
    let n = out.len();
    let in_degree = |v: usize| (0..n).filter(|&u| out[u][v]).count();
    (0..n)
        .filter(|&v| in_degree(v) == 0)
        .filter(|&v| (0..n).any(|u| u != v && target[u] == target[v] && out[u] == out[v]))
        .collect()
}

/// Random simple edge list on `n` nodes with edge probability `p`.
pub fn random_edges(
    rng: &mut Xoshiro256StarStar,
    n: usize,
    p: f64,
    directed: bool,
) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u == v || (!directed && v < u) {
                continue;
            }
            if rng.next_f64() < p {
                edges.push((u, v));
            }
        }
    }
    edges
}

pub fn random_labels(rng: &mut Xoshiro256StarStar, n: usize, classes: usize) -> Vec<usize> {
    (0..n).map(|_| rng.below(classes as u64) as usize).collect()
}

/// Directed graph with planted duplicate groups: `groups` groups of random
/// size share a target and an out-set (distinct per group); roughly two
/// thirds get a keeper with an incoming edge. Background nodes have random arcs and mostly unique
/// targets, with a few deliberate target collisions.
pub fn planted(seed: u64, n: usize, groups: usize) -> Dataset {
    let mut rng = Xoshiro256StarStar::seed_from_u64(seed);
    let mut edges = Vec::new();
    let mut target: Vec<i64> = (0..n as i64).map(|v| 1_000_000 + v).collect();
    let mut labels: Vec<usize> = (0..n).map(|_| rng.below(5) as usize).collect();
    let mut next = 0;
    let hubs: Vec<usize> = (n - 40..n).collect();
    for gi in 0..groups {
        let size = 2 + rng.below(8) as usize;
        let members: Vec<usize> = (next..next + size).collect();
        next += size;
        // distinct out-set per group
        let k = 2 + gi % 2;
        let outs: Vec<usize> = (0..k).map(|j| hubs[(gi + j) % 40]).collect();
        let label = rng.below(5) as usize;
        for &m in &members {
            target[m] = gi as i64 * 10;
            labels[m] = label;
            for &o in &outs[..k] {
                edges.push((m, o));
            }
        }
        if rng.below(3) > 0 {
            // keeper: the first member gets an incoming arc from a hub
            edges.push((hubs[rng.below(40) as usize], members[0]));
        }
    }
    for u in next..n {
        for _ in 0..3 {
            let v = rng.below(n as u64) as usize;
            edges.push((u, v));
        }
    }
    // a few background nodes with colliding targets but different out-sets
    for v in (next..n - 40).step_by(17) {
        target[v] = 42;
    }
    let g = Graph::from_edges(&edges, n, true).unwrap();
    Dataset::new(
        "planted",
        g,
        labels,
        5,
        vec![],
        0,
        Some(target),
        Task::Multiclass,
    )
    .unwrap()
}
