mod oracle;

use heterobench_core::metrics::{
    adjusted_homophily, avg_local_clustering, diameter, edge_homophily, global_clustering,
    label_informativeness, node_homophily,
};
use heterobench_core::rng::Xoshiro256StarStar;
use heterobench_core::Graph;
use proptest::prelude::*;

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-10
}

#[test]
fn random_graphs_match_dense_oracles() {
    let mut rng = Xoshiro256StarStar::seed_from_u64(0x5eed);
    for case in 0..60 {
        let n = 5 + rng.below(46) as usize;
        let p = 0.05 + 0.3 * rng.next_f64();
        let directed = case % 3 == 0;
        let edges = oracle::random_edges(&mut rng, n, p, directed);
        let g = Graph::from_edges(&edges, n, directed).unwrap();
        let y = oracle::random_labels(&mut rng, n, 2 + case % 4);
        let a = oracle::undirected_matrix(&g);
        if g.num_edges() == 0 {
            continue;
        }
        assert!(close(
            edge_homophily(&g, &y).unwrap(),
            oracle::edge_homophily(&a, &y)
        ));
        assert!(close(
            node_homophily(&g, &y).unwrap(),
            oracle::node_homophily(&a, &y)
        ));
        if let Ok(h) = adjusted_homophily(&g, &y) {
            assert!(close(h, oracle::adjusted_homophily(&a, &y)), "case {case}");
        }
        if let Ok(li) = label_informativeness(&g, &y) {
            assert!(
                close(li, oracle::label_informativeness(&a, &y)),
                "case {case}"
            );
        }
        let (glob, local) = oracle::clustering(&a);
        if let Ok(c) = global_clustering(&g) {
            assert!(close(c, glob), "case {case}");
        }
        assert!(close(avg_local_clustering(&g).unwrap(), local));
        assert_eq!(diameter(&g).value, oracle::diameter(&a), "case {case}");
    }
}

#[test]
fn symmetrize_matches_set_union_oracle() {
    let mut rng = Xoshiro256StarStar::seed_from_u64(50);
    let edges = oracle::random_edges(&mut rng, 50, 0.08, true);
    let g = Graph::from_edges(&edges, 50, true).unwrap();
    let s = g.symmetrize();
    let union = oracle::undirected_matrix(&g);
    assert_eq!(oracle::directed_matrix(&s), union);
    let expected: usize = (0..50)
        .map(|u| (u + 1..50).filter(|&v| union[u][v]).count())
        .sum();
    assert_eq!(s.num_edges(), expected);
}

#[test]
fn random_label_shuffles_have_near_zero_adjusted_homophily() {
    let mut rng = Xoshiro256StarStar::seed_from_u64(77);
    let n = 600;
    let edges = oracle::random_edges(&mut rng, n, 0.01, false);
    let g = Graph::from_edges(&edges, n, false).unwrap();
    assert!(g.num_edges() >= 1000);
    let mut labels: Vec<usize> = (0..n).map(|v| v % 4).collect();
    let mut sum = 0.0;
    for _ in 0..20 {
        rng.shuffle(&mut labels);
        sum += adjusted_homophily(&g, &labels).unwrap();
    }
    assert!((sum / 20.0).abs() < 0.02, "{}", sum / 20.0);
}

fn graph_strategy() -> impl Strategy<Value = (usize, Vec<(usize, usize)>, Vec<usize>)> {
    (3usize..30).prop_flat_map(|n| {
        (
            Just(n),
            prop::collection::vec((0..n, 0..n), 1..80),
            prop::collection::vec(0usize..4, n),
        )
    })
}

proptest! {
    #[test]
    fn build_is_order_insensitive((n, mut edges, _) in graph_strategy(), directed: bool, seed: u64) {
        let a = Graph::from_edges(&edges, n, directed).unwrap();
        let mut rng = Xoshiro256StarStar::seed_from_u64(seed);
        rng.shuffle(&mut edges);
        prop_assert_eq!(a, Graph::from_edges(&edges, n, directed).unwrap());
    }

    #[test]
    fn graph_invariants((n, edges, _) in graph_strategy(), directed: bool) {
        let g = Graph::from_edges(&edges, n, directed).unwrap();
        let total: usize = (0..n).map(|v| g.out_degree(v)).sum();
        let in_total: usize = (0..n).map(|v| g.in_degree(v)).sum();
        prop_assert_eq!(in_total, total);
        prop_assert_eq!(total, if directed { g.num_edges() } else { 2 * g.num_edges() });
        for v in 0..n {
            let nb = g.out_neighbors(v);
            prop_assert!(nb.windows(2).all(|w| w[0] < w[1]));
            prop_assert!(!nb.contains(&(v as u32)));
            if !directed {
                for &u in nb {
                    prop_assert!(g.has_edge(u as usize, v));
                }
            }
        }
        let s = g.symmetrize();
        prop_assert_eq!(s.symmetrize(), s.clone());
    }

    #[test]
    fn metrics_invariant_under_label_permutation((n, edges, labels) in graph_strategy(), perm_seed: u64) {
        let g = Graph::from_edges(&edges, n, false).unwrap();
        let mut perm: Vec<usize> = (0..4).collect();
        Xoshiro256StarStar::seed_from_u64(perm_seed).shuffle(&mut perm);
        let relabeled: Vec<usize> = labels.iter().map(|&l| perm[l]).collect();
        let pairs = [
            (edge_homophily(&g, &labels), edge_homophily(&g, &relabeled)),
            (node_homophily(&g, &labels), node_homophily(&g, &relabeled)),
            (adjusted_homophily(&g, &labels), adjusted_homophily(&g, &relabeled)),
            (label_informativeness(&g, &labels), label_informativeness(&g, &relabeled)),
        ];
        for (a, b) in pairs {
            match (a, b) {
                (Ok(a), Ok(b)) => prop_assert!((a - b).abs() < 1e-12),
                (Err(a), Err(b)) => prop_assert_eq!(a, b),
                _ => prop_assert!(false, "one side failed"),
            }
        }
    }

    #[test]
    fn bounded_metrics((n, edges, labels) in graph_strategy()) {
        let g = Graph::from_edges(&edges, n, false).unwrap();
        if let Ok(h) = edge_homophily(&g, &labels) {
            prop_assert!((0.0..=1.0).contains(&h));
        }
        if let Ok(h) = adjusted_homophily(&g, &labels) {
            prop_assert!(h <= 1.0 + 1e-12);
            let he = edge_homophily(&g, &labels).unwrap();
            prop_assert_eq!(h == 1.0, he == 1.0);
        }
        if let Ok(li) = label_informativeness(&g, &labels) {
            prop_assert!((-1e-12..=1.0 + 1e-12).contains(&li));
        }
    }

    #[test]
    fn directed_metrics_equal_explicit_undirected_copy((n, edges, labels) in graph_strategy()) {
        let d = Graph::from_edges(&edges, n, true).unwrap();
        let u = Graph::from_edges(&edges, n, false).unwrap();
        prop_assert_eq!(d.symmetrize(), u.clone());
        prop_assert_eq!(edge_homophily(&d, &labels), edge_homophily(&u, &labels));
        prop_assert_eq!(label_informativeness(&d, &labels), label_informativeness(&u, &labels));
        prop_assert_eq!(global_clustering(&d), global_clustering(&u));
        prop_assert_eq!(diameter(&d), diameter(&u));
    }
}
