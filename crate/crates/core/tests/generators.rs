use heterobench_core::splits::{generate_splits, split_sizes};
use heterobench_core::synthgen::{generate_minesweeper, MinesweeperConfig, HIDDEN_COLUMN};

#[test]
fn split_sizes_and_partition() {
    for n in [4usize, 5, 17, 100, 1001] {
        let s = generate_splits(n, 10, 123).unwrap();
        s.validate(n).unwrap();
        let (a, b, c) = split_sizes(n);
        for split in &s.splits {
            assert_eq!(
                (split.train.len(), split.valid.len(), split.test.len()),
                (a, b, c)
            );
        }
    }
}

#[test]
fn test_membership_is_uniform() {
    let n = 100;
    let mut counts = vec![0usize; n];
    let seeds = 1000;
    for seed in 0..seeds {
        for split in generate_splits(n, 10, seed).unwrap().splits {
            for v in split.test {
                counts[v] += 1;
            }
        }
    }
    let mean = counts.iter().sum::<usize>() as f64 / n as f64 / seeds as f64;
    assert!((mean - 2.5).abs() < 1e-12);
    let expected = 2.5 * seeds as f64;
    let chi2: f64 = counts
        .iter()
        .map(|&c| (c as f64 - expected).powi(2) / expected)
        .sum();
    // 99 degrees of freedom, 0.999 quantile is about 148.2
    assert!(chi2 < 148.2, "chi2 = {chi2}");
}

#[test]
fn minesweeper_features_match_grid_recount() {
    let cfg = MinesweeperConfig {
        rows: 5,
        cols: 5,
        seed: 1,
        ..Default::default()
    };
    let ds = generate_minesweeper(&cfg).unwrap();
    assert_eq!(ds.class_counts()[1], 5);
    for r in 0..5i64 {
        for c in 0..5i64 {
            let v = (r * 5 + c) as usize;
            let row = ds.feature_row(v);
            if row[HIDDEN_COLUMN] == 1.0 {
                continue;
            }
            let mut mines = 0;
            for dr in -1..=1i64 {
                for dc in -1..=1i64 {
                    let (rr, cc) = (r + dr, c + dc);
                    if (dr, dc) != (0, 0) && (0..5).contains(&rr) && (0..5).contains(&cc) {
                        mines += ds.labels[(rr * 5 + cc) as usize];
                    }
                }
            }
            let hot: Vec<usize> = (0..9).filter(|&k| row[k] == 1.0).collect();
            assert_eq!(hot, vec![mines]);
        }
    }
}

#[test]
fn minesweeper_seeds_differ() {
    let a = generate_minesweeper(&MinesweeperConfig {
        seed: 1,
        ..Default::default()
    })
    .unwrap();
    let b = generate_minesweeper(&MinesweeperConfig {
        seed: 2,
        ..Default::default()
    })
    .unwrap();
    assert_ne!(a.labels, b.labels);
}
