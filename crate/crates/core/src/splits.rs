//! Random 50/25/25 train/validation/test splits.

use alloc::vec::Vec;

use crate::dataset::{Split, SplitSet};
use crate::dedup::IndexMap;
use crate::error::{Error, Result};
use crate::rng::Xoshiro256StarStar;

/// `(train, valid, test)` sizes: `ceil(n/2)`, half the rest rounded up,
/// and the remainder.
pub fn split_sizes(num_nodes: usize) -> (usize, usize, usize) {
    let train = num_nodes.div_ceil(2);
    let valid = (num_nodes - train).div_ceil(2);
    (train, valid, num_nodes - train - valid)
}

/// Split `i` shuffles `0..num_nodes` with the stream `(seed, i)` and slices
/// the permutation by [`split_sizes`], so adding splits never changes
/// earlier ones.
pub fn generate_splits(num_nodes: usize, num_splits: usize, seed: u64) -> Result<SplitSet> {
    if num_nodes < 4 {
        return Err(Error::TooFewNodes {
            min: 4,
            actual: num_nodes,
        });
    }
    let (n_train, n_valid, _) = split_sizes(num_nodes);
    let splits = (0..num_splits)
        .map(|i| {
            let mut rng = Xoshiro256StarStar::seed_from_u64_stream(seed, i as u64);
            let mut perm: Vec<usize> = (0..num_nodes).collect();
            rng.shuffle(&mut perm);
            let sorted = |s: &[usize]| {
                let mut v = s.to_vec();
                v.sort_unstable();
                v
            };
            Split {
                train: sorted(&perm[..n_train]),
                valid: sorted(&perm[n_train..n_train + n_valid]),
                test: sorted(&perm[n_train + n_valid..]),
            }
        })
        .collect();
    Ok(SplitSet { seed, splits })
}

/// Drops removed nodes from every set and renumbers survivors, then checks
/// the result still partitions the surviving nodes with a non-empty test
/// set.
pub fn filter_split_set(splits: &SplitSet, map: &IndexMap) -> Result<SplitSet> {
    let domain = map.old_to_new.len();
    splits.validate(domain).map_err(|e| match e {
        Error::InvalidSplit { .. } => Error::MapMismatch {
            map_len: domain,
            split_len: splits
                .splits
                .first()
                .map_or(0, |s| s.train.len() + s.valid.len() + s.test.len()),
        },
        other => other,
    })?;
    let remap = |nodes: &[usize]| -> Vec<usize> {
        nodes.iter().filter_map(|&v| map.old_to_new[v]).collect()
    };
    let filtered = SplitSet {
        seed: splits.seed,
        splits: splits
            .splits
            .iter()
            .map(|s| Split {
                train: remap(&s.train),
                valid: remap(&s.valid),
                test: remap(&s.test),
            })
            .collect(),
    };
    filtered.validate(map.num_kept)?;
    Ok(filtered)
}
