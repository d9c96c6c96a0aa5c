//! Turning an integer regression target into class labels.
//!
//! [`quantile_buckets`] approximates the equal-frequency five-class binning
//! commonly used for the Wikipedia traffic datasets, whose exact class
//! boundaries were never published. [`boundary_buckets`] reproduces a known
//! binning when the boundaries are available.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Equal-frequency buckets.
///
/// Nodes are ordered by target (node index breaks ties for a stable order)
/// and sorted position `p` is nominally assigned bucket `floor(p * k / n)`.
/// A run of equal targets is never split: the whole run goes to the bucket
/// that holds most of it nominally, the lower bucket on a tie. The result
/// depends only on the multiset of `(node, target)` pairs.
pub fn quantile_buckets(targets: &[i64], num_buckets: usize) -> Result<Vec<usize>> {
    if num_buckets < 2 {
        return Err(Error::InvalidConfig("need at least 2 buckets".into()));
    }
    if targets.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let n = targets.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_unstable_by_key(|&v| (targets[v], v));
    let distinct = 1 + order
        .windows(2)
        .filter(|w| targets[w[0]] != targets[w[1]])
        .count();
    if num_buckets > distinct {
        return Err(Error::TooManyBuckets {
            buckets: num_buckets,
            distinct,
        });
    }

    let nominal = |p: usize| p * num_buckets / n;
    let mut classes = vec![0usize; n];
    let mut start = 0;
    while start < n {
        let t = targets[order[start]];
        let mut end = start + 1;
        while end < n && targets[order[end]] == t {
            end += 1;
        }
        // nominal buckets are contiguous over the run, so a single pass
        // finds the one with the largest overlap
        let mut best = (0usize, nominal(start));
        let mut cur = nominal(start);
        let mut run = 0usize;
        for p in start..end {
            let b = nominal(p);
            if b != cur {
                cur = b;
                run = 0;
            }
            run += 1;
            if run > best.0 {
                best = (run, b);
            }
        }
        for &v in &order[start..end] {
            classes[v] = best.1;
        }
        start = end;
    }
    Ok(classes)
}

/// Class `i` for targets in `[boundaries[i-1], boundaries[i])`; the first
/// class is unbounded below and the last unbounded above, giving
/// `boundaries.len() + 1` classes. Boundaries must be strictly increasing.
pub fn boundary_buckets(targets: &[i64], boundaries: &[i64]) -> Result<Vec<usize>> {
    if boundaries.is_empty() {
        return Err(Error::InvalidConfig("need at least one boundary".into()));
    }
    if boundaries.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidConfig(
            "boundaries must be strictly increasing".into(),
        ));
    }
    Ok(targets
        .iter()
        .map(|t| boundaries.partition_point(|b| b <= t))
        .collect())
}
