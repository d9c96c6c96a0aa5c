//! The Minesweeper benchmark: a king-move grid graph with randomly placed
//! mines as the binary target.
//!
//! Feature layout per node (10 columns): columns 0..=8 one-hot encode the
//! number of neighboring mines for visible nodes, column 9 is set for
//! hidden nodes, whose one-hot block stays zero.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::dataset::{Dataset, Task};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::Xoshiro256StarStar;

pub const MINESWEEPER_FEATURE_DIM: usize = 10;
pub const HIDDEN_COLUMN: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MinesweeperConfig {
    pub rows: usize,
    pub cols: usize,
    pub mine_fraction: f64,
    pub hidden_fraction: f64,
    pub seed: u64,
}

impl Default for MinesweeperConfig {
    fn default() -> Self {
        MinesweeperConfig {
            rows: 100,
            cols: 100,
            mine_fraction: 0.2,
            hidden_fraction: 0.5,
            seed: 0,
        }
    }
}

impl MinesweeperConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.mine_fraction > 0.0 && self.mine_fraction < 1.0) {
            return Err(Error::InvalidConfig(format!(
                "mine fraction must be in (0, 1), got {}",
                self.mine_fraction
            )));
        }
        if !(0.0..=1.0).contains(&self.hidden_fraction) {
            return Err(Error::InvalidConfig(format!(
                "hidden fraction must be in [0, 1], got {}",
                self.hidden_fraction
            )));
        }
        if self.rows.checked_mul(self.cols).is_none_or(|n| n < 2) {
            return Err(Error::InvalidConfig(format!(
                "grid {}x{} needs at least 2 cells",
                self.rows, self.cols
            )));
        }
        Ok(())
    }

    pub fn num_nodes(&self) -> usize {
        self.rows * self.cols
    }

    pub fn num_mines(&self) -> usize {
        libm::round(self.mine_fraction * self.num_nodes() as f64) as usize
    }

    pub fn num_hidden(&self) -> usize {
        libm::round(self.hidden_fraction * self.num_nodes() as f64) as usize
    }
}

/// Edge count of an `r x c` king graph.
pub fn king_graph_edges(rows: usize, cols: usize) -> usize {
    let (r, c) = (rows, cols);
    r * c.saturating_sub(1)
        + c * r.saturating_sub(1)
        + 2 * r.saturating_sub(1) * c.saturating_sub(1)
}

/// Undirected 8-neighborhood grid; cell `(r, c)` is node `r * cols + c`.
pub fn king_graph(rows: usize, cols: usize) -> Result<Graph> {
    let mut edges = Vec::with_capacity(king_graph_edges(rows, cols));
    let id = |r: usize, c: usize| r * cols + c;
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
                if c + 1 < cols {
                    edges.push((id(r, c), id(r + 1, c + 1)));
                }
                if c > 0 {
                    edges.push((id(r, c), id(r + 1, c - 1)));
                }
            }
        }
    }
    Graph::from_edges(&edges, rows * cols, false)
}

/// Mines are the first `num_mines` entries of a Fisher-Yates prefix shuffle
/// of the node indices; hidden nodes come from a second prefix shuffle
/// drawn from the same generator.
pub fn generate_minesweeper(config: &MinesweeperConfig) -> Result<Dataset> {
    config.validate()?;
    let n = config.num_nodes();
    let graph = king_graph(config.rows, config.cols)?;
    let mut rng = Xoshiro256StarStar::seed_from_u64(config.seed);

    let mut labels = vec![0usize; n];
    let mut perm: Vec<usize> = (0..n).collect();
    rng.partial_shuffle(&mut perm, config.num_mines());
    for &v in &perm[..config.num_mines()] {
        labels[v] = 1;
    }

    let mut hidden = vec![false; n];
    let mut perm: Vec<usize> = (0..n).collect();
    rng.partial_shuffle(&mut perm, config.num_hidden());
    for &v in &perm[..config.num_hidden()] {
        hidden[v] = true;
    }

    let mut features = vec![0.0; n * MINESWEEPER_FEATURE_DIM];
    for v in 0..n {
        let row = &mut features[v * MINESWEEPER_FEATURE_DIM..(v + 1) * MINESWEEPER_FEATURE_DIM];
        if hidden[v] {
            row[HIDDEN_COLUMN] = 1.0;
        } else {
            let mines = graph
                .neighbors(v)
                .iter()
                .filter(|&&u| labels[u as usize] == 1)
                .count();
            row[mines] = 1.0;
        }
    }

    Dataset::new(
        "minesweeper",
        graph,
        labels,
        2,
        features,
        MINESWEEPER_FEATURE_DIM,
        None,
        Task::Binary,
    )
}
