//! On-disk formats.
//!
//! A dataset directory holds:
//!
//! | file           | content                                             |
//! |----------------|-----------------------------------------------------|
//! | `meta.json`    | name, task, directedness and all counts             |
//! | `edges.csv`    | `source,target`; undirected edges once with `source < target` |
//! | `labels.csv`   | `node_id,label`                                     |
//! | `features.csv` | `node_id,f0,...,f{F-1}`                             |
//! | `targets.csv`  | `node_id,target` (only when `has_target`)           |
//! | `splits.json`  | optional split set                                  |
//!
//! All text is UTF-8 with LF line endings and a header row. Rows are in
//! node (or edge) order and floats are written as the shortest decimal
//! that parses back to the same 64-bit value, so loading and re-saving a
//! directory reproduces it byte for byte.

mod csvio;
mod dataset_dir;
mod import;
mod predictions;

pub use dataset_dir::{
    load_dataset, load_dataset_with_diagnostics, load_meta, load_splits, save_dataset, save_splits,
    splits_json, Meta, META_FILE, SPLITS_FILE,
};
pub use import::{import_raw, write_id_map, FeatureFormat, ImportOptions, Imported, LabelSource};
pub use predictions::{
    load_prediction_set, load_predictions_dir, save_prediction_split, PredictionSet,
};

use std::path::{Path, PathBuf};

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{}:{line}: {message}", path.display())]
    Parse {
        path: PathBuf,
        line: u64,
        message: String,
    },
    #[error("{}: {message}", path.display())]
    Invalid { path: PathBuf, message: String },
    #[error(transparent)]
    Core(#[from] heterobench_core::Error),
}

impl IoError {
    pub(crate) fn io(path: &Path, source: std::io::Error) -> Self {
        IoError::Io {
            path: path.to_path_buf(),
            source,
        }
    }

    pub(crate) fn invalid(path: &Path, message: impl Into<String>) -> Self {
        IoError::Invalid {
            path: path.to_path_buf(),
            message: message.into(),
        }
    }

    pub(crate) fn parse(path: &Path, line: u64, message: impl Into<String>) -> Self {
        IoError::Parse {
            path: path.to_path_buf(),
            line,
            message: message.into(),
        }
    }

    /// True for failures of the file system itself, as opposed to bad
    /// content.
    pub fn is_io(&self) -> bool {
        matches!(self, IoError::Io { .. })
    }
}

pub type Result<T, E = IoError> = std::result::Result<T, E>;
