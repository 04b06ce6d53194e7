//! Exhaustive scaffold census, per-instance classification and the sweeps
//! over graph families.

mod classify;
mod enumerate;
pub mod generate;
mod run;
mod sweep;

pub use classify::{classify_composite, classify_instance, ClassificationRecord};
pub use enumerate::{enumerate_connected_bipartite, EnumerationState, EXHAUSTIVE_LIMIT, MAX_ROWS};
pub use run::{
    load_or_enumerate, records_file_name, run_census, scaffold_cache_name, CensusOptions, CensusOutcome, CensusRow,
};
pub use sweep::{
    conjecture_sweep, ultra_roth_probe, ConjectureKind, Counterexample, SweepOptions, SweepReport, UltraRothReport,
};

use thiserror::Error;

use crate::graph::{GraphError, InstanceError};
use crate::linalg::LinalgError;
use crate::roth::RothError;

#[derive(Debug, Error)]
pub enum CensusError {
    #[error("parts must be nonempty")]
    EmptyPart,
    #[error("t·s = {} exceeds {limit} for t={t}, s={s}; pass the long-run flag", t * s)]
    TooLarge { t: usize, s: usize, limit: usize },
    #[error("smaller part has {rows} vertices, at most {max} supported")]
    TooManyRows { rows: usize, max: usize },
    #[error("G has {found} vertices, expected {expected}")]
    IntraOrder { expected: usize, found: usize },
    #[error("H is bipartite (G has no edges)")]
    Bipartite,
    #[error("scaffold cache does not match: {0}")]
    CacheMismatch(String),
    #[error("thread pool: {0}")]
    Pool(String),
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Roth(#[from] RothError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl From<LinalgError> for CensusError {
    fn from(e: LinalgError) -> Self {
        CensusError::Roth(e.into())
    }
}
