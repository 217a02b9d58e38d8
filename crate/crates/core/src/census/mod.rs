//! Exhaustive enumeration over small graphs: orientation streams, class
//! partitions, catalog derivation and the theorem-level census.

pub mod dedup;
pub mod derive;
pub mod enumerate;
pub mod verify;

use thiserror::Error;

pub use dedup::{dedup_classes, isomorphism_classes, DedupClass};
pub use derive::{derive_scattered_catalog, expected_pictures, CatalogDerivation, ShapeCensus};
pub use enumerate::{canonical_form, enumerate_connected_graphs, enumerate_orientations, orientation_at, Orientations};
pub use verify::{verify_main_theorem, verify_main_theorem_with, CensusConfig, CensusReport, Coverage, Mismatch, Tally};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("{edges} edges exceed the orientation limit of {max}")]
    TooManyEdges { edges: usize, max: usize },
    #[error("{n} vertices exceed the limit of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("graphs to deduplicate must share a vertex count")]
    MixedVertexCounts,
    #[error("orientation index {0} out of range")]
    IndexOutOfRange(u64),
    #[error("n_max = {n_max} exceeds the census limit of {max}")]
    ScopeTooLarge { n_max: usize, max: usize },
    #[error("thread pool: {0}")]
    ThreadPool(String),
}
