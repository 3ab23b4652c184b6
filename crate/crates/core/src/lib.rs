//! Toolkit for loose-triangle (C6³) coverings of 3-uniform hypergraphs.
//!
//! The crate is organised around a handful of modules:
//!
//! * [`graph`]: 3-graphs, 2-graphs, degrees, codegrees and link graphs.
//! * [`patterns`]: P₅ / 2P₃ detection, component taxonomy, Turán numbers.
//! * [`covering`]: exact and link-based C6³ witnesses, generic F-embeddings.
//! * [`constructions`]: the two extremal families and Turán graphs.
//! * [`search`]: exhaustive, pruned and randomized threshold computation.
//! * [`claims`]: executable predicates for the link-partition machinery.
//! * [`suites`]: verification suites shared by the CLI and the acceptance tests.
//! * [`format`]: the plain-text hypergraph file format.

pub mod claims;
pub mod constructions;
pub mod covering;
pub mod encoding;
mod error;
pub mod exact;
pub mod format;
pub mod graph;
pub mod patterns;
pub mod search;
pub mod suites;

pub use claims::{ClaimVerdict, EdgeClassification, VertexPartition};
pub use constructions::{Construction2Degrees, Construction2Params, Part};
pub use covering::{C6Witness, CoverReport};
pub use error::{Error, Result};
pub use graph::{DegreeProfile, PairIndex, SimpleGraph, ThreeGraph, Triple, Vertex};
pub use patterns::{ComponentKind, ComponentReport, PathWitness};
pub use search::{EnumerationPlan, EnumerationStats, SearchMode, ThresholdKind, ThresholdResult};
