//! Combinatorial and spectral invariants of directed multigraphs: fixed-target
//! partition functions, critical inverse temperatures, KMS classification
//! data, harmonic vectors, cover-tree growth, reconstruction data and
//! negative-temperature summability checks for structured infinite families.

pub mod compare;
pub mod covertree;
pub mod error;
pub mod families;
pub mod fixtures;
pub mod graph;
pub mod kms;
pub mod poly;
pub mod series;
pub mod settings;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{parse_any, parse_graph, DirectedMultigraph, GraphBuilder};
pub use settings::Settings;
