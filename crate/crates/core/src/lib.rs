//! Synthetic communication-network topologies for power grids.
//!
//! The crate fits degree distributions to a reference histogram, samples
//! graphical degree sequences, and realizes them as simple connected graphs
//! with exact degrees. Baseline generators, global metrics and a Hungarian
//! relabeling against node coordinates support comparison and placement.

pub mod assignment;
pub mod baselines;
pub mod commands;
pub mod dist;
pub mod error;
pub mod generator;
pub mod graph;
pub mod io;
pub mod metrics;
pub mod pool;
pub mod rng;
pub mod sequence;

pub use dist::{DegreeCountVector, DistributionSpec, Family, FitResult};
pub use error::{Error, Result};
pub use generator::{generate, GeneratorConfig};
pub use graph::{SimpleGraph, WorkGraph};
pub use metrics::MetricsReport;
pub use sequence::{DegreeSequence, SequenceRequest};
