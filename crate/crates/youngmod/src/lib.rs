//! Batch front-end for the Young module and Schur algebra workbench.
//!
//! This crate wires the computational layers into a command-line tool:
//! it builds per-degree bundles (Young catalog, simple modules, basic
//! Schur algebra), renders tables and diagrams deterministically, and
//! compares every recomputation against the bundled reference tables.

pub mod cli;
pub mod config;
pub mod emit;
pub mod fixtures;
pub mod pipeline;
pub mod verify;

pub use cli::run;
pub use config::{ConfigError, EmitKind, RunConfig, MAX_DEGREE, MIN_DEGREE};
pub use fixtures::fixtures;
pub use pipeline::{build_bundle, Bundle, BundleCache, PipelineError};
pub use verify::{verify_degree, CheckResult, DegreeReport};
