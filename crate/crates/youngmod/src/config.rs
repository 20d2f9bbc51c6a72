//! Run configuration shared by every front-end command.

use std::collections::BTreeSet;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use thiserror::Error;
use youngcat::BuildConfig;

/// Smallest supported degree.
pub const MIN_DEGREE: usize = 1;
/// Largest supported degree.
pub const MAX_DEGREE: usize = 7;

/// A table or diagram family a command can emit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum EmitKind {
    /// The 2-Kostka multiplicity table of the degree.
    Kostka,
    /// Composition factor multisets.
    Factors,
    /// Radical layerings.
    Layers,
    /// The Cartan matrix of the basic Schur algebra.
    Cartan,
    /// The Gabriel quiver of the basic Schur algebra.
    Quiver,
    /// Weyl module factors and layerings.
    Weyl,
    /// The block partition of the basic Schur algebra.
    Blocks,
    /// Layered diagrams in DOT syntax.
    Dot,
}

impl fmt::Display for EmitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            EmitKind::Kostka => "kostka",
            EmitKind::Factors => "factors",
            EmitKind::Layers => "layers",
            EmitKind::Cartan => "cartan",
            EmitKind::Quiver => "quiver",
            EmitKind::Weyl => "weyl",
            EmitKind::Blocks => "blocks",
            EmitKind::Dot => "dot",
        };
        f.write_str(name)
    }
}

impl FromStr for EmitKind {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "kostka" => Ok(EmitKind::Kostka),
            "factors" => Ok(EmitKind::Factors),
            "layers" => Ok(EmitKind::Layers),
            "cartan" => Ok(EmitKind::Cartan),
            "quiver" => Ok(EmitKind::Quiver),
            "weyl" => Ok(EmitKind::Weyl),
            "blocks" => Ok(EmitKind::Blocks),
            "dot" => Ok(EmitKind::Dot),
            other => Err(ConfigError::UnknownEmit(other.to_string())),
        }
    }
}

/// Rejected [`RunConfig`] fields.
#[derive(Debug, Error)]
pub enum ConfigError {
    /// The degree is outside the supported range.
    #[error("degree {0} is outside the supported range {MIN_DEGREE}..={MAX_DEGREE}")]
    DegreeOutOfRange(usize),
    /// Splitting needs at least one random trial.
    #[error("trials must be at least 1")]
    NoTrials,
    /// An emit selector that no command understands.
    #[error("unknown emit kind {0:?}")]
    UnknownEmit(String),
}

/// One batch run: which degree to process, how to seed and cache the
/// pipeline, and which tables to emit.
#[derive(Clone, Debug)]
pub struct RunConfig {
    /// Symmetric group degree, between 1 and 7.
    pub n: usize,
    /// Seed for every randomized search in the run.
    pub seed: u64,
    /// Directory for cached catalog entries; `None` disables caching.
    pub cache_dir: Option<PathBuf>,
    /// Dimension bound below which permutation modules are split directly.
    pub split_threshold: usize,
    /// Random trials per indecomposability and isomorphism test.
    pub trials: usize,
    /// Requested output families.
    pub emit: BTreeSet<EmitKind>,
}

impl RunConfig {
    /// A configuration for `n` with default pipeline parameters, caching
    /// disabled, and nothing selected for emission.
    #[must_use]
    pub fn new(n: usize) -> Self {
        let defaults = BuildConfig::default();
        RunConfig {
            n,
            seed: defaults.seed,
            cache_dir: None,
            split_threshold: defaults.split_threshold,
            trials: defaults.trials,
            emit: BTreeSet::new(),
        }
    }

    /// Checks the field invariants.
    ///
    /// # Errors
    /// Returns [`ConfigError`] when the degree is outside `1..=7` or
    /// `trials` is zero.
    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(MIN_DEGREE..=MAX_DEGREE).contains(&self.n) {
            return Err(ConfigError::DegreeOutOfRange(self.n));
        }
        if self.trials == 0 {
            return Err(ConfigError::NoTrials);
        }
        Ok(())
    }

    /// The catalog build parameters this run prescribes.
    #[must_use]
    pub fn build_config(&self) -> BuildConfig {
        BuildConfig {
            seed: self.seed,
            split_threshold: self.split_threshold,
            trials: self.trials,
            cache_dir: self.cache_dir.clone(),
        }
    }
}
