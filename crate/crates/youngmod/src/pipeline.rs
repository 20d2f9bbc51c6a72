//! Per-degree construction shared by the commands: the Young module
//! catalog, the simple modules, and the basic Schur algebra, built once
//! and reused across checks.

use std::sync::{Arc, OnceLock};
use std::time::Instant;

use combinat::Partition;
use modrep::{simples_catalog, GModule};
use schuralg::{basic_algebra, BasicAlgebra};
use thiserror::Error;
use youngcat::{build_catalog, YoungCatalog};

use crate::config::{ConfigError, RunConfig, MAX_DEGREE};

/// Failures while constructing per-degree data.
#[derive(Debug, Error)]
pub enum PipelineError {
    /// The run configuration violates an invariant.
    #[error(transparent)]
    Config(#[from] ConfigError),
    /// The Young module catalog could not be built.
    #[error("catalog construction failed for degree {n}: {source}")]
    Catalog {
        /// Degree whose catalog failed.
        n: usize,
        /// Underlying catalog error.
        #[source]
        source: youngcat::CatalogError,
    },
    /// The basic Schur algebra could not be built.
    #[error("algebra construction failed for degree {n}: {source}")]
    Algebra {
        /// Degree whose algebra failed.
        n: usize,
        /// Underlying algebra error.
        #[source]
        source: schuralg::SchurError,
    },
    /// A previous attempt in this process already failed for the degree.
    #[error("degree {n} already failed in this process: {message}")]
    Cached {
        /// Degree that failed earlier.
        n: usize,
        /// Error text recorded by the first attempt.
        message: String,
    },
}

/// Everything the commands need for one degree. The catalog and the
/// simple modules are built eagerly; the Schur algebra on first use.
pub struct Bundle {
    /// The degree.
    pub n: usize,
    /// Young modules, 2-Kostka numbers, and provenance.
    pub catalog: YoungCatalog,
    /// The simple modules of the degree, labeled, in descending shape order.
    pub simples: Vec<GModule>,
    /// Wall-clock seconds the catalog build took.
    pub catalog_seconds: f64,
    algebra: OnceLock<Result<BasicAlgebra, String>>,
    algebra_seconds: OnceLock<f64>,
}

impl Bundle {
    /// The basic Schur algebra of the degree, built on first call.
    ///
    /// # Errors
    /// Returns [`PipelineError::Algebra`] on the first failing build and
    /// [`PipelineError::Cached`] when a previous call already failed.
    pub fn algebra(&self) -> Result<&BasicAlgebra, PipelineError> {
        let mut fresh_error = None;
        let slot = self.algebra.get_or_init(|| {
            let start = Instant::now();
            match basic_algebra(&self.catalog) {
                Ok(algebra) => {
                    let _ = self.algebra_seconds.set(start.elapsed().as_secs_f64());
                    Ok(algebra)
                }
                Err(source) => {
                    let message = source.to_string();
                    fresh_error = Some(PipelineError::Algebra { n: self.n, source });
                    Err(message)
                }
            }
        });
        match slot {
            Ok(algebra) => Ok(algebra),
            Err(message) => Err(fresh_error.unwrap_or_else(|| PipelineError::Cached {
                n: self.n,
                message: message.clone(),
            })),
        }
    }

    /// Wall-clock seconds the algebra build took, when it has run.
    #[must_use]
    pub fn algebra_seconds(&self) -> Option<f64> {
        self.algebra_seconds.get().copied()
    }

    /// The dimension of the simple module with the given label.
    ///
    /// # Panics
    /// Panics when the label is not a 2-regular partition of the degree.
    #[must_use]
    pub fn simple_dim(&self, shape: &Partition) -> usize {
        self.simples
            .iter()
            .find(|m| matches!(&m.label, Some((_, label)) if label == shape))
            .unwrap_or_else(|| panic!("{shape} does not label a simple module of degree {}", self.n))
            .dim
    }
}

/// Builds the catalog and simple modules for the configured degree.
///
/// # Errors
/// Returns [`PipelineError::Config`] for invalid configurations and
/// [`PipelineError::Catalog`] when the catalog build fails.
pub fn build_bundle(config: &RunConfig) -> Result<Bundle, PipelineError> {
    config.validate()?;
    let start = Instant::now();
    let catalog = build_catalog(config.n, &config.build_config())
        .map_err(|source| PipelineError::Catalog { n: config.n, source })?;
    let catalog_seconds = start.elapsed().as_secs_f64();
    let simples = simples_catalog(config.n)
        .into_iter()
        .map(|(_, module)| module)
        .collect();
    Ok(Bundle {
        n: config.n,
        catalog,
        simples,
        catalog_seconds,
        algebra: OnceLock::new(),
        algebra_seconds: OnceLock::new(),
    })
}

/// A process-wide store of one [`Bundle`] per degree, all built with the
/// same pipeline parameters, so that cross-degree comparisons and repeated
/// checks reuse the expensive constructions.
pub struct BundleCache {
    base: RunConfig,
    slots: [OnceLock<Result<Arc<Bundle>, String>>; MAX_DEGREE + 1],
}

impl BundleCache {
    /// A cache whose bundles are built with the pipeline parameters of
    /// `base`; the degree field of `base` is ignored.
    #[must_use]
    pub fn new(base: RunConfig) -> Self {
        BundleCache {
            base,
            slots: std::array::from_fn(|_| OnceLock::new()),
        }
    }

    /// The pipeline parameters every bundle of this cache is built with.
    #[must_use]
    pub fn base(&self) -> &RunConfig {
        &self.base
    }

    /// The bundle for degree `n`, built on first request.
    ///
    /// # Errors
    /// Returns the build failure, or [`PipelineError::Cached`] when an
    /// earlier request for the same degree already failed.
    pub fn get(&self, n: usize) -> Result<Arc<Bundle>, PipelineError> {
        if n == 0 || n > MAX_DEGREE {
            return Err(PipelineError::Config(ConfigError::DegreeOutOfRange(n)));
        }
        let mut fresh_error = None;
        let slot = self.slots[n].get_or_init(|| {
            let mut config = self.base.clone();
            config.n = n;
            match build_bundle(&config) {
                Ok(bundle) => Ok(Arc::new(bundle)),
                Err(error) => {
                    let message = error.to_string();
                    fresh_error = Some(error);
                    Err(message)
                }
            }
        });
        match slot {
            Ok(bundle) => Ok(Arc::clone(bundle)),
            Err(message) => Err(fresh_error.unwrap_or_else(|| PipelineError::Cached {
                n,
                message: message.clone(),
            })),
        }
    }
}
