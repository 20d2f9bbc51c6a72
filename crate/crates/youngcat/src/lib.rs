//! Catalog of Young modules over GF(2) for symmetric groups of degree up
//! to seven, together with the 2-Kostka numbers `kostka(lambda, mu)` that
//! count how often each `Y^lambda` appears in the permutation module
//! `M^mu` on the cosets of a Young subgroup.
//!
//! The builder walks partitions in an order refining dominance. For each
//! shape `mu` it either materializes `M^mu` and peels off every previously
//! constructed summand until only the new indecomposable `Y^mu` remains
//! (the split route), or, when `M^mu` is too large to split comfortably,
//! reads the Kostka entries off the rank of a composition pairing and
//! builds `Y^mu` as a summand of a much smaller tensor product (the tensor
//! route; such shapes are column 2-regular, so `Y^mu` is projective).
//! Every catalog entry is certified indecomposable by repeated Fitting
//! splitting attempts and checked self-dual before it is accepted.

mod build;
mod cache;
mod kostka;
mod tensor;
mod verify;

use std::collections::BTreeMap;
use std::path::PathBuf;

use combinat::Partition;
use modrep::GModule;
use thiserror::Error;

pub use build::build_catalog;
pub use tensor::{build_uniserial_u, parity_extension_module, projective_young};
pub use verify::{verify_catalog, VerifyCheck, VerifyReport};

/// Tuning knobs for [`build_catalog`].
#[derive(Debug, Clone)]
pub struct BuildConfig {
    /// Seed for every randomized certification step. Two builds with the
    /// same degree and seed produce identical catalogs.
    pub seed: u64,
    /// Permutation modules of dimension at most this bound are decomposed
    /// by explicit splitting; larger ones go through the tensor route.
    pub split_threshold: usize,
    /// Number of failed random splitting attempts required before a
    /// module is certified indecomposable.
    pub trials: usize,
    /// Directory holding cached catalogs, one subdirectory per degree.
    /// `None` disables caching.
    pub cache_dir: Option<PathBuf>,
}

impl Default for BuildConfig {
    fn default() -> Self {
        BuildConfig {
            seed: 0,
            split_threshold: 900,
            trials: 200,
            cache_dir: None,
        }
    }
}

/// The complete list of Young modules for one symmetric group, with the
/// 2-Kostka numbers and a record of how each entry was constructed.
pub struct YoungCatalog {
    /// Degree of the symmetric group.
    pub n: usize,
    /// One labeled module `Y^lambda` per partition of `n`.
    pub entries: BTreeMap<Partition, GModule>,
    /// Sparse matrix of multiplicities: `kostka[(lambda, mu)]` is the
    /// number of summands isomorphic to `Y^lambda` in `M^mu`. Absent keys
    /// mean zero.
    pub kostka: BTreeMap<(Partition, Partition), usize>,
    /// Human-readable construction route per entry.
    pub provenance: BTreeMap<Partition, String>,
}

impl YoungCatalog {
    /// Multiplicity of `Y^lambda` as a direct summand of `M^mu`.
    pub fn kostka(&self, lambda: &Partition, mu: &Partition) -> usize {
        self.kostka
            .get(&(lambda.clone(), mu.clone()))
            .copied()
            .unwrap_or(0)
    }

    /// The Young module for `lambda`.
    ///
    /// # Panics
    ///
    /// Panics if `lambda` is not a partition of the catalog degree.
    pub fn young(&self, lambda: &Partition) -> &GModule {
        self.entries
            .get(lambda)
            .unwrap_or_else(|| panic!("no Young module for {lambda} in the degree-{} catalog", self.n))
    }

    /// Partitions of the degree in the construction order (descending
    /// lexicographic, which refines dominance).
    pub fn shapes(&self) -> Vec<Partition> {
        let mut shapes: Vec<Partition> = self.entries.keys().cloned().collect();
        shapes.sort_by(|a, b| b.cmp(a));
        shapes
    }
}

/// Errors reported by the catalog builder and its helper constructions.
#[derive(Debug, Error)]
pub enum CatalogError {
    /// The requested degree is outside the supported range.
    #[error("degree {0} is outside the supported range 1..=7")]
    UnsupportedDegree(usize),
    /// A module that should be indecomposable kept splitting.
    #[error("the module built for {shape} is not indecomposable: {details}")]
    NotIndecomposable { shape: String, details: String },
    /// A catalog entry failed the self-duality certification.
    #[error("the module built for {shape} admits no isomorphism onto its dual")]
    NotSelfDual { shape: String },
    /// The tensor route was asked for a shape it has no recipe for.
    #[error("no tensor construction is configured for {shape} at degree {n}")]
    MissingRecipe { n: usize, shape: String },
    /// The tensor route only produces projective Young modules.
    #[error("{shape} is not column 2-regular, so Y^{shape} is not projective")]
    NotColumnRegular { shape: String },
    /// A recipe referred to a catalog entry that is not available yet.
    #[error("the construction for {shape} needs {missing}, which is not in the catalog")]
    MissingPrerequisite { shape: String, missing: String },
    /// The tensor product did not contain the expected projective summand.
    #[error("no summand with head {top} was found in the tensor product for {shape}")]
    MissingProjectiveSummand { shape: String, top: String },
    /// A tensor product that must be projective for the head-counting
    /// argument turned out not to be.
    #[error("the tensor product built for {shape} is not projective")]
    TensorNotProjective { shape: String },
    /// No uniserial trivial self-extension was found inside the
    /// configured source module.
    #[error("no uniserial trivial self-extension occurs as a section of the configured source at degree {n}")]
    SectionNotFound { n: usize },
    /// The uniserial trivial self-extension is only configured for the
    /// degrees whose catalogs need it.
    #[error("the uniserial trivial self-extension is only configured for degrees 6 and 7, not {0}")]
    UnsupportedUniserialDegree(usize),
    /// Reading or writing the on-disk cache failed.
    #[error("cache i/o failed: {0}")]
    CacheIo(#[from] std::io::Error),
    /// The cache manifest could not be parsed.
    #[error("cache manifest is malformed: {0}")]
    CacheManifest(#[from] serde_json::Error),
}

/// Dimension of the permutation module `M^mu`: the multinomial
/// coefficient counting tabloids of shape `mu`.
pub fn permutation_dim(mu: &Partition) -> usize {
    let n = mu.n();
    let mut dim = 1usize;
    let mut remaining = n;
    for &part in mu.parts() {
        dim *= binomial(remaining, part);
        remaining -= part;
    }
    dim
}

fn binomial(n: usize, k: usize) -> usize {
    let k = k.min(n - k);
    let mut num = 1usize;
    let mut den = 1usize;
    for i in 0..k {
        num *= n - i;
        den *= i + 1;
    }
    num / den
}
