//! The basic endomorphism algebra of the full Young-module catalog.
//!
//! For a degree `n` the direct sum of all Young modules has an endomorphism
//! algebra whose basic form is computed here from the hom bases between the
//! catalog entries. The crate exposes the algebra itself (basis, structure
//! constants, idempotents, radical chain), its Cartan matrix and Gabriel
//! quiver, the projective right modules `P(lambda)`, the standard modules
//! `Delta(lambda)` cut out by the dominance order, the decomposition matrix,
//! Specht filtration multiplicities of Young modules, block decompositions
//! with core/weight labels and Morita fingerprints, and a socle report for
//! the projective-injective modules.

mod algebra;
mod amodule;
mod blocks;
mod inject;
mod weyl;

pub use algebra::{
    basic_algebra, cartan_matrix, radical_and_quiver, BasicAlgebra, BasisTag,
};
pub use amodule::{
    action_respects_structure, module_radical_layers, projective_A, socle_dim,
    AModule,
};
pub use blocks::{blocks_and_fingerprint, fingerprints_match, BlockReport, Fingerprint};
pub use inject::{injectivity_check, InjectivityItem, InjectivityReport};
pub use weyl::{
    decomposition_matrix, specht_filtration_multiplicities, weyl_module,
};

use thiserror::Error;

/// Failures surfaced while building or analyzing the basic algebra.
#[derive(Debug, Error)]
pub enum SchurError {
    /// A composite of two basis homomorphisms fell outside the span of the
    /// stored hom basis for its source/target pair, which would mean the
    /// hom bases are not closed under composition.
    #[error("composite of basis elements {left} and {right} has no expansion in the hom basis")]
    StructureConstant { left: String, right: String },
    /// A standard module kept a composition factor outside the dominance
    /// down-set of its label.
    #[error("standard module for {shape} contains factor {factor} outside its dominance down-set")]
    DominanceViolation { shape: String, factor: String },
    /// The decomposition matrix failed the Cartan identity.
    #[error("decomposition matrix does not satisfy transpose(D)*D == C")]
    CartanIdentity,
    /// The Specht filtration of a Young module missed the dimension check.
    #[error("Specht filtration of {shape} sums to dimension {actual}, expected {expected}")]
    SpechtDimension {
        shape: String,
        actual: usize,
        expected: usize,
    },
    /// One linkage class mixed partitions with different 2-cores.
    #[error("block containing {first} mixes 2-cores {core_a} and {core_b}")]
    MixedCores {
        first: String,
        core_a: String,
        core_b: String,
    },
}
