//! Internal structure of modules over GF(2) symmetric group algebras.
//!
//! Everything here reduces a module to layered data: radical and socle
//! series with labeled semisimple layers, Zassenhaus grids positioning each
//! composition factor by its radical and socle depth, hearts (radical modulo
//! socle), a Sylow-restriction projectivity test, and first Ext dimensions
//! read off projective covers.
//!
//! Layer labels rely on GF(2) being a splitting field for these groups:
//! the multiplicity of a simple `D` in a semisimple layer equals
//! `dim Hom(D, layer)`. Each labeling cross-checks that the labeled
//! dimensions exhaust the layer, so an incomplete simple catalog surfaces
//! as an error instead of a silent miscount.

mod grid;
mod projective;
mod series;

use thiserror::Error;

pub use grid::{zassenhaus_grid, ZassGrid};
pub use projective::is_projective;
pub use series::{
    composition_factors, ext1_dim, heart, radical_socle_series, Direction, Layering,
    SeriesAnalysis,
};

/// Failures of structural analysis.
#[derive(Debug, Error)]
pub enum StructureError {
    /// A putatively semisimple layer was not exhausted by the supplied
    /// simple modules: the catalog is missing a simple, or the module
    /// arithmetic is corrupt.
    #[error(
        "layer of dimension {layer_dim} only accounts for {labeled_dim} \
         through the supplied simple catalog"
    )]
    IncompleteCatalog { layer_dim: usize, labeled_dim: usize },
    /// The socle is not contained in the radical, so the heart is not
    /// defined; the module has a simple direct summand.
    #[error("socle is not contained in the radical; the module has a simple summand")]
    SocleOutsideRadical,
    /// A radical or socle chain failed to make progress within the
    /// dimension bound, which indicates broken module arithmetic.
    #[error("layer chain failed to terminate within {cap} steps")]
    ChainMissedCap { cap: usize },
    /// The module offered as a projective cover does not have the
    /// expected simple top.
    #[error("expected the simple top {expected}, found a different head")]
    WrongTop { expected: String },
}
