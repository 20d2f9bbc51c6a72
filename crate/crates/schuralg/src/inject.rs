use combinat::Partition;
use structure::is_projective;
use youngcat::YoungCatalog;

use crate::algebra::BasicAlgebra;
use crate::amodule::{projective_A, socle_dim};

/// Socle check for one shape whose Young module is projective over the
/// group algebra.
pub struct InjectivityItem {
    pub shape: Partition,
    pub socle_dim: usize,
    pub passed: bool,
}

/// Results of [`injectivity_check`].
pub struct InjectivityReport {
    pub items: Vec<InjectivityItem>,
}

impl InjectivityReport {
    /// Whether every checked projective has a simple socle.
    #[must_use]
    pub fn all_passed(&self) -> bool {
        self.items.iter().all(|item| item.passed)
    }
}

/// For every shape whose Young module is projective over the group
/// algebra, the corresponding basic-algebra projective is also injective
/// and therefore must have a simple socle. This computes each socle
/// dimension (the annihilator of the radical) and records whether it is 1.
#[must_use]
pub fn injectivity_check(a: &BasicAlgebra, catalog: &YoungCatalog) -> InjectivityReport {
    let mut items = Vec::new();
    for shape in &a.shapes {
        if !is_projective(catalog.young(shape)) {
            continue;
        }
        let projective = projective_A(a, shape);
        let dim = socle_dim(a, &projective);
        items.push(InjectivityItem {
            shape: shape.clone(),
            socle_dim: dim,
            passed: dim == 1,
        });
    }
    InjectivityReport { items }
}
