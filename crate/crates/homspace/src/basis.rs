use gf2core::BitMatrix;
use modrep::{GModule, ModuleKind};

use crate::frobenius;
use crate::seeds;

/// A basis of the space of module homomorphisms between two fixed modules.
pub struct HomBasis {
    pub source_dim: usize,
    pub target_dim: usize,
    /// One matrix per basis homomorphism, each `source_dim x target_dim`.
    pub maps: Vec<BitMatrix>,
}

impl HomBasis {
    /// Dimension of the hom space.
    #[must_use]
    pub fn len(&self) -> usize {
        self.maps.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }
}

/// Computes a basis of `Hom(src, tgt)`, choosing the cheapest applicable
/// strategy. Deterministic: the same inputs give the same basis in the same
/// order.
///
/// # Panics
/// Panics if the modules belong to different groups.
#[must_use]
pub fn hom_basis(src: &GModule, tgt: &GModule) -> HomBasis {
    assert_eq!(src.n, tgt.n, "hom spaces need a common group");
    let is_perm = |m: &GModule| {
        matches!(&m.label, Some((ModuleKind::Perm, _)))
    };
    let maps = if is_perm(src) {
        frobenius::homs_from_perm(src, tgt)
    } else if is_perm(tgt) {
        frobenius::homs_into_perm(src, tgt)
    } else {
        seeds::homs_general(src, tgt)
    };
    for f in &maps {
        debug_assert!(is_intertwiner(src, tgt, f), "computed map must commute");
    }
    HomBasis {
        source_dim: src.dim,
        target_dim: tgt.dim,
        maps,
    }
}

/// Whether `f` commutes with both generator actions.
#[must_use]
pub fn is_intertwiner(src: &GModule, tgt: &GModule, f: &BitMatrix) -> bool {
    src.gen_s.mul(f) == f.mul(&tgt.gen_s) && src.gen_c.mul(f) == f.mul(&tgt.gen_c)
}
