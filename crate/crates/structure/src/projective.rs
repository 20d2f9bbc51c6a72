use gf2core::BitMatrix;
use modrep::{restrict_to_sylow2, sylow2_order, GModule};

/// Whether `m` is projective over the group algebra, tested by freeness
/// over a fixed Sylow 2-subgroup P: the rank of the sum of all elements
/// of P acting on `m` equals `dim(m)/|P|` exactly for free restrictions.
#[must_use]
pub fn is_projective(m: &GModule) -> bool {
    let order = sylow2_order(m.n);
    if m.dim == 0 {
        return true;
    }
    if m.dim % order != 0 {
        return false;
    }
    let elements = restrict_to_sylow2(m);
    let mut total = BitMatrix::zeros(m.dim, m.dim);
    for g in &elements {
        total = total.add(g);
    }
    total.rank() == m.dim / order
}
