use combinat::Partition;
use gf2core::{BitMatrix, BitVec, EchelonBuilder};
use modrep::GModule;

use crate::series::{label_semisimple, radical_socle_series};
use crate::StructureError;

/// Composition factors positioned by radical and socle depth.
///
/// `grid[i][j]` labels the section
/// `(Rad^i ∩ Soc_{j+1}) / ((Rad^{i+1} ∩ Soc_{j+1}) + (Rad^i ∩ Soc_j))`,
/// so row `i` marginals reproduce radical layer `i` (top first) and the
/// column `j` marginals reproduce the socle layer `Soc_{j+1}/Soc_j`
/// (bottom first). A semisimple module concentrates at `grid[0][0]`; a
/// uniserial one fills the anti-diagonal.
pub struct ZassGrid {
    pub grid: Vec<Vec<Vec<(Partition, usize)>>>,
}

/// Intersection of two row spaces given by full-row-rank bases.
fn intersect(a: &BitMatrix, b: &BitMatrix, dim: usize) -> BitMatrix {
    if a.rows() == 0 || b.rows() == 0 {
        return BitMatrix::zeros(0, dim);
    }
    let stacked = BitMatrix::vstack(dim, &[a, b]);
    let combos = stacked.transpose().echelonize().nullspace;
    let mut builder = EchelonBuilder::new(dim);
    for r in 0..combos.rows() {
        let combo = combos.row_vec(r);
        let left = BitVec::from_fn(a.rows(), |i| combo.get(i));
        builder.push(&a.row_mul(&left));
    }
    builder.finish().rref
}

/// Sum of two row spaces.
fn span_sum(a: &BitMatrix, b: &BitMatrix, dim: usize) -> BitMatrix {
    let mut builder = EchelonBuilder::new(dim);
    for r in 0..a.rows() {
        builder.push(&a.row_vec(r));
    }
    for r in 0..b.rows() {
        builder.push(&b.row_vec(r));
    }
    builder.finish().rref
}

/// Positions every composition factor of `m` by its radical and socle
/// depth, using the sections of the butterfly lemma between the two
/// chains.
///
/// # Errors
/// Same failure modes as [`radical_socle_series`].
pub fn zassenhaus_grid(m: &GModule, simples: &[GModule]) -> Result<ZassGrid, StructureError> {
    let series = radical_socle_series(m, simples)?;
    let length = series.rad_series.len();
    assert_eq!(
        length,
        series.soc_series.len(),
        "radical and socle series always have equal length"
    );
    let mut grid = vec![vec![Vec::new(); length]; length];
    for i in 0..length {
        let rad_i = &series.rad_chain[i];
        let rad_next = &series.rad_chain[i + 1];
        for j in 0..length {
            let soc_j = &series.soc_chain[j + 1];
            let soc_prev = &series.soc_chain[j];
            let numerator = intersect(rad_i, soc_j, m.dim);
            let d1 = intersect(rad_next, soc_j, m.dim);
            let d2 = intersect(rad_i, soc_prev, m.dim);
            let denominator = span_sum(&d1, &d2, m.dim);
            if numerator.rows() == denominator.rows() {
                continue;
            }
            let parts = m.sub_and_quotient(&numerator);
            let pivots = numerator.echelonize().pivots;
            let den_inside = denominator.select_columns(&pivots);
            let section = parts.sub.sub_and_quotient(&den_inside).quot;
            grid[i][j] = label_semisimple(&section, simples)?;
        }
    }
    Ok(ZassGrid { grid })
}
