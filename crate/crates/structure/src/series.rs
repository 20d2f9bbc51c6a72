use combinat::Partition;
use gf2core::{BitMatrix, EchelonBuilder};
use homspace::hom_basis;
use modrep::GModule;

use crate::StructureError;

/// Which chain a [`Layering`] describes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    Radical,
    Socle,
    ZassenhausRow,
}

/// Labeled semisimple layers of a module, listed from the top of the
/// module downwards (for both radical and socle series), each layer a
/// multiset of (simple label, multiplicity) sorted by descending label.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Layering {
    pub direction: Direction,
    pub layers: Vec<Vec<(Partition, usize)>>,
}

impl Layering {
    #[must_use]
    pub fn len(&self) -> usize {
        self.layers.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }

    /// Total number of composition factors across all layers.
    #[must_use]
    pub fn total_factors(&self) -> usize {
        self.layers
            .iter()
            .flat_map(|l| l.iter().map(|&(_, c)| c))
            .sum()
    }

    /// Whether every layer consists of a single composition factor, the
    /// layer shape of a uniserial module.
    #[must_use]
    pub fn is_uniserial_shape(&self) -> bool {
        self.layers
            .iter()
            .all(|l| l.iter().map(|&(_, c)| c).sum::<usize>() == 1)
    }

    /// The multiset union of all layers, sorted by descending label.
    #[must_use]
    pub fn factor_counts(&self) -> Vec<(Partition, usize)> {
        merge_counts(self.layers.iter().flat_map(|l| l.iter().cloned()))
    }
}

fn merge_counts(items: impl Iterator<Item = (Partition, usize)>) -> Vec<(Partition, usize)> {
    let mut merged: Vec<(Partition, usize)> = Vec::new();
    for (p, c) in items {
        match merged.iter_mut().find(|(q, _)| *q == p) {
            Some((_, total)) => *total += c,
            None => merged.push((p, c)),
        }
    }
    merged.sort_by(|a, b| b.0.cmp(&a.0));
    merged
}

/// Radical and socle series of one module, with subspace witnesses.
pub struct SeriesAnalysis {
    pub rad_series: Layering,
    pub soc_series: Layering,
    /// `rad_chain[k]` is an echelon basis of the k-th radical power, from
    /// the full space down to zero.
    pub rad_chain: Vec<BitMatrix>,
    /// `soc_chain[j]` is an echelon basis of the j-th socle, from zero up
    /// to the full space.
    pub soc_chain: Vec<BitMatrix>,
}

/// Echelon basis of the radical: the intersection of the kernels of all
/// maps to simple modules.
fn radical_subspace(m: &GModule, simples: &[GModule]) -> BitMatrix {
    let mut stacked: Option<BitMatrix> = None;
    for s in simples {
        for f in &hom_basis(m, s).maps {
            stacked = Some(match stacked {
                Some(acc) => acc.hstack(f),
                None => f.clone(),
            });
        }
    }
    match stacked {
        Some(b) => b.transpose().echelonize().nullspace.echelonize().rref,
        None => BitMatrix::identity(m.dim),
    }
}

/// Echelon basis of the socle: the sum of the images of all maps from
/// simple modules.
fn socle_subspace(m: &GModule, simples: &[GModule]) -> BitMatrix {
    let mut builder = EchelonBuilder::new(m.dim);
    for s in simples {
        for f in &hom_basis(s, m).maps {
            for r in 0..f.rows() {
                builder.push(&f.row_vec(r));
            }
        }
    }
    builder.finish().rref
}

/// Labels a semisimple module by hom counts from each simple, checking
/// that the labels exhaust its dimension.
pub(crate) fn label_semisimple(
    layer: &GModule,
    simples: &[GModule],
) -> Result<Vec<(Partition, usize)>, StructureError> {
    let mut labels = Vec::new();
    let mut labeled_dim = 0;
    for s in simples {
        let mult = hom_basis(s, layer).maps.len();
        if mult == 0 {
            continue;
        }
        let Some((_, shape)) = &s.label else {
            panic!("catalog simple modules must carry their labels");
        };
        labels.push((shape.clone(), mult));
        labeled_dim += mult * s.dim;
    }
    if labeled_dim != layer.dim {
        return Err(StructureError::IncompleteCatalog {
            layer_dim: layer.dim,
            labeled_dim,
        });
    }
    labels.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(labels)
}

type Layers = Vec<Vec<(Partition, usize)>>;

/// Radical layers (top first) and the descending chain of radical powers
/// in ambient coordinates, from the full space to zero.
pub(crate) fn radical_half(
    m: &GModule,
    simples: &[GModule],
) -> Result<(Layers, Vec<BitMatrix>), StructureError> {
    let mut chain = vec![BitMatrix::identity(m.dim)];
    let mut layers = Vec::new();
    let mut current = m.clone();
    // Rows of `basis` express the current radical power in ambient
    // coordinates, row i being basis vector i of `current`.
    let mut basis = BitMatrix::identity(m.dim);
    while current.dim > 0 {
        if layers.len() > m.dim {
            return Err(StructureError::ChainMissedCap { cap: m.dim });
        }
        let rad = radical_subspace(&current, simples);
        if rad.rows() == current.dim {
            // No progress: some nonzero module had no map to any simple.
            return Err(StructureError::IncompleteCatalog {
                layer_dim: current.dim,
                labeled_dim: 0,
            });
        }
        let parts = current.sub_and_quotient(&rad);
        layers.push(label_semisimple(&parts.quot, simples)?);
        let ambient = rad.mul(&basis);
        chain.push(ambient.echelonize().rref);
        current = parts.sub;
        basis = ambient;
    }
    Ok((layers, chain))
}

/// Socle layers (bottom first) and the ascending chain of socles in
/// ambient coordinates, from zero to the full space.
fn socle_half(
    m: &GModule,
    simples: &[GModule],
) -> Result<(Layers, Vec<BitMatrix>), StructureError> {
    let mut chain = vec![BitMatrix::zeros(0, m.dim)];
    let mut layers = Vec::new();
    let mut quotient = m.clone();
    let mut projection = BitMatrix::identity(m.dim);
    while quotient.dim > 0 {
        if layers.len() > m.dim {
            return Err(StructureError::ChainMissedCap { cap: m.dim });
        }
        let soc = socle_subspace(&quotient, simples);
        if soc.rows() == 0 {
            return Err(StructureError::IncompleteCatalog {
                layer_dim: quotient.dim,
                labeled_dim: 0,
            });
        }
        let parts = quotient.sub_and_quotient(&soc);
        layers.push(label_semisimple(&parts.sub, simples)?);
        // Lift the socle of the quotient back into ambient coordinates and
        // extend the previous socle by it.
        let lifts = projection
            .transpose()
            .solve(&soc.transpose())
            .expect("projection onto the quotient is surjective")
            .transpose();
        let mut builder = EchelonBuilder::new(m.dim);
        let prev = chain.last().expect("chain starts nonempty");
        for r in 0..prev.rows() {
            builder.push(&prev.row_vec(r));
        }
        for r in 0..lifts.rows() {
            builder.push(&lifts.row_vec(r));
        }
        let next = builder.finish().rref;
        let parts = m.sub_and_quotient(&next);
        chain.push(next);
        quotient = parts.quot;
        projection = parts.projection;
    }
    Ok((layers, chain))
}

/// Computes the radical and socle series of `m`, labeling each layer
/// through the supplied catalog of simple modules.
///
/// Both layer lists read from the top of the module downwards; the socle
/// chain witnesses still ascend from zero to the full space.
///
/// # Errors
/// [`StructureError::IncompleteCatalog`] when the simples cannot account
/// for a layer, [`StructureError::ChainMissedCap`] when a chain fails to
/// terminate within `dim` steps.
pub fn radical_socle_series(
    m: &GModule,
    simples: &[GModule],
) -> Result<SeriesAnalysis, StructureError> {
    let (rad_layers, rad_chain) = radical_half(m, simples)?;
    let (mut soc_layers, soc_chain) = socle_half(m, simples)?;
    soc_layers.reverse();
    Ok(SeriesAnalysis {
        rad_series: Layering {
            direction: Direction::Radical,
            layers: rad_layers,
        },
        soc_series: Layering {
            direction: Direction::Socle,
            layers: soc_layers,
        },
        rad_chain,
        soc_chain,
    })
}

/// Multiset of composition factors of `m`, sorted by descending label.
///
/// # Errors
/// Same failure modes as [`radical_socle_series`].
pub fn composition_factors(
    m: &GModule,
    simples: &[GModule],
) -> Result<Vec<(Partition, usize)>, StructureError> {
    let (layers, _) = radical_half(m, simples)?;
    Ok(merge_counts(layers.into_iter().flatten()))
}

/// The heart of `m`: its radical modulo its socle.
///
/// # Errors
/// [`StructureError::SocleOutsideRadical`] when the socle is not contained
/// in the radical (the module then has a simple direct summand), plus the
/// failure modes of the underlying layer computations.
pub fn heart(m: &GModule, simples: &[GModule]) -> Result<GModule, StructureError> {
    let rad = radical_subspace(m, simples);
    let soc = socle_subspace(m, simples);
    let mut builder = EchelonBuilder::new(m.dim);
    for r in 0..rad.rows() {
        builder.push(&rad.row_vec(r));
    }
    for r in 0..soc.rows() {
        if !builder.contains(&soc.row_vec(r)) {
            return Err(StructureError::SocleOutsideRadical);
        }
    }
    let ech = rad.echelonize();
    let inside = m.sub_and_quotient(&ech.rref).sub;
    let soc_in_rad = soc.select_columns(&ech.pivots);
    Ok(inside.sub_and_quotient(&soc_in_rad).quot)
}

/// The dimension of the first self-extension group Ext¹(D^s, D^t), read
/// off the second radical layer of the projective cover of D^s.
///
/// # Errors
/// [`StructureError::WrongTop`] when the supplied cover does not have the
/// simple top D^s, plus the failure modes of the layer computations.
pub fn ext1_dim(
    s: &Partition,
    t: &Partition,
    projective_cover_of_s: &GModule,
    simples: &[GModule],
) -> Result<usize, StructureError> {
    let (layers, _) = radical_half(projective_cover_of_s, simples)?;
    let expected_top = vec![(s.clone(), 1)];
    if layers.first() != Some(&expected_top) {
        return Err(StructureError::WrongTop {
            expected: s.to_string(),
        });
    }
    Ok(layers.get(1).map_or(0, |layer| {
        layer
            .iter()
            .find(|(p, _)| p == t)
            .map_or(0, |&(_, count)| count)
    }))
}
