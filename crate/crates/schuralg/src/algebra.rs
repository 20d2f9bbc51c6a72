use std::collections::BTreeMap;
use std::ops::Range;

use combinat::Partition;
use gf2core::{BitMatrix, BitVec, Echelon, EchelonBuilder};
use homspace::hom_basis;
use modrep::GModule;
use youngcat::YoungCatalog;

use crate::SchurError;

/// Identifies one basis element of the algebra: the `index`-th basis
/// homomorphism from the Young module of `source` to that of `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisTag {
    pub source: Partition,
    pub target: Partition,
    pub index: usize,
}

/// The basic algebra of the direct sum of all Young modules for one degree,
/// with basis the union of hom bases between pairs of Young modules.
pub struct BasicAlgebra {
    pub n: usize,
    /// Partition labels in the dominance-refining (descending lex) order
    /// used by every matrix index in this crate.
    pub shapes: Vec<Partition>,
    /// Tag of each basis element; elements are grouped in blocks by
    /// (source, target), sources outermost.
    pub tags: Vec<BasisTag>,
    /// The basis homomorphisms themselves, parallel to `tags`.
    pub maps: Vec<BitMatrix>,
    /// Expansion of the identity endomorphism of each Young module in the
    /// basis; these are orthogonal idempotents summing to the identity.
    pub idempotents: BTreeMap<Partition, BitVec>,
    /// Product table: row `a` of `structure_constants[b]` holds the basis
    /// coefficients of the composite of element `a` followed by element `b`
    /// (zero when the tags do not compose).
    pub structure_constants: Vec<BitMatrix>,
    /// Echelon bases of the radical powers, from the radical itself down to
    /// the zero subspace (the last entry has no rows).
    pub radical_chain: Vec<BitMatrix>,
    offsets: Vec<Vec<usize>>,
    counts: Vec<Vec<usize>>,
}

impl BasicAlgebra {
    /// Number of basis elements.
    #[must_use]
    pub fn dim(&self) -> usize {
        self.tags.len()
    }

    /// Position of a partition in the index order.
    ///
    /// # Panics
    /// Panics if the partition is not a shape of this degree.
    #[must_use]
    pub fn shape_index(&self, shape: &Partition) -> usize {
        self.shapes
            .iter()
            .position(|s| s == shape)
            .unwrap_or_else(|| panic!("{shape} is not a shape of degree {}", self.n))
    }

    /// Product of two algebra elements given by basis coefficient vectors.
    #[must_use]
    pub fn multiply(&self, x: &BitVec, y: &BitVec) -> BitVec {
        let mut acc = BitVec::zeros(self.dim());
        for b in y.iter_ones() {
            acc.xor_assign(&self.structure_constants[b].row_mul(x));
        }
        acc
    }

    pub(crate) fn offset(&self, i: usize, j: usize) -> usize {
        self.offsets[i][j]
    }

    pub(crate) fn count(&self, i: usize, j: usize) -> usize {
        self.counts[i][j]
    }

    /// Indices of all basis elements whose source is shape `i` (they are
    /// contiguous by construction).
    pub(crate) fn row_range(&self, i: usize) -> Range<usize> {
        let s = self.shapes.len();
        let start = self.offsets[i][0];
        let end = self.offsets[i][s - 1] + self.counts[i][s - 1];
        start..end
    }

}

/// Solves coefficient expansions against one block's flattened hom basis.
struct Expander {
    ech: Echelon,
    flat_len: usize,
    count: usize,
}

impl Expander {
    fn build(maps: &[BitMatrix], flat_len: usize) -> Expander {
        let count = maps.len();
        let mut aug = BitMatrix::zeros(count, flat_len + count);
        for (r, f) in maps.iter().enumerate() {
            let flat = f.flatten();
            for c in flat.iter_ones() {
                aug.set(r, c, true);
            }
            aug.set(r, flat_len + r, true);
        }
        let ech = aug.echelonize();
        assert!(
            ech.pivots.iter().all(|&p| p < flat_len),
            "hom basis maps must be linearly independent"
        );
        Expander {
            ech,
            flat_len,
            count,
        }
    }

    /// Coefficients of `f` in the block basis, or None if `f` is outside
    /// the span.
    fn expand(&self, f: &BitMatrix) -> Option<BitVec> {
        let flat = f.flatten();
        let mut cur = BitVec::zeros(self.flat_len + self.count);
        for c in flat.iter_ones() {
            cur.set(c, true);
        }
        for (k, &p) in self.ech.pivots.iter().enumerate() {
            if cur.get(p) {
                cur.xor_assign(&self.ech.rref.row_vec(k));
            }
        }
        if let Some(lead) = cur.leading_bit() {
            if lead < self.flat_len {
                return None;
            }
        }
        Some(BitVec::from_fn(self.count, |t| cur.get(self.flat_len + t)))
    }
}

use crate::amodule::xor_matrix_in_place;

/// Builds the basic algebra of the catalog: all hom bases, the structure
/// constants of composition, the idempotents, and the radical power chain.
///
/// # Errors
/// Returns an error if a composite of basis homomorphisms cannot be
/// expanded in the stored hom basis, which would signal a hom-basis bug.
///
/// # Panics
/// Panics if the catalog is empty or its hom bases are degenerate.
pub fn basic_algebra(catalog: &YoungCatalog) -> Result<BasicAlgebra, SchurError> {
    let shapes = catalog.shapes();
    let s = shapes.len();
    assert!(s > 0, "catalog must contain at least one shape");
    let modules: Vec<&GModule> = shapes.iter().map(|p| catalog.young(p)).collect();

    let mut block_maps: Vec<Vec<Vec<BitMatrix>>> = Vec::with_capacity(s);
    for i in 0..s {
        let mut row = Vec::with_capacity(s);
        for j in 0..s {
            row.push(hom_basis(modules[i], modules[j]).maps);
        }
        block_maps.push(row);
    }

    let mut offsets = vec![vec![0usize; s]; s];
    let mut counts = vec![vec![0usize; s]; s];
    let mut dim = 0usize;
    for i in 0..s {
        for j in 0..s {
            offsets[i][j] = dim;
            counts[i][j] = block_maps[i][j].len();
            dim += counts[i][j];
        }
    }

    let mut tags = Vec::with_capacity(dim);
    let mut maps = Vec::with_capacity(dim);
    let mut source_index = Vec::with_capacity(dim);
    let mut target_index = Vec::with_capacity(dim);
    for i in 0..s {
        for j in 0..s {
            for (t, f) in block_maps[i][j].iter().enumerate() {
                tags.push(BasisTag {
                    source: shapes[i].clone(),
                    target: shapes[j].clone(),
                    index: t,
                });
                maps.push(f.clone());
                source_index.push(i);
                target_index.push(j);
            }
        }
    }

    let mut expanders: Vec<Vec<Expander>> = Vec::with_capacity(s);
    for i in 0..s {
        let mut row = Vec::with_capacity(s);
        for j in 0..s {
            let flat_len = modules[i].dim * modules[j].dim;
            row.push(Expander::build(&block_maps[i][j], flat_len));
        }
        expanders.push(row);
    }

    let mut structure_constants: Vec<BitMatrix> =
        (0..dim).map(|_| BitMatrix::zeros(dim, dim)).collect();
    for i in 0..s {
        for j in 0..s {
            for a in offsets[i][j]..offsets[i][j] + counts[i][j] {
                for k in 0..s {
                    for b in offsets[j][k]..offsets[j][k] + counts[j][k] {
                        let composite = maps[a].mul(&maps[b]);
                        let coeffs =
                            expanders[i][k].expand(&composite).ok_or_else(|| {
                                SchurError::StructureConstant {
                                    left: describe(&tags[a]),
                                    right: describe(&tags[b]),
                                }
                            })?;
                        for t in coeffs.iter_ones() {
                            structure_constants[b].set(a, offsets[i][k] + t, true);
                        }
                    }
                }
            }
        }
    }

    let mut idempotents = BTreeMap::new();
    for i in 0..s {
        let identity = BitMatrix::identity(modules[i].dim);
        let coeffs = expanders[i][i]
            .expand(&identity)
            .expect("the identity endomorphism lies in its own hom basis");
        let mut full = BitVec::zeros(dim);
        for t in coeffs.iter_ones() {
            full.set(offsets[i][i] + t, true);
        }
        idempotents.insert(shapes[i].clone(), full);
    }

    let radical_chain = radical_powers(
        dim,
        s,
        &offsets,
        &counts,
        &source_index,
        &target_index,
        &structure_constants,
    );

    Ok(BasicAlgebra {
        n: catalog.n,
        shapes,
        tags,
        maps,
        idempotents,
        structure_constants,
        radical_chain,
        offsets,
        counts,
    })
}

fn describe(tag: &BasisTag) -> String {
    format!("({} -> {})#{}", tag.source, tag.target, tag.index)
}

/// The radical is spanned by all off-diagonal basis elements together with
/// the diagonal composites that pass through a different shape; powers are
/// generated by iterated right multiplication with the radical basis.
fn radical_powers(
    dim: usize,
    s: usize,
    offsets: &[Vec<usize>],
    counts: &[Vec<usize>],
    source_index: &[usize],
    target_index: &[usize],
    structure_constants: &[BitMatrix],
) -> Vec<BitMatrix> {
    let mut builder = EchelonBuilder::new(dim);
    for e in 0..dim {
        if source_index[e] != target_index[e] {
            builder.push(&BitVec::from_fn(dim, |x| x == e));
        }
    }
    for i in 0..s {
        for m in 0..s {
            if m == i {
                continue;
            }
            for a in offsets[i][m]..offsets[i][m] + counts[i][m] {
                for b in offsets[m][i]..offsets[m][i] + counts[m][i] {
                    builder.push(&structure_constants[b].row_vec(a));
                }
            }
        }
    }
    let rad = builder.finish().rref;
    let mut chain = vec![rad.clone()];
    if rad.rows() == 0 {
        return chain;
    }

    let rad_ops: Vec<BitMatrix> = (0..rad.rows())
        .map(|r| {
            let mut op = BitMatrix::zeros(dim, dim);
            for b in rad.row_vec(r).iter_ones() {
                xor_matrix_in_place(&mut op, &structure_constants[b]);
            }
            op
        })
        .collect();

    loop {
        let prev = chain.last().expect("chain is non-empty");
        let mut next_builder = EchelonBuilder::new(dim);
        for op in &rad_ops {
            let prod = prev.mul(op);
            for r in 0..prod.rows() {
                next_builder.push(&prod.row_vec(r));
            }
        }
        let next = next_builder.finish().rref;
        assert!(
            next.rows() < prev.rows(),
            "radical powers must strictly decrease"
        );
        let stop = next.rows() == 0;
        chain.push(next);
        if stop {
            return chain;
        }
    }
}

/// Cartan matrix in the shape order of the algebra: entry (i, j) is the
/// dimension of the hom space from the i-th to the j-th Young module, which
/// counts the j-th simple in the i-th projective.
#[must_use]
pub fn cartan_matrix(a: &BasicAlgebra) -> Vec<Vec<usize>> {
    a.counts.clone()
}

/// The radical power chain together with the Gabriel quiver: entry (i, j)
/// of the quiver counts arrows from shape i to shape j, the dimension of
/// the (i, j) block of radical modulo radical squared.
#[must_use]
pub fn radical_and_quiver(a: &BasicAlgebra) -> (Vec<BitMatrix>, Vec<Vec<usize>>) {
    let s = a.shapes.len();
    let block_rank = |rows: &BitMatrix, i: usize, j: usize| {
        let from = a.offset(i, j);
        rows.columns(from, from + a.count(i, j)).rank()
    };
    let empty = BitMatrix::zeros(0, a.dim());
    let rad = a.radical_chain.first().unwrap_or(&empty);
    let rad2 = a.radical_chain.get(1).unwrap_or(&empty);
    let mut quiver = vec![vec![0usize; s]; s];
    for i in 0..s {
        for j in 0..s {
            quiver[i][j] = block_rank(rad, i, j) - block_rank(rad2, i, j);
        }
    }
    (a.radical_chain.clone(), quiver)
}
