use std::collections::BTreeMap;

use combinat::Partition;
use gf2core::{BitMatrix, BitVec, EchelonBuilder};

use crate::algebra::BasicAlgebra;

/// A right module over the basic algebra: one action matrix per basis
/// element (acting on row vectors from the right), with the composition
/// multiplicities of the simples read off from the idempotent images.
pub struct AModule {
    pub dim: usize,
    pub action: Vec<BitMatrix>,
    pub idempotent_dims: BTreeMap<Partition, usize>,
}

pub(crate) fn xor_matrix_in_place(acc: &mut BitMatrix, m: &BitMatrix) {
    assert_eq!(acc.rows(), m.rows(), "row mismatch");
    for r in 0..acc.rows() {
        let src: Vec<u64> = m.row(r).to_vec();
        for (a, b) in acc.row_mut(r).iter_mut().zip(src) {
            *a ^= b;
        }
    }
}

/// Action matrix of a general algebra element given by basis coefficients.
pub(crate) fn combined_action(m: &AModule, coeffs: &BitVec) -> BitMatrix {
    let mut acc = BitMatrix::zeros(m.dim, m.dim);
    for b in coeffs.iter_ones() {
        xor_matrix_in_place(&mut acc, &m.action[b]);
    }
    acc
}

pub(crate) fn compute_idempotent_dims(
    a: &BasicAlgebra,
    m: &AModule,
) -> BTreeMap<Partition, usize> {
    let mut dims = BTreeMap::new();
    let mut total = 0;
    for (shape, coeffs) in &a.idempotents {
        let rank = combined_action(m, coeffs).rank();
        total += rank;
        dims.insert(shape.clone(), rank);
    }
    assert_eq!(
        total, m.dim,
        "idempotent images must decompose the whole module"
    );
    dims
}

/// The indecomposable projective right module P(lam): the row right-ideal
/// spanned by all basis elements whose source is `lam`. Its idempotent
/// dimensions reproduce the Cartan row of `lam`.
///
/// # Panics
/// Panics if `lam` is not a shape of the algebra's degree.
#[allow(non_snake_case)]
#[must_use]
pub fn projective_A(a: &BasicAlgebra, lam: &Partition) -> AModule {
    let i = a.shape_index(lam);
    let range = a.row_range(i);
    let rows: Vec<usize> = range.clone().collect();
    let dim = rows.len();
    let action: Vec<BitMatrix> = a
        .structure_constants
        .iter()
        .map(|m| m.select_rows(&rows).columns(range.start, range.end))
        .collect();
    let mut module = AModule {
        dim,
        action,
        idempotent_dims: BTreeMap::new(),
    };
    module.idempotent_dims = compute_idempotent_dims(a, &module);
    for (j, shape) in a.shapes.iter().enumerate() {
        assert_eq!(
            module.idempotent_dims[shape],
            a.count(i, j),
            "projective row ideal must realize the Cartan row"
        );
    }
    module
}

/// Quotient of a module by an invariant coefficient subspace.
///
/// # Panics
/// Panics if the subspace is not invariant under every action matrix.
pub(crate) fn quotient_amodule(
    a: &BasicAlgebra,
    m: &AModule,
    kernel: &BitMatrix,
) -> AModule {
    let ech = kernel.echelonize();
    let pivots = ech.pivots.clone();
    let mut is_pivot = vec![false; m.dim];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..m.dim).filter(|x| !is_pivot[*x]).collect();
    let q = free.len();
    let reduce = |v: &BitVec| {
        let mut r = v.clone();
        for (k, &p) in pivots.iter().enumerate() {
            if r.get(p) {
                r.xor_assign(&ech.rref.row_vec(k));
            }
        }
        r
    };
    for r in 0..ech.rref.rows() {
        for mat in &m.action {
            assert!(
                reduce(&mat.row_mul(&ech.rref.row_vec(r))).is_zero(),
                "kernel must be invariant under the algebra action"
            );
        }
    }
    let action: Vec<BitMatrix> = m
        .action
        .iter()
        .map(|mat| {
            let mut out = BitMatrix::zeros(q, q);
            for (r, &fr) in free.iter().enumerate() {
                let image = reduce(&mat.row_vec(fr));
                for (c, &fc) in free.iter().enumerate() {
                    if image.get(fc) {
                        out.set(r, c, true);
                    }
                }
            }
            out
        })
        .collect();
    let mut module = AModule {
        dim: q,
        action,
        idempotent_dims: BTreeMap::new(),
    };
    module.idempotent_dims = compute_idempotent_dims(a, &module);
    module
}

/// Radical layering of a module: the multiset of simple labels in each
/// quotient of consecutive radical powers, top layer first.
#[must_use]
pub fn module_radical_layers(
    a: &BasicAlgebra,
    m: &AModule,
) -> Vec<BTreeMap<Partition, usize>> {
    if m.dim == 0 {
        return Vec::new();
    }
    let empty = BitMatrix::zeros(0, a.dim());
    let rad = a.radical_chain.first().unwrap_or(&empty);
    let rad_ops: Vec<BitMatrix> = (0..rad.rows())
        .map(|r| combined_action(m, &rad.row_vec(r)))
        .collect();
    let idem_ops: Vec<BitMatrix> = a
        .shapes
        .iter()
        .map(|s| combined_action(m, &a.idempotents[s]))
        .collect();

    let mut chain = vec![BitMatrix::identity(m.dim)];
    loop {
        let prev = chain.last().expect("chain is non-empty");
        let mut next_builder = EchelonBuilder::new(m.dim);
        for op in &rad_ops {
            let prod = prev.mul(op);
            for r in 0..prod.rows() {
                next_builder.push(&prod.row_vec(r));
            }
        }
        let next = next_builder.finish().rref;
        assert!(
            next.rows() < prev.rows(),
            "module radical powers must strictly decrease"
        );
        let stop = next.rows() == 0;
        chain.push(next);
        if stop {
            break;
        }
    }

    let mut layers = Vec::new();
    for w in chain.windows(2) {
        let (cur, nxt) = (&w[0], &w[1]);
        let mut layer = BTreeMap::new();
        let mut total = 0;
        for (j, shape) in a.shapes.iter().enumerate() {
            let count = cur.mul(&idem_ops[j]).rank() - nxt.mul(&idem_ops[j]).rank();
            if count > 0 {
                layer.insert(shape.clone(), count);
                total += count;
            }
        }
        assert_eq!(
            total,
            cur.rows() - nxt.rows(),
            "layer multiplicities must account for the whole layer"
        );
        layers.push(layer);
    }
    layers
}

/// Dimension of the socle of a module, computed as the annihilator of the
/// radical. In a basic split algebra the socle is simple exactly when this
/// is 1.
#[must_use]
pub fn socle_dim(a: &BasicAlgebra, m: &AModule) -> usize {
    let empty = BitMatrix::zeros(0, a.dim());
    let rad = a.radical_chain.first().unwrap_or(&empty);
    if rad.rows() == 0 || m.dim == 0 {
        return m.dim;
    }
    let ops: Vec<BitMatrix> = (0..rad.rows())
        .map(|r| combined_action(m, &rad.row_vec(r)))
        .collect();
    let mut stacked = ops[0].clone();
    for op in &ops[1..] {
        stacked = stacked.hstack(op);
    }
    stacked.transpose().echelonize().nullspace.rows()
}

/// Whether the module's action matrices reproduce the structure-constant
/// product of the two given basis elements.
#[must_use]
pub fn action_respects_structure(
    a: &BasicAlgebra,
    m: &AModule,
    x: usize,
    y: usize,
) -> bool {
    let direct = m.action[x].mul(&m.action[y]);
    let coeffs = a.structure_constants[y].row_vec(x);
    direct == combined_action(m, &coeffs)
}
