use std::collections::VecDeque;

use gf2core::{BitMatrix, BitVec, EchelonBuilder, RowSpan, SpanPush};
use modrep::GModule;

/// How one vector of the traversal basis of the source arose.
enum Node {
    /// A fresh generator: the `usize` is its index among the seeds.
    Seed(usize),
    /// The image of an earlier basis vector under a generator
    /// (0 for `s`, 1 for `c`).
    Child { parent: usize, gen: usize },
}

/// A linear relation discovered during the traversal: the image of basis
/// vector `parent` under generator `gen` equals the combination `combo` of
/// basis vectors.
struct Relation {
    parent: usize,
    gen: usize,
    combo: BitVec,
}

/// General-position hom basis: pick greedy generators of the source, BFS
/// their orbit to a full basis, treat the generator images as unknowns, and
/// solve the linear relations the traversal closes over.
///
/// The unknown vector `x` has one `tgt.dim`-bit slot per seed; each basis
/// vector `l` carries a matrix `W_l` with `image(basis_l) = x * W_l`, built
/// along tree edges. Every non-tree edge contributes the constraint
/// `x * (W_parent * rho(gen) + sum of combo W's) = 0`.
pub fn homs_general(src: &GModule, tgt: &GModule) -> Vec<BitMatrix> {
    if src.dim == 0 || tgt.dim == 0 {
        return Vec::new();
    }
    let gens = [&src.gen_s, &src.gen_c];

    // Phase 1: traverse until the span is full, recording structure only.
    let mut span = RowSpan::new(src.dim);
    let mut basis_vecs: Vec<BitVec> = Vec::new();
    let mut nodes: Vec<Node> = Vec::new();
    let mut relations: Vec<Relation> = Vec::new();
    let mut seed_count = 0;
    let mut queue: VecDeque<usize> = VecDeque::new();
    for i in 0..src.dim {
        if span.is_full() {
            break;
        }
        let e = BitVec::from_fn(src.dim, |j| j == i);
        match span.push(&e) {
            SpanPush::Added(idx) => {
                debug_assert_eq!(idx, basis_vecs.len());
                basis_vecs.push(e);
                nodes.push(Node::Seed(seed_count));
                seed_count += 1;
                queue.push_back(idx);
            }
            SpanPush::Dependent(_) => continue,
        }
        while let Some(l) = queue.pop_front() {
            for (g, gen) in gens.iter().enumerate() {
                let image = gen.row_mul(&basis_vecs[l]);
                match span.push(&image) {
                    SpanPush::Added(idx) => {
                        debug_assert_eq!(idx, basis_vecs.len());
                        basis_vecs.push(image);
                        nodes.push(Node::Child { parent: l, gen: g });
                        queue.push_back(idx);
                    }
                    SpanPush::Dependent(combo) => relations.push(Relation {
                        parent: l,
                        gen: g,
                        combo,
                    }),
                }
            }
        }
    }
    assert!(span.is_full(), "standard vectors span the source");

    // Phase 2: build the W matrices along the tree.
    let unknowns = seed_count * tgt.dim;
    let tgt_gens = [&tgt.gen_s, &tgt.gen_c];
    let mut w: Vec<BitMatrix> = Vec::with_capacity(basis_vecs.len());
    for node in &nodes {
        let m = match node {
            Node::Seed(si) => {
                let offset = si * tgt.dim;
                BitMatrix::from_fn(unknowns, tgt.dim, |r, c| r == offset + c)
            }
            Node::Child { parent, gen } => w[*parent].mul(tgt_gens[*gen]),
        };
        w.push(m);
    }

    // Phase 3: stream the constraints and read off the solution space.
    let mut builder = EchelonBuilder::new(unknowns);
    for rel in &relations {
        let mut c = w[rel.parent].mul(tgt_gens[rel.gen]);
        for l in rel.combo.iter_ones() {
            c = c.add(&w[l]);
        }
        let ct = c.transpose();
        for r in 0..ct.rows() {
            builder.push(&ct.row_vec(r));
        }
    }
    let solutions = builder.finish().nullspace;

    // Phase 4: rebuild each solution as a matrix on the standard basis.
    let v = BitMatrix::from_rows(src.dim, &basis_vecs);
    let v_inv = v.inverse().expect("traversal basis is a basis");
    (0..solutions.rows())
        .map(|k| {
            let x = solutions.row_vec(k);
            let images: Vec<BitVec> = w.iter().map(|wl| wl.row_mul(&x)).collect();
            let image_matrix = BitMatrix::from_rows(tgt.dim, &images);
            v_inv.mul(&image_matrix)
        })
        .collect()
}
