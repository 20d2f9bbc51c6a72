use gf2core::{BitMatrix, EchelonBuilder};
use modrep::GModule;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::basis::{hom_basis, HomBasis};

/// A successful peeling of one summand copy.
pub struct Split {
    /// Split monomorphism from the peeled copy into the ambient module.
    pub mono: BitMatrix,
    /// Split epimorphism from the ambient module onto the peeled copy;
    /// `mono` then `epi` is the identity of the copy.
    pub epi: BitMatrix,
    /// Idempotent endomorphism of the ambient module whose image is the
    /// split-off copy: `epi` then `mono`.
    pub idempotent: BitMatrix,
    /// Echelon basis of the complementary summand, in ambient coordinates.
    pub complement: BitMatrix,
}

/// One leaf of a Fitting decomposition.
pub struct FittingSummand {
    pub module: GModule,
    /// Echelon-basis rows of the summand inside the original module.
    pub basis: BitMatrix,
    /// Random endomorphism trials that failed to split this leaf further.
    /// Zero when indecomposability was certain without trials.
    pub failed_trials: usize,
    /// True when the endomorphism algebra forced indecomposability.
    pub certain: bool,
}

/// The multiplicity of the common summand behind the two hom bases: the rank
/// of the invertibility pairing between `Hom(y, m)` and `Hom(m, y)`.
///
/// Composing `f: y -> m` with `g: m -> y` lands in the endomorphisms of `y`;
/// when `y` is indecomposable those form a local algebra whose residue field
/// here is GF(2), so invertibility of the composite is a bilinear pairing
/// bit, and the rank of the pairing matrix counts the copies of `y` inside
/// `m`.
///
/// # Panics
/// Panics if the two bases do not connect the same pair of modules.
#[must_use]
pub fn summand_multiplicity(to: &HomBasis, from: &HomBasis) -> usize {
    assert_eq!(to.source_dim, from.target_dim, "pairing shape mismatch");
    assert_eq!(to.target_dim, from.source_dim, "pairing shape mismatch");
    pairing_matrix(to, from).rank()
}

fn pairing_matrix(to: &HomBasis, from: &HomBasis) -> BitMatrix {
    BitMatrix::from_fn(to.maps.len(), from.maps.len(), |i, j| {
        to.maps[i].mul(&from.maps[j]).is_invertible()
    })
}

/// Splits one copy of `y` off `m`, given bases of `Hom(y, m)` and
/// `Hom(m, y)`. Returns `None` when the pairing is identically zero, i.e.
/// `y` is not a summand.
///
/// A nonzero pairing always contains a nonzero entry, so the first basis
/// pair whose composite is invertible does the job deterministically.
#[must_use]
pub fn split_off(to: &HomBasis, from: &HomBasis) -> Option<Split> {
    assert_eq!(to.source_dim, from.target_dim, "pairing shape mismatch");
    assert_eq!(to.target_dim, from.source_dim, "pairing shape mismatch");
    for f in &to.maps {
        for g in &from.maps {
            let h = f.mul(g);
            let Some(h_inv) = h.inverse() else {
                continue;
            };
            let mono = f.clone();
            let epi = g.mul(&h_inv);
            let idempotent = epi.mul(&mono);
            debug_assert!(mono.mul(&epi).is_identity(), "split composite");
            debug_assert_eq!(idempotent.mul(&idempotent), idempotent);
            let complement = idempotent.transpose().echelonize().nullspace;
            return Some(Split {
                mono,
                epi,
                idempotent,
                complement,
            });
        }
    }
    None
}

/// Searches `Hom(a, b)` for an isomorphism: first each basis map, then
/// `trials` random combinations. Returns the isomorphism when one is found.
/// A `None` can in principle be a false negative for decomposable modules,
/// with probability vanishing in `trials`.
#[must_use]
pub fn iso_test(
    a: &GModule,
    b: &GModule,
    rng: &mut ChaCha8Rng,
    trials: usize,
) -> Option<BitMatrix> {
    if a.dim != b.dim {
        return None;
    }
    if a.dim == 0 {
        return Some(BitMatrix::zeros(0, 0));
    }
    let homs = hom_basis(a, b);
    if let Some(f) = homs.maps.iter().find(|f| f.is_invertible()) {
        return Some(f.clone());
    }
    if homs.maps.len() < 2 {
        return None;
    }
    for _ in 0..trials {
        let mut combo = BitMatrix::zeros(a.dim, b.dim);
        for f in &homs.maps {
            if rng.gen_bool(0.5) {
                combo = combo.add(f);
            }
        }
        if combo.is_invertible() {
            return Some(combo);
        }
    }
    None
}

/// Decomposes `m` into direct summands by repeated Fitting splittings along
/// random endomorphisms. Leaves are declared indecomposable either because
/// their endomorphism algebra is one-dimensional (certain) or because
/// `trials` random endomorphisms failed to split them (overwhelmingly
/// likely correct, and recorded as such).
#[must_use]
pub fn fitting_decompose(
    m: &GModule,
    rng: &mut ChaCha8Rng,
    trials: usize,
) -> Vec<FittingSummand> {
    let mut out = Vec::new();
    let ambient = BitMatrix::identity(m.dim);
    fitting_worker(m, ambient, rng, trials, &mut out);
    out
}

fn fitting_worker(
    m: &GModule,
    ambient: BitMatrix,
    rng: &mut ChaCha8Rng,
    trials: usize,
    out: &mut Vec<FittingSummand>,
) {
    if m.dim == 0 {
        return;
    }
    let ends = hom_basis(m, m);
    if ends.maps.len() <= 1 {
        out.push(FittingSummand {
            module: m.clone(),
            basis: ambient,
            failed_trials: 0,
            certain: true,
        });
        return;
    }
    for _ in 0..trials {
        let mut f = BitMatrix::zeros(m.dim, m.dim);
        for e in &ends.maps {
            if rng.gen_bool(0.5) {
                f = f.add(e);
            }
        }
        // Stabilize: raise to a power at least the dimension, so image and
        // kernel become complementary submodules.
        let mut g = f;
        let mut exponent = 1usize;
        while exponent < m.dim {
            g = g.mul(&g);
            exponent *= 2;
        }
        let rank = g.rank();
        if rank == 0 || rank == m.dim {
            continue;
        }
        debug_assert_eq!(g.mul(&g).rank(), rank, "power must be stable");
        let image = g.echelonize().rref;
        let kernel = g.transpose().echelonize().nullspace;
        let im_part = m.sub_and_quotient(&image);
        let ker_part = m.sub_and_quotient(&kernel);
        fitting_worker(
            &im_part.sub,
            im_part.inclusion.mul(&ambient),
            rng,
            trials,
            out,
        );
        fitting_worker(
            &ker_part.sub,
            ker_part.inclusion.mul(&ambient),
            rng,
            trials,
            out,
        );
        return;
    }
    out.push(FittingSummand {
        module: m.clone(),
        basis: ambient,
        failed_trials: trials,
        certain: false,
    });
}

/// The sum of the images of all homomorphisms from `s` into `m`, as an
/// echelon basis in the coordinates of `m`.
#[must_use]
pub fn trace_from(s: &GModule, m: &GModule) -> BitMatrix {
    let homs = hom_basis(s, m);
    if homs.maps.is_empty() {
        return BitMatrix::zeros(0, m.dim);
    }
    let refs: Vec<&BitMatrix> = homs.maps.iter().collect();
    BitMatrix::vstack(m.dim, &refs).echelonize().rref
}

/// The intersection of the kernels of all homomorphisms from `m` into `s`,
/// as an echelon basis in the coordinates of `m`. With no homomorphisms at
/// all, this is the whole of `m`.
#[must_use]
pub fn cotrace_into(m: &GModule, s: &GModule) -> BitMatrix {
    let homs = hom_basis(m, s);
    if homs.maps.is_empty() {
        return BitMatrix::identity(m.dim);
    }
    let mut stacked = homs.maps[0].clone();
    for f in &homs.maps[1..] {
        stacked = stacked.hstack(f);
    }
    stacked.transpose().echelonize().nullspace
}

/// Restricts a hom basis `K -> M` to the maps whose image lies inside a
/// subspace of `M`, re-expressed in the echelon-basis coordinates of that
/// subspace.
///
/// The result spans `Hom(K, S)` whenever `S` is a direct summand of `M`
/// containing no image obstruction, and in general spans exactly the
/// compositions that factor through `S`.
#[must_use]
pub fn homs_into_subspace(homs: &HomBasis, subspace: &BitMatrix) -> HomBasis {
    assert_eq!(subspace.cols(), homs.target_dim, "subspace lives in target");
    let ech = subspace.echelonize();
    let reduce = |f: &BitMatrix| {
        let folded = f.select_columns(&ech.pivots).mul(&ech.rref);
        f.add(&folded)
    };
    // A combination of the basis maps lands in the subspace exactly when
    // its reduction vanishes; solve for those combinations.
    let residues: Vec<gf2core::BitVec> =
        homs.maps.iter().map(|f| reduce(f).flatten()).collect();
    let combos = BitMatrix::from_rows(homs.source_dim * homs.target_dim, &residues)
        .transpose()
        .echelonize()
        .nullspace;
    let maps = (0..combos.rows())
        .map(|k| {
            let mut f = BitMatrix::zeros(homs.source_dim, homs.target_dim);
            for i in combos.row_vec(k).iter_ones() {
                f = f.add(&homs.maps[i]);
            }
            f.select_columns(&ech.pivots)
        })
        .collect();
    HomBasis {
        source_dim: homs.source_dim,
        target_dim: ech.rank,
        maps,
    }
}

/// Restricts a hom basis `M -> K` to a subspace of `M`, returning an
/// independent spanning set of the restrictions in the subspace's
/// echelon-basis coordinates.
///
/// When the subspace is a direct summand of `M`, restriction is onto, so
/// the result is a basis of `Hom(S, K)`.
#[must_use]
pub fn restrict_homs_to_summand(homs: &HomBasis, subspace: &BitMatrix) -> HomBasis {
    assert_eq!(subspace.cols(), homs.source_dim, "subspace lives in source");
    let ech = subspace.echelonize();
    let mut dedup = EchelonBuilder::new(ech.rank * homs.target_dim);
    for f in &homs.maps {
        let restricted = ech.rref.mul(f);
        dedup.push(&restricted.flatten());
    }
    let independent = dedup.finish().rref;
    let maps = (0..independent.rows())
        .map(|r| BitMatrix::unflatten(ech.rank, homs.target_dim, &independent.row_vec(r)))
        .collect();
    HomBasis {
        source_dim: ech.rank,
        target_dim: homs.target_dim,
        maps,
    }
}
