use combinat::{partitions_desc, Partition};
use gf2core::{BitMatrix, EchelonBuilder};
use homspace::{
    cotrace_into, fitting_decompose, hom_basis, homs_into_subspace, is_intertwiner, iso_test,
    restrict_homs_to_summand, rng, split_off, summand_multiplicity, trace_from,
};
use modrep::{direct_sum, perm_module, simple_module, specht_module, GModule};
use rand::Rng;
use std::str::FromStr;

fn p(s: &str) -> Partition {
    Partition::from_str(s).unwrap()
}

/// Strips the label so [`hom_basis`] must take the general path.
fn unlabeled(m: &GModule) -> GModule {
    GModule::new(m.n, m.gen_s.clone(), m.gen_c.clone(), None)
}

/// Reference hom space: solve the intertwining equations densely over the
/// flattened matrix entries. Returns the kernel basis, one flattened map
/// per row.
fn dense_homs(src: &GModule, tgt: &GModule) -> BitMatrix {
    let (dm, dk) = (src.dim, tgt.dim);
    let vars = dm * dk;
    let mut rows = Vec::new();
    for (a, b) in [(&src.gen_s, &tgt.gen_s), (&src.gen_c, &tgt.gen_c)] {
        for i in 0..dm {
            for j in 0..dk {
                let mut row = gf2core::BitVec::zeros(vars);
                for l in 0..dm {
                    if a.get(i, l) {
                        let idx = l * dk + j;
                        row.set(idx, !row.get(idx));
                    }
                }
                for l in 0..dk {
                    if b.get(l, j) {
                        let idx = i * dk + l;
                        row.set(idx, !row.get(idx));
                    }
                }
                rows.push(row);
            }
        }
    }
    BitMatrix::from_rows(vars, &rows).echelonize().nullspace
}

fn assert_matches_dense(src: &GModule, tgt: &GModule) {
    let fast = hom_basis(src, tgt);
    let dense = dense_homs(src, tgt);
    assert_eq!(fast.maps.len(), dense.rows(), "hom space dimension");
    // Same span: the fast basis must lie inside the dense kernel and be
    // independent.
    let mut builder = EchelonBuilder::new(src.dim * tgt.dim);
    for r in 0..dense.rows() {
        builder.push(&dense.row_vec(r));
    }
    let rank_before = builder.rank();
    for f in &fast.maps {
        assert!(is_intertwiner(src, tgt, f));
        builder.push(&f.flatten());
    }
    assert_eq!(builder.rank(), rank_before, "fast maps inside dense kernel");
    let mut independent = EchelonBuilder::new(src.dim * tgt.dim);
    for f in &fast.maps {
        assert!(independent.push(&f.flatten()), "basis must be independent");
    }
}

#[test]
fn all_three_paths_match_the_dense_oracle() {
    let m21 = perm_module(&p("2,1"));
    let m22 = perm_module(&p("2,2"));
    let m211 = perm_module(&p("2,1,1"));
    let (s31, _) = specht_module(&p("3,1"));
    let (s22, _) = specht_module(&p("2,2"));
    let d31 = simple_module(&p("3,1"));

    // Source-permutation path.
    assert_matches_dense(&m21, &m21);
    assert_matches_dense(&m22, &m211);
    assert_matches_dense(&m211, &s22);
    assert_matches_dense(&m22, &d31);
    // Target-permutation path.
    assert_matches_dense(&s31, &m22);
    assert_matches_dense(&d31, &m211);
    // General path.
    assert_matches_dense(&s22, &s31);
    assert_matches_dense(&d31, &d31);
    assert_matches_dense(&unlabeled(&m22), &unlabeled(&m211));

    // The three paths agree with each other on a pair where all apply.
    let a = hom_basis(&m22, &m211).maps.len();
    let b = hom_basis(&unlabeled(&m22), &m211).maps.len();
    let c = hom_basis(&unlabeled(&m22), &unlabeled(&m211)).maps.len();
    assert_eq!(a, b);
    assert_eq!(a, c);
}

/// Matrices with given row and column sums count the double cosets that
/// index homs between permutation modules.
fn contingency_count(rows: &[usize], cols: &[usize]) -> usize {
    fn go(rows: &[usize], cols: &mut Vec<usize>) -> usize {
        let Some((&r, rest)) = rows.split_first() else {
            return usize::from(cols.iter().all(|&c| c == 0));
        };
        // Distribute r among the columns in all ways.
        fn distribute(
            remaining: usize,
            idx: usize,
            rest: &[usize],
            cols: &mut Vec<usize>,
        ) -> usize {
            if idx == cols.len() {
                return if remaining == 0 { go(rest, cols) } else { 0 };
            }
            let mut total = 0;
            for take in 0..=remaining.min(cols[idx]) {
                cols[idx] -= take;
                total += distribute(remaining - take, idx + 1, rest, cols);
                cols[idx] += take;
            }
            total
        }
        distribute(r, 0, rest, cols)
    }
    go(rows, &mut cols.to_vec())
}

#[test]
fn hom_dimensions_between_permutation_modules_count_contingency_tables() {
    for n in [3usize, 4] {
        for lam in partitions_desc(n) {
            for mu in partitions_desc(n) {
                let dim = hom_basis(&perm_module(&lam), &perm_module(&mu))
                    .maps
                    .len();
                assert_eq!(
                    dim,
                    contingency_count(lam.parts(), mu.parts()),
                    "{lam:?} -> {mu:?}"
                );
            }
        }
    }
}

#[test]
fn hom_dimensions_are_symmetric_between_permutation_and_simple_modules() {
    // Both directions are the fixed space of the simple under the row
    // stabilizer, computed by two different code paths.
    for n in [4usize, 5] {
        for lam in partitions_desc(n) {
            for mu in partitions_desc(n).into_iter().filter(|m| m.is_two_regular()) {
                let m = perm_module(&lam);
                let d = simple_module(&mu);
                assert_eq!(
                    hom_basis(&m, &d).maps.len(),
                    hom_basis(&d, &m).maps.len(),
                    "{lam:?} vs {mu:?}"
                );
            }
        }
    }
}

#[test]
fn multiplicity_counts_copies_in_explicit_direct_sums() {
    let d31 = simple_module(&p("3,1"));
    let d4 = simple_module(&p("4"));
    let m = direct_sum(&d31, &direct_sum(&d4, &d31));
    let mult = |y: &GModule| {
        summand_multiplicity(&hom_basis(y, &m), &hom_basis(&m, y))
    };
    assert_eq!(mult(&d31), 2);
    assert_eq!(mult(&d4), 1);
}

#[test]
fn trivial_maps_do_not_fake_a_summand() {
    // The shape [2,2] permutation module has the trivial module as a
    // submodule and as a quotient but not as a summand: maps exist both
    // ways, yet every composite is singular.
    let m = perm_module(&p("2,2"));
    let triv = GModule::trivial(4);
    let to = hom_basis(&triv, &m);
    let from = hom_basis(&m, &triv);
    assert!(!to.maps.is_empty());
    assert!(!from.maps.is_empty());
    assert_eq!(summand_multiplicity(&to, &from), 0);
    assert!(split_off(&to, &from).is_none());
}

#[test]
fn split_off_peels_summands_down_to_nothing() {
    let d31 = simple_module(&p("3,1"));
    let d4 = simple_module(&p("4"));
    let big = direct_sum(&d31, &direct_sum(&d4, &d31));

    let split = split_off(&hom_basis(&d31, &big), &hom_basis(&big, &d31))
        .expect("a copy must split");
    assert_eq!(split.complement.rows(), 3);
    let e = &split.idempotent;
    assert_eq!(e.mul(e), *e, "idempotent");
    assert!(is_intertwiner(&big, &big, e), "idempotent is a module map");
    assert!(split.mono.mul(&split.epi).is_identity(), "epi splits mono");
    assert!(is_intertwiner(&d31, &big, &split.mono));
    assert!(is_intertwiner(&big, &d31, &split.epi));

    let rest = big.sub_and_quotient(&split.complement).sub;
    let split2 = split_off(&hom_basis(&d31, &rest), &hom_basis(&rest, &d31))
        .expect("second copy must split");
    assert_eq!(split2.complement.rows(), 1);
    let last = rest.sub_and_quotient(&split2.complement).sub;
    let mut stream = rng::stream(7, "test-split", "x");
    assert!(iso_test(&last, &d4, &mut stream, 20).is_some());
}

#[test]
fn iso_test_distinguishes_modules() {
    let mut stream = rng::stream(11, "test-iso", "x");
    let d31 = simple_module(&p("3,1"));
    let d4 = simple_module(&p("4"));
    let self_iso = iso_test(&d31, &d31.clone(), &mut stream, 20).expect("self iso");
    assert!(self_iso.is_invertible());
    assert!(is_intertwiner(&d31, &d31, &self_iso));
    assert!(iso_test(&d31, &d4, &mut stream, 20).is_none());

    // Decomposable case with shuffled summand order.
    let ab = direct_sum(&d31, &d4);
    let ba = direct_sum(&d4, &d31);
    let shuffled = iso_test(&ab, &ba, &mut stream, 40).expect("sum iso");
    assert!(is_intertwiner(&ab, &ba, &shuffled));

    // Same dimension, different module.
    let m21 = perm_module(&p("2,1"));
    let triple = direct_sum(
        &GModule::trivial(3),
        &direct_sum(&GModule::trivial(3), &GModule::trivial(3)),
    );
    assert!(iso_test(&m21, &triple, &mut stream, 40).is_none());
}

#[test]
fn fitting_recovers_explicit_summands() {
    let d31 = simple_module(&p("3,1"));
    let d4 = simple_module(&p("4"));
    let big = direct_sum(&d31, &direct_sum(&d4, &d31));
    let mut stream = rng::stream(13, "test-fitting", "x");
    let leaves = fitting_decompose(&big, &mut stream, 60);

    let mut dims: Vec<usize> = leaves.iter().map(|l| l.module.dim).collect();
    dims.sort_unstable();
    assert_eq!(dims, vec![1, 2, 2]);

    // The bases really decompose the ambient module.
    let refs: Vec<&BitMatrix> = leaves.iter().map(|l| &l.basis).collect();
    let stacked = BitMatrix::vstack(big.dim, &refs);
    assert_eq!(stacked.rank(), big.dim);
    for leaf in &leaves {
        // Invariance of each basis; would panic otherwise.
        let part = big.sub_and_quotient(&leaf.basis).sub;
        let mut check = rng::stream(13, "test-fitting-iso", "x");
        assert!(iso_test(&part, &leaf.module, &mut check, 20).is_some());
    }

    // An indecomposable module comes back whole.
    let m22 = perm_module(&p("2,2"));
    let leaves = fitting_decompose(&m22, &mut stream, 60);
    assert_eq!(leaves.len(), 1);
    assert_eq!(leaves[0].module.dim, 6);
    assert!(leaves[0].basis.is_identity());
}

#[test]
fn trace_and_cotrace_against_the_trivial_module() {
    let m = perm_module(&p("2,2"));
    let triv = GModule::trivial(4);
    let t = trace_from(&triv, &m);
    assert_eq!(t.rows(), 1, "one copy of the trivial submodule");
    assert_eq!(t.row_vec(0).count_ones(), 6, "the all-ones vector");
    let k = cotrace_into(&m, &triv);
    assert_eq!(k.rows(), 5, "kernel of the augmentation");
}

#[test]
fn subspace_restrictions_agree_with_direct_computation() {
    let d31 = simple_module(&p("3,1"));
    let d4 = simple_module(&p("4"));
    let big = direct_sum(&d31, &direct_sum(&d4, &d31));
    // The leading block is a copy of d31.
    let block = BitMatrix::from_fn(2, 5, |i, j| i == j);

    let into = homs_into_subspace(&hom_basis(&d31, &big), &block);
    assert_eq!(into.target_dim, 2);
    assert_eq!(into.maps.len(), hom_basis(&d31, &d31).maps.len());

    let onto = restrict_homs_to_summand(&hom_basis(&big, &d31), &block);
    assert_eq!(onto.source_dim, 2);
    assert_eq!(onto.maps.len(), hom_basis(&d31, &d31).maps.len());
    for f in &into.maps {
        assert!(is_intertwiner(&d31, &d31, f));
    }
    for f in &onto.maps {
        assert!(is_intertwiner(&d31, &d31, f));
    }
}

#[test]
fn known_hom_dimensions_and_splits() {
    // End of the regular module of the two-point group.
    let m11 = perm_module(&p("1,1"));
    assert_eq!(hom_basis(&m11, &m11).maps.len(), 2);
    let triv2 = GModule::trivial(2);
    assert_eq!(hom_basis(&triv2, &triv2).maps.len(), 1);

    // Splitting the trivial summand off the three-point natural module
    // leaves the two-dimensional simple one.
    let m21 = perm_module(&p("2,1"));
    let triv = GModule::trivial(3);
    let split = split_off(&hom_basis(&triv, &m21), &hom_basis(&m21, &triv))
        .expect("trivial summand");
    let rest = m21.sub_and_quotient(&split.complement).sub;
    assert_eq!(rest.dim, 2);
    let mut stream = rng::stream(3, "test-known", "x");
    assert!(iso_test(&rest, &simple_module(&p("2,1")), &mut stream, 20).is_some());
}

#[test]
fn fitting_splits_the_four_point_regular_permutation_module() {
    // The full orbit module on 24 points decomposes as two eight-dimensional
    // indecomposables plus another of dimension eight; check the dimension
    // multiset and that the pieces really sum up.
    let m = perm_module(&p("1,1,1,1"));
    let mut stream = rng::stream(17, "test-fitting-regular", "x");
    let leaves = fitting_decompose(&m, &mut stream, 60);
    let mut dims: Vec<usize> = leaves.iter().map(|l| l.module.dim).collect();
    dims.sort_unstable();
    assert_eq!(dims, vec![8, 8, 8]);
    let refs: Vec<&BitMatrix> = leaves.iter().map(|l| &l.basis).collect();
    assert_eq!(BitMatrix::vstack(m.dim, &refs).rank(), 24);
}

#[test]
fn streams_are_reproducible_and_separated() {
    let mut a = rng::stream(42, "stage", "3,1");
    let mut b = rng::stream(42, "stage", "3,1");
    let xs: Vec<u64> = (0..8).map(|_| a.gen()).collect();
    let ys: Vec<u64> = (0..8).map(|_| b.gen()).collect();
    assert_eq!(xs, ys);

    let mut c = rng::stream(42, "stage2", "3,1");
    let zs: Vec<u64> = (0..8).map(|_| c.gen()).collect();
    assert_ne!(xs, zs);

    let mut d = rng::stream(43, "stage", "3,1");
    let ws: Vec<u64> = (0..8).map(|_| d.gen()).collect();
    assert_ne!(xs, ws);
}
