use combinat::{identity, tabloid_basis, Partition, Perm};
use gf2core::{BitMatrix, BitVec};
use modrep::{Evaluator, GModule, ModuleKind};

/// Adjacent transpositions generating the row stabilizer of the identity
/// tabloid of shape `lambda`: within each block of consecutive points.
fn young_subgroup_generators(lambda: &Partition) -> Vec<Perm> {
    let n = lambda.n();
    let mut gens = Vec::new();
    let mut start = 0;
    for &part in lambda.parts() {
        for j in start..start + part - 1 {
            let mut p = identity(n);
            p.swap(j, j + 1);
            gens.push(p);
        }
        start += part;
    }
    gens
}

/// The action matrices of those generators on `k`, taking the cheap direct
/// route when `k` itself is a permutation module.
fn stabilizer_matrices(lambda: &Partition, k: &GModule) -> Vec<BitMatrix> {
    let gens = young_subgroup_generators(lambda);
    if let Some((ModuleKind::Perm, mu)) = &k.label {
        gens.iter()
            .map(|g| modrep::perm_point_action(mu, g))
            .collect()
    } else {
        let eval = Evaluator::new(k);
        gens.iter().map(|g| eval.matrix_of(g)).collect()
    }
}

/// The index of the identity tabloid, whose rows are consecutive blocks.
fn identity_tabloid_index(lambda: &Partition, tabloids: &[Vec<Vec<u8>>]) -> usize {
    let mut rows = Vec::new();
    let mut next = 0u8;
    for &part in lambda.parts() {
        rows.push((next..next + part as u8).collect::<Vec<u8>>());
        next += part as u8;
    }
    tabloids
        .binary_search(&rows)
        .expect("identity tabloid exists")
}

/// Basis of `Hom(M, k)` for a permutation module source: each fixed vector
/// of `k` under the row stabilizer seeds one map, filled in over a traversal
/// of the tabloid orbit.
pub fn homs_from_perm(src: &GModule, tgt: &GModule) -> Vec<BitMatrix> {
    let Some((ModuleKind::Perm, lambda)) = &src.label else {
        panic!("source must carry a permutation label");
    };
    let tabs = tabloid_basis(lambda);
    let dim_m = tabs.tabloids.len();
    assert_eq!(dim_m, src.dim, "label and matrices disagree");

    // Fixed vectors: u with u * rho(t) = u for every stabilizer generator.
    let stab = stabilizer_matrices(lambda, tgt);
    let fixed = if stab.is_empty() {
        BitMatrix::identity(tgt.dim)
    } else {
        let blocks: Vec<BitMatrix> = stab
            .iter()
            .map(|t| t.add(&BitMatrix::identity(tgt.dim)).transpose())
            .collect();
        let refs: Vec<&BitMatrix> = blocks.iter().collect();
        BitMatrix::vstack(tgt.dim, &refs).echelonize().nullspace
    };

    let start = identity_tabloid_index(lambda, &tabs.tabloids);
    (0..fixed.rows())
        .map(|i| {
            propagate_rows(
                dim_m,
                start,
                fixed.row_vec(i),
                &tabs.perm_s,
                &tabs.perm_c,
                &tgt.gen_s,
                &tgt.gen_c,
            )
        })
        .collect()
}

/// Basis of `Hom(k, M)` for a permutation module target: each fixed
/// functional of `k` seeds one coefficient column, filled in over the same
/// traversal against inverse transposes.
pub fn homs_into_perm(src: &GModule, tgt: &GModule) -> Vec<BitMatrix> {
    let Some((ModuleKind::Perm, lambda)) = &tgt.label else {
        panic!("target must carry a permutation label");
    };
    let tabs = tabloid_basis(lambda);
    let dim_m = tabs.tabloids.len();
    assert_eq!(dim_m, tgt.dim, "label and matrices disagree");

    // Fixed functionals: columns p with rho(t) * p = p for every generator.
    let stab = stabilizer_matrices(lambda, src);
    let fixed = if stab.is_empty() {
        BitMatrix::identity(src.dim)
    } else {
        let blocks: Vec<BitMatrix> = stab
            .iter()
            .map(|t| t.add(&BitMatrix::identity(src.dim)))
            .collect();
        let refs: Vec<&BitMatrix> = blocks.iter().collect();
        BitMatrix::vstack(src.dim, &refs).echelonize().nullspace
    };

    // Propagation uses transposed inverses: s is its own inverse, and the
    // inverse of c is its (n-1)-th power.
    let s_it = src.gen_s.transpose();
    let mut c_inv = BitMatrix::identity(src.dim);
    for _ in 0..src.n - 1 {
        c_inv = c_inv.mul(&src.gen_c);
    }
    let c_it = c_inv.transpose();

    let start = identity_tabloid_index(lambda, &tabs.tabloids);
    (0..fixed.rows())
        .map(|i| {
            let columns = propagate_rows(
                dim_m,
                start,
                fixed.row_vec(i),
                &tabs.perm_s,
                &tabs.perm_c,
                &s_it,
                &c_it,
            );
            columns.transpose()
        })
        .collect()
}

/// Breadth-first fill: row `start` is `seed`, and the row at a tabloid's
/// image under a generator is the current row times that generator's
/// propagation matrix.
fn propagate_rows(
    dim_m: usize,
    start: usize,
    seed: BitVec,
    perm_s: &[usize],
    perm_c: &[usize],
    prop_s: &BitMatrix,
    prop_c: &BitMatrix,
) -> BitMatrix {
    let mut rows: Vec<Option<BitVec>> = vec![None; dim_m];
    rows[start] = Some(seed);
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(start);
    while let Some(t) = queue.pop_front() {
        let current = rows[t].clone().expect("queued rows are filled");
        for (perm, prop) in [(perm_s, prop_s), (perm_c, prop_c)] {
            let image = perm[t];
            if rows[image].is_none() {
                rows[image] = Some(prop.row_mul(&current));
                queue.push_back(image);
            }
        }
    }
    let filled: Vec<BitVec> = rows
        .into_iter()
        .map(|r| r.expect("tabloid orbit is transitive"))
        .collect();
    BitMatrix::from_rows(prop_s.cols(), &filled)
}
