use std::collections::BTreeMap;

use combinat::Partition;

use crate::algebra::{cartan_matrix, radical_and_quiver, BasicAlgebra};
use crate::amodule::{module_radical_layers, projective_A};
use crate::SchurError;

/// Morita-invariant data of one block in the block's fixed member order;
/// equality up to simultaneous relabeling is decided by
/// [`fingerprints_match`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    /// Cartan submatrix over the block members.
    pub cartan: Vec<Vec<usize>>,
    /// Quiver submatrix over the block members.
    pub quiver: Vec<Vec<usize>>,
    /// Radical layering of each member's projective, with labels replaced
    /// by member positions.
    pub layers: Vec<Vec<BTreeMap<usize, usize>>>,
}

/// One linkage class of the algebra with its 2-core/weight label and
/// Morita fingerprint.
#[derive(Clone, Debug)]
pub struct BlockReport {
    pub shapes: Vec<Partition>,
    pub core: Partition,
    pub weight: usize,
    pub fingerprint: Fingerprint,
}

/// Splits the shapes into blocks (connected components of the Cartan
/// nonzero pattern), labels each with the common 2-core and weight of its
/// members, and computes the Morita fingerprint of each block.
///
/// # Errors
/// Returns an error if one component mixes different 2-cores.
pub fn blocks_and_fingerprint(
    a: &BasicAlgebra,
) -> Result<Vec<BlockReport>, SchurError> {
    let s = a.shapes.len();
    let cartan = cartan_matrix(a);
    let (_, quiver) = radical_and_quiver(a);

    let mut component = vec![usize::MAX; s];
    let mut component_count = 0;
    for start in 0..s {
        if component[start] != usize::MAX {
            continue;
        }
        let id = component_count;
        component_count += 1;
        component[start] = id;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in 0..s {
                if component[w] == usize::MAX
                    && (cartan[v][w] != 0 || cartan[w][v] != 0)
                {
                    component[w] = id;
                    stack.push(w);
                }
            }
        }
    }

    let mut reports = Vec::new();
    for id in 0..component_count {
        let members: Vec<usize> = (0..s).filter(|&v| component[v] == id).collect();
        let (core, weight) = a.shapes[members[0]].two_core_and_weight();
        for &v in &members[1..] {
            let (other_core, _) = a.shapes[v].two_core_and_weight();
            if other_core != core {
                return Err(SchurError::MixedCores {
                    first: a.shapes[members[0]].to_string(),
                    core_a: core.to_string(),
                    core_b: other_core.to_string(),
                });
            }
        }

        let restrict = |grid: &[Vec<usize>]| -> Vec<Vec<usize>> {
            members
                .iter()
                .map(|&i| members.iter().map(|&j| grid[i][j]).collect())
                .collect()
        };
        let mut layers = Vec::new();
        for &i in &members {
            let full = module_radical_layers(a, &projective_A(a, &a.shapes[i]));
            let translated: Vec<BTreeMap<usize, usize>> = full
                .iter()
                .map(|layer| {
                    layer
                        .iter()
                        .map(|(shape, count)| {
                            let global = a.shape_index(shape);
                            let local = members
                                .iter()
                                .position(|&m| m == global)
                                .expect("projective factors stay inside the block");
                            (local, *count)
                        })
                        .collect()
                })
                .collect();
            layers.push(translated);
        }

        reports.push(BlockReport {
            shapes: members.iter().map(|&i| a.shapes[i].clone()).collect(),
            core,
            weight,
            fingerprint: Fingerprint {
                cartan: restrict(&cartan),
                quiver: restrict(&quiver),
                layers,
            },
        });
    }
    Ok(reports)
}

/// Label-free profile of one member, used to prune the permutation search:
/// Cartan diagonal, sorted Cartan row, sorted quiver row, and the layer
/// sizes of its projective.
fn member_profile(f: &Fingerprint, i: usize) -> (usize, Vec<usize>, Vec<usize>, Vec<Vec<usize>>) {
    let mut cartan_row = f.cartan[i].clone();
    cartan_row.sort_unstable();
    let mut quiver_row = f.quiver[i].clone();
    quiver_row.sort_unstable();
    let layer_profile = f.layers[i]
        .iter()
        .map(|layer| {
            let mut counts: Vec<usize> = layer.values().copied().collect();
            counts.sort_unstable();
            counts
        })
        .collect();
    (f.cartan[i][i], cartan_row, quiver_row, layer_profile)
}

fn relabeled_layers_equal(
    x: &[BTreeMap<usize, usize>],
    y: &[BTreeMap<usize, usize>],
    perm: &[usize],
) -> bool {
    if x.len() != y.len() {
        return false;
    }
    x.iter().zip(y).all(|(lx, ly)| {
        let mapped: BTreeMap<usize, usize> =
            lx.iter().map(|(&label, &count)| (perm[label], count)).collect();
        mapped == *ly
    })
}

fn extend_match(
    x: &Fingerprint,
    y: &Fingerprint,
    profiles_y: &[(usize, Vec<usize>, Vec<usize>, Vec<Vec<usize>>)],
    perm: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    let pos = perm.len();
    let k = x.cartan.len();
    if pos == k {
        return (0..k).all(|i| relabeled_layers_equal(&x.layers[i], &y.layers[perm[i]], perm));
    }
    let profile = member_profile(x, pos);
    for cand in 0..k {
        if used[cand] || profiles_y[cand] != profile {
            continue;
        }
        let consistent = (0..pos).all(|prev| {
            x.cartan[pos][prev] == y.cartan[cand][perm[prev]]
                && x.cartan[prev][pos] == y.cartan[perm[prev]][cand]
                && x.quiver[pos][prev] == y.quiver[cand][perm[prev]]
                && x.quiver[prev][pos] == y.quiver[perm[prev]][cand]
        }) && x.cartan[pos][pos] == y.cartan[cand][cand]
            && x.quiver[pos][pos] == y.quiver[cand][cand];
        if !consistent {
            continue;
        }
        perm.push(cand);
        used[cand] = true;
        if extend_match(x, y, profiles_y, perm, used) {
            return true;
        }
        used[cand] = false;
        perm.pop();
    }
    false
}

/// Whether some simultaneous relabeling of members aligns the Cartan
/// submatrices, quiver submatrices, and projective radical layerings of
/// the two fingerprints.
#[must_use]
pub fn fingerprints_match(x: &Fingerprint, y: &Fingerprint) -> bool {
    let k = x.cartan.len();
    if y.cartan.len() != k {
        return false;
    }
    let profiles_y: Vec<_> = (0..k).map(|i| member_profile(y, i)).collect();
    let mut perm = Vec::with_capacity(k);
    let mut used = vec![false; k];
    extend_match(x, y, &profiles_y, &mut perm, &mut used)
}
